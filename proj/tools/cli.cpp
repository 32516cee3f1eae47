#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <sstream>

#include "qhm/boundary_moduli.hpp"
#include "qhm/errors.hpp"
#include "qhm/gram.hpp"
#include "qhm/json_io.hpp"
#include "qhm/positive_moduli.hpp"
#include "qhm/sampling.hpp"
#include "qhm/triangle.hpp"

using namespace qhm;

namespace {

struct Globals {
    bool json = false;
    double eps = 1e-9;
    std::string model = "ball";
    std::uint64_t seed = 0;
    int n = 2;
    int m = 3;
    bool n_given = false;

    Tolerances tol() const { return Tolerances::with_eps(eps); }
    Model mdl() const { return parse_model(model); }
};

struct Io {
    const Globals& g;
    std::ostream& out;
    std::ostream& err;

    int emit(int code, const json& j, const std::string& human) const {
        if (g.json)
            out << j.dump() << "\n";
        else
            out << human;
        return code;
    }
};

json read_input(const std::string& src) {
    std::string text;
    if (src == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else if (!src.empty() && (src[0] == '{' || src[0] == '[')) {
        text = src;
    } else {
        std::ifstream f(src);
        if (!f) throw UsageError("cannot read input file " + src);
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    return parse_json_text(text);
}

std::string fmt(const Quaternion& q) { return to_string(q); }

std::string fmt_sets(const std::vector<std::vector<int>>& s) {
    std::string r = "[";
    for (size_t a = 0; a < s.size(); ++a) {
        r += a ? " {" : "{";
        for (size_t b = 0; b < s[a].size(); ++b) r += (b ? "," : "") + std::to_string(s[a][b] + 1);
        r += "}";
    }
    return r + "]";
}

json classes_of(const Tuple& p, const Tolerances& tol) {
    json c = json::array();
    for (const auto& v : p) c.push_back(to_string(classify(v, tol)));
    return c;
}

bool all_of_class(const Tuple& p, PointClass k, const Tolerances& tol) {
    for (const auto& v : p)
        if (classify(v, tol) != k) return false;
    return true;
}

int class_report(const Io& io, const Tuple& p, const std::string& expected) {
    const json cls = classes_of(p, io.g.tol());
    const std::string msg = "expected all points " + expected + ", got " + cls.dump();
    io.err << "error: " << msg << "\n";
    if (io.g.json) io.out << json{{"error", msg}, {"classes", cls}}.dump() << "\n";
    return 3;
}

int cmd_boundary_coord(const Io& io, const std::string& file) {
    const Tolerances tol = io.g.tol();
    const Tuple p = tuple_from_json(read_input(file), io.g.mdl());
    if (!all_of_class(p, PointClass::Null, tol)) return class_report(io, p, "null");
    const BoundaryCoordinate bc = boundary_coordinate(p, tol);
    json j = bc;
    std::ostringstream h;
    h << "m = " << bc.m << "\nstratum " << bc.stratum.str() << "\n";
    for (size_t t = 0; t < bc.v.size(); ++t) h << "v[" << t + 1 << "] = " << fmt(bc.v[t]) << "\n";
    if (bc.m == 3) {
        const double a = cartan_invariant(p[0], p[1], p[2], tol);
        j["cartan_invariant"] = a;
        h << "cartan invariant " << a << "\n";
    }
    return io.emit(0, j, h.str());
}

std::string describe(const PositiveCoordinate& pc) {
    std::ostringstream h;
    if (pc.parabolic) {
        const auto& c = *pc.parabolic;
        h << "parabolic, blocks " << fmt_sets(c.structure.blocks) << "\n";
        if (c.stratum) h << "stratum " << c.stratum->str() << "\n";
        for (size_t t = 0; t < c.X.size(); ++t) h << "X[" << t + 1 << "] = " << fmt(c.X[t]) << "\n";
    } else if (pc.regular) {
        const auto& c = *pc.regular;
        h << "regular, blocks " << fmt_sets(c.structure.blocks) << "\n";
        for (size_t b = 0; b < c.strata.size(); ++b)
            h << "block " << b + 1 << ": sub-blocks " << fmt_sets(c.structure.sub_blocks[b]) << ", stratum "
              << c.strata[b].str() << "\n";
        for (int a = 0; a < c.G.m(); ++a)
            for (int b = a + 1; b < c.G.m(); ++b) h << "g" << a + 1 << b + 1 << " = " << fmt(c.G(a, b)) << "\n";
    }
    return h.str();
}

int cmd_positive_coord(const Io& io, const std::string& file) {
    const Tolerances tol = io.g.tol();
    const Tuple p = tuple_from_json(read_input(file), io.g.mdl());
    if (!all_of_class(p, PointClass::Positive, tol)) return class_report(io, p, "positive");
    const PositiveCoordinate pc = positive_coordinate(p, tol);
    json j = pc;
    j["inertia"] = inertia(gram(p), tol);
    j["span_dimension"] = span_dimension(p, tol);
    return io.emit(0, j, describe(pc));
}

void diff_entries(const std::vector<Quaternion>& a, const std::vector<Quaternion>& b, double tol, json& out) {
    for (size_t t = 0; t < std::min(a.size(), b.size()); ++t)
        if (coordinate_distance({a[t]}, {b[t]}) > tol) out.push_back(json{{"index", t + 1}, {"a", a[t]}, {"b", b[t]}});
}

int cmd_congruent(const Io& io, const std::string& fa, const std::string& fb) {
    const Tolerances tol = io.g.tol();
    const Tuple p = tuple_from_json(read_input(fa), io.g.mdl());
    const Tuple q = tuple_from_json(read_input(fb), io.g.mdl());
    if (p.size() != q.size())
        throw UsageError("tuples have different lengths (" + std::to_string(p.size()) + " and " +
                         std::to_string(q.size()) + ")");
    if (p[0].dim() != q[0].dim()) throw UsageError("tuples live in different dimensions");

    json j, diffs = json::array();
    bool same = false;
    if (all_of_class(p, PointClass::Null, tol) && all_of_class(q, PointClass::Null, tol)) {
        const BoundaryCoordinate a = boundary_coordinate(p, tol), b = boundary_coordinate(q, tol);
        same = same_coordinate(a, b, tol);
        j = json{{"class", "boundary"}, {"a", a}, {"b", b}};
        if (!(a.stratum == b.stratum)) j["stratum_mismatch"] = true;
        diff_entries(a.v, b.v, tol.compare, diffs);
    } else if (all_of_class(p, PointClass::Positive, tol) && all_of_class(q, PointClass::Positive, tol)) {
        const PositiveCoordinate a = positive_coordinate(p, tol), b = positive_coordinate(q, tol);
        same = same_coordinate(a, b, tol);
        j = json{{"class", "positive"}, {"a", a}, {"b", b}};
        if (a.kind != b.kind) {
            j["kind_mismatch"] = true;
        } else if (a.parabolic) {
            if (!(a.parabolic->structure == b.parabolic->structure)) j["structure_mismatch"] = true;
            if (a.parabolic->stratum != b.parabolic->stratum) j["stratum_mismatch"] = true;
            diff_entries(a.parabolic->X, b.parabolic->X, tol.compare, diffs);
        } else {
            if (!(a.regular->structure == b.regular->structure)) j["structure_mismatch"] = true;
            if (a.regular->strata != b.regular->strata) j["stratum_mismatch"] = true;
            diff_entries(a.regular->entries, b.regular->entries, tol.compare, diffs);
        }
    } else {
        throw DomainError("congruent: both tuples must be all null or all positive; got " +
                          classes_of(p, tol).dump() + " and " + classes_of(q, tol).dump());
    }
    j["congruent"] = same;
    j["differences"] = diffs;
    std::ostringstream h;
    h << (same ? "congruent" : "not congruent") << "\n";
    for (const auto& d : diffs)
        h << "  entry " << d["index"].get<int>() << ": " << fmt(d["a"].get<Quaternion>()) << " vs "
          << fmt(d["b"].get<Quaternion>()) << "\n";
    for (const char* key : {"kind_mismatch", "structure_mismatch", "stratum_mismatch"})
        if (j.contains(key)) h << "  " << key << "\n";
    return io.emit(same ? 0 : 1, j, h.str());
}

int cmd_realize(const Io& io, const std::string& file) {
    const Tolerances tol = io.g.tol();
    const GramMatrix G = read_input(file).get<GramMatrix>();
    const Inertia in = inertia(G, tol);
    try {
        const Tuple p = realize(G, io.g.n, io.g.mdl(), tol);
        json j = tuple_to_json(p);
        j["realizable"] = true;
        j["inertia"] = in;
        j["max_gram_error"] = max_dist(gram(p), G);
        std::ostringstream h;
        h << "realizable in H^{" << io.g.n << ",1}, inertia " << in.str() << "\n";
        for (size_t t = 0; t < p.size(); ++t) {
            h << "p" << t + 1 << " =";
            for (const auto& e : p[t].entries) h << " " << fmt(e);
            h << "\n";
        }
        return io.emit(0, j, h.str());
    } catch (const RealizationError& e) {
        json j{{"realizable", false}, {"violated", e.condition()}, {"inertia", in}, {"message", e.what()}};
        return io.emit(1, j, std::string("not realizable: violates ") + e.condition() + " (inertia " + in.str() + ")\n");
    }
}

int cmd_random(const Io& io, const std::string& kind, bool structured) {
    const Globals& g = io.g;
    if (g.n < 1 || g.m < 1) throw UsageError("random: --n and --m must be positive");
    if (g.n > g.m && kind != "isometry")
        io.err << "warning: n > m; the tuple spans at most m dimensions, so n = m loses nothing\n";
    std::mt19937_64 rng(g.seed);
    json j{{"kind", kind}, {"n", g.n}, {"seed", g.seed}};
    if (kind == "isometry") {
        j["isometry"] = random_isometry(g.n, rng, g.mdl());
    } else {
        Tuple p;
        if (kind == "boundary-tuple")
            p = random_boundary_tuple(g.n, g.m, rng, g.mdl());
        else if (kind == "positive-regular")
            p = random_positive_regular(g.n, g.m, rng, g.mdl(), structured);
        else if (kind == "positive-parabolic")
            p = random_positive_parabolic(g.n, g.m, rng, g.mdl());
        else
            throw UsageError("random: unknown kind " + kind);
        j["m"] = g.m;
        j["model"] = to_string(g.mdl());
        j["points"] = tuple_to_json(p)["points"];
    }
    // the JSON is the useful output either way
    io.out << j.dump(g.json ? -1 : 2) << "\n";
    return 0;
}

json side_json(const SideData& s) {
    json j{{"kind", to_string(s.kind)}};
    if (s.kind == SideData::Kind::Intersecting) j["angle"] = s.angle;
    if (s.kind == SideData::Kind::Ultraparallel) j["distance"] = s.distance;
    return j;
}

TriangleParams checked_params(double r1, double r2, double r3, double alpha) {
    TriangleParams t{r1, r2, r3, alpha};
    if (!(r1 >= 0 && r2 >= 0 && r3 >= 0)) throw UsageError("triangle: r1, r2, r3 must be nonnegative");
    if (!(alpha >= 0 && alpha <= std::numbers::pi)) throw UsageError("triangle: alpha must lie in [0, pi]");
    return t;
}

std::string triangle_class_or(const TriangleParams& t, const Tolerances& tol, Tuple* pts = nullptr) {
    const Tuple p = realize_triangle(t, Model::Ball, tol);
    if (pts) *pts = p;
    return to_string(classify_triangle(p[0], p[1], p[2], tol));
}

int cmd_triangle(const Io& io, double r1, double r2, double r3, double alpha) {
    const Tolerances tol = io.g.tol();
    const TriangleParams t = checked_params(r1, r2, r3, alpha);
    const double det = triangle_det(t);
    const bool exists = triangle_exists(t);
    json j{{"params", t}, {"det", det}, {"exists", exists}};
    json sides = json::array();
    for (const auto& s : side_data(t)) sides.push_back(side_json(s));
    j["sides"] = sides;
    std::ostringstream h;
    h << std::setprecision(12) << "det = " << det << "\n" << (exists ? "exists" : "does not exist") << "\n";
    if (exists) {
        Tuple p;
        const std::string cls = triangle_class_or(t, tol, &p);
        j["class"] = cls;
        const AngularInvariant a = triangle_angular_invariant(p[0], p[1], p[2], tol);
        j["angular_invariant"] = a.value;
        j["product_vanishes"] = a.product_vanishes;
        j["points"] = tuple_to_json(to_model(p, io.g.mdl()))["points"];
        h << "class " << cls << "\nangular invariant " << a.value << (a.product_vanishes ? " (product vanishes)" : "")
          << "\n";
    }
    for (size_t s = 0; s < 3; ++s) {
        h << "side " << s + 1 << ": " << sides[s]["kind"].get<std::string>();
        if (sides[s].contains("angle")) h << ", angle " << sides[s]["angle"].get<double>();
        if (sides[s].contains("distance")) h << ", distance " << sides[s]["distance"].get<double>();
        h << "\n";
    }
    return io.emit(exists ? 0 : 1, j, h.str());
}

int cmd_triangle_sweep(const Io& io, int r_steps, int a_steps, double r_max, double a_max) {
    if (r_steps < 1 || a_steps < 1) throw UsageError("triangle-sweep: step counts must be positive");
    if (!(r_max >= 0) || !(a_max >= 0 && a_max <= std::numbers::pi))
        throw UsageError("triangle-sweep: need r-max >= 0 and alpha-max in [0, pi]");
    const Tolerances tol = io.g.tol();
    auto grid = [](int k, int steps, double hi) { return steps == 1 ? 0.0 : hi * k / (steps - 1); };
    io.out << "r1,r2,r3,alpha,det,exists,class\n";
    io.out << std::setprecision(12);
    for (int a = 0; a < r_steps; ++a)
        for (int b = 0; b < r_steps; ++b)
            for (int c = 0; c < r_steps; ++c)
                for (int d = 0; d < a_steps; ++d) {
                    const TriangleParams t{grid(a, r_steps, r_max), grid(b, r_steps, r_max), grid(c, r_steps, r_max),
                                           grid(d, a_steps, a_max)};
                    const bool exists = triangle_exists(t);
                    std::string cls = "none";
                    if (exists) {
                        try {
                            cls = triangle_class_or(t, tol);
                        } catch (const std::exception&) {
                            cls = "unrealized";
                        }
                    }
                    io.out << t.r1 << "," << t.r2 << "," << t.r3 << "," << t.alpha << "," << triangle_det(t) << ","
                           << (exists ? "true" : "false") << "," << cls << "\n";
                }
    return 0;
}

int fail(const Globals& g, std::ostream& out, std::ostream& err, int code, const std::string& msg) {
    err << "error: " << msg << "\n";
    if (g.json) out << json{{"error", msg}, {"exit", code}}.dump() << "\n";
    return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Globals g;
    CLI::App app{"qhmoduli: moduli of point tuples in quaternionic hyperbolic space"};
    app.require_subcommand(1);
    app.add_flag("--json", g.json, "machine-readable JSON on stdout");
    app.add_option("--eps", g.eps, "classification tolerance")->check(CLI::PositiveNumber);
    app.add_option("--model", g.model, "ball or siegel")->check(CLI::IsMember({"ball", "siegel"}));
    app.add_option("--seed", g.seed, "random seed");
    app.add_option("--n", g.n, "dimension of H^n");
    app.add_option("--m", g.m, "number of points");

    std::string f1, f2, kind;
    bool structured = false;
    double r1 = 0, r2 = 0, r3 = 0, alpha = 0;
    int r_steps = 20, a_steps = 10;
    double r_max = 2.0, a_max = std::numbers::pi / 2;

    auto* bc = app.add_subcommand("boundary-coord", "canonical coordinate of a tuple of null points");
    bc->add_option("tuple", f1, "file, '-' or inline JSON")->required();
    auto* pc = app.add_subcommand("positive-coord", "canonical coordinate of a tuple of positive points");
    pc->add_option("tuple", f1, "file, '-' or inline JSON")->required();
    auto* cg = app.add_subcommand("congruent", "decide whether two tuples are congruent");
    cg->add_option("a", f1)->required();
    cg->add_option("b", f2)->required();
    auto* rz = app.add_subcommand("realize", "points with a given Gram matrix in H^{n,1}");
    rz->add_option("gram", f1, "file, '-' or inline JSON")->required();
    auto* rd = app.add_subcommand("random", "reproducible random configurations");
    rd->add_option("kind", kind, "boundary-tuple, positive-regular, positive-parabolic or isometry")
        ->required()
        ->check(CLI::IsMember({"boundary-tuple", "positive-regular", "positive-parabolic", "isometry"}));
    rd->add_flag("--structured", structured, "positive-regular: draw from orthogonal coordinate blocks");
    auto* tr = app.add_subcommand("triangle", "existence and type of an (r1,r2,r3;alpha)-triangle");
    tr->add_option("--r1", r1)->required();
    tr->add_option("--r2", r2)->required();
    tr->add_option("--r3", r3)->required();
    tr->add_option("--alpha", alpha)->required();
    auto* sw = app.add_subcommand("triangle-sweep", "CSV over a grid of triangle parameters");
    sw->add_option("--r-steps", r_steps)->capture_default_str();
    sw->add_option("--alpha-steps", a_steps)->capture_default_str();
    sw->add_option("--r-max", r_max)->capture_default_str();
    sw->add_option("--alpha-max", a_max)->capture_default_str();
    for (auto* s : {bc, pc, cg, rz, rd, tr, sw}) s->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    const Io io{g, out, err};
    try {
        if (*bc) return cmd_boundary_coord(io, f1);
        if (*pc) return cmd_positive_coord(io, f1);
        if (*cg) return cmd_congruent(io, f1, f2);
        if (*rz) return cmd_realize(io, f1);
        if (*rd) return cmd_random(io, kind, structured);
        if (*tr) return cmd_triangle(io, r1, r2, r3, alpha);
        if (*sw) return cmd_triangle_sweep(io, r_steps, a_steps, r_max, a_max);
    } catch (const UsageError& e) {
        return fail(g, out, err, 2, e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(g, out, err, 2, std::string("bad input: ") + e.what());
    } catch (const std::exception& e) {
        return fail(g, out, err, 3, e.what());
    }
    return 2;
}
