#include "qhm/json_io.hpp"

#include "qhm/errors.hpp"

namespace qhm {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw UsageError("json: " + msg);
}

double number(const json& j, const char* what) {
    require(j.is_number(), std::string(what) + " must be a number");
    return j.get<double>();
}

json index_sets(const std::vector<std::vector<int>>& sets) {
    json out = json::array();
    for (const auto& s : sets) {
        json a = json::array();
        for (int i : s) a.push_back(i + 1);
        out.push_back(a);
    }
    return out;
}

std::vector<std::vector<int>> index_sets(const json& j) {
    require(j.is_array(), "index sets must be arrays");
    std::vector<std::vector<int>> out;
    for (const auto& s : j) {
        require(s.is_array(), "index sets must be arrays");
        std::vector<int> v;
        for (const auto& i : s) {
            require(i.is_number_integer() && i.get<int>() >= 1, "indices are positive integers (1-based)");
            v.push_back(i.get<int>() - 1);
        }
        out.push_back(v);
    }
    return out;
}

std::vector<Quaternion> quats(const json& j, const char* what) {
    require(j.is_array(), std::string(what) + " must be an array of quaternions");
    std::vector<Quaternion> v;
    for (const auto& q : j) v.push_back(q.get<Quaternion>());
    return v;
}

HVector hvector(const json& j, Model fallback) {
    if (j.is_array()) {
        HVector v(quats(j, "point"), fallback);
        require(v.dim() >= 2, "a point needs at least two entries");
        return v;
    }
    require(j.is_object() && j.contains("entries"), "a point is {\"model\", \"entries\"} or an array");
    Model m = fallback;
    if (j.contains("model")) {
        require(j["model"].is_string(), "model must be a string");
        try {
            m = parse_model(j["model"].get<std::string>());
        } catch (const std::exception& e) {
            throw UsageError(std::string("json: ") + e.what());
        }
    }
    HVector v(quats(j["entries"], "entries"), m);
    require(v.dim() >= 2, "a point needs at least two entries");
    return v;
}

}  // namespace

void to_json(json& j, const Quaternion& q) { j = json::array({q.a0, q.a1, q.a2, q.a3}); }

void from_json(const json& j, Quaternion& q) {
    if (j.is_number()) {
        q = Quaternion(j.get<double>());
        return;
    }
    require(j.is_array() && j.size() == 4, "a quaternion is a number or [a0, a1, a2, a3]");
    q = Quaternion(number(j[0], "a0"), number(j[1], "a1"), number(j[2], "a2"), number(j[3], "a3"));
}

void to_json(json& j, const StratumTag& s) { j = s.str(); }

void from_json(const json& j, StratumTag& s) {
    require(j.is_string(), "stratum must be a string");
    try {
        s = StratumTag::parse(j.get<std::string>());
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(std::string("json: ") + e.what());
    }
}

void to_json(json& j, const HVector& v) { j = json{{"model", to_string(v.model)}, {"entries", v.entries}}; }

void from_json(const json& j, HVector& v) { v = hvector(j, Model::Ball); }

void to_json(json& j, const GramMatrix& G) {
    json rows = json::array();
    for (int a = 0; a < G.m(); ++a) {
        json row = json::array();
        for (int b = 0; b < G.m(); ++b) row.push_back(G(a, b));
        rows.push_back(row);
    }
    j = json{{"m", G.m()}, {"entries", rows}};
}

void from_json(const json& j, GramMatrix& G) {
    const json& rows = j.is_object() ? j.at("entries") : j;
    require(rows.is_array() && !rows.empty(), "Gram entries must be a nonempty array of rows");
    const int m = int(rows.size());
    if (j.is_object() && j.contains("m")) require(j["m"].is_number_integer() && j["m"].get<int>() == m, "m does not match the entries");
    QMatrix g(m, m);
    for (int a = 0; a < m; ++a) {
        const json& row = rows[a];
        require(row.is_array(), "Gram rows must be arrays");
        // a full row, or only the upper triangle from the diagonal on
        const bool full = int(row.size()) == m;
        require(full || int(row.size()) == m - a, "row " + std::to_string(a + 1) + " has the wrong length");
        for (int b = a; b < m; ++b) {
            const json& e = row[full ? b : b - a];
            require(!e.is_null(), "upper-triangle entries must be present");
            g(a, b) = e.get<Quaternion>();
        }
    }
    G = GramMatrix::from_upper(g);
    // when the full matrix is given it must be Hermitian
    bool full = true;
    for (int a = 0; a < m; ++a) full = full && int(rows[a].size()) == m;
    if (full) {
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < a; ++b)
                if (!rows[a][b].is_null()) {
                    const Quaternion v = rows[a][b].get<Quaternion>();
                    require(dist(v, G(a, b)) <= 1e-9 * (1 + G.max_abs()), "matrix is not Hermitian");
                }
    }
}

void to_json(json& j, const Inertia& in) {
    j = json{{"n_plus", in.n_plus}, {"n_minus", in.n_minus}, {"n_zero", in.n_zero}};
}

void from_json(const json& j, Inertia& in) {
    in.n_plus = j.at("n_plus").get<int>();
    in.n_minus = j.at("n_minus").get<int>();
    in.n_zero = j.at("n_zero").get<int>();
}

void to_json(json& j, const Isometry& g) {
    json rows = json::array();
    for (int a = 0; a < g.matrix.rows(); ++a) {
        json row = json::array();
        for (int b = 0; b < g.matrix.cols(); ++b) row.push_back(g.matrix(a, b));
        rows.push_back(row);
    }
    j = json{{"model", to_string(g.model)}, {"matrix", rows}};
}

void from_json(const json& j, Isometry& g) {
    const json& rows = j.at("matrix");
    const int d = int(rows.size());
    g.matrix = QMatrix(d, d);
    for (int a = 0; a < d; ++a) {
        require(rows[a].is_array() && int(rows[a].size()) == d, "isometry matrix must be square");
        for (int b = 0; b < d; ++b) g.matrix(a, b) = rows[a][b].get<Quaternion>();
    }
    g.model = parse_model(j.value("model", std::string("ball")));
}

void to_json(json& j, const PartitionStructure& s) {
    j = json{{"kind", to_string(s.kind)}, {"blocks", index_sets(s.blocks)}};
    if (!s.sub_blocks.empty()) {
        json subs = json::array();
        for (const auto& b : s.sub_blocks) subs.push_back(index_sets(b));
        j["sub_blocks"] = subs;
        j["anchors"] = index_sets(s.anchors);
    }
}

void from_json(const json& j, PartitionStructure& s) {
    const std::string kind = j.at("kind").get<std::string>();
    require(kind == "parabolic" || kind == "regular", "structure kind is parabolic or regular");
    s.kind = kind == "parabolic" ? PartitionStructure::Kind::Parabolic : PartitionStructure::Kind::Regular;
    s.blocks = index_sets(j.at("blocks"));
    s.sub_blocks.clear();
    s.anchors.clear();
    if (j.contains("sub_blocks")) {
        for (const auto& b : j["sub_blocks"]) s.sub_blocks.push_back(index_sets(b));
        s.anchors = index_sets(j.at("anchors"));
    }
}

void to_json(json& j, const BoundaryCoordinate& c) { j = json{{"m", c.m}, {"stratum", c.stratum}, {"v", c.v}}; }

void from_json(const json& j, BoundaryCoordinate& c) {
    c.v = quats(j.at("v"), "v");
    c.stratum = j.at("stratum").get<StratumTag>();
    c.m = j.contains("m") ? j["m"].get<int>() : boundary_size_from_length(c.v.size());
}

void to_json(json& j, const ParabolicCoordinate& c) {
    j = json{{"structure", c.structure}, {"X", c.X}};
    j["stratum"] = c.stratum ? json(*c.stratum) : json(nullptr);
}

void from_json(const json& j, ParabolicCoordinate& c) {
    c.structure = j.at("structure").get<PartitionStructure>();
    c.X = quats(j.at("X"), "X");
    if (j.contains("stratum") && !j["stratum"].is_null())
        c.stratum = j["stratum"].get<StratumTag>();
    else
        c.stratum.reset();
}

void to_json(json& j, const RegularCoordinate& c) {
    j = json{{"structure", c.structure}, {"G", c.G}, {"entries", c.entries}, {"strata", c.strata}};
}

void from_json(const json& j, RegularCoordinate& c) {
    c.structure = j.at("structure").get<PartitionStructure>();
    c.G = j.at("G").get<GramMatrix>();
    c.entries = quats(j.at("entries"), "entries");
    c.strata = j.at("strata").get<std::vector<StratumTag>>();
}

void to_json(json& j, const PositiveCoordinate& c) {
    j = json{{"kind", to_string(c.kind)}};
    if (c.parabolic) j["parabolic"] = *c.parabolic;
    if (c.regular) j["regular"] = *c.regular;
}

void from_json(const json& j, PositiveCoordinate& c) {
    const std::string kind = j.at("kind").get<std::string>();
    require(kind == "parabolic" || kind == "regular", "kind is parabolic or regular");
    c.kind = kind == "parabolic" ? PartitionStructure::Kind::Parabolic : PartitionStructure::Kind::Regular;
    c.parabolic.reset();
    c.regular.reset();
    if (j.contains("parabolic")) c.parabolic = j["parabolic"].get<ParabolicCoordinate>();
    if (j.contains("regular")) c.regular = j["regular"].get<RegularCoordinate>();
}

void to_json(json& j, const TriangleParams& t) {
    j = json{{"r1", t.r1}, {"r2", t.r2}, {"r3", t.r3}, {"alpha", t.alpha}};
}

void from_json(const json& j, TriangleParams& t) {
    t.r1 = number(j.at("r1"), "r1");
    t.r2 = number(j.at("r2"), "r2");
    t.r3 = number(j.at("r3"), "r3");
    t.alpha = number(j.at("alpha"), "alpha");
}

void to_json(json& j, const PairConfiguration& c) {
    j = json{{"kind", to_string(c.kind)}, {"t", c.t}};
    switch (c.kind) {
        case PairConfiguration::Kind::Intersecting: j["angle"] = c.angle; break;
        case PairConfiguration::Kind::Ultraparallel: j["distance"] = c.distance; break;
        case PairConfiguration::Kind::Asymptotic:
            if (c.null_fibre) j["null_fibre"] = *c.null_fibre;
            break;
    }
}

Tuple tuple_from_json(const json& j, Model fallback) {
    const json* pts = &j;
    if (j.is_object()) {
        require(j.contains("points"), "a tuple is {\"points\": [...]} or an array of points");
        if (j.contains("model")) {
            require(j["model"].is_string(), "model must be a string");
            try {
                fallback = parse_model(j["model"].get<std::string>());
            } catch (const std::exception& e) {
                throw UsageError(std::string("json: ") + e.what());
            }
        }
        pts = &j["points"];
    }
    require(pts->is_array() && !pts->empty(), "a tuple needs at least one point");
    Tuple p;
    for (const auto& v : *pts) p.push_back(hvector(v, fallback));
    for (const auto& v : p) require(v.dim() == p[0].dim(), "points of different dimension");
    return p;
}

json tuple_to_json(const Tuple& p) {
    json pts = json::array();
    for (const auto& v : p) pts.push_back(v);
    return json{{"points", pts}};
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace qhm
