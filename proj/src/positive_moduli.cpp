#include "qhm/positive_moduli.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "qhm/boundary_moduli.hpp"
#include "qhm/errors.hpp"

namespace qhm {

namespace {

void require_positive(const Tuple& p, const Tolerances& tol) {
    if (p.empty()) throw UsageError("empty tuple");
    for (size_t t = 0; t < p.size(); ++t) {
        if (p[t].dim() != p[0].dim()) throw UsageError("points of different dimension");
        const PointClass c = classify(p[t], tol);
        if (c != PointClass::Positive)
            throw DomainError("point " + std::to_string(t + 1) + " is " + to_string(c) + ", expected positive");
    }
}

// |g_ab| / sqrt(g_aa g_bb)
double normalized_abs(const GramMatrix& G, int a, int b) {
    return G(a, b).abs() / std::sqrt(G(a, a).re() * G(b, b).re());
}

}  // namespace

std::string to_string(PartitionStructure::Kind k) {
    return k == PartitionStructure::Kind::Parabolic ? "parabolic" : "regular";
}

OneNormalization one_normalize(const GramMatrix& G, const Tolerances& tol) {
    const int m = G.m();
    if (m < 2) throw UsageError("one_normalize needs at least two points");
    std::vector<Quaternion> D(m);
    for (int i = 0; i < m; ++i) {
        if (G(i, i).re() <= 0) throw DomainError("one_normalize: diagonal entry " + std::to_string(i + 1) + " is not positive");
        D[i] = 1.0 / std::sqrt(G(i, i).re());
    }
    const GramMatrix G0 = rescale(G, D);
    for (int i = 1; i < m; ++i) {
        const Quaternion h = G0(0, i);
        if (h.abs() > tol.zero_pattern) D[i] = D[i] * (h.conj() / h.abs());
    }
    if (m >= 3) {
        const ImVector3 im = ImVector3::of(rescale(G, D)(1, 2));
        if (im.norm() > 0) {
            const Quaternion l1 = nu(im);
            for (auto& d : D) d = d * l1;
        }
    }
    const GramMatrix G1 = rescale(G, D);
    QMatrix g = G1.matrix();
    for (int i = 0; i < m; ++i) {
        g(i, i) = 1.0;
        g(0, i) = Quaternion(g(0, i).re());
    }
    g(0, 0) = 1.0;
    if (m >= 3) g(1, 2).a2 = g(1, 2).a3 = 0;
    return {D, GramMatrix::from_upper(g)};
}

OneNormalization one_normalize(const Tuple& p, const Tolerances& tol) {
    require_positive(p, tol);
    return one_normalize(gram(p), tol);
}

PartitionStructure detect_partition(const GramMatrix& G, int n, const Tolerances& tol, std::optional<int> span_dim) {
    const int m = G.m();
    for (int i = 0; i < m; ++i)
        if (G(i, i).re() <= 0) throw DomainError("detect_partition: diagonal must be positive");
    const Admissibility adm = admissibility(G, n, tol);
    if (!adm.ok) throw DomainError("detect_partition: inadmissible Gram matrix, violates " + adm.violated);
    const Inertia& in = adm.inertia;

    PartitionStructure s;
    const bool parabolic = span_dim ? (in.n_minus == 0 && in.n_plus == *span_dim - 1)
                                    : (in.n_minus == 0 && has_unit_pair(G, tol));
    s.kind = parabolic ? PartitionStructure::Kind::Parabolic : PartitionStructure::Kind::Regular;

    // connected components of the nonzero pattern
    std::vector<int> comp(m, -1);
    for (int start = 0; start < m; ++start) {
        if (comp[start] >= 0) continue;
        const int id = int(s.blocks.size());
        std::vector<int> block, stack{start};
        comp[start] = id;
        while (!stack.empty()) {
            const int a = stack.back();
            stack.pop_back();
            block.push_back(a);
            for (int b = 0; b < m; ++b)
                if (comp[b] < 0 && normalized_abs(G, a, b) > tol.zero_pattern) {
                    comp[b] = id;
                    stack.push_back(b);
                }
        }
        std::sort(block.begin(), block.end());
        s.blocks.push_back(block);
    }

    if (parabolic) {
        for (const auto& block : s.blocks)
            for (size_t x = 0; x < block.size(); ++x)
                for (size_t y = x + 1; y < block.size(); ++y)
                    if (std::abs(normalized_abs(G, block[x], block[y]) - 1.0) > tol.asymptotic)
                        throw InconsistencyError("parabolic span, but the product of points " +
                                                 std::to_string(block[x] + 1) + " and " + std::to_string(block[y] + 1) +
                                                 " is not of modulus one; the block directions are not orthonormal");
        if (int(s.blocks.size()) != in.n_plus)
            throw InconsistencyError("parabolic span with " + std::to_string(s.blocks.size()) +
                                     " blocks but n₊ = " + std::to_string(in.n_plus));
    }
    return s;
}

PartitionStructure detect_partition(const Tuple& p, const Tolerances& tol) {
    require_positive(p, tol);
    return detect_partition(gram(p), p[0].n(), tol, span_dimension(p, tol));
}

Quaternion chi(const Quaternion& ka, const Quaternion& kb, const Quaternion& kc) {
    const Quaternion den = kb - kc;
    if (den.abs() == 0.0) throw DomainError("chi: coincident points");
    return (ka - kc) * den.inverse();
}

Quaternion cross_ratio(const ExtQuaternion& z1, const ExtQuaternion& z2, const ExtQuaternion& z3,
                       const ExtQuaternion& z4) {
    const int infinite = int(z1.infinite) + int(z2.infinite) + int(z3.infinite) + int(z4.infinite);
    if (infinite > 1) throw DomainError("cross_ratio: more than one point at infinity");
    auto inv = [](const Quaternion& q) {
        if (q.abs() == 0.0) throw DomainError("cross_ratio: coincident points give 0/0");
        return q.inverse();
    };
    const Quaternion a = z1.q, b = z2.q, c = z3.q, d = z4.q;
    if (z1.infinite) return (b - d) * inv(b - c);
    if (z2.infinite) return (a - c) * inv(a - d);
    if (z3.infinite) return inv(a - d) * (b - d);
    if (z4.infinite) return (a - c) * inv(b - c);
    return (a - c) * inv(a - d) * (b - d) * inv(b - c);
}

std::vector<Quaternion> parabolic_k(const Tuple& p, const PartitionStructure& s, const Tolerances& tol,
                                    const GInfinity* twist) {
    if (s.kind != PartitionStructure::Kind::Parabolic) throw DomainError("parabolic_k: structure is not parabolic");
    Tuple q = to_model(p, Model::Siegel);
    const int n = q[0].n();
    const int K = int(s.blocks.size());
    if (K > n - 1) throw InconsistencyError("parabolic_k: more blocks than directions in z_inf-perp");

    for (auto& v : q) v = v * (1.0 / std::sqrt(herm(v, v).re()));
    const HVector* z0_from = nullptr;
    for (const auto& block : s.blocks) {
        const HVector& a = q[block[0]];
        for (size_t x = 1; x < block.size(); ++x) {
            HVector& b = q[block[x]];
            const Quaternion h = herm(b, a);
            b = b * (h.conj() / h.abs());
        }
        if (!z0_from && block.size() >= 2) z0_from = &a;
    }
    const auto big = std::find_if(s.blocks.begin(), s.blocks.end(), [](const auto& b) { return b.size() >= 2; });
    if (big == s.blocks.end()) throw InconsistencyError("parabolic_k: no block with two points, no common null fibre");
    const HVector z0 = q[(*big)[1]] - q[(*big)[0]];
    for (size_t t = 0; t < q.size(); ++t)
        if (herm(q[t], z0).abs() > 1e-7 * z0.euclidean_norm() * q[t].euclidean_norm())
            throw InconsistencyError("parabolic_k: the null fibre is not orthogonal to point " + std::to_string(t + 1));

    Isometry g = frame_at_null(z0, tol).inverse();
    if (twist) {
        if (twist->n() != n) throw UsageError("parabolic_k: twist has the wrong dimension");
        g = twist->to_isometry() * g;
    }
    const Tuple r = g(q);
    for (size_t t = 0; t < r.size(); ++t)
        if (r[t].entries[n].abs() > 1e-7 * r[t].euclidean_norm())
            throw InconsistencyError("parabolic_k: point " + std::to_string(t + 1) + " is not in z_inf-perp");

    // U with U alpha_i = e_i: Gram-Schmidt on (alpha_1..alpha_K, e_1..e_{n-1})
    const int d = n - 1;
    auto mid = [&](const HVector& v) { return std::vector<Quaternion>(v.entries.begin() + 1, v.entries.begin() + n); };
    auto inner = [](const std::vector<Quaternion>& a, const std::vector<Quaternion>& b) {
        Quaternion s;  // b^dagger a
        for (size_t x = 0; x < a.size(); ++x) s += b[x].conj() * a[x];
        return s;
    };
    auto orth = [&](std::vector<Quaternion> v, const std::vector<std::vector<Quaternion>>& basis) {
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : basis) {
                const Quaternion c = inner(v, b);
                for (int x = 0; x < d; ++x) v[x] -= b[x] * c;
            }
        return v;
    };
    auto norm = [&](const std::vector<Quaternion>& v) { return std::sqrt(inner(v, v).re()); };
    std::vector<std::vector<Quaternion>> Q;
    for (const auto& block : s.blocks) {
        auto a = orth(mid(r[block[0]]), Q);
        const double na = norm(a);
        if (na < 0.5) throw InconsistencyError("parabolic_k: block directions are not orthonormal");
        for (auto& x : a) x = x / na;
        Q.push_back(a);
    }
    while (int(Q.size()) < d) {
        std::vector<Quaternion> best;
        double bn = -1;
        for (int e = 0; e < d; ++e) {
            std::vector<Quaternion> v(d);
            v[e] = 1.0;
            v = orth(v, Q);
            if (norm(v) > bn * (1 + 1e-12)) {
                bn = norm(v);
                best = v;
            }
        }
        for (auto& x : best) x = x / bn;
        Q.push_back(best);
    }

    std::vector<Quaternion> k(p.size());
    for (int i = 0; i < K; ++i) {
        for (int t : s.blocks[i]) {
            const auto a = mid(r[t]);
            // the i-th coordinate of U a; the others must vanish
            Quaternion nu_t;
            for (int c = 0; c < d; ++c) {
                const Quaternion v = inner(a, Q[c]);
                if (c == i)
                    nu_t = v;
                else if (v.abs() > 1e-7)
                    throw InconsistencyError("parabolic_k: point " + std::to_string(t + 1) + " leaves its block direction");
            }
            if (std::abs(nu_t.abs() - 1.0) > 1e-7)
                throw InconsistencyError("parabolic_k: point " + std::to_string(t + 1) + " has no unit block component");
            k[t] = r[t].entries[0] * nu_t.inverse();
        }
        const Quaternion base = k[s.blocks[i][0]];
        for (int t : s.blocks[i]) k[t] -= base;
        double scale = 0;
        for (int t : s.blocks[i]) scale = std::max(scale, k[t].abs());
        for (size_t x = 0; x < s.blocks[i].size(); ++x)
            for (size_t y = x + 1; y < s.blocks[i].size(); ++y)
                if (dist(k[s.blocks[i][x]], k[s.blocks[i][y]]) <= 1e-12 * std::max(1.0, scale))
                    throw DegenerateInputError("parabolic_k: coincident points in a block");
    }
    return k;
}

ParabolicCoordinate parabolic_coordinates(const Tuple& p, const Tolerances& tol, const GInfinity* twist) {
    ParabolicCoordinate pc;
    pc.structure = detect_partition(p, tol);
    if (pc.structure.kind != PartitionStructure::Kind::Parabolic)
        throw DomainError("parabolic_coordinates: the tuple spans a regular subspace");
    const auto k = parabolic_k(p, pc.structure, tol, twist);
    std::vector<Quaternion> X;
    for (const auto& block : pc.structure.blocks)
        for (size_t j = 2; j < block.size(); ++j) X.push_back(chi(k[block[0]], k[block[1]], k[block[j]]));
    if (X.empty()) return pc;
    RotationNormalized rn = rotation_normalize_vector(X, tol);
    pc.X = std::move(rn.values);
    pc.stratum = rn.stratum;
    return pc;
}

bool same_coordinate(const ParabolicCoordinate& a, const ParabolicCoordinate& b, const Tolerances& tol) {
    return a.structure == b.structure && a.stratum == b.stratum && coordinate_distance(a.X, b.X) <= tol.compare;
}

bool congruent_parabolic(const Tuple& p, const Tuple& q, const Tolerances& tol) {
    if (p.size() != q.size()) throw UsageError("congruent_parabolic: tuples of different length");
    return same_coordinate(parabolic_coordinates(p, tol), parabolic_coordinates(q, tol), tol);
}

BlockNormalization block_normalize(const GramMatrix& G, const PartitionStructure& s, const Tolerances& tol) {
    if (s.kind != PartitionStructure::Kind::Regular) throw DomainError("block_normalize: structure is not regular");
    const int m = G.m();
    const double cut = tol.zero_pattern * std::max(1.0, G.max_abs());
    auto nz = [&](int a, int b) { return G(a, b).abs() > cut; };

    BlockNormalization bn;
    bn.D.assign(m, Quaternion(1.0));
    bn.structure = s;
    bn.structure.sub_blocks.clear();
    bn.structure.anchors.clear();
    for (const auto& block : s.blocks) {
        std::vector<int> rest = block;
        std::vector<std::vector<int>> subs;
        std::vector<int> anchors;
        while (!rest.empty()) {
            int c = rest[0], fewest = m + 1;
            for (int l : rest) {
                int zeros = 0;
                for (int t : rest) zeros += !nz(l, t);
                if (zeros < fewest) {
                    fewest = zeros;
                    c = l;
                }
            }
            std::vector<int> sub, left;
            for (int t : rest) (nz(c, t) ? sub : left).push_back(t);
            for (int t : sub)
                if (t != c) bn.D[t] = G(c, t).conj() / G(c, t).abs();
            subs.push_back(sub);
            anchors.push_back(c);
            rest = left;
        }
        bn.structure.sub_blocks.push_back(subs);
        bn.structure.anchors.push_back(anchors);
    }
    bn.G = rescale(G, bn.D);
    return bn;
}

BlockNormalization block_normalize(const Tuple& p, const Tolerances& tol) {
    const OneNormalization on = one_normalize(p, tol);
    const PartitionStructure s = detect_partition(on.G, p[0].n(), tol, span_dimension(p, tol));
    BlockNormalization bn = block_normalize(on.G, s, tol);
    for (size_t t = 0; t < p.size(); ++t) bn.D[t] = on.D[t] * bn.D[t];
    return bn;
}

RegularCoordinate regular_coordinate(const Tuple& p, const Tolerances& tol) {
    const OneNormalization on = one_normalize(p, tol);
    const PartitionStructure s = detect_partition(on.G, p[0].n(), tol, span_dimension(p, tol));
    if (s.kind != PartitionStructure::Kind::Regular)
        throw DomainError("regular_coordinate: the tuple spans a parabolic subspace");
    const BlockNormalization bn = block_normalize(on.G, s, tol);
    const GramMatrix& Gb = bn.G;
    const int m = Gb.m();
    const double cut = tol.zero_pattern * std::max(1.0, Gb.max_abs());

    RegularCoordinate rc;
    rc.structure = bn.structure;
    std::vector<Quaternion> Dg(m, Quaternion(1.0));
    QMatrix out(m, m);
    for (int i = 0; i < m; ++i) out(i, i) = 1.0;

    for (size_t bi = 0; bi < bn.structure.blocks.size(); ++bi) {
        const auto& subs = bn.structure.sub_blocks[bi];
        const int r = int(subs.size());
        // spanning tree over the sub-blocks, breadth first from the first one
        std::vector<int> parent(r, -1), order{0};
        std::vector<std::pair<int, int>> edge(r, {-1, -1});
        std::vector<bool> seen(r, false);
        seen[0] = true;
        for (size_t head = 0; head < order.size(); ++head) {
            const int a = order[head];
            for (int b = 0; b < r; ++b) {
                if (seen[b]) continue;
                std::pair<int, int> e{-1, -1};
                for (int x : subs[a]) {
                    for (int y : subs[b])
                        if (Gb(x, y).abs() > cut) {
                            e = {x, y};
                            break;
                        }
                    if (e.first >= 0) break;
                }
                if (e.first < 0) continue;
                seen[b] = true;
                parent[b] = a;
                edge[b] = e;
                order.push_back(b);
            }
        }
        if (int(order.size()) != r) throw InconsistencyError("regular_coordinate: sub-blocks of a block are disconnected");
        for (size_t h = 1; h < order.size(); ++h) {
            const auto [x, y] = edge[order[h]];
            const Quaternion val = Dg[x].conj() * Gb(x, y) * Dg[y];
            const Quaternion u = val.conj() / val.abs();
            for (int t : subs[order[h]]) Dg[t] = u;
        }

        // what is left is one Sp(1) acting by conjugation on the whole block
        std::vector<std::pair<int, int>> pairs;
        std::vector<int> owner(m, -1);
        for (int a = 0; a < r; ++a) {
            for (int t : subs[a]) owner[t] = a;
            for (size_t x = 0; x < subs[a].size(); ++x)
                for (size_t y = x + 1; y < subs[a].size(); ++y) pairs.emplace_back(subs[a][x], subs[a][y]);
        }
        const auto& block = bn.structure.blocks[bi];
        for (size_t x = 0; x < block.size(); ++x)
            for (size_t y = x + 1; y < block.size(); ++y)
                if (owner[block[x]] != owner[block[y]]) pairs.emplace_back(block[x], block[y]);

        std::vector<Quaternion> scan;
        for (auto [a, b] : pairs) {
            const Quaternion v = Dg[a].conj() * Gb(a, b) * Dg[b];
            scan.push_back(v.abs() > cut ? v : Quaternion(0.0));
        }
        if (scan.empty()) {
            rc.strata.push_back({StratumTag::Kind::ZR, 0, 0});
            continue;
        }
        const RotationNormalized rn = rotation_normalize_vector(scan, tol);
        rc.strata.push_back(rn.stratum);
        for (size_t t = 0; t < pairs.size(); ++t) out(pairs[t].first, pairs[t].second) = rn.values[t];
    }
    rc.G = GramMatrix::from_upper(out);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) rc.entries.push_back(rc.G(i, j));
    return rc;
}

bool same_coordinate(const RegularCoordinate& a, const RegularCoordinate& b, const Tolerances& tol) {
    return a.structure == b.structure && a.strata == b.strata && coordinate_distance(a.entries, b.entries) <= tol.compare;
}

PositiveCoordinate positive_coordinate(const Tuple& p, const Tolerances& tol) {
    require_positive(p, tol);
    PositiveCoordinate pc;
    const PartitionStructure s = detect_partition(p, tol);
    pc.kind = s.kind;
    if (s.kind == PartitionStructure::Kind::Parabolic)
        pc.parabolic = parabolic_coordinates(p, tol);
    else
        pc.regular = regular_coordinate(p, tol);
    return pc;
}

bool same_coordinate(const PositiveCoordinate& a, const PositiveCoordinate& b, const Tolerances& tol) {
    if (a.kind != b.kind) return false;
    if (a.parabolic && b.parabolic) return same_coordinate(*a.parabolic, *b.parabolic, tol);
    if (a.regular && b.regular) return same_coordinate(*a.regular, *b.regular, tol);
    return false;
}

bool congruent(const Tuple& p, const Tuple& q, const Tolerances& tol) {
    if (p.size() != q.size()) throw UsageError("congruent: tuples of different length");
    require_positive(p, tol);
    require_positive(q, tol);
    if (p[0].dim() != q[0].dim()) throw UsageError("congruent: tuples live in different dimensions");
    return same_coordinate(positive_coordinate(p, tol), positive_coordinate(q, tol), tol);
}

}  // namespace qhm
