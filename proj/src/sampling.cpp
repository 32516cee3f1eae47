#include "qhm/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "qhm/errors.hpp"
#include "qhm/gram.hpp"

namespace qhm {

namespace {

std::vector<Quaternion> gaussian(int len, std::mt19937_64& rng) {
    std::normal_distribution<double> N(0.0, 1.0);
    std::vector<Quaternion> v(len);
    for (auto& q : v) q = Quaternion(N(rng), N(rng), N(rng), N(rng));
    return v;
}

double euclid(const std::vector<Quaternion>& v) {
    double s = 0;
    for (const auto& q : v) s += q.norm2();
    return std::sqrt(s);
}

double uniform(std::mt19937_64& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

int uniform_int(std::mt19937_64& rng, int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); }

// ball vector (x, y) with |y| = ratio |x|
HVector ball_vector(int n, double ratio, std::mt19937_64& rng) {
    auto x = gaussian(n, rng);
    const Quaternion y = random_unit_quaternion(rng).q() * (ratio * euclid(x));
    x.push_back(y);
    return HVector(x, Model::Ball);
}

bool has_coincident_pair(const Tuple& p) {
    for (size_t a = 0; a < p.size(); ++a)
        for (size_t b = a + 1; b < p.size(); ++b)
            if (projective_deviation(p[a], p[b]) < 1e-6) return true;
    return false;
}

}  // namespace

Quaternion random_quaternion(std::mt19937_64& rng) { return gaussian(1, rng)[0]; }

UnitQuaternion random_unit_quaternion(std::mt19937_64& rng) {
    Quaternion q;
    while (q.abs() < 1e-3) q = random_quaternion(rng);
    return UnitQuaternion::normalized(q);
}

ImVector3 random_imaginary(std::mt19937_64& rng) { return ImVector3::of(random_quaternion(rng)); }

std::vector<Quaternion> random_diagonal(int m, std::mt19937_64& rng) {
    std::vector<Quaternion> D(m);
    for (auto& d : D) d = random_unit_quaternion(rng).q() * std::exp(uniform(rng, std::log(0.5), std::log(2.0)));
    return D;
}

HVector random_null(int n, std::mt19937_64& rng, Model model) {
    return to_model(ball_vector(n, 1.0, rng) * random_quaternion(rng), model);
}

HVector random_positive(int n, std::mt19937_64& rng, Model model) {
    return to_model(ball_vector(n, uniform(rng, 0.0, 0.9), rng), model);
}

HVector random_negative(int n, std::mt19937_64& rng, Model model) {
    return to_model(ball_vector(n, uniform(rng, 1.2, 4.0), rng), model);
}

Tuple random_boundary_tuple(int n, int m, std::mt19937_64& rng, Model model) {
    if (n < 1 || m < 1) throw UsageError("random boundary tuple: need n >= 1 and m >= 1");
    Tuple p;
    for (int t = 0; t < m; ++t) p.push_back(random_null(n, rng, model));
    return p;
}

Tuple random_positive_regular(int n, int m, std::mt19937_64& rng, Model model, bool structured) {
    if (n < 1 || m < 1) throw UsageError("random positive tuple: need n >= 1 and m >= 1");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Tuple p;
        if (!structured) {
            for (int t = 0; t < m; ++t) p.push_back(random_positive(n, rng, Model::Ball));
        } else {
            // coordinate supports: each block owns some positive axes, one block may own e_{n+1}
            const int K = uniform_int(rng, 1, std::min(n, m));
            std::vector<int> axes(n);
            std::iota(axes.begin(), axes.end(), 0);
            std::shuffle(axes.begin(), axes.end(), rng);
            std::vector<std::vector<int>> own(K);
            for (int a = 0; a < n; ++a) own[a < K ? a : uniform_int(rng, 0, K - 1)].push_back(axes[a]);
            const int neg_block = uniform_int(rng, -1, K - 1);
            for (int t = 0; t < m; ++t) {
                const int b = t < K ? t : uniform_int(rng, 0, K - 1);
                std::vector<int> sup = own[b];
                if (b == neg_block) sup.push_back(n);
                // sometimes a sub-support, which makes zeros inside the block
                if (sup.size() > 1 && uniform_int(rng, 0, 2) == 0) {
                    std::shuffle(sup.begin(), sup.end(), rng);
                    sup.resize(uniform_int(rng, 1, int(sup.size()) - 1));
                }
                std::vector<Quaternion> e(n + 1);
                const auto g = gaussian(int(sup.size()), rng);
                for (size_t x = 0; x < sup.size(); ++x) e[sup[x]] = g[x];
                double pos = 0;
                for (int a = 0; a < n; ++a) pos += e[a].norm2();
                if (pos == 0) {
                    --t;
                    continue;
                }
                if (e[n].abs() > 0) e[n] = e[n] * (uniform(rng, 0.0, 0.9) * std::sqrt(pos) / e[n].abs());
                p.push_back(HVector(e, Model::Ball));
            }
            std::shuffle(p.begin(), p.end(), rng);
            p = random_isometry(n, rng, Model::Ball)(p);
        }
        if (has_coincident_pair(p)) continue;
        // parabolic spans have measure zero here, but structured draws can hit asymptotic pairs
        if (m >= 2) {
            const Inertia in = inertia(gram(p));
            if (in.n_minus == 0 && in.n_plus == span_dimension(p) - 1) continue;
        }
        p = rescale(p, random_diagonal(m, rng));
        return to_model(p, model);
    }
    throw NumericalError("random positive tuple: rejection sampling failed");
}

Tuple random_positive_parabolic(int n, int m, std::mt19937_64& rng, Model model) {
    if (n < 2) throw UsageError("random parabolic tuple: need n >= 2");
    if (m < 2) throw UsageError("random parabolic tuple: need m >= 2");
    const int K = uniform_int(rng, 1, std::min(n - 1, m - 1));
    // block sizes: K blocks, m points, block 0 has at least two
    std::vector<int> owner(m);
    owner[0] = owner[1] = 0;
    for (int t = 2; t < m; ++t) owner[t] = t - 1 < K ? t - 1 : uniform_int(rng, 0, K - 1);
    std::shuffle(owner.begin(), owner.end(), rng);

    std::uniform_real_distribution<double> U(-2.0, 2.0);
    Tuple p;
    for (int t = 0; t < m; ++t) {
        std::vector<Quaternion> e(n + 1);
        Quaternion k;
        // distinct within a block: the real part is spread out
        k = Quaternion(U(rng) + 5.0 * t, U(rng), U(rng), U(rng));
        e[0] = k;
        e[1 + owner[t]] = 1.0;
        p.push_back(HVector(e, Model::Siegel));
    }
    p = random_isometry(n, rng, Model::Siegel)(p);
    p = rescale(p, random_diagonal(m, rng));
    return to_model(p, model);
}

}  // namespace qhm
