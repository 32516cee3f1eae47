#pragma once

#include <string>
#include <vector>

#include "qhm/hform.hpp"
#include "qhm/qmatrix.hpp"

namespace qhm {

// m x m quaternionic Hermitian matrix, g_ij = <p_j, p_i>.
class GramMatrix {
public:
    GramMatrix() = default;
    // checks Hermitian symmetry (relative 1e-9) and then symmetrizes
    explicit GramMatrix(const QMatrix& entries);
    // takes the diagonal and upper triangle, fills in the rest
    static GramMatrix from_upper(const QMatrix& entries);

    int m() const { return g_.rows(); }
    const Quaternion& operator()(int i, int j) const { return g_(i, j); }
    const QMatrix& matrix() const { return g_; }
    double max_abs() const { return g_.max_abs(); }

private:
    QMatrix g_;
};

double max_dist(const GramMatrix& a, const GramMatrix& b);

struct Inertia {
    int n_plus = 0, n_minus = 0, n_zero = 0;
    bool operator==(const Inertia&) const = default;
    std::string str() const;
};

GramMatrix gram(const Tuple& p);

// sigma is 0-based: permute(G, sigma)(a, b) = G(sigma[a], sigma[b]) = gram(sigma(p))(a, b)
GramMatrix permute(const GramMatrix& G, const std::vector<int>& sigma);
Tuple permute(const Tuple& p, const std::vector<int>& sigma);
// T with G(p) = T G(sigma(p)) T*
QMatrix permutation_matrix(const std::vector<int>& sigma);

// D* G D and p D
GramMatrix rescale(const GramMatrix& G, const std::vector<Quaternion>& D);
Tuple rescale(const Tuple& p, const std::vector<Quaternion>& D);

// real eigenvalues of G, each listed once (the complex adjoint doubles them)
std::vector<double> eigenvalues(const GramMatrix& G);
Inertia inertia(const GramMatrix& G, const Tolerances& tol = {});

// G = M* diag(d) M, by symmetric elimination with diagonal pivoting; a zero diagonal
// is lifted first by replacing a column with p_r + p_s mu.
struct CongruenceReduction {
    QMatrix M;
    std::vector<double> d;
};
CongruenceReduction congruence_diagonalize(const GramMatrix& G, const Tolerances& tol = {});

enum class GramKind { Boundary, Positive, Mixed };
GramKind gram_kind(const GramMatrix& G, const Tolerances& tol = {});

// true when some pair has normalized product of modulus 1 (positive diagonal entries only)
bool has_unit_pair(const GramMatrix& G, const Tolerances& tol = {});

struct Admissibility {
    bool ok = true;
    std::string violated;  // e.g. "n₋ ≤ 1"
    Inertia inertia;
};

Admissibility admissibility(const GramMatrix& G, int n, const Tolerances& tol = {});

// Points in H^{n,1} with gram(p) = G. Throws RealizationError naming the violated condition.
Tuple realize(const GramMatrix& G, int n, Model model = Model::Ball, const Tolerances& tol = {});

int span_dimension(const Tuple& p, const Tolerances& tol = {});

}  // namespace qhm
