#pragma once

namespace qhm {

struct Tolerances {
    // real/complex test for stratification, relative to 1 + |entry|
    double stratum = 1e-9;
    // cross-product test before calling mu
    double independence = 1e-10;
    // null test, relative to |z|^2
    double null_class = 1e-9;
    // eigenvalue / singular value cut, relative to the spectral norm
    double rank = 1e-9;
    // zero pattern of normalized Gram matrices
    double zero_pattern = 1e-9;
    // |t - 1| for asymptotic pairs
    double asymptotic = 1e-8;
    // entrywise comparison of coordinates
    double compare = 1e-8;

    // the --eps knob: one value for the classification thresholds
    static Tolerances with_eps(double eps) {
        Tolerances t;
        t.stratum = eps;
        t.null_class = eps;
        t.rank = eps;
        t.zero_pattern = eps;
        return t;
    }
};

}  // namespace qhm
