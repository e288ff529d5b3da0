#pragma once

namespace lorentz {

/// Numerical thresholds shared by every module. The CLI's --tol flag
/// overrides det, alg, cls and member uniformly.
struct Tolerances {
    double det = 1e-9;     // group membership: |det g - 1|
    double alg = 1e-9;     // algebra identities, zero tests
    double cls = 1e-9;     // nilpotent threshold, scaled by (1 + |A|^2)
    double rank = 1e-8;    // singular-value cut, relative to the largest
    double member = 1e-9;  // subgroup family membership, relative

    static Tolerances uniform(double tol) {
        Tolerances t;
        t.det = t.alg = t.cls = t.member = tol;
        return t;
    }
};

}  // namespace lorentz
