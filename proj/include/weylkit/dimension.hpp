#pragma once

#include "weylkit/weights.hpp"

namespace weylkit {

/// Dimension of the irreducible GL_N module labeled by the partition `p`,
/// by the hook content formula.  Exact.
inline BigInt gl_dimension(const Partition& p, Int N) {
    BigInt num = 1, den = 1;
    auto conj = p.conjugate();
    for (Int i = 0; i < p.rows(); ++i) {
        for (Int j = 0; j < p.part(i); ++j) {
            num *= BigInt(N + j - i);
            Int hook = (p.part(i) - j) + (conj.part(j) - i) - 1;
            den *= BigInt(hook);
        }
    }
    return num / den;
}

/// Dimension of the irreducible A_n module of highest weight `w`.
inline BigInt weyl_dim(const DominantWeight& w) {
    return gl_dimension(minimal_lift(w), w.rank + 1);
}

inline BigInt binomial_big(Int n, Int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (Int i = 1; i <= k; ++i) {
        r *= BigInt(n - k + i);
        r /= BigInt(i);
    }
    return r;
}

}  // namespace weylkit
