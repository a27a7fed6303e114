#pragma once

#include "weylkit/weights.hpp"

namespace weylkit {

namespace detail {

inline std::vector<Int> support_of(const DominantWeight& w) {
    std::vector<Int> s;
    for (Int i = 0; i < w.rank; ++i)
        if (w.coeffs[i] != 0) s.push_back(i + 1);
    return s;
}

// mu is a multiple of one fundamental weight (zero counts).
inline bool single_support(const DominantWeight& w) { return support_of(w).size() <= 1; }

// nu lies under m(omega_j + omega_k) for some m and j,k: support on at most
// two nodes.
inline bool under_two_fundamentals(const DominantWeight& w) { return support_of(w).size() <= 2; }

// nu lies under omega_j + m omega_k: two-node support with coefficient 1 on
// one node, or single-node support.
inline bool under_one_plus_multiple(const DominantWeight& w) {
    auto s = support_of(w);
    if (s.size() <= 1) return true;
    if (s.size() != 2) return false;
    return w.coeffs[s[0] - 1] == 1 || w.coeffs[s[1] - 1] == 1;
}

// nu lies under m omega_j + m omega_k with k restricted to {1, j+1, n}.
inline bool under_adjacent_or_end_pair(const DominantWeight& w) {
    auto s = support_of(w);
    if (s.size() <= 1) return true;
    if (s.size() != 2) return false;
    Int p = s[0], q = s[1];  // p < q
    return p == 1 || q == w.rank || q == p + 1;
}

inline bool is_one_sided(const DominantWeight& w) {
    // 0, omega_i, m omega_1, or m omega_n
    auto s = support_of(w);
    if (s.empty()) return true;
    if (s.size() != 1) return false;
    Int i = s[0];
    Int m = w.coeffs[i - 1];
    return m == 1 || i == 1 || i == w.rank;
}

inline bool is_twice_fundamental(const DominantWeight& w) {
    auto s = support_of(w);
    return s.size() == 1 && w.coeffs[s[0] - 1] == 2;
}

inline bool under_multiple_of_node(const DominantWeight& w, Int node) {
    auto s = support_of(w);
    return s.empty() || (s.size() == 1 && s[0] == node);
}

inline bool stembridge_ordered(const DominantWeight& mu, const DominantWeight& nu) {
    // (i)
    if (is_one_sided(mu)) return true;
    // (ii)
    if (is_twice_fundamental(mu) && under_two_fundamentals(nu)) return true;
    // (iii)
    if ((under_multiple_of_node(mu, 2) || under_multiple_of_node(mu, mu.rank - 1)) && under_two_fundamentals(nu))
        return true;
    // (iv)
    if (single_support(mu) && under_one_plus_multiple(nu)) return true;
    // (v)
    if (single_support(mu) && under_adjacent_or_end_pair(nu)) return true;
    return false;
}

}  // namespace detail

/// Stembridge's type-A criterion: the tensor product V(mu) (x) V(nu) is
/// multiplicity-free exactly when one of five support-shape conditions holds
/// for (mu,nu) or (nu,mu).
inline bool stembridge_mf(const DominantWeight& mu, const DominantWeight& nu) {
    if (mu.rank != nu.rank) throw rank_error("tensor factors must share a rank");
    return detail::stembridge_ordered(mu, nu) || detail::stembridge_ordered(nu, mu);
}

/// Cheap necessary condition: a multiplicity-free tensor product needs one
/// factor supported on a single fundamental weight.  Returns false as a
/// certified non-MF verdict, true meaning "not excluded".
inline bool fundamental_multiple_mf(const DominantWeight& mu, const DominantWeight& nu) {
    return detail::single_support(mu) || detail::single_support(nu);
}

}  // namespace weylkit
