#pragma once

#include "weylkit/weights.hpp"

namespace weylkit {

/// Root coefficients c with lambda - mu = sum c_i alpha_i, via epsilon lifts.
/// Throws lift_error when mu is outside the root-lattice coset of lambda.
inline std::vector<Int> root_coefficients(const DominantWeight& lambda, const WeightVector& mu) {
    if (lambda.rank != mu.rank) throw rank_error("rank mismatch");
    Int size = minimal_lift(lambda).size();
    std::vector<Int> ml = epsilon_lift(lambda.as_vector(), size);
    std::vector<Int> mm = epsilon_lift(mu, size);
    std::vector<Int> c(lambda.rank);
    Int run = 0;
    for (Int i = 0; i < lambda.rank; ++i) {
        run += ml[i] - mm[i];
        c[i] = run;
    }
    return c;
}

/// Cavallin reduction: replaces (lambda, mu) by a pair with smaller labels
/// and the same weight multiplicity.
inline std::pair<DominantWeight, WeightVector> cavallin_reduce(const DominantWeight& lambda, const WeightVector& mu,
                                                               const std::vector<Int>& J) {
    if (J.empty()) throw std::invalid_argument("index set J must be nonempty");
    std::vector<Int> c = root_coefficients(lambda, mu);
    for (Int x : c)
        if (x < 0) throw std::invalid_argument("mu must lie under lambda (all root coefficients nonnegative)");
    std::vector<Int> lc = lambda.coeffs;
    for (Int j : J) {
        if (j < 1 || j > lambda.rank) throw rank_error("index out of range");
        if (c[j - 1] > lambda.coeffs[j - 1]) throw std::invalid_argument("c_j <= a_j required for each j in J");
        lc[j - 1] = c[j - 1];  // a_j + (c_j - a_j)
    }
    DominantWeight lambda_prime(lambda.rank, lc);
    std::vector<Int> mc(lambda.rank);
    for (Int i = 0; i < lambda.rank; ++i) mc[i] = lambda_prime.coeffs[i] - (lambda.coeffs[i] - mu.coords[i]);
    return {lambda_prime, WeightVector(lambda.rank, std::move(mc))};
}

/// Multiplicity of lambda - (alpha_1 + ... + alpha_n) in V(lambda), in
/// closed form: 1 when the support is a single node, otherwise the product
/// of the gaps between consecutive support nodes plus one.
inline Int cavallin_rho_mult(const DominantWeight& lambda) {
    std::vector<Int> support;
    for (Int i = 0; i < lambda.rank; ++i)
        if (lambda.coeffs[i] != 0) support.push_back(i + 1);
    if (support.empty()) return 0;  // the weight below zero is not a weight at all
    if (support.size() == 1) return 1;
    Int prod = 1;
    for (std::size_t i = 1; i < support.size(); ++i) prod = checked_mul(prod, support[i] - support[i - 1] + 1);
    return prod;
}

}  // namespace weylkit
