#pragma once

#include <algorithm>
#include <numeric>
#include <ostream>

#include "weylkit/partition.hpp"

namespace weylkit {

/// Point of the A_n weight lattice in fundamental-weight coordinates, not
/// necessarily dominant.
struct WeightVector {
    Int rank = 1;
    std::vector<Int> coords;

    WeightVector() = default;
    WeightVector(Int r, std::vector<Int> c) : rank(r), coords(std::move(c)) {
        if (rank < 1) throw rank_error("rank must be positive");
        if (static_cast<Int>(coords.size()) != rank) throw rank_error("coordinate length != rank");
    }

    bool is_dominant() const {
        return std::all_of(coords.begin(), coords.end(), [](Int c) { return c >= 0; });
    }

    bool operator==(const WeightVector& o) const { return rank == o.rank && coords == o.coords; }
    bool operator<(const WeightVector& o) const { return coords < o.coords; }
};

/// Dominant integral weight of A_n: nonnegative coefficients of the
/// fundamental weights.
struct DominantWeight {
    Int rank = 1;
    std::vector<Int> coeffs;

    DominantWeight() = default;
    DominantWeight(Int r, std::vector<Int> c) : rank(r), coeffs(std::move(c)) {
        if (rank < 1) throw rank_error("rank must be positive");
        if (static_cast<Int>(coeffs.size()) != rank) throw rank_error("coefficient length != rank");
        for (Int x : coeffs)
            if (x < 0) throw std::invalid_argument("dominant weight coefficients must be nonnegative");
    }

    static DominantWeight zero(Int rank) { return DominantWeight(rank, std::vector<Int>(rank, 0)); }

    static DominantWeight fundamental(Int rank, Int i) {
        if (i < 1 || i > rank) throw rank_error("fundamental weight index out of range");
        std::vector<Int> c(rank, 0);
        c[i - 1] = 1;
        return DominantWeight(rank, std::move(c));
    }

    static DominantWeight multiple_of_fundamental(Int rank, Int i, Int m) {
        if (i < 1 || i > rank) throw rank_error("fundamental weight index out of range");
        std::vector<Int> c(rank, 0);
        c[i - 1] = m;
        return DominantWeight(rank, std::move(c));
    }

    WeightVector as_vector() const { return WeightVector(rank, coeffs); }

    bool is_zero() const {
        return std::all_of(coeffs.begin(), coeffs.end(), [](Int c) { return c == 0; });
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(coeffs[i]);
        }
        return s + ")";
    }

    bool operator==(const DominantWeight& o) const { return rank == o.rank && coeffs == o.coeffs; }
    bool operator!=(const DominantWeight& o) const { return !(*this == o); }
    bool operator<(const DominantWeight& o) const { return coeffs < o.coeffs; }
};

inline std::ostream& operator<<(std::ostream& os, const DominantWeight& w) { return os << w.to_string(); }

/// Sum of the fundamental-weight coefficients.
inline Int s_value(const DominantWeight& w) {
    return std::accumulate(w.coeffs.begin(), w.coeffs.end(), Int{0});
}

/// Number of nonzero fundamental-weight coefficients.
inline Int l_value(const DominantWeight& w) {
    return static_cast<Int>(std::count_if(w.coeffs.begin(), w.coeffs.end(), [](Int c) { return c != 0; }));
}

/// Highest weight of the dual module: coefficient reversal in type A.
inline DominantWeight dual_weight(const DominantWeight& w) {
    std::vector<Int> c(w.coeffs.rbegin(), w.coeffs.rend());
    return DominantWeight(w.rank, std::move(c));
}

inline WeightVector dual_vector(const WeightVector& w) {
    std::vector<Int> c(w.coords.rbegin(), w.coords.rend());
    return WeightVector(w.rank, std::move(c));
}

/// SL weight of a partition: coeffs[i] = parts[i] - parts[i+1].
inline DominantWeight partition_to_weight(const Partition& p, Int rank) {
    if (p.rows() > rank + 1) throw rank_error("partition has more nonzero parts than rank+1 allows");
    std::vector<Int> c(rank);
    for (Int i = 0; i < rank; ++i) c[i] = p.part(i) - p.part(i + 1);
    return DominantWeight(rank, std::move(c));
}

/// Minimal partition lift: parts are the suffix sums of the coefficients,
/// with a trailing zero.
inline Partition minimal_lift(const DominantWeight& w) {
    std::vector<Int> parts(w.rank);
    Int run = 0;
    for (Int i = w.rank - 1; i >= 0; --i) {
        run += w.coeffs[i];
        parts[i] = run;
    }
    return Partition(std::move(parts), w.rank + 1);
}

/// The unique partition of total size `size_class` mapping back to `w`, or
/// the minimal lift when `size_class` is negative.
inline Partition weight_to_partition(const DominantWeight& w, Int size_class = -1) {
    Partition base = minimal_lift(w);
    if (size_class < 0) return base;
    Int base_size = base.size();
    Int diff = size_class - base_size;
    Int modulus = w.rank + 1;
    if (diff % modulus != 0 || diff < 0)
        throw lift_error("no partition lift of the requested size exists");
    Int t = diff / modulus;
    std::vector<Int> parts(w.rank + 1, t);
    for (Int i = 0; i < w.rank; ++i) parts[i] += base.part(i);
    return Partition(std::move(parts), w.rank + 1);
}

/// Integer vector (m_1,...,m_{rank+1}) with m_i - m_{i+1} = coords[i] and
/// total `size`.  Throws lift_error when no such lift exists (the weight is
/// outside the relevant coset).
inline std::vector<Int> epsilon_lift(const WeightVector& w, Int size) {
    const Int n = w.rank;
    std::vector<Int> m(n + 1, 0);
    Int run = 0;
    Int weighted = 0;
    for (Int i = n - 1; i >= 0; --i) {
        run += w.coords[i];
        m[i] = run;
        weighted += (i + 1) * w.coords[i];
    }
    Int diff = size - weighted;
    if (diff % (n + 1) != 0) throw lift_error("weight lies outside the coset of the requested lift size");
    Int t = diff / (n + 1);
    for (auto& x : m) x += t;
    return m;
}

/// Inverse of epsilon_lift up to the diagonal shift.
inline WeightVector weight_from_epsilon(Int rank, const std::vector<Int>& m) {
    if (static_cast<Int>(m.size()) != rank + 1) throw rank_error("epsilon vector length != rank+1");
    std::vector<Int> c(rank);
    for (Int i = 0; i < rank; ++i) c[i] = m[i] - m[i + 1];
    return WeightVector(rank, std::move(c));
}

/// Dominant representative of the Weyl orbit: sort epsilon coordinates.
inline std::vector<Int> dominant_epsilon(std::vector<Int> m) {
    std::sort(m.begin(), m.end(), std::greater<Int>());
    return m;
}

}  // namespace weylkit
