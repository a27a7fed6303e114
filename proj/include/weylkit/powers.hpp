#pragma once

#include <limits>

#include "weylkit/character.hpp"

namespace weylkit {

/// Level decomposition of an A_rank module under the maximal parabolic at
/// one end of the diagram: levels[d] is a decomposition over the Levi
/// A_{rank-1}.
struct LevelDecomposition {
    Int rank = 2;  // rank of the ambient group; levels live over rank-1
    std::vector<Decomposition> levels;

    BigInt total_dimension() const {
        BigInt d = 0;
        for (auto& l : levels) d += l.total_dimension();
        return d;
    }
    bool operator==(const LevelDecomposition& o) const { return rank == o.rank && levels == o.levels; }
};

enum class ParabolicEnd { first, last };

namespace detail {

inline Character newton_power(Int k, const Character& base, bool alternating, Int guard) {
    std::vector<Character> pw;  // pw[i] = psi^i applied to base
    pw.reserve(k + 1);
    pw.emplace_back(base.rank());  // unused slot 0
    for (Int i = 1; i <= k; ++i) pw.push_back(adams(i, base));
    std::vector<Character> e;
    e.emplace_back(base.rank());
    e[0].add(std::vector<Int>(base.rank(), 0), 1);  // unit
    for (Int m = 1; m <= k; ++m) {
        Character acc(base.rank());
        for (Int i = 1; i <= m; ++i) {
            Character term = char_product(pw[i], e[m - i], guard);
            Int sign = (!alternating || i % 2 == 1) ? 1 : -1;
            for (auto& [w, mu] : term.table()) acc.add_signed(w, sign * mu);
        }
        // divide by m
        Character scaled(base.rank());
        for (auto& [w, mu] : acc.table()) {
            if (mu % m != 0) throw character_error("newton recursion produced a non-integral character");
            scaled.add(w, mu / m);
        }
        e.push_back(std::move(scaled));
    }
    return e[k];
}

}  // namespace detail

/// Decomposition of the k-th exterior power of V(lambda).
inline Decomposition alt_power(Int k, const DominantWeight& lambda, Int guard = kDefaultGuard) {
    if (k < 0) throw std::invalid_argument("power must be nonnegative");
    BigInt d = weyl_dim(lambda);
    BigInt target = 1;
    {  // C(d, k)
        BigInt num = 1, den = 1;
        for (Int i = 0; i < k; ++i) {
            num *= d - i;
            den *= i + 1;
        }
        target = num / den;
    }
    if (target > guard) throw guard_error("exterior power of dimension " + target.str() + " exceeds guard");
    Character base = char_of_irrep(lambda, guard);
    Character ek = detail::newton_power(k, base, true, guard);
    return decompose_character(std::move(ek), guard);
}

/// Decomposition of the k-th symmetric power of V(lambda).
inline Decomposition sym_power(Int k, const DominantWeight& lambda, Int guard = kDefaultGuard) {
    if (k < 0) throw std::invalid_argument("power must be nonnegative");
    BigInt d = weyl_dim(lambda);
    BigInt target = 1;
    {  // C(d+k-1, k)
        BigInt num = 1, den = 1;
        for (Int i = 0; i < k; ++i) {
            num *= d + k - 1 - i;
            den *= i + 1;
        }
        target = num / den;
    }
    if (target > guard) throw guard_error("symmetric power of dimension " + target.str() + " exceeds guard");
    Character base = char_of_irrep(lambda, guard);
    Character hk = detail::newton_power(k, base, false, guard);
    return decompose_character(std::move(hk), guard);
}

// ---------------------------------------------------------------------------
// Howe's increasing-subset construction for wedge powers of omega_2 / 2omega_1
// ---------------------------------------------------------------------------

enum class HoweBase { omega2, two_omega1 };

namespace detail {

/// Weight of the i-th basis vector (1-based) of the natural module of
/// A_{l+1}, in fundamental coordinates.
inline std::vector<Int> natural_basis_weight(Int xrank, Int i) {
    std::vector<Int> w(xrank, 0);
    w[0] = 1;
    for (Int t = 1; t < i; ++t) {
        // subtract alpha_t
        if (t - 2 >= 0) w[t - 2] += 1;
        w[t - 1] -= 2;
        if (t < xrank) w[t] += 1;
    }
    return w;
}

}  // namespace detail

/// Highest weight afforded by the increasing subset with the given strictly
/// decreasing row lengths (row r takes its first rows[r] cells).
inline DominantWeight howe_subset_weight(HoweBase base, Int l, const std::vector<Int>& rows) {
    const Int xrank = l + 1;
    const Int ncols = l + 2;
    std::vector<Int> acc(xrank, 0);
    for (std::size_t r0 = 0; r0 < rows.size(); ++r0) {
        Int r = static_cast<Int>(r0) + 1;
        if (r0 > 0 && rows[r0] >= rows[r0 - 1]) throw std::invalid_argument("row lengths must strictly decrease");
        if (rows[r0] < 1) throw std::invalid_argument("row lengths must be positive");
        Int start = base == HoweBase::omega2 ? r + 1 : r;
        if (start + rows[r0] - 1 > ncols) throw std::invalid_argument("row exceeds the array");
        auto vr = detail::natural_basis_weight(xrank, r);
        for (Int s = start; s < start + rows[r0]; ++s) {
            auto vs = detail::natural_basis_weight(xrank, s);
            for (Int i = 0; i < xrank; ++i) acc[i] += vr[i] + vs[i];
        }
    }
    for (Int x : acc)
        if (x < 0) throw character_error("increasing subset gave a non-dominant weight");
    return DominantWeight(xrank, std::move(acc));
}

/// Multiset of highest weights of wedge^j of V(omega_2) or V(2 omega_1) for
/// A_{l+1}, by enumerating increasing subsets of the triangular weight
/// array.  Every multiplicity equals one.
inline Decomposition howe_wedge_highest_weights(HoweBase base, Int l, Int j) {
    const Int xrank = l + 1;
    Decomposition out(xrank);
    std::vector<Int> rows;
    auto rec = [&](auto&& self, Int row, Int remaining, Int maxlen) -> void {
        if (remaining == 0) {
            out.add(howe_subset_weight(base, l, rows), 1);
            return;
        }
        Int start = base == HoweBase::omega2 ? row + 1 : row;
        Int cap = (l + 2) - start + 1;
        cap = std::min(cap, maxlen);
        for (Int len = std::min(cap, remaining); len >= 1; --len) {
            rows.push_back(len);
            self(self, row + 1, remaining - len, len - 1);
            rows.pop_back();
        }
    };
    if (j == 0) {
        out.add(DominantWeight::zero(xrank), 1);
        return out;
    }
    rec(rec, 1, j, std::numeric_limits<Int>::max());
    return out;
}

// ---------------------------------------------------------------------------
// Parabolic level decompositions
// ---------------------------------------------------------------------------

/// Grade V(lambda) by the coefficient of the deleted simple root in
/// lambda - mu and decompose every slice under the Levi A_{rank-1}.
inline LevelDecomposition parabolic_levels(const DominantWeight& lambda, ParabolicEnd end,
                                           Int guard = kDefaultGuard) {
    const Int rank = lambda.rank;
    if (rank < 2) throw rank_error("parabolic_levels needs rank >= 2");
    Character ch = char_of_irrep(lambda, guard);
    Int size = minimal_lift(lambda).size();
    const std::vector<Int> ml = epsilon_lift(lambda.as_vector(), size);
    std::vector<Character> slices;
    for (auto& [w, m] : ch.table()) {
        // root coefficients of lambda - w
        std::vector<Int> mw = epsilon_lift(WeightVector(rank, w), size);
        Int level;
        if (end == ParabolicEnd::last) {
            Int run = 0;
            for (Int i = 0; i < rank; ++i) run += ml[i] - mw[i];
            level = run;  // coefficient of alpha_rank
        } else {
            level = ml[0] - mw[0];  // coefficient of alpha_1
        }
        if (level < 0) throw character_error("negative level in parabolic grading");
        if (static_cast<Int>(slices.size()) <= level) {
            while (static_cast<Int>(slices.size()) <= level) slices.emplace_back(rank - 1);
        }
        std::vector<Int> levi(rank - 1);
        if (end == ParabolicEnd::last)
            for (Int i = 0; i + 1 < rank; ++i) levi[i] = w[i];
        else
            for (Int i = 0; i + 1 < rank; ++i) levi[i] = w[i + 1];
        slices[level].add(levi, m);
    }
    LevelDecomposition out;
    out.rank = rank;
    for (auto& s : slices) out.levels.push_back(decompose_character(std::move(s), guard));
    return out;
}

/// Closed form for the same grading at the last node: level i carries one
/// Levi summand (d_1-a_1+a_2, ..., d_l-a_l+a_{l+1}) for each sequence
/// 0 <= a_j <= d_j with sum i.  Every level is multiplicity-free.
inline LevelDecomposition levels_closed_form(const DominantWeight& delta) {
    const Int rank = delta.rank;
    if (rank < 2) throw rank_error("levels_closed_form needs rank >= 2");
    LevelDecomposition out;
    out.rank = rank;
    Int total = s_value(delta);
    out.levels.assign(total + 1, Decomposition(rank - 1));
    std::vector<Int> a(rank, 0);
    auto rec = [&](auto&& self, Int j, Int sum) -> void {
        if (j == rank) {
            std::vector<Int> w(rank - 1);
            for (Int i = 0; i + 1 < rank; ++i) w[i] = delta.coeffs[i] - a[i] + a[i + 1];
            out.levels[sum].add(DominantWeight(rank - 1, std::move(w)), 1);
            return;
        }
        for (Int v = 0; v <= delta.coeffs[j]; ++v) {
            a[j] = v;
            self(self, j + 1, sum + v);
            a[j] = 0;
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace weylkit
