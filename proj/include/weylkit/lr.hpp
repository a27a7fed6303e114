#pragma once

#include <functional>
#include <optional>

#include "weylkit/character.hpp"

namespace weylkit {

/// Skew shape nu/eps with eps contained row-wise in nu.
struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition nu, Partition eps) : outer(std::move(nu)), inner(std::move(eps)) {
        if (!inner.contained_in(outer)) throw std::invalid_argument("inner shape not contained in outer shape");
    }

    Int cells() const { return outer.size() - inner.size(); }
};

/// Littlewood-Richardson skew tableau in English orientation (longest row on
/// top).  labels[r] holds the fillings of row r left to right, blanks
/// omitted.
struct LRTableau {
    SkewShape shape;
    std::vector<std::vector<Int>> labels;

    bool operator==(const LRTableau& o) const {
        return shape.outer == o.shape.outer && shape.inner == o.shape.inner && labels == o.labels;
    }
    bool operator<(const LRTableau& o) const { return labels < o.labels; }
};

namespace detail {

// Backtracking fill in reading order: rows top to bottom, right to left
// inside a row.  That order makes every constraint incremental: rows
// weakly increase (against the right neighbor), columns strictly increase
// (against the completed row above), and the reading word stays a lattice
// word, which at each step only requires count[t-1] > count[t] before
// label t is written.
inline void lr_fill(const Partition& nu, const Partition& eps, const Partition& delta,
                    std::vector<std::vector<Int>>& rows, std::vector<Int>& used, std::vector<Int>& reading_count,
                    Int r, Int pos, const std::function<void(const std::vector<std::vector<Int>>&)>& emit) {
    const Int nrows = nu.rows();
    if (r == nrows) {
        for (Int t = 0; t < delta.rows(); ++t)
            if (used[t] != delta.part(t)) return;
        emit(rows);
        return;
    }
    const Int lo = eps.part(r);
    const Int width = nu.part(r) - lo;
    if (pos < 0) {  // row r complete (cells were visited in reading order)
        lr_fill(nu, eps, delta, rows, used, reading_count, r + 1, nu.part(r + 1) - eps.part(r + 1) - 1, emit);
        return;
    }
    const Int col = lo + pos;                      // absolute column of this cell
    Int max_label = delta.rows();
    if (pos + 1 < width) max_label = std::min(max_label, rows[r][pos + 1]);  // row weakly increasing
    Int min_label = 1;
    if (r > 0 && col >= eps.part(r - 1) && col < nu.part(r - 1)) {
        min_label = rows[r - 1][col - eps.part(r - 1)] + 1;  // column strictly increasing
    }
    for (Int t = min_label; t <= max_label; ++t) {
        if (used[t - 1] >= delta.part(t - 1)) continue;              // content bound
        if (t > 1 && reading_count[t - 1] <= reading_count[t]) continue;  // lattice word
        rows[r][pos] = t;
        used[t - 1]++;
        reading_count[t]++;
        lr_fill(nu, eps, delta, rows, used, reading_count, r, pos - 1, emit);
        reading_count[t]--;
        used[t - 1]--;
    }
}

}  // namespace detail

/// All Littlewood-Richardson tableaux of shape nu/eps and weight delta.
inline std::vector<LRTableau> lr_tableaux(const Partition& delta, const Partition& eps, const Partition& nu) {
    std::vector<LRTableau> out;
    if (!eps.contained_in(nu)) return out;
    if (nu.size() != eps.size() + delta.size()) return out;
    if (delta.empty()) {
        if (nu == eps) out.push_back(LRTableau{SkewShape(nu, eps), {}});
        return out;
    }
    std::vector<std::vector<Int>> rows(nu.rows());
    for (Int r = 0; r < nu.rows(); ++r) rows[r].assign(std::max<Int>(nu.part(r) - eps.part(r), 0), 0);
    std::vector<Int> used(delta.rows(), 0);
    std::vector<Int> reading_count(delta.rows() + 2, 0);
    auto emit = [&](const std::vector<std::vector<Int>>& filled) {
        LRTableau t{SkewShape(nu, eps), filled};
        while (!t.labels.empty() && t.labels.back().empty()) t.labels.pop_back();
        out.push_back(std::move(t));
    };
    detail::lr_fill(nu, eps, delta, rows, used, reading_count, 0, nu.part(0) - eps.part(0) - 1,
                    std::function<void(const std::vector<std::vector<Int>>&)>(emit));
    std::sort(out.begin(), out.end());
    return out;
}

/// Number of LR tableaux of shape nu/eps and weight delta; the tensor and
/// skew structure constant.  Vanishes (rather than erring) on size or
/// containment obstructions.
inline Int lr_coefficient(const Partition& delta, const Partition& eps, const Partition& nu) {
    if (!eps.contained_in(nu)) return 0;
    if (nu.size() != eps.size() + delta.size()) return 0;
    return static_cast<Int>(lr_tableaux(delta, eps, nu).size());
}

/// Full decomposition of V(a) (x) V(b) over A_rank.
inline Decomposition tensor_decompose(const DominantWeight& a, const DominantWeight& b) {
    if (a.rank != b.rank) throw rank_error("tensor factors must share a rank");
    const Int rank = a.rank;
    Partition da = minimal_lift(a);
    Partition db = minimal_lift(b);
    // use the smaller content as the filling weight
    if (da.size() > db.size()) std::swap(da, db);
    Decomposition out(rank);
    const Int total = da.size() + db.size();
    // candidates: partitions nu of |da|+|db| with <= rank+1 rows containing
    // db, with prefix sums bounded by those of da+db (dominance)
    std::vector<Int> prefix_bound(rank + 2, 0);
    for (Int r = 0; r < rank + 1; ++r) prefix_bound[r + 1] = prefix_bound[r] + da.part(r) + db.part(r);
    std::vector<Int> cur;
    auto rec = [&](auto&& self, Int row, Int remaining, Int prev, Int placed) -> void {
        if (row == rank + 1) {
            if (remaining != 0) return;
            Partition nu(std::vector<Int>(cur), rank + 1);
            Int c = lr_coefficient(da, db, nu);
            if (c > 0) out.add(partition_to_weight(nu, rank), c);
            return;
        }
        Int lo = db.part(row);
        Int hi = std::min({prev, remaining, prefix_bound[row + 1] - placed});
        for (Int p = hi; p >= lo; --p) {
            cur.push_back(p);
            self(self, row + 1, remaining - p, p, placed + p);
            cur.pop_back();
        }
    };
    rec(rec, 0, total, total, 0);
    return out;
}

/// Pieri: (k,0,...,0) (x) a, always multiplicity-free.
inline Decomposition pieri(Int k, const DominantWeight& a) {
    if (k < 0) throw std::invalid_argument("pieri needs k >= 0");
    const Int rank = a.rank;
    Decomposition out(rank);
    // c_1..c_{rank+1} >= 0, sum k, c_{i+1} <= a_i; b_i = a_i + c_i - c_{i+1}
    std::vector<Int> c(rank + 1, 0);
    auto rec = [&](auto&& self, Int i, Int remaining) -> void {
        if (i == rank + 1) {
            if (remaining != 0) return;
            std::vector<Int> b(rank);
            for (Int t = 0; t < rank; ++t) b[t] = a.coeffs[t] + c[t] - c[t + 1];
            out.add(DominantWeight(rank, std::move(b)), 1);
            return;
        }
        Int hi = remaining;
        if (i > 0) hi = std::min(hi, a.coeffs[i - 1]);
        for (Int v = 0; v <= hi; ++v) {
            c[i] = v;
            self(self, i + 1, remaining - v);
            c[i] = 0;
        }
    };
    rec(rec, 0, k);
    return out;
}

namespace detail {
/// delta + omega2 - beta where beta is given by its simple-root
/// coefficients; returns nullopt when a coordinate goes negative.
inline std::optional<DominantWeight> om2_case(const DominantWeight& delta, const std::vector<Int>& beta_roots) {
    const Int rank = delta.rank;
    std::vector<Int> c = delta.coeffs;
    c[1] += 1;  // + omega2
    for (Int i = 0; i < rank; ++i) {
        Int m = beta_roots[i];
        Int prev = i > 0 ? beta_roots[i - 1] : 0;
        Int next = i + 1 < rank ? beta_roots[i + 1] : 0;
        c[i] -= 2 * m - prev - next;
    }
    for (Int x : c)
        if (x < 0) return std::nullopt;
    return DominantWeight(rank, std::move(c));
}
}  // namespace detail

/// Closed form for V(delta) (x) V(omega_{rank}) — the last fundamental.
inline Decomposition tensor_with_last_fundamental(const DominantWeight& delta) {
    const Int rank = delta.rank;
    Decomposition out(rank);
    // raise at i-1, lower at i
    for (Int i = 2; i <= rank; ++i) {
        if (delta.coeffs[i - 1] == 0) continue;
        std::vector<Int> c = delta.coeffs;
        c[i - 2] += 1;
        c[i - 1] -= 1;
        out.add(DominantWeight(rank, std::move(c)), 1);
    }
    if (delta.coeffs[0] != 0) {
        std::vector<Int> c = delta.coeffs;
        c[0] -= 1;
        out.add(DominantWeight(rank, std::move(c)), 1);
    }
    {
        std::vector<Int> c = delta.coeffs;
        c[rank - 1] += 1;
        out.add(DominantWeight(rank, std::move(c)), 1);
    }
    return out;
}

/// Closed form for V(delta) (x) V(omega_2), rank >= 3.  The six summand
/// families are emitted exactly when their coefficient conditions hold.
inline Decomposition tensor_with_omega2(const DominantWeight& delta) {
    const Int rank = delta.rank;
    if (rank < 3) throw rank_error("tensor_with_omega2 needs rank >= 3");
    const auto& cs = delta.coeffs;
    Decomposition out(rank);
    std::vector<Int> beta(rank, 0);
    auto emit = [&]() {
        auto w = detail::om2_case(delta, beta);
        if (!w) throw character_error("omega2 closed form produced a non-dominant weight");
        out.add(*w, 1);
    };
    // (i) beta = 0
    emit();
    // (ii) beta = alpha_2 + ... + alpha_j, c_j != 0
    for (Int j = 2; j <= rank; ++j) {
        if (cs[j - 1] == 0) continue;
        std::fill(beta.begin(), beta.end(), 0);
        for (Int t = 2; t <= j; ++t) beta[t - 1] = 1;
        emit();
    }
    // (iii) beta = alpha_1 + alpha_2, c_1 != 0
    if (cs[0] != 0) {
        std::fill(beta.begin(), beta.end(), 0);
        beta[0] = beta[1] = 1;
        emit();
    }
    // (iv) beta = alpha_1 + ... + alpha_j, c_1 c_j != 0, j >= 3
    for (Int j = 3; j <= rank; ++j) {
        if (cs[0] == 0 || cs[j - 1] == 0) continue;
        std::fill(beta.begin(), beta.end(), 0);
        for (Int t = 1; t <= j; ++t) beta[t - 1] = 1;
        emit();
    }
    // (v) beta = alpha_1 + 2 alpha_2 + ... + 2 alpha_{j-1} + alpha_j, c_{j-1} != 0
    for (Int j = 3; j <= rank; ++j) {
        if (cs[j - 2] == 0) continue;
        std::fill(beta.begin(), beta.end(), 0);
        beta[0] = 1;
        for (Int t = 2; t <= j - 1; ++t) beta[t - 1] = 2;
        beta[j - 1] = 1;
        emit();
    }
    // (vi) doubled through i-1 then single through j, c_{i-1} c_j != 0
    for (Int i = 3; i <= rank; ++i) {
        for (Int j = i + 1; j <= rank; ++j) {
            if (cs[i - 2] == 0 || cs[j - 1] == 0) continue;
            std::fill(beta.begin(), beta.end(), 0);
            beta[0] = 1;
            for (Int t = 2; t <= i - 1; ++t) beta[t - 1] = 2;
            for (Int t = i; t <= j; ++t) beta[t - 1] = 1;
            emit();
        }
    }
    if (out.max_multiplicity() > 1) throw character_error("omega2 closed form produced a repeated summand");
    return out;
}

}  // namespace weylkit
