#pragma once

#include "weylkit/character.hpp"

namespace weylkit {

/// The irreducible embedding X = A_{l+1} < Y = SL(W) with W = V_X(delta).
/// w_weights lists the T_X-weights of W (with multiplicity) in a fixed
/// order: ascending level at the last node, then at the previous node, and
/// so on (colex on the root coefficients of delta - mu).  That order
/// reproduces the Levi-adapted bases used for root-restriction checks;
/// restriction results do not depend on it.
class Embedding {
public:
    Embedding(Int l, DominantWeight delta, std::vector<std::vector<Int>> w_weights)
        : l_(l), delta_(std::move(delta)), w_(std::move(w_weights)) {
        if (delta_.rank != l + 1) throw rank_error("delta must be a weight of A_{l+1}");
        validate();
    }

    Int l() const { return l_; }
    Int x_rank() const { return l_ + 1; }
    Int y_rank() const { return static_cast<Int>(w_.size()) - 1; }
    const DominantWeight& delta() const { return delta_; }
    const std::vector<std::vector<Int>>& w_weights() const { return w_; }

private:
    void validate() const {
        if (w_.size() < 2) throw rank_error("W must have dimension at least 2");
        std::vector<Int> sum(x_rank(), 0);
        Character expect = char_of_irrep(delta_, std::numeric_limits<Int>::max());
        Character got(x_rank());
        for (auto& w : w_) {
            if (static_cast<Int>(w.size()) != x_rank()) throw rank_error("w_weight rank mismatch");
            for (Int i = 0; i < x_rank(); ++i) sum[i] += w[i];
            got.add(w, 1);
        }
        for (Int s : sum)
            if (s != 0) throw character_error("weights of W do not sum to zero");
        if (!(got == expect)) throw character_error("w_weights do not form the character of V(delta)");
    }

    Int l_;
    DominantWeight delta_;
    std::vector<std::vector<Int>> w_;
};

/// Verdict and evidence for one restriction V_Y(lambda) down to X.
struct MFReport {
    DominantWeight lambda;       // weight of Y
    Decomposition decomposition;  // over X
    bool is_mf = false;
    Int max_multiplicity = 0;
    BigInt dim_y;  // dim V_Y(lambda)
    BigInt dim_x;  // total dimension of the X-decomposition
};

/// Build the embedding defined by W = V_X(delta), dim W under `guard`.
inline Embedding build_embedding(Int l, const DominantWeight& delta, Int guard = kDefaultGuard) {
    if (delta.rank != l + 1) throw rank_error("delta must be a weight of A_{l+1}");
    BigInt dim = weyl_dim(delta);
    if (dim > guard) throw guard_error("dim W = " + dim.str() + " exceeds guard");
    const Int xrank = l + 1;
    Character ch = char_of_irrep(delta, guard);
    Int size = minimal_lift(delta).size();
    std::vector<Int> mdelta = epsilon_lift(delta.as_vector(), size);
    struct Entry {
        std::vector<Int> key;  // root coefficients of delta - mu, reversed
        std::vector<Int> coords;
        Int mult;
    };
    std::vector<Entry> entries;
    entries.reserve(ch.support_size());
    for (auto& [w, m] : ch.table()) {
        std::vector<Int> mw = epsilon_lift(WeightVector(xrank, w), size);
        std::vector<Int> c(xrank);
        Int run = 0;
        for (Int i = 0; i < xrank; ++i) {
            run += mdelta[i] - mw[i];
            c[i] = run;
        }
        std::reverse(c.begin(), c.end());  // compare the last node first
        entries.push_back({std::move(c), w, m});
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.key < b.key; });
    std::vector<std::vector<Int>> ws;
    ws.reserve(static_cast<std::size_t>(dim));
    for (auto& e : entries)
        for (Int i = 0; i < e.mult; ++i) ws.push_back(e.coords);
    return Embedding(l, delta, std::move(ws));
}

/// Restrictions of the simple roots beta_1..beta_n of Y to T_X: consecutive
/// differences of the ordered weights of W.
inline std::vector<WeightVector> restrict_simple_roots(const Embedding& e) {
    std::vector<WeightVector> out;
    const auto& w = e.w_weights();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        std::vector<Int> d(e.x_rank());
        for (Int t = 0; t < e.x_rank(); ++t) d[t] = w[i][t] - w[i + 1][t];
        out.emplace_back(e.x_rank(), std::move(d));
    }
    return out;
}

namespace detail {

/// Stream the weights of V_Y(lambda) as epsilon vectors (y_rank+1 entries,
/// all weights of one Weyl orbit share a sorted vector) into `sink`.
/// Partitions of the form (1^k) and (c) get dedicated subset/multiset walks.
template <typename Sink>
inline void stream_y_weights(const DominantWeight& lambda, Sink&& sink) {
    const Int n = lambda.rank;
    Partition rho = minimal_lift(lambda);
    const bool is_wedge = rho.part(0) == 1;
    const bool is_sym = rho.rows() <= 1;
    if (is_wedge && !rho.empty()) {
        // weights of wedge^k: k-subsets of the basis
        Int k = rho.rows();
        std::vector<Int> idx(k);
        for (Int i = 0; i < k; ++i) idx[i] = i;
        std::vector<Int> m(n + 1, 0);
        while (true) {
            std::fill(m.begin(), m.end(), 0);
            for (Int i : idx) m[i] = 1;
            sink(m, Int{1});
            Int i = k - 1;
            while (i >= 0 && idx[i] == n + 1 - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (Int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
        return;
    }
    if (is_sym && !rho.empty()) {
        // weights of S^c: multisets of size c over the basis
        Int c = rho.part(0);
        std::vector<Int> m(n + 1, 0);
        auto rec = [&](auto&& self, Int pos, Int remaining) -> void {
            if (pos == n) {
                m[n] = remaining;
                sink(m, Int{1});
                m[n] = 0;
                return;
            }
            for (Int v = remaining; v >= 0; --v) {
                m[pos] = v;
                self(self, pos + 1, remaining - v);
                m[pos] = 0;
            }
        };
        rec(rec, 0, c);
        return;
    }
    DominantTable table(lambda);
    for (auto& [eps, mult] : table.entries()) {
        const Int mu = mult;
        for_each_orbit_permutation(eps, [&, mu](const std::vector<Int>& m) { sink(m, mu); });
    }
}

}  // namespace detail

/// Exact decomposition of V_Y(lambda) restricted to X along the embedding:
/// every Y-weight is pushed to the T_X-weight sum(m_i * w_i) of its epsilon
/// lift and the accumulated X-character is decomposed.
inline Decomposition restrict_module(const Embedding& e, const DominantWeight& lambda, Int guard = kDefaultGuard) {
    if (lambda.rank != e.y_rank()) throw rank_error("lambda is not a weight of Y");
    BigInt dim = weyl_dim(lambda);
    if (dim > guard) throw guard_error("dim V_Y(lambda) = " + dim.str() + " exceeds guard");
    const Int xrank = e.x_rank();
    const auto& ws = e.w_weights();
    Character pushed(xrank);
    std::vector<Int> acc(xrank);
    detail::stream_y_weights(lambda, [&](const std::vector<Int>& m, Int mult) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            Int mi = m[i];
            if (mi == 0) continue;
            const auto& w = ws[i];
            for (Int t = 0; t < xrank; ++t) acc[t] += mi * w[t];
        }
        pushed.add(acc, mult);
    });
    return decompose_character(std::move(pushed), guard);
}

inline MFReport is_multiplicity_free(const Embedding& e, const DominantWeight& lambda, Int guard = kDefaultGuard) {
    MFReport r;
    r.lambda = lambda;
    r.dim_y = weyl_dim(lambda);
    r.decomposition = restrict_module(e, lambda, guard);
    r.dim_x = r.decomposition.total_dimension();
    if (r.dim_x != r.dim_y) throw character_error("restriction lost dimension");
    r.max_multiplicity = r.decomposition.max_multiplicity();
    r.is_mf = r.max_multiplicity == 1;
    return r;
}

/// The restriction of the dual equals the entrywise dual of the restriction.
inline bool restriction_dual_check(const Embedding& e, const DominantWeight& lambda, Int guard = kDefaultGuard) {
    Decomposition direct = restrict_module(e, lambda, guard);
    Decomposition dual = restrict_module(e, dual_weight(lambda), guard);
    return dual == direct.dualized();
}

}  // namespace weylkit
