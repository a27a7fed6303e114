#pragma once

#include <limits>
#include <map>
#include <unordered_map>

#include "weylkit/dimension.hpp"

namespace weylkit {

/// Finite weight-multiplicity table over the A_n weight lattice.  Zero
/// entries are deleted eagerly.
class Character {
public:
    using Table = std::unordered_map<std::vector<Int>, Int, VecHash>;

    Character() = default;
    explicit Character(Int rank) : rank_(rank) {
        if (rank < 1) throw rank_error("rank must be positive");
    }

    Int rank() const { return rank_; }
    const Table& table() const { return table_; }
    bool empty() const { return table_.empty(); }
    std::size_t support_size() const { return table_.size(); }

    void add(const std::vector<Int>& coords, Int mult) {
        if (static_cast<Int>(coords.size()) != rank_) throw rank_error("weight rank mismatch");
        if (mult == 0) return;
        auto it = table_.find(coords);
        if (it == table_.end()) {
            table_.emplace(coords, mult);
        } else {
            it->second = checked_add(it->second, mult);
            if (it->second == 0) table_.erase(it);
            else if (it->second < 0) throw character_error("negative weight multiplicity");
        }
    }

    void add(const WeightVector& w, Int mult) { add(w.coords, mult); }

    /// Accumulate without the nonnegativity check (virtual intermediates).
    void add_signed(const std::vector<Int>& coords, Int mult) {
        if (static_cast<Int>(coords.size()) != rank_) throw rank_error("weight rank mismatch");
        if (mult == 0) return;
        auto it = table_.find(coords);
        if (it == table_.end()) {
            table_.emplace(coords, mult);
        } else {
            it->second = checked_add(it->second, mult);
            if (it->second == 0) table_.erase(it);
        }
    }

    Int multiplicity(const std::vector<Int>& coords) const {
        auto it = table_.find(coords);
        return it == table_.end() ? 0 : it->second;
    }

    BigInt total() const {
        BigInt t = 0;
        for (auto& [k, v] : table_) t += v;
        return t;
    }

    /// Entries in a deterministic (lexicographic) order.
    std::vector<std::pair<std::vector<Int>, Int>> sorted_entries() const {
        std::vector<std::pair<std::vector<Int>, Int>> out(table_.begin(), table_.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    bool operator==(const Character& o) const { return rank_ == o.rank_ && table_ == o.table_; }

private:
    Int rank_ = 1;
    Table table_;
};

/// Multiset of irreducible summands: dominant highest weight -> multiplicity.
struct Decomposition {
    Int rank = 1;
    std::map<std::vector<Int>, Int> summands;

    Decomposition() = default;
    explicit Decomposition(Int r) : rank(r) {}

    void add(const DominantWeight& w, Int mult) {
        if (w.rank != rank) throw rank_error("summand rank mismatch");
        if (mult == 0) return;
        auto& slot = summands[w.coeffs];
        slot = checked_add(slot, mult);
        if (slot == 0) summands.erase(w.coeffs);
        else if (slot < 0) throw character_error("negative summand multiplicity");
    }

    Int multiplicity(const DominantWeight& w) const {
        auto it = summands.find(w.coeffs);
        return it == summands.end() ? 0 : it->second;
    }

    Int max_multiplicity() const {
        Int m = 0;
        for (auto& [k, v] : summands) m = std::max(m, v);
        return m;
    }

    bool multiplicity_free() const { return max_multiplicity() <= 1; }

    std::size_t distinct_summands() const { return summands.size(); }

    Int total_multiplicity() const {
        Int t = 0;
        for (auto& [k, v] : summands) t = checked_add(t, v);
        return t;
    }

    BigInt total_dimension() const {
        BigInt d = 0;
        for (auto& [k, v] : summands) d += BigInt(v) * weyl_dim(DominantWeight(rank, k));
        return d;
    }

    Decomposition dualized() const {
        Decomposition out(rank);
        for (auto& [k, v] : summands) out.add(dual_weight(DominantWeight(rank, k)), v);
        return out;
    }

    /// Multiset union.
    Decomposition merged(const Decomposition& o) const {
        if (o.rank != rank) throw rank_error("decomposition rank mismatch");
        Decomposition out = *this;
        for (auto& [k, v] : o.summands) out.add(DominantWeight(rank, k), v);
        return out;
    }

    bool operator==(const Decomposition& o) const { return rank == o.rank && summands == o.summands; }
    bool operator!=(const Decomposition& o) const { return !(*this == o); }
};

// ---------------------------------------------------------------------------
// Freudenthal recursion
// ---------------------------------------------------------------------------

/// Dominant weight multiplicities of V(lambda), keyed by the sorted epsilon
/// lift (a partition of |minimal_lift(lambda)| padded to rank+1 entries).
class DominantTable {
public:
    explicit DominantTable(const DominantWeight& lambda) : rank_(lambda.rank), lambda_(lambda) {
        build();
    }

    Int rank() const { return rank_; }
    Int lift_size() const { return lift_size_; }
    const DominantWeight& highest() const { return lambda_; }

    /// Entries as (epsilon vector sorted descending, multiplicity), in the
    /// order used by the recursion (descending dominance height).
    const std::vector<std::pair<std::vector<Int>, Int>>& entries() const { return entries_; }

    Int multiplicity_of_epsilon(const std::vector<Int>& sorted_eps) const {
        auto it = index_.find(sorted_eps);
        return it == index_.end() ? 0 : entries_[it->second].second;
    }

    /// Multiplicity of an arbitrary lattice point.
    Int multiplicity(const WeightVector& mu) const {
        if (mu.rank != rank_) throw rank_error("weight rank mismatch");
        std::vector<Int> m;
        try {
            m = epsilon_lift(mu, lift_size_);
        } catch (const lift_error&) {
            return 0;
        }
        for (Int x : m)
            if (x < 0) return 0;
        return multiplicity_of_epsilon(dominant_epsilon(std::move(m)));
    }

private:
    void build() {
        Partition rho = minimal_lift(lambda_);
        lift_size_ = rho.size();
        const Int np1 = rank_ + 1;

        std::vector<Partition> doms = partitions_dominated_by(rho, np1);
        // Sort by decreasing height functional; weights higher in the root
        // order come first, as the recursion requires.
        auto height = [&](const Partition& p) {
            Int h = 0;
            for (Int i = 0; i < p.rows(); ++i) h += p.part(i) * (np1 - i);
            return h;
        };
        std::sort(doms.begin(), doms.end(), [&](const Partition& a, const Partition& b) {
            Int ha = height(a), hb = height(b);
            if (ha != hb) return ha > hb;
            return a.parts() > b.parts();
        });

        std::vector<Int> lam_eps(np1, 0);
        for (Int i = 0; i < np1; ++i) lam_eps[i] = rho.part(i);

        entries_.reserve(doms.size());
        for (auto& d : doms) {
            std::vector<Int> eps(np1, 0);
            for (Int i = 0; i < np1; ++i) eps[i] = d.part(i);
            index_.emplace(eps, entries_.size());
            entries_.emplace_back(std::move(eps), 0);
        }

        // rho-shifted vectors share the same total, so norm differences are
        // exact integers.
        auto shifted_norm = [&](const std::vector<Int>& m) {
            BigInt s = 0;
            for (Int i = 0; i < np1; ++i) {
                BigInt x = m[i] + (np1 - 1 - i);
                s += x * x;
            }
            return s;
        };
        const BigInt lam_norm = shifted_norm(lam_eps);

        for (std::size_t idx = 0; idx < entries_.size(); ++idx) {
            const std::vector<Int>& mu = entries_[idx].first;
            if (mu == lam_eps) {
                entries_[idx].second = 1;
                continue;
            }
            BigInt denom = lam_norm - shifted_norm(mu);
            BigInt acc = 0;
            std::vector<Int> probe(np1);
            for (Int i = 0; i < np1; ++i) {
                for (Int j = i + 1; j < np1; ++j) {
                    // alpha = e_i - e_j
                    for (Int k = 1;; ++k) {
                        if (mu[j] - k < 0) break;
                        probe = mu;
                        probe[i] += k;
                        probe[j] -= k;
                        std::sort(probe.begin(), probe.end(), std::greater<Int>());
                        auto it = index_.find(probe);
                        Int m = 0;
                        if (it != index_.end()) m = entries_[it->second].second;
                        if (m == 0) break;
                        acc += BigInt(m) * BigInt(mu[i] - mu[j] + 2 * k);
                    }
                }
            }
            BigInt mult = (2 * acc) / denom;
            if (mult < 0 || mult > std::numeric_limits<Int>::max())
                throw overflow_error_wk("weight multiplicity out of range");
            entries_[idx].second = static_cast<Int>(mult);
        }

        // prune zero entries (dominated partitions outside the weight set)
        std::vector<std::pair<std::vector<Int>, Int>> kept;
        kept.reserve(entries_.size());
        index_.clear();
        for (auto& e : entries_) {
            if (e.second > 0) {
                index_.emplace(e.first, kept.size());
                kept.push_back(std::move(e));
            }
        }
        entries_ = std::move(kept);
    }

    Int rank_;
    DominantWeight lambda_;
    Int lift_size_ = 0;
    std::vector<std::pair<std::vector<Int>, Int>> entries_;
    std::unordered_map<std::vector<Int>, std::size_t, VecHash> index_;
};

/// Multiplicity of the lattice point `mu` in V(lambda).
inline Int weight_multiplicity(const DominantWeight& lambda, const WeightVector& mu) {
    return DominantTable(lambda).multiplicity(mu);
}

/// Visit every weight of the orbit of a sorted epsilon vector exactly once.
template <typename F>
inline void for_each_orbit_permutation(std::vector<Int> eps, F&& f) {
    std::sort(eps.begin(), eps.end());
    do {
        f(const_cast<const std::vector<Int>&>(eps));
    } while (std::next_permutation(eps.begin(), eps.end()));
}

/// Complete weight table of V(lambda).  Refuses to materialize more than
/// `guard` entries.
inline Character char_of_irrep(const DominantWeight& lambda, Int guard = kDefaultGuard) {
    BigInt dim = weyl_dim(lambda);
    if (dim > guard)
        throw guard_error("character of dimension " + dim.str() + " exceeds guard " + std::to_string(guard));
    DominantTable table(lambda);
    Character ch(lambda.rank);
    const Int rank = lambda.rank;
    for (auto& [eps, mult] : table.entries()) {
        const Int mu = mult;
        for_each_orbit_permutation(eps, [&, mu](const std::vector<Int>& m) {
            std::vector<Int> coords(rank);
            for (Int i = 0; i < rank; ++i) coords[i] = m[i] - m[i + 1];
            ch.add(coords, mu);
        });
    }
    return ch;
}

/// Adams operation: scale every weight by k.
inline Character adams(Int k, const Character& c) {
    if (k < 1) throw std::invalid_argument("adams operation needs k >= 1");
    Character out(c.rank());
    for (auto& [w, m] : c.table()) {
        std::vector<Int> scaled(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) scaled[i] = k * w[i];
        out.add(scaled, m);
    }
    return out;
}

inline Character char_product(const Character& a, const Character& b, Int guard = kDefaultGuard) {
    if (a.rank() != b.rank()) throw rank_error("character rank mismatch");
    if (BigInt(a.support_size()) * BigInt(b.support_size()) > BigInt(guard) * 64)
        throw guard_error("character product exceeds guard");
    Character out(a.rank());
    std::vector<Int> sum(a.rank());
    for (auto& [wa, ma] : a.table()) {
        for (auto& [wb, mb] : b.table()) {
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = wa[i] + wb[i];
            out.add(sum, checked_mul(ma, mb));
        }
    }
    return out;
}

inline Character char_sum(const Character& a, const Character& b) {
    if (a.rank() != b.rank()) throw rank_error("character rank mismatch");
    Character out = a;
    for (auto& [w, m] : b.table()) out.add(w, m);
    return out;
}

namespace detail {
// Strictly dominant functional: positive on every simple root, so a support
// point maximizing it is a highest weight of the character.
inline BigInt extraction_key(Int rank, const std::vector<Int>& coords) {
    BigInt f = 0;
    for (Int i = 0; i < rank; ++i) f += BigInt((i + 1) * (rank - i)) * coords[i];
    return f;
}
}  // namespace detail

/// Write a nonvirtual character as a sum of irreducibles by repeated
/// extraction of a maximal weight.  Throws character_error if any
/// intermediate multiplicity goes negative.
inline Decomposition decompose_character(Character c, Int guard = kDefaultGuard) {
    const Int rank = c.rank();
    Decomposition out(rank);
    // Maximal support points ordered by (height functional, lex), descending.
    std::map<std::pair<BigInt, std::vector<Int>>, Int, std::greater<>> queue;
    for (auto& [w, m] : c.table()) queue.emplace(std::make_pair(detail::extraction_key(rank, w), w), m);

    std::unordered_map<std::vector<Int>, DominantTable, VecHash> cache;

    while (!queue.empty()) {
        auto it = queue.begin();
        std::vector<Int> top = it->first.second;
        Int mult = c.multiplicity(top);
        queue.erase(it);
        if (mult == 0) continue;
        if (mult < 0) throw character_error("not a character: negative multiplicity encountered");
        WeightVector wv(rank, top);
        if (!wv.is_dominant()) throw character_error("not a character: maximal weight is not dominant");
        DominantWeight hw(rank, top);

        auto cit = cache.find(top);
        if (cit == cache.end()) cit = cache.emplace(top, DominantTable(hw)).first;
        const DominantTable& tab = cit->second;

        for (auto& [eps, m] : tab.entries()) {
            const Int piece = m;
            for_each_orbit_permutation(eps, [&, piece](const std::vector<Int>& mm) {
                std::vector<Int> coords(rank);
                for (Int i = 0; i < rank; ++i) coords[i] = mm[i] - mm[i + 1];
                Int have = c.multiplicity(coords);
                Int need = checked_mul(piece, mult);
                if (have < need) throw character_error("not a character: subtraction went negative");
                c.add(coords, -need);
            });
        }
        out.add(hw, mult);
        if (static_cast<Int>(out.total_multiplicity()) > guard)
            throw guard_error("decomposition exceeds guard");
    }
    return out;
}

/// Character of a direct sum described by a decomposition.
inline Character char_of_decomposition(const Decomposition& d, Int guard = kDefaultGuard) {
    Character out(d.rank);
    for (auto& [k, v] : d.summands) {
        Character c = char_of_irrep(DominantWeight(d.rank, k), guard);
        for (auto& [w, m] : c.table()) out.add(w, checked_mul(m, v));
    }
    return out;
}

}  // namespace weylkit
