#pragma once

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>

#include "weylkit/core.hpp"

namespace weylkit {

/// Weakly decreasing sequence of nonnegative integers.  Trailing zeros are
/// normalized away; `ambient_columns` bounds the number of nonzero parts a
/// consumer is allowed to interpret (the n+1 of an SL_{n+1} reading).
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
        normalize();
        ambient_ = static_cast<Int>(parts_.size() == 0 ? 1 : parts_.size());
    }

    Partition(std::vector<Int> parts, Int ambient_columns) : parts_(std::move(parts)), ambient_(ambient_columns) {
        normalize();
        if (ambient_ < 1) throw std::invalid_argument("ambient_columns must be positive");
        if (static_cast<Int>(parts_.size()) > ambient_)
            throw rank_error("partition has more nonzero parts than ambient_columns allows");
    }

    Partition(std::initializer_list<Int> parts) : Partition(std::vector<Int>(parts)) {}

    const std::vector<Int>& parts() const { return parts_; }
    Int ambient_columns() const { return ambient_; }

    Int size() const { return std::accumulate(parts_.begin(), parts_.end(), Int{0}); }
    Int rows() const { return static_cast<Int>(parts_.size()); }
    Int part(Int i) const { return i < rows() ? parts_[i] : 0; }  // 0-indexed

    bool empty() const { return parts_.empty(); }

    /// Row-wise containment: this[i] <= other[i] for all i.
    bool contained_in(const Partition& outer) const {
        for (Int i = 0; i < rows(); ++i)
            if (parts_[i] > outer.part(i)) return false;
        return true;
    }

    bool all_parts_even() const {
        for (Int p : parts_)
            if (p % 2 != 0) return false;
        return true;
    }

    Partition conjugate() const {
        if (parts_.empty()) return Partition{};
        std::vector<Int> conj(parts_[0], 0);
        for (Int p : parts_)
            for (Int j = 0; j < p; ++j) conj[j]++;
        return Partition(std::move(conj));
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

private:
    void normalize() {
        for (std::size_t i = 1; i < parts_.size(); ++i)
            if (parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
        if (!parts_.empty() && parts_.back() < 0) throw std::invalid_argument("partition parts must be nonnegative");
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    std::vector<Int> parts_;
    Int ambient_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

/// All partitions of `n` with at most `max_rows` rows and parts at most
/// `max_part`, in lexicographically decreasing order.
inline std::vector<Partition> partitions_of(Int n, Int max_rows, Int max_part = -1) {
    if (max_part < 0) max_part = n;
    std::vector<Partition> out;
    std::vector<Int> cur;
    auto rec = [&](auto&& self, Int remaining, Int bound) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<Int>(cur.size()) == max_rows) return;
        for (Int p = std::min(remaining, bound); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, std::min(n, max_part));
    return out;
}

/// Partitions of `n` with at most `max_rows` rows that are dominated by
/// `bound` (prefix sums never exceed those of `bound`).
inline std::vector<Partition> partitions_dominated_by(const Partition& bound, Int max_rows) {
    const Int n = bound.size();
    std::vector<Partition> out;
    std::vector<Int> cur;
    std::vector<Int> prefix(max_rows + 1, 0);
    for (Int i = 0; i < max_rows; ++i) prefix[i + 1] = prefix[i] + bound.part(i);
    // parts beyond bound's rows add nothing to its prefix sums
    auto rec = [&](auto&& self, Int remaining, Int maxp, Int row, Int sum) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (row == max_rows) return;
        Int cap = std::min(maxp, prefix[row + 1] - sum);
        cap = std::min(cap, remaining);
        for (Int p = cap; p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p, row + 1, sum + p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 0 : bound.part(0), 0, 0);
    return out;
}

}  // namespace weylkit
