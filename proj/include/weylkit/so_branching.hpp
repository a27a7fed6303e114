#pragma once

#include "weylkit/lr.hpp"

namespace weylkit {

/// Highest weight of SO(so_dim) labeled by a partition with at most
/// floor(so_dim/2) parts.  For even so_dim with a full-length label this
/// stands for the pair of mirror summands at once.
struct SOWeight {
    Partition label;
    Int so_dim;

    SOWeight(Partition p, Int dim) : label(std::move(p)), so_dim(dim) {
        if (label.rows() > dim / 2) throw rank_error("SO weight label has too many parts");
    }

    bool operator<(const SOWeight& o) const { return label < o.label; }
    bool operator==(const SOWeight& o) const { return label == o.label && so_dim == o.so_dim; }
};

/// Littlewood's stable branching rule GL(so_dim) -> SO(so_dim): the
/// multiplicity of xi is the sum of LR coefficients c^gamma_{eps,xi} over
/// partitions eps with even parts.
inline std::map<Partition, Int> gl_to_so_branching(const Partition& gamma, Int so_dim) {
    const Int m = so_dim / 2;
    if (gamma.rows() > m) throw std::invalid_argument("gamma outside the stable range for SO branching");
    std::map<Partition, Int> out;
    // even partitions eps contained in gamma
    std::vector<Int> eps;
    auto emit_eps = [&](const Partition& e) {
        Int rest = gamma.size() - e.size();
        for (const Partition& xi : partitions_of(rest, m, gamma.part(0))) {
            if (!xi.contained_in(gamma)) continue;
            Int c = lr_coefficient(xi, e, gamma);
            if (c > 0) {
                auto& slot = out[xi];
                slot = checked_add(slot, c);
            }
        }
    };
    auto rec = [&](auto&& self, Int row, Int prev) -> void {
        emit_eps(Partition(std::vector<Int>(eps.begin(), eps.end())));
        if (row >= gamma.rows()) return;
        Int hi = std::min(prev, gamma.part(row));
        for (Int p = hi - (hi % 2); p >= 2; p -= 2) {
            eps.push_back(p);
            self(self, row + 1, p);
            eps.pop_back();
        }
    };
    rec(rec, 0, gamma.part(0));
    return out;
}

/// Relabel an SO_6 highest weight as a weight of A_3: the partition
/// (a+b+c, a+b, a) becomes (2a+b, c, b); when the last part is nonzero the
/// negative spin sign selects the mirror weight (b, c, 2a+b).
inline DominantWeight so6_to_a3(const SOWeight& xi, bool plus_sign = true) {
    if (xi.so_dim != 6) throw rank_error("relabeling is specific to SO_6");
    Int a = xi.label.part(2);
    Int b = xi.label.part(1) - a;
    Int c = xi.label.part(0) - xi.label.part(1);
    std::vector<Int> w = {2 * a + b, c, b};
    if (!plus_sign) std::reverse(w.begin(), w.end());
    return DominantWeight(3, std::move(w));
}

/// Whether the SO_6 label corresponds to a mirror pair of A_3 weights.
inline bool so6_is_dual_pair(const SOWeight& xi) { return xi.so_dim == 6 && xi.label.part(2) != 0; }

}  // namespace weylkit
