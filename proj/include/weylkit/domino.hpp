#pragma once

#include <tuple>

#include "weylkit/lr.hpp"

namespace weylkit {

/// Labeled domino tiling of a doubled Young diagram.  Rows are indexed from
/// the base upward (row 0 is the longest); the column reading runs top to
/// bottom within a column, left to right across columns, with horizontal
/// dominoes read once in their leftmost column.
struct DominoTableau {
    struct Domino {
        Int row, col;     // lower-left cell
        bool horizontal;  // else vertical
        Int label;
        bool operator==(const Domino& o) const {
            return row == o.row && col == o.col && horizontal == o.horizontal && label == o.label;
        }
        bool operator<(const Domino& o) const {
            return std::tie(row, col, horizontal, label) < std::tie(o.row, o.col, o.horizontal, o.label);
        }
    };

    std::vector<Int> shape;  // row lengths, base first
    std::vector<Domino> dominoes;

    Int horizontal_count() const {
        Int h = 0;
        for (auto& d : dominoes) h += d.horizontal ? 1 : 0;
        return h;
    }

    /// Label counts (index 0 holds the number of 1-labeled dominoes).
    std::vector<Int> content(Int max_label) const {
        std::vector<Int> c(max_label, 0);
        for (auto& d : dominoes) c[d.label - 1]++;
        return c;
    }

    bool operator<(const DominoTableau& o) const { return dominoes < o.dominoes; }
};

namespace detail {

struct DominoSearch {
    std::vector<Int> shape;  // base first
    Int max_label;
    std::vector<std::vector<Int>> cell_label;   // 0 = uncovered
    std::vector<std::vector<Int>> cell_domino;  // index+1 into tiling, 0 = none
    std::vector<DominoTableau::Domino> tiling;
    std::vector<DominoTableau>* out;

    bool in_shape(Int r, Int c) const {
        return r >= 0 && r < static_cast<Int>(shape.size()) && c >= 0 && c < shape[r];
    }
    bool covered(Int r, Int c) const { return in_shape(r, c) && cell_label[r][c] != 0; }

    // weak increase along rows, strict increase up columns, between distinct
    // dominoes only
    bool label_ok(Int r, Int c, Int label, Int id) const {
        if (covered(r, c - 1) && cell_domino[r][c - 1] != id && cell_label[r][c - 1] > label) return false;
        if (covered(r, c + 1) && cell_domino[r][c + 1] != id && cell_label[r][c + 1] < label) return false;
        if (covered(r - 1, c) && cell_domino[r - 1][c] != id && cell_label[r - 1][c] >= label) return false;
        if (covered(r + 1, c) && cell_domino[r + 1][c] != id && cell_label[r + 1][c] <= label) return false;
        return true;
    }

    void place(Int r, Int c, bool horizontal, Int label, Int id) {
        cell_label[r][c] = label;
        cell_domino[r][c] = id;
        Int r2 = horizontal ? r : r + 1;
        Int c2 = horizontal ? c + 1 : c;
        cell_label[r2][c2] = label;
        cell_domino[r2][c2] = id;
    }
    void unplace(Int r, Int c, bool horizontal) {
        cell_label[r][c] = 0;
        cell_domino[r][c] = 0;
        Int r2 = horizontal ? r : r + 1;
        Int c2 = horizontal ? c + 1 : c;
        cell_label[r2][c2] = 0;
        cell_domino[r2][c2] = 0;
    }

    void run() {
        Int r, c;
        if (!next_uncovered(r, c)) {
            finish();
            return;
        }
        Int id = static_cast<Int>(tiling.size()) + 1;
        // vertical first, then horizontal; labels ascending
        if (in_shape(r + 1, c) && !covered(r + 1, c)) {
            for (Int t = 1; t <= max_label; ++t) {
                if (!label_ok(r, c, t, id) || !label_ok(r + 1, c, t, id)) continue;
                place(r, c, false, t, id);
                tiling.push_back({r, c, false, t});
                run();
                tiling.pop_back();
                unplace(r, c, false);
            }
        }
        if (in_shape(r, c + 1) && !covered(r, c + 1)) {
            for (Int t = 1; t <= max_label; ++t) {
                if (!label_ok(r, c, t, id) || !label_ok(r, c + 1, t, id)) continue;
                place(r, c, true, t, id);
                tiling.push_back({r, c, true, t});
                run();
                tiling.pop_back();
                unplace(r, c, true);
            }
        }
    }

    bool next_uncovered(Int& r, Int& c) const {
        for (Int i = 0; i < static_cast<Int>(shape.size()); ++i)
            for (Int j = 0; j < shape[i]; ++j)
                if (cell_label[i][j] == 0) {
                    r = i;
                    c = j;
                    return true;
                }
        return false;
    }

    void finish() {
        // column reading: top to bottom within a column, left to right
        std::vector<Int> word;
        Int maxw = shape.empty() ? 0 : shape[0];
        for (Int c = 0; c < maxw; ++c) {
            for (Int r = static_cast<Int>(shape.size()) - 1; r >= 0; --r) {
                if (!covered(r, c)) continue;
                Int id = cell_domino[r][c] - 1;
                const auto& d = tiling[id];
                if (d.horizontal) {
                    if (d.col == c && d.row == r) word.push_back(d.label);
                } else {
                    if (d.row + 1 == r) word.push_back(d.label);  // top cell
                }
            }
        }
        // Yamanouchi: every suffix has at least as many j's as (j+1)'s
        std::vector<Int> count(max_label + 2, 0);
        for (Int i = static_cast<Int>(word.size()) - 1; i >= 0; --i) {
            Int t = word[i];
            count[t]++;
            if (t > 1 && count[t - 1] < count[t]) return;
        }
        DominoTableau res;
        res.shape = shape;
        res.dominoes = tiling;
        out->push_back(std::move(res));
    }
};

}  // namespace detail

/// All Yamanouchi domino tableaux of the doubled shape of rho with labels at
/// most n.
inline std::vector<DominoTableau> enumerate_domino_tableaux(const Partition& rho, Int n) {
    if (rho.rows() > n - 1) throw rank_error("rho needs at most n-1 nonzero parts");
    std::vector<Int> shape;
    for (Int i = 0; i < rho.rows(); ++i) {
        shape.push_back(2 * rho.part(i));
        shape.push_back(2 * rho.part(i));
    }
    std::vector<DominoTableau> out;
    if (shape.empty()) {
        out.push_back(DominoTableau{});  // the empty tableau
        return out;
    }
    detail::DominoSearch s;
    s.shape = shape;
    s.max_label = n;
    s.cell_label.assign(shape.size(), {});
    s.cell_domino.assign(shape.size(), {});
    for (std::size_t i = 0; i < shape.size(); ++i) {
        s.cell_label[i].assign(shape[i], 0);
        s.cell_domino[i].assign(shape[i], 0);
    }
    s.out = &out;
    s.run();
    std::sort(out.begin(), out.end());
    return out;
}

/// Carre-Leclerc split of V(lambda) (x) V(lambda) into its symmetric and
/// alternating parts.  A tableau whose horizontal-domino count is divisible
/// by 4 lands in the symmetric part.
inline std::pair<Decomposition, Decomposition> square_decompose(const DominantWeight& lambda) {
    const Int rank = lambda.rank;
    const Int n = rank + 1;
    Partition rho = minimal_lift(lambda);
    Decomposition sym(rank), alt(rank);
    for (const auto& t : enumerate_domino_tableaux(rho, n)) {
        std::vector<Int> content = t.content(n);
        for (std::size_t i = 1; i < content.size(); ++i)
            if (content[i] > content[i - 1]) throw character_error("domino content is not a partition");
        std::vector<Int> coeffs(rank);
        for (Int i = 0; i < rank; ++i) coeffs[i] = content[i] - content[i + 1];
        DominantWeight w(rank, std::move(coeffs));
        if (t.horizontal_count() % 4 == 0)
            sym.add(w, 1);
        else
            alt.add(w, 1);
    }
    return {sym, alt};
}

}  // namespace weylkit
