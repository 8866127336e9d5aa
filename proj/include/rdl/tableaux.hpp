#pragma once

// Standard Young tableaux: Robinson–Schensted row insertion, hook-length
// counting, the increasing-diagonals predicate, and the closed product that
// counts maximal monotone-avoiding reverse double lists.

#include <functional>
#include <utility>

#include "rdl/bigint.hpp"
#include "rdl/core.hpp"

namespace rdl {

// A partition written as weakly decreasing row lengths.
class Shape {
  public:
    Shape() = default;
    explicit Shape(std::vector<int> rows) : rows_(std::move(rows)) {
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i] < 1) throw std::invalid_argument("Shape: rows must be positive");
            if (i && rows_[i] > rows_[i - 1])
                throw std::invalid_argument("Shape: rows must be weakly decreasing");
        }
    }

    static Shape staircase(int k) {  // (k-1, k-2, ..., 1); empty when k = 1
        std::vector<int> rows;
        for (int r = k - 1; r >= 1; --r) rows.push_back(r);
        return Shape(std::move(rows));
    }

    int row_count() const { return static_cast<int>(rows_.size()); }
    int row(int r) const { return rows_[static_cast<size_t>(r)]; }
    const std::vector<int>& rows() const { return rows_; }

    int cell_count() const {
        int n = 0;
        for (int r : rows_) n += r;
        return n;
    }

    bool operator==(const Shape& o) const = default;

  private:
    std::vector<int> rows_;
};

// Row-major standard Young tableau: rows and columns strictly increase and
// the entries are exactly 1..N.
class StandardTableau {
  public:
    StandardTableau() = default;
    StandardTableau(Shape shape, std::vector<int> cells)
        : shape_(std::move(shape)), cells_(std::move(cells)) {
        validate();
    }

    explicit StandardTableau(const std::vector<std::vector<int>>& rows) {
        std::vector<int> lens;
        for (const auto& r : rows) {
            lens.push_back(static_cast<int>(r.size()));
            cells_.insert(cells_.end(), r.begin(), r.end());
        }
        shape_ = Shape(std::move(lens));
        validate();
    }

    const Shape& shape() const { return shape_; }

    int at(int r, int c) const {  // 0-based row/column
        int off = 0;
        for (int i = 0; i < r; ++i) off += shape_.row(i);
        return cells_[static_cast<size_t>(off + c)];
    }

    std::vector<std::vector<int>> rows() const {
        std::vector<std::vector<int>> out;
        size_t off = 0;
        for (int r = 0; r < shape_.row_count(); ++r) {
            auto len = static_cast<size_t>(shape_.row(r));
            out.emplace_back(cells_.begin() + static_cast<long>(off),
                             cells_.begin() + static_cast<long>(off + len));
            off += len;
        }
        return out;
    }

    bool operator==(const StandardTableau& o) const = default;

  private:
    void validate() const {
        const int n = shape_.cell_count();
        if (static_cast<int>(cells_.size()) != n)
            throw std::invalid_argument("StandardTableau: cell count does not match shape");
        std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
        for (int v : cells_) {
            if (v < 1 || v > n || seen[static_cast<size_t>(v)])
                throw std::invalid_argument("StandardTableau: entries must be exactly 1..N");
            seen[static_cast<size_t>(v)] = 1;
        }
        auto rws = rows_unchecked();
        for (size_t r = 0; r < rws.size(); ++r) {
            for (size_t c = 0; c + 1 < rws[r].size(); ++c)
                if (rws[r][c] >= rws[r][c + 1])
                    throw std::invalid_argument("StandardTableau: rows must strictly increase");
            if (r) {
                for (size_t c = 0; c < rws[r].size(); ++c)
                    if (rws[r - 1][c] >= rws[r][c])
                        throw std::invalid_argument("StandardTableau: columns must strictly increase");
            }
        }
    }

    std::vector<std::vector<int>> rows_unchecked() const {
        std::vector<std::vector<int>> out;
        size_t off = 0;
        for (int r = 0; r < shape_.row_count(); ++r) {
            auto len = static_cast<size_t>(shape_.row(r));
            out.emplace_back(cells_.begin() + static_cast<long>(off),
                             cells_.begin() + static_cast<long>(off + len));
            off += len;
        }
        return out;
    }

    Shape shape_;
    std::vector<int> cells_;
};

// Robinson–Schensted row insertion: bump the first larger entry to the next
// row; a letter appended at the end of a row records its arrival index in Q.
inline std::pair<StandardTableau, StandardTableau> rsk(const Permutation& p) {
    std::vector<std::vector<int>> P, Q;
    for (int i = 0; i < p.size(); ++i) {
        int x = p[i];
        size_t r = 0;
        for (;; ++r) {
            if (r == P.size()) {
                P.emplace_back();
                Q.emplace_back();
            }
            auto& row = P[r];
            auto it = std::upper_bound(row.begin(), row.end(), x);
            if (it == row.end()) {
                row.push_back(x);
                Q[r].push_back(i + 1);
                break;
            }
            std::swap(x, *it);
        }
    }
    return {StandardTableau(P), StandardTableau(Q)};
}

// Shape of P(p); by Greene's theorem its partial sums are maximal unions of
// increasing subsequences (row 1 = LIS length, row count = LDS length).
inline Shape greene_invariants(const Permutation& p) {
    std::vector<std::vector<int>> rows;  // insertion only needs P's rows
    for (int i = 0; i < p.size(); ++i) {
        int x = p[i];
        size_t r = 0;
        for (;; ++r) {
            if (r == rows.size()) rows.emplace_back();
            auto it = std::upper_bound(rows[r].begin(), rows[r].end(), x);
            if (it == rows[r].end()) {
                rows[r].push_back(x);
                break;
            }
            std::swap(x, *it);
        }
    }
    std::vector<int> lens;
    for (const auto& r : rows) lens.push_back(static_cast<int>(r.size()));
    return Shape(std::move(lens));
}

// Number of standard Young tableaux of shape s, by the hook length formula.
// The division is exact; exact_div enforces that.
inline BigInt hook_length_count(const Shape& s) {
    const int n = s.cell_count();
    if (n == 0) return 1;
    // Column lengths for hook arms below each cell.
    std::vector<int> col_len(static_cast<size_t>(s.row(0)), 0);
    for (int r = 0; r < s.row_count(); ++r)
        for (int c = 0; c < s.row(r); ++c) ++col_len[static_cast<size_t>(c)];
    BigInt hooks = 1;
    for (int r = 0; r < s.row_count(); ++r)
        for (int c = 0; c < s.row(r); ++c)
            hooks *= (s.row(r) - c) + (col_len[static_cast<size_t>(c)] - r) - 1;
    return exact_div(factorial(static_cast<unsigned>(n)), hooks);
}

// Diagonal condition on P: the entry at (r, c) is less than the entry at
// (r-1, c+1) wherever that diagonal neighbor exists.
inline bool has_increasing_diagonals(const StandardTableau& t) {
    const Shape& s = t.shape();
    for (int r = 1; r < s.row_count(); ++r)
        for (int c = 0; c < s.row(r); ++c)
            if (c + 1 < s.row(r - 1) && t.at(r, c) >= t.at(r - 1, c + 1))
                return false;
    return true;
}

// Visit every standard Young tableau of shape s (entries placed 1..N, each
// at a cell whose left and upper neighbors are already filled).
inline void for_each_syt(const Shape& s,
                         const std::function<void(const StandardTableau&)>& visit) {
    const int n = s.cell_count();
    std::vector<std::vector<int>> grid(static_cast<size_t>(s.row_count()));
    for (int r = 0; r < s.row_count(); ++r)
        grid[static_cast<size_t>(r)].assign(static_cast<size_t>(s.row(r)), 0);
    std::vector<int> fill(static_cast<size_t>(s.row_count()), 0);  // filled prefix per row

    std::function<void(int)> place = [&](int next) {
        if (next > n) {
            std::vector<std::vector<int>> rows;
            for (auto& g : grid) rows.push_back(g);
            visit(StandardTableau(rows));
            return;
        }
        for (int r = 0; r < s.row_count(); ++r) {
            int c = fill[static_cast<size_t>(r)];
            if (c >= s.row(r)) continue;
            if (r > 0 && fill[static_cast<size_t>(r - 1)] <= c) continue;  // cell above empty
            grid[static_cast<size_t>(r)][static_cast<size_t>(c)] = next;
            ++fill[static_cast<size_t>(r)];
            place(next + 1);
            --fill[static_cast<size_t>(r)];
        }
    };
    place(1);
}

// First factor of the maximal-avoider product: the number of staircase SYT
// with increasing diagonals, C(k,2)! * prod_{i=1}^{k-1} (i-1)!/(2i-1)!.
// Evaluated exactly, and cross-checked by exhaustive generation for k <= 5.
inline BigInt count_increasing_diagonal_staircase(int k) {
    if (k < 1) throw std::invalid_argument("count_increasing_diagonal_staircase: k >= 1");
    const unsigned cells = static_cast<unsigned>(k * (k - 1) / 2);
    BigInt num = factorial(cells);
    BigInt den = 1;
    for (int i = 1; i <= k - 1; ++i) {
        num *= factorial(static_cast<unsigned>(i - 1));
        den *= factorial(static_cast<unsigned>(2 * i - 1));
    }
    BigInt formula = exact_div(num, den);
    if (k <= 5) {
        BigInt direct = 0;
        for_each_syt(Shape::staircase(k), [&](const StandardTableau& t) {
            if (has_increasing_diagonals(t)) ++direct;
        });
        if (direct != formula)
            throw std::logic_error("increasing-diagonal staircase count: formula and enumeration disagree");
    }
    return formula;
}

// r_{C(k,2)}(12...k): (increasing-diagonal staircase count) x (all staircase
// SYT, by hook lengths).
inline BigInt maximal_monotone_avoider_count(int k) {
    if (k < 1) throw std::invalid_argument("maximal_monotone_avoider_count: k >= 1");
    return count_increasing_diagonal_staircase(k) * hook_length_count(Shape::staircase(k));
}

// Text rendering: one row per line, entries space-separated.
inline std::string to_string(const StandardTableau& t) {
    std::ostringstream out;
    auto rows = t.rows();
    for (size_t r = 0; r < rows.size(); ++r) {
        if (r) out << '\n';
        for (size_t c = 0; c < rows[r].size(); ++c) {
            if (c) out << ' ';
            out << rows[r][c];
        }
    }
    return out.str();
}

}  // namespace rdl
