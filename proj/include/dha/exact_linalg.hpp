#pragma once

#include "dha/multi_poly.hpp"
#include "dha/rational.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace dha {

// Rows of polynomials laid out over the union of their monomials, with
// denominators cleared per row so every entry is an Int. Column order is
// the canonical grevlex order of MultiPoly.
struct MonomialMatrix {
    int n = 0;
    std::vector<Monomial> columns;
    std::vector<std::vector<Int>> rows;

    static MonomialMatrix from_polys(const std::vector<MultiPoly>& polys) {
        MonomialMatrix mat;
        if (polys.empty()) return mat;
        mat.n = polys.front().n();
        std::map<Monomial, size_t, GrevlexGreater> col_index;
        for (const MultiPoly& p : polys) {
            if (p.n() != mat.n)
                throw std::invalid_argument("MonomialMatrix: variable counts differ");
            for (const auto& [m, c] : p.terms()) col_index.emplace(m, 0);
        }
        size_t idx = 0;
        for (auto& [m, i] : col_index) {
            i = idx++;
            mat.columns.push_back(m);
        }
        for (const MultiPoly& p : polys) {
            std::vector<Int> row(mat.columns.size(), Int(0));
            Int lcm = 1;
            for (const auto& [m, c] : p.terms())
                lcm = boost::multiprecision::lcm(lcm, denominator(c));
            for (const auto& [m, c] : p.terms())
                row[col_index[m]] = numerator(c) * (lcm / denominator(c));
            mat.rows.push_back(std::move(row));
        }
        return mat;
    }
};

namespace detail {

inline Int row_content(const std::vector<Int>& row) {
    Int g = 0;
    for (const Int& v : row) {
        if (v == 0) continue;
        g = boost::multiprecision::gcd(g, abs(v));
        if (g == 1) break;
    }
    return g;
}

inline void reduce_by_content(std::vector<Int>& row) {
    const Int g = row_content(row);
    if (g > 1)
        for (Int& v : row) v /= g;
}

inline size_t count_nonzero(const std::vector<Int>& row, size_t limit) {
    size_t c = 0;
    for (size_t j = 0; j < limit; ++j)
        if (row[j] != 0) ++c;
    return c;
}

// first nonzero entry positive, divided by the content
inline void normalize_vector(std::vector<Int>& v) {
    reduce_by_content(v);
    for (const Int& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : v) y = -y;
        break;
    }
}

// Fraction-free elimination over the first `width` columns. Pivot rows are
// chosen shortest-first (fewest nonzeros in the leading block, ties by
// original position), pivot column is the leftmost nonzero of the pivot
// row; rows are content-reduced after every combination step to keep the
// integers small. Entries beyond `width` ride along, which lets callers
// track the combination applied to each row.
struct Elimination {
    size_t rank = 0;
    std::vector<std::vector<Int>> zero_rows; // rows fully eliminated, in pivot-order

    Elimination(std::vector<std::vector<Int>> work, size_t width) {
        std::vector<bool> used(work.size(), false);
        for (;;) {
            size_t best = work.size();
            size_t best_nnz = 0;
            for (size_t i = 0; i < work.size(); ++i) {
                if (used[i]) continue;
                const size_t nnz = count_nonzero(work[i], width);
                if (nnz == 0) continue;
                if (best == work.size() || nnz < best_nnz) {
                    best = i;
                    best_nnz = nnz;
                }
            }
            if (best == work.size()) break;
            used[best] = true;
            ++rank;
            size_t pcol = 0;
            while (work[best][pcol] == 0) ++pcol;
            const Int& pval = work[best][pcol];
            for (size_t i = 0; i < work.size(); ++i) {
                if (used[i] || work[i][pcol] == 0) continue;
                const Int factor = work[i][pcol];
                std::vector<Int>& row = work[i];
                for (size_t j = 0; j < row.size(); ++j)
                    row[j] = row[j] * pval - work[best][j] * factor;
                reduce_by_content(row);
            }
        }
        for (size_t i = 0; i < work.size(); ++i)
            if (!used[i] && count_nonzero(work[i], width) == 0 && !work[i].empty())
                zero_rows.push_back(std::move(work[i]));
    }
};

} // namespace detail

// exact rank over the rationals
inline int rank(const MonomialMatrix& mat) {
    if (mat.rows.empty()) return 0;
    detail::Elimination elim(mat.rows, mat.columns.size());
    return static_cast<int>(elim.rank);
}

inline int rank(const std::vector<MultiPoly>& polys) {
    return rank(MonomialMatrix::from_polys(polys));
}

// Basis of the left null space of the row list: integer combination
// vectors v with sum_i v_i row_i = 0, each primitive with its first
// nonzero entry positive.
inline std::vector<std::vector<Int>> kernel(const MonomialMatrix& mat) {
    const size_t m = mat.rows.size();
    const size_t width = mat.columns.size();
    std::vector<std::vector<Int>> work(m);
    for (size_t i = 0; i < m; ++i) {
        work[i] = mat.rows[i];
        work[i].resize(width + m, Int(0));
        work[i][width + i] = 1;
    }
    detail::Elimination elim(std::move(work), width);
    std::vector<std::vector<Int>> out;
    for (const auto& row : elim.zero_rows) {
        std::vector<Int> combo(row.begin() + static_cast<long>(width), row.end());
        detail::normalize_vector(combo);
        out.push_back(std::move(combo));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        auto lead = [](const std::vector<Int>& v) {
            for (size_t i = 0; i < v.size(); ++i)
                if (v[i] != 0) return i;
            return v.size();
        };
        const size_t la = lead(a), lb = lead(b);
        return la != lb ? la < lb : a < b;
    });
    return out;
}

inline std::vector<std::vector<Int>> kernel(const std::vector<MultiPoly>& polys) {
    return kernel(MonomialMatrix::from_polys(polys));
}

// Thrown by select_independent when the target rank cannot be reached.
struct RankDeficitError : std::runtime_error {
    int achieved;
    int target;
    RankDeficitError(int achieved_, int target_)
        : std::runtime_error("select_independent: rank deficit, achieved " +
                             std::to_string(achieved_) + " of " + std::to_string(target_)),
          achieved(achieved_), target(target_) {}
};

namespace detail {

// incremental rank tracker: rows are reduced against the kept set in scan
// order, so the selection is the greedy left-to-right one
class IncrementalRank {
public:
    explicit IncrementalRank(std::map<Monomial, size_t, GrevlexGreater> col_index)
        : col_index_(std::move(col_index)) {}

    static IncrementalRank over(const std::vector<MultiPoly>& polys) {
        std::map<Monomial, size_t, GrevlexGreater> cols;
        for (const MultiPoly& p : polys)
            for (const auto& [m, c] : p.terms()) cols.emplace(m, 0);
        size_t idx = 0;
        for (auto& [m, i] : cols) i = idx++;
        return IncrementalRank(std::move(cols));
    }

    bool try_add(const MultiPoly& p) {
        std::vector<Int> row(col_index_.size(), Int(0));
        Int lcm = 1;
        for (const auto& [m, c] : p.terms())
            lcm = boost::multiprecision::lcm(lcm, denominator(c));
        for (const auto& [m, c] : p.terms())
            row[col_index_.at(m)] = numerator(c) * (lcm / denominator(c));
        for (const auto& [pcol, basis_row] : basis_) {
            if (row[pcol] == 0) continue;
            const Int factor = row[pcol];
            const Int pval = basis_row[pcol];
            for (size_t j = 0; j < row.size(); ++j)
                row[j] = row[j] * pval - basis_row[j] * factor;
            reduce_by_content(row);
        }
        size_t pcol = 0;
        while (pcol < row.size() && row[pcol] == 0) ++pcol;
        if (pcol == row.size()) return false;
        reduce_by_content(row);
        basis_.emplace_back(pcol, std::move(row));
        return true;
    }

    int rank() const { return static_cast<int>(basis_.size()); }

private:
    std::map<Monomial, size_t, GrevlexGreater> col_index_;
    std::vector<std::pair<size_t, std::vector<Int>>> basis_; // (pivot col, row)
};

} // namespace detail

// Greedy left-to-right scan keeping a row iff it increases the rank;
// stops once `target` rows are kept. Throws RankDeficitError if the scan
// ends short of the target.
inline std::vector<int> select_independent(const std::vector<MultiPoly>& rows, int target) {
    if (target < 0) throw std::invalid_argument("select_independent: negative target");
    std::vector<int> selected;
    if (target == 0) return selected;
    auto tracker = detail::IncrementalRank::over(rows);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (tracker.try_add(rows[i])) {
            selected.push_back(static_cast<int>(i));
            if (static_cast<int>(selected.size()) == target) return selected;
        }
    }
    throw RankDeficitError(static_cast<int>(selected.size()), target);
}

// Greedy scan over the whole list (no target): the kept indices, whose
// count is the rank of the row set.
inline std::vector<int> select_all_independent(const std::vector<MultiPoly>& rows) {
    std::vector<int> selected;
    auto tracker = detail::IncrementalRank::over(rows);
    for (size_t i = 0; i < rows.size(); ++i)
        if (tracker.try_add(rows[i])) selected.push_back(static_cast<int>(i));
    return selected;
}

} // namespace dha
