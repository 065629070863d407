#pragma once

#include "dha/qt_poly.hpp"
#include "dha/rational.hpp"

#include <algorithm>
#include <compare>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dha {

// Integer partition as a weakly decreasing sequence of positive parts.
// The empty sequence is the unique partition of 0. Diagrams follow the
// French convention: row 0 at the bottom, legs point North.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    static Partition single_row(int n) {
        return n == 0 ? Partition() : Partition(std::vector<int>{n});
    }

    static Partition single_column(int n) {
        return Partition(std::vector<int>(static_cast<size_t>(n), 1));
    }

    const std::vector<int>& parts() const { return parts_; }

    int length() const { return static_cast<int>(parts_.size()); }

    bool empty() const { return parts_.empty(); }

    // |mu|
    int sum() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    // part i (0-based row index), 0 beyond the last row
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
    }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

inline Partition conjugate(const Partition& mu) {
    if (mu.empty()) return {};
    std::vector<int> cols(static_cast<size_t>(mu.part(0)), 0);
    for (int i = 0; i < mu.length(); ++i)
        for (int j = 0; j < mu.part(i); ++j) cols[static_cast<size_t>(j)]++;
    return Partition(std::move(cols));
}

// Per-cell arm/leg/coarm/coleg counts. Cells are indexed (col, row), both
// 0-based; coarm = col, coleg = row.
struct CellStats {
    int col = 0;
    int row = 0;
    int arm = 0;
    int leg = 0;
    int coarm = 0;
    int coleg = 0;
};

// Cells in row-major order starting from (0,0).
inline std::vector<CellStats> cell_stats(const Partition& mu) {
    std::vector<CellStats> out;
    const Partition conj = conjugate(mu);
    for (int row = 0; row < mu.length(); ++row) {
        for (int col = 0; col < mu.part(row); ++col) {
            CellStats c;
            c.col = col;
            c.row = row;
            c.coarm = col;
            c.coleg = row;
            c.arm = mu.part(row) - col - 1;
            c.leg = conj.part(col) - row - 1;
            out.push_back(c);
        }
    }
    return out;
}

// n(mu) = sum of colegs = sum_i i * mu_i
inline long n_stat(const Partition& mu) {
    long s = 0;
    for (int i = 0; i < mu.length(); ++i) s += static_cast<long>(i) * mu.part(i);
    return s;
}

// The q,t quantities attached to a partition: T, B, Pi, w and the constant
// M = (1-t)(1-q). Pi runs over all cells except (0,0).
struct HookStats {
    long n_mu = 0;       // n(mu)
    long n_mu_conj = 0;  // n(mu')
    QtLaurent T;
    QtLaurent B;
    QtLaurent Pi;
    QtLaurent w;
    QtLaurent M;
};

inline QtLaurent hook_M() {
    // (1-t)(1-q)
    return (QtLaurent::one() - QtLaurent::t()) * (QtLaurent::one() - QtLaurent::q());
}

inline HookStats hook_stats(const Partition& mu) {
    if (mu.empty()) throw std::invalid_argument("hook_stats: empty partition (Pi, w undefined)");
    HookStats h;
    h.n_mu = n_stat(mu);
    h.n_mu_conj = n_stat(conjugate(mu));
    h.T = QtLaurent::monomial(1, h.n_mu_conj, h.n_mu);
    h.M = hook_M();
    h.Pi = QtLaurent::one();
    h.w = QtLaurent::one();
    for (const CellStats& c : cell_stats(mu)) {
        h.B.add_term(c.coarm, c.coleg, 1);
        if (c.col != 0 || c.row != 0)
            h.Pi *= QtLaurent::one() - QtLaurent::monomial(1, c.coarm, c.coleg);
        h.w *= (QtLaurent::q().pow(c.arm) - QtLaurent::t().pow(c.leg + 1)) *
               (QtLaurent::t().pow(c.leg) - QtLaurent::q().pow(c.arm + 1));
    }
    return h;
}

// z_mu = 1^{a_1} 2^{a_2} ... a_1! a_2! ... with a_i the multiplicity of i
inline Int z_mu(const Partition& mu) {
    Int z = 1;
    int i = 0;
    while (i < mu.length()) {
        int j = i;
        while (j < mu.length() && mu.part(j) == mu.part(i)) ++j;
        const long mult = j - i;
        z *= int_pow(Int(mu.part(i)), mult) * factorial(mult);
        i = j;
    }
    return z;
}

// Optional constraints for partition enumeration. staircase_m keeps
// partitions fitting inside [m-1, m-2, ..., 1], i.e. lambda_i <= m-1-i.
struct PartitionFilter {
    std::optional<int> max_part;
    std::optional<int> exact_length;
    std::optional<int> staircase_m;
};

namespace detail {

inline void partitions_rec(int remaining, int max_next, int row,
                           const PartitionFilter& f, std::vector<int>& acc,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        if (!f.exact_length || static_cast<int>(acc.size()) == *f.exact_length)
            out.emplace_back(acc);
        return;
    }
    if (f.exact_length && static_cast<int>(acc.size()) >= *f.exact_length) return;
    int hi = std::min(remaining, max_next);
    if (f.staircase_m) hi = std::min(hi, *f.staircase_m - 1 - row);
    for (int p = hi; p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(remaining - p, p, row + 1, f, acc, out);
        acc.pop_back();
    }
}

} // namespace detail

// All partitions of n satisfying the filter, in decreasing lexicographic
// order of the part sequences.
inline std::vector<Partition> partitions_of(int n, const PartitionFilter& f = {}) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> acc;
    int hi = f.max_part ? *f.max_part : n;
    detail::partitions_rec(n, hi, 0, f, acc, out);
    return out;
}

} // namespace dha
