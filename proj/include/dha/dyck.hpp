#pragma once

#include "dha/partition.hpp"
#include "dha/qt_poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dha {

// Dyck path in the n x n lattice, stored as the abscissas d_1..d_n of its
// North steps: d_1 = 0, d weakly increasing, d_i <= i-1.
class DyckPath {
public:
    explicit DyckPath(std::vector<int> d) : d_(std::move(d)) {
        if (d_.empty()) throw std::invalid_argument("DyckPath: empty");
        for (size_t i = 0; i < d_.size(); ++i) {
            if (d_[i] < 0 || d_[i] > static_cast<int>(i))
                throw std::invalid_argument("DyckPath: path must stay weakly above the diagonal");
            if (i > 0 && d_[i] < d_[i - 1])
                throw std::invalid_argument("DyckPath: abscissas must be weakly increasing");
        }
    }

    int n() const { return static_cast<int>(d_.size()); }

    const std::vector<int>& d() const { return d_; }

    int d_at(int i) const { return d_[static_cast<size_t>(i)]; } // 0-based

    auto operator<=>(const DyckPath&) const = default;

private:
    std::vector<int> d_;
};

// per-row area contributions u_i = (i-1) - d_i, 1-based i
inline std::vector<int> area_contributions(const DyckPath& D) {
    std::vector<int> u(static_cast<size_t>(D.n()));
    for (int i = 0; i < D.n(); ++i) u[static_cast<size_t>(i)] = i - D.d_at(i);
    return u;
}

inline long area(const DyckPath& D) {
    long a = 0;
    for (int u : area_contributions(D)) a += u;
    return a;
}

// The bounce path goes North from a diagonal point (j,j) until it reaches
// the West end of an East step of D, then East back to the diagonal. The
// height where that happens is #{i : d_i <= j}; East ends of East steps do
// not trigger a turn. At each intermediate diagonal touch (j,j) the label
// n - j is collected.
inline long bounce(const DyckPath& D) {
    const int n = D.n();
    long total = 0;
    int j = 0;
    while (j < n) {
        int next = 0;
        for (int i = 0; i < n; ++i)
            if (D.d_at(i) <= j) ++next;
        j = next;
        if (j < n) total += n - j;
    }
    return total;
}

// dinv = #{i<j : u_i = u_j} + #{i<j : u_i = u_j + 1}
inline long dinv(const DyckPath& D) {
    const std::vector<int> u = area_contributions(D);
    long total = 0;
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = i + 1; j < u.size(); ++j)
            if (u[i] == u[j] || u[i] == u[j] + 1) ++total;
    return total;
}

struct PathStats {
    long area = 0;
    long bounce = 0;
    long dinv = 0;
    std::vector<int> u;
};

inline PathStats path_stats(const DyckPath& D) {
    PathStats s;
    s.u = area_contributions(D);
    for (int ui : s.u) s.area += ui;
    s.bounce = bounce(D);
    s.dinv = dinv(D);
    return s;
}

// the nonzero abscissas in weakly decreasing order; fits inside the
// staircase [n-1, ..., 1]
inline Partition copartition(const DyckPath& D) {
    std::vector<int> parts;
    for (int i = D.n() - 1; i >= 0; --i)
        if (D.d_at(i) > 0) parts.push_back(D.d_at(i));
    return Partition(std::move(parts));
}

// The path with a given co-partition: d is the multiset {0^{n-l}} + parts
// of lambda in increasing order. Inverse of copartition.
inline DyckPath path_from_copartition(int n, const Partition& lambda) {
    std::vector<int> d(static_cast<size_t>(n - lambda.length()), 0);
    for (int i = lambda.length() - 1; i >= 0; --i) d.push_back(lambda.part(i));
    return DyckPath(std::move(d));
}

namespace detail {

inline void dyck_rec(int n, std::vector<int>& d, std::vector<DyckPath>& out) {
    if (static_cast<int>(d.size()) == n) {
        out.emplace_back(d);
        return;
    }
    const int i = static_cast<int>(d.size()); // next index, 0-based
    const int lo = d.empty() ? 0 : d.back();
    for (int v = lo; v <= i; ++v) {
        d.push_back(v);
        dyck_rec(n, d, out);
        d.pop_back();
    }
}

} // namespace detail

// all Catalan(n) paths in lexicographic order of d
inline std::vector<DyckPath> enumerate_paths(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_paths: n must be >= 1");
    std::vector<DyckPath> out;
    std::vector<int> d;
    detail::dyck_rec(n, d, out);
    return out;
}

inline Int catalan_number(int n) {
    // binomial(2n, n) / (n + 1)
    Int num = 1, den = 1;
    for (int i = 1; i <= n; ++i) {
        num *= n + i;
        den *= i;
    }
    return num / den / (n + 1);
}

enum class StatPair { AreaBounce, AreaDinv };

// c_n(q,t): sum over paths of t^bounce q^area, or t^area q^dinv
inline QtLaurent qt_catalan(int n, StatPair stats = StatPair::AreaBounce) {
    QtLaurent total;
    for (const DyckPath& D : enumerate_paths(n)) {
        if (stats == StatPair::AreaBounce)
            total.add_term(area(D), bounce(D), 1);
        else
            total.add_term(dinv(D), area(D), 1);
    }
    return total;
}

// coefficient of t^a q^b in qt_catalan(n); zero entries omitted
inline std::map<std::pair<int, int>, long> coefficient_grid(int n, StatPair stats = StatPair::AreaBounce) {
    std::map<std::pair<int, int>, long> grid;
    const QtLaurent c_n = qt_catalan(n, stats);
    for (const auto& [key, c] : c_n.terms())
        grid[{static_cast<int>(key.first), static_cast<int>(key.second)}] = static_cast<long>(c);
    return grid;
}

} // namespace dha
