#pragma once

#include "dha/rational.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace dha {

// Exponent vector over x_1..x_n, y_1..y_n (x block first).
struct Monomial {
    std::vector<int> e;

    int total_degree() const { return std::accumulate(e.begin(), e.end(), 0); }

    int x_degree(int n) const {
        return std::accumulate(e.begin(), e.begin() + n, 0);
    }

    int y_degree(int n) const {
        return std::accumulate(e.begin() + n, e.end(), 0);
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
};

// Graded reverse lexicographic order, leading term first: higher total
// degree wins; within a degree the monomial whose last differing exponent
// is smaller comes first. Variable significance x_1 > ... > x_n > y_1 > ... > y_n.
struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db;
        for (size_t i = a.e.size(); i-- > 0;) {
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        }
        return false;
    }
};

struct BiDegree {
    int a = 0; // total degree in the x's
    int b = 0; // total degree in the y's
    auto operator<=>(const BiDegree&) const = default;
};

enum class VarKind { X, Y };

// Sparse polynomial in Q[x_1..x_n; y_1..y_n] with exact rational
// coefficients. Canonical: no zero coefficient is ever stored, terms are
// kept in grevlex order with the leading term first.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rat, GrevlexGreater>;

    explicit MultiPoly(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("MultiPoly: n must be >= 1");
    }

    static MultiPoly zero(int n) { return MultiPoly(n); }

    static MultiPoly constant(int n, const Rat& c) {
        MultiPoly p(n);
        if (c != 0) p.terms_[Monomial{std::vector<int>(2 * static_cast<size_t>(n), 0)}] = c;
        return p;
    }

    static MultiPoly monomial(int n, Monomial m, const Rat& c) {
        if (static_cast<int>(m.e.size()) != 2 * n)
            throw std::invalid_argument("MultiPoly::monomial: exponent vector length mismatch");
        for (int e : m.e)
            if (e < 0) throw std::invalid_argument("MultiPoly::monomial: negative exponent");
        MultiPoly p(n);
        if (c != 0) p.terms_[std::move(m)] = c;
        return p;
    }

    // the variable x_i or y_i (0-based i)
    static MultiPoly variable(int n, VarKind kind, int i) {
        if (i < 0 || i >= n) throw std::invalid_argument("MultiPoly::variable: index out of range");
        Monomial m{std::vector<int>(2 * static_cast<size_t>(n), 0)};
        m.e[static_cast<size_t>(kind == VarKind::X ? i : n + i)] = 1;
        return monomial(n, std::move(m), Rat(1));
    }

    int n() const { return n_; }

    bool is_zero() const { return terms_.empty(); }

    size_t term_count() const { return terms_.size(); }

    const TermMap& terms() const { return terms_; }

    Rat coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    int total_degree() const {
        // leading term has maximal total degree
        return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
    }

    MultiPoly operator-() const {
        MultiPoly r(n_);
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& o) {
        check_same_n(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& o) {
        check_same_n(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_same_n(b);
        MultiPoly r(a.n_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (size_t i = 0; i < m.e.size(); ++i) m.e[i] += mb.e[i];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const Rat& c) const {
        MultiPoly r(n_);
        if (c == 0) return r;
        for (const auto& [m, v] : terms_) r.terms_[m] = c * v;
        return r;
    }

    bool operator==(const MultiPoly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rat a = c;
            if (first) {
                if (a < 0) { out += "-"; a = -a; }
            } else {
                out += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            first = false;
            std::string mono;
            for (int i = 0; i < 2 * n_; ++i) {
                int e = m.e[static_cast<size_t>(i)];
                if (e == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += (i < n_) ? "x" + std::to_string(i + 1) : "y" + std::to_string(i - n_ + 1);
                if (e > 1) mono += "^" + std::to_string(e);
            }
            if (mono.empty()) {
                out += rat_to_string(a);
            } else {
                if (a != 1) out += rat_to_string(a) + "*";
                out += mono;
            }
        }
        return out;
    }

private:
    void check_same_n(const MultiPoly& o) const {
        if (n_ != o.n_) throw std::invalid_argument("MultiPoly: operand variable counts differ");
    }

    int n_;
    TermMap terms_;
};

// exact iterated partial derivative d^order / d(var_i)^order
inline MultiPoly partial(const MultiPoly& p, VarKind kind, int i, int order = 1) {
    if (order < 0) throw std::invalid_argument("partial: negative order");
    if (i < 0 || i >= p.n()) throw std::invalid_argument("partial: index out of range");
    if (order == 0) return p;
    const size_t idx = static_cast<size_t>(kind == VarKind::X ? i : p.n() + i);
    MultiPoly r(p.n());
    for (const auto& [m, c] : p.terms()) {
        const int e = m.e[idx];
        if (e < order) continue;
        Monomial md = m;
        md.e[idx] = e - order;
        r.add_term(md, c * Rat(falling_factorial(e, order)));
    }
    return r;
}

// simultaneous relabeling x_i -> x_{sigma(i)}, y_i -> y_{sigma(i)};
// sigma is given 0-based as the image list
inline MultiPoly diagonal_action(const std::vector<int>& sigma, const MultiPoly& p) {
    const int n = p.n();
    if (static_cast<int>(sigma.size()) != n)
        throw std::invalid_argument("diagonal_action: permutation size mismatch");
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : sigma) {
        if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("diagonal_action: not a permutation");
        seen[static_cast<size_t>(v)] = true;
    }
    MultiPoly r(n);
    for (const auto& [m, c] : p.terms()) {
        Monomial mp{std::vector<int>(m.e.size(), 0)};
        for (int i = 0; i < n; ++i) {
            const size_t si = static_cast<size_t>(sigma[static_cast<size_t>(i)]);
            mp.e[si] = m.e[static_cast<size_t>(i)];
            mp.e[si + static_cast<size_t>(n)] = m.e[static_cast<size_t>(i) + static_cast<size_t>(n)];
        }
        r.add_term(mp, c);
    }
    return r;
}

// <P,Q> = constant term of P(dX, dY) Q. For monomials this is zero unless
// the exponent vectors match, and the product of exponent factorials when
// they do, so the sum only runs over common support.
inline Rat scalar_product(const MultiPoly& p, const MultiPoly& q) {
    if (p.n() != q.n()) throw std::invalid_argument("scalar_product: variable counts differ");
    Rat total = 0;
    const bool p_smaller = p.term_count() <= q.term_count();
    const MultiPoly& small = p_smaller ? p : q;
    const MultiPoly& large = p_smaller ? q : p;
    for (const auto& [m, c] : small.terms()) {
        Rat other = large.coefficient(m);
        if (other == 0) continue;
        Int fact = 1;
        for (int e : m.e) fact *= factorial(e);
        total += c * other * Rat(fact);
    }
    return total;
}

// Pi_{p,q} = sum_i d_{x_i}^p d_{y_i}^q
inline MultiPoly polarized_power_sum(int p, int q, const MultiPoly& poly) {
    if (p < 0 || q < 0 || p + q < 1)
        throw std::invalid_argument("polarized_power_sum: need p,q >= 0 and p+q >= 1");
    MultiPoly r(poly.n());
    for (int i = 0; i < poly.n(); ++i)
        r += partial(partial(poly, VarKind::X, i, p), VarKind::Y, i, q);
    return r;
}

// true iff Pi_{p,q} P = 0 for all 1 <= p+q <= deg P (higher orders
// annihilate automatically)
inline bool is_diagonal_harmonic(const MultiPoly& p) {
    const int deg = p.total_degree();
    for (int total = 1; total <= deg; ++total)
        for (int dx = 0; dx <= total; ++dx)
            if (!polarized_power_sum(dx, total - dx, p).is_zero()) return false;
    return true;
}

// split into bi-homogeneous components
inline std::map<BiDegree, MultiPoly> bidegree_components(const MultiPoly& p) {
    std::map<BiDegree, MultiPoly> out;
    for (const auto& [m, c] : p.terms()) {
        BiDegree bd{m.x_degree(p.n()), m.y_degree(p.n())};
        auto it = out.find(bd);
        if (it == out.end()) it = out.emplace(bd, MultiPoly(p.n())).first;
        it->second.add_term(m, c);
    }
    return out;
}

// bi-degree of a bi-homogeneous polynomial; throws on mixed input, and
// returns (0,0) for the zero polynomial
inline BiDegree bidegree_of(const MultiPoly& p) {
    bool first = true;
    BiDegree bd;
    for (const auto& [m, c] : p.terms()) {
        BiDegree mb{m.x_degree(p.n()), m.y_degree(p.n())};
        if (first) {
            bd = mb;
            first = false;
        } else if (mb != bd) {
            throw std::invalid_argument("bidegree_of: polynomial is not bi-homogeneous");
        }
    }
    return bd;
}

inline bool is_bihomogeneous(const MultiPoly& p) {
    bool first = true;
    BiDegree bd;
    for (const auto& [m, c] : p.terms()) {
        BiDegree mb{m.x_degree(p.n()), m.y_degree(p.n())};
        if (first) {
            bd = mb;
            first = false;
        } else if (mb != bd) {
            return false;
        }
    }
    return true;
}

} // namespace dha
