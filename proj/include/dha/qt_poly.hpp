#pragma once

#include "dha/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace dha {

// Bivariate Laurent polynomial in q and t with Int coefficients.
// Terms are keyed by (e_t, e_q); the map order is the canonical term order
// used for serialization: ascending e_t, then ascending e_q.
class QtLaurent {
public:
    using Key = std::pair<long, long>; // (e_t, e_q)

    QtLaurent() = default;

    static QtLaurent zero() { return QtLaurent(); }

    static QtLaurent constant(Int c) { return monomial(std::move(c), 0, 0); }

    static QtLaurent one() { return constant(1); }

    static QtLaurent monomial(Int c, long e_q, long e_t) {
        QtLaurent p;
        if (c != 0) p.terms_[{e_t, e_q}] = std::move(c);
        return p;
    }

    static QtLaurent q(long e = 1) { return monomial(1, e, 0); }
    static QtLaurent t(long e = 1) { return monomial(1, 0, e); }

    bool is_zero() const { return terms_.empty(); }

    bool is_monomial() const { return terms_.size() == 1; }

    // true when no term involves t
    bool is_q_only() const {
        for (const auto& [k, c] : terms_)
            if (k.first != 0) return false;
        return true;
    }

    Int coefficient(long e_q, long e_t) const {
        auto it = terms_.find({e_t, e_q});
        return it == terms_.end() ? Int(0) : it->second;
    }

    const std::map<Key, Int>& terms() const { return terms_; }

    size_t term_count() const { return terms_.size(); }

    void add_term(long e_q, long e_t, const Int& c) {
        if (c == 0) return;
        auto it = terms_.find({e_t, e_q});
        if (it == terms_.end()) {
            terms_[{e_t, e_q}] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    QtLaurent operator-() const {
        QtLaurent r;
        for (const auto& [k, c] : terms_) r.terms_[k] = -c;
        return r;
    }

    QtLaurent& operator+=(const QtLaurent& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.second, k.first, c);
        return *this;
    }

    QtLaurent& operator-=(const QtLaurent& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.second, k.first, -c);
        return *this;
    }

    friend QtLaurent operator+(QtLaurent a, const QtLaurent& b) { return a += b; }
    friend QtLaurent operator-(QtLaurent a, const QtLaurent& b) { return a -= b; }

    friend QtLaurent operator*(const QtLaurent& a, const QtLaurent& b) {
        QtLaurent r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term(ka.second + kb.second, ka.first + kb.first, ca * cb);
        return r;
    }

    QtLaurent& operator*=(const QtLaurent& o) { return *this = *this * o; }

    friend QtLaurent operator*(const Int& c, const QtLaurent& p) {
        QtLaurent r;
        if (c == 0) return r;
        for (const auto& [k, v] : p.terms_) r.terms_[k] = c * v;
        return r;
    }

    // Negative exponents are only defined for invertible elements, i.e.
    // single monomials with coefficient +-1 times content (we allow any
    // nonzero single-term base: the inverse exists in the Laurent ring
    // only for unit coefficient, so restrict to |c| = 1).
    QtLaurent pow(long e) const {
        if (e == 0) return one();
        if (e < 0) {
            if (!is_monomial())
                throw std::invalid_argument("QtLaurent::pow: negative power of a non-monomial");
            const auto& [k, c] = *terms_.begin();
            if (c != 1 && c != -1)
                throw std::invalid_argument("QtLaurent::pow: negative power of a non-unit coefficient");
            Int coef = (c == -1 && (e % 2 != 0)) ? Int(-1) : Int(1);
            return monomial(coef, k.second * e, k.first * e);
        }
        QtLaurent r = one(), b = *this;
        for (long m = e; m > 0; m >>= 1) {
            if (m & 1) r *= b;
            if (m > 1) b *= b;
        }
        return r;
    }

    bool operator==(const QtLaurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const QtLaurent& o) const { return !(*this == o); }

    // swap q and t
    QtLaurent swap_qt() const {
        QtLaurent r;
        for (const auto& [k, c] : terms_) r.terms_[{k.second, k.first}] = c;
        return r;
    }

    long min_q_degree() const {
        check_nonzero("min_q_degree");
        long m = terms_.begin()->first.second;
        for (const auto& [k, c] : terms_) m = std::min(m, k.second);
        return m;
    }

    long max_q_degree() const {
        check_nonzero("max_q_degree");
        long m = terms_.begin()->first.second;
        for (const auto& [k, c] : terms_) m = std::max(m, k.second);
        return m;
    }

    long max_t_degree() const {
        check_nonzero("max_t_degree");
        long m = terms_.begin()->first.first;
        for (const auto& [k, c] : terms_) m = std::max(m, k.first);
        return m;
    }

    bool has_negative_exponent() const {
        for (const auto& [k, c] : terms_)
            if (k.first < 0 || k.second < 0) return true;
        return false;
    }

    Rat evaluate(const Rat& qv, const Rat& tv) const {
        Rat total = 0;
        for (const auto& [k, c] : terms_) {
            Rat term = Rat(c);
            term *= rat_pow(qv, k.second);
            term *= rat_pow(tv, k.first);
            total += term;
        }
        return total;
    }

    // human-readable form in canonical term order, e.g. "1 - q^2 + q*t"
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            Int a = c;
            if (first) {
                if (a < 0) { out += "-"; a = -a; }
            } else {
                out += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            first = false;
            std::string mono = monomial_str(k);
            if (mono.empty()) {
                out += a.str();
            } else {
                if (a != 1) out += a.str() + "*";
                out += mono;
            }
        }
        return out;
    }

private:
    static Rat rat_pow(const Rat& base, long e) {
        if (e == 0) return Rat(1);
        if (e < 0) {
            if (base == 0) throw std::invalid_argument("QtLaurent::evaluate: 0 to a negative power");
            return Rat(1) / rat_pow(base, -e);
        }
        Rat r = 1, b = base;
        for (long m = e; m > 0; m >>= 1) {
            if (m & 1) r *= b;
            if (m > 1) b *= b;
        }
        return r;
    }

    static std::string monomial_str(const Key& k) {
        std::string s;
        auto var = [&](const char* name, long e) {
            if (e == 0) return;
            if (!s.empty()) s += "*";
            s += name;
            if (e != 1) s += "^" + std::to_string(e);
        };
        var("q", k.second);
        var("t", k.first);
        return s;
    }

    void check_nonzero(const char* what) const {
        if (terms_.empty()) throw std::logic_error(std::string("QtLaurent::") + what + " on zero polynomial");
    }

    std::map<Key, Int> terms_;
};

// [m]_q = 1 + q + ... + q^{m-1}
inline QtLaurent q_integer(long m) {
    QtLaurent r;
    for (long i = 0; i < m; ++i) r.add_term(i, 0, 1);
    return r;
}

// Gaussian binomial coefficient [m choose k]_q, by the Pascal recurrence
// [m k] = [m-1 k] + q^{m-k} [m-1 k-1]; nonnegative coefficients by construction.
inline QtLaurent q_binomial(long m, long k) {
    if (k < 0 || k > m) throw std::invalid_argument("q_binomial: k out of range");
    std::vector<QtLaurent> row(static_cast<size_t>(k) + 1);
    row[0] = QtLaurent::one();
    for (long i = 1; i <= m; ++i) {
        for (long j = std::min(i, k); j >= 1; --j) {
            QtLaurent shifted = QtLaurent::q(i - j) * row[j - 1];
            if (j == i) {
                row[j] = QtLaurent::one();
            } else {
                row[j] = row[j] + shifted;
            }
        }
    }
    return row[k];
}

// Exact division of univariate polynomials in q (no t, no negative powers).
// Throws std::logic_error if the division leaves a remainder.
inline QtLaurent div_exact_q(const QtLaurent& num, const QtLaurent& den) {
    if (den.is_zero()) throw std::invalid_argument("div_exact_q: zero divisor");
    if (!num.is_q_only() || !den.is_q_only())
        throw std::invalid_argument("div_exact_q: operands must involve q only");
    if (num.has_negative_exponent() || den.has_negative_exponent())
        throw std::invalid_argument("div_exact_q: operands must be polynomials");
    QtLaurent rem = num, quot;
    const long dd = den.max_q_degree();
    const Int dc = den.coefficient(dd, 0);
    while (!rem.is_zero() && rem.max_q_degree() >= dd) {
        const long rd = rem.max_q_degree();
        const Int rc = rem.coefficient(rd, 0);
        if (rc % dc != 0) throw std::logic_error("div_exact_q: inexact division");
        QtLaurent term = QtLaurent::monomial(rc / dc, rd - dd, 0);
        quot += term;
        rem -= term * den;
    }
    if (!rem.is_zero()) throw std::logic_error("div_exact_q: nonzero remainder");
    return quot;
}

// (1/[n+1]_q) [2n choose n]_q, by exact division
inline QtLaurent q_catalan_polynomial(long n) {
    if (n < 1) throw std::invalid_argument("q_catalan_polynomial: n must be >= 1");
    return div_exact_q(q_binomial(2 * n, n), q_integer(n + 1));
}

// substitute t = q^{-1}
inline QtLaurent specialize_t_to_q_inverse(const QtLaurent& p) {
    QtLaurent r;
    for (const auto& [k, c] : p.terms()) r.add_term(k.second - k.first, 0, c);
    return r;
}

// (q d/dq)^{odd_power} applied to a Laurent polynomial in q alone:
// a q^m -> a m^{odd_power} q^m
inline QtLaurent euler_apply(const QtLaurent& p, long odd_power) {
    if (odd_power < 1 || odd_power % 2 == 0)
        throw std::invalid_argument("euler_apply: power must be odd and >= 1");
    if (!p.is_q_only())
        throw std::invalid_argument("euler_apply: polynomial must involve q only");
    QtLaurent r;
    for (const auto& [k, c] : p.terms()) {
        long m = k.second;
        Int factor = int_pow(Int(m < 0 ? -m : m), odd_power);
        if (m < 0) factor = -factor; // odd power keeps the sign of m
        r.add_term(m, 0, c * factor);
    }
    return r;
}

} // namespace dha
