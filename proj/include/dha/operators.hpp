#pragma once

#include "dha/multi_poly.hpp"
#include "dha/partition.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace dha {

enum class GenKind { E, F, Pi };

// One generator: E_{r,s} = sum_i y_i d_x^r d_y^s, F_{r,s} = sum_i x_i d_x^r d_y^s,
// Pi_{p,q} = sum_i d_x^p d_y^q. Indices must satisfy r+s >= 1.
struct OpGen {
    GenKind kind;
    int r;
    int s;

    OpGen(GenKind k, int r_, int s_) : kind(k), r(r_), s(s_) {
        if (r < 0 || s < 0 || r + s < 1)
            throw std::invalid_argument("OpGen: indices must be nonnegative with r+s >= 1");
    }

    std::string str() const {
        const char* name = kind == GenKind::E ? "E" : kind == GenKind::F ? "F" : "Pi";
        return std::string(name) + "(" + std::to_string(r) + "," + std::to_string(s) + ")";
    }

    bool operator==(const OpGen&) const = default;
};

inline OpGen gen_E(int r, int s) { return OpGen(GenKind::E, r, s); }
inline OpGen gen_F(int r, int s) { return OpGen(GenKind::F, r, s); }
inline OpGen gen_Pi(int p, int q) { return OpGen(GenKind::Pi, p, q); }

// Formal product of generators, applied right-to-left.
struct OperatorWord {
    std::vector<OpGen> gens;
};

inline MultiPoly apply_gen(const OpGen& g, const MultiPoly& p) {
    MultiPoly r(p.n());
    const size_t n = static_cast<size_t>(p.n());
    for (const auto& [m, c] : p.terms()) {
        for (size_t i = 0; i < n; ++i) {
            const int ex = m.e[i];
            const int ey = m.e[i + n];
            if (ex < g.r || ey < g.s) continue;
            Rat coef = c * Rat(falling_factorial(ex, g.r) * falling_factorial(ey, g.s));
            Monomial mm = m;
            mm.e[i] = ex - g.r;
            mm.e[i + n] = ey - g.s;
            switch (g.kind) {
                case GenKind::E: mm.e[i + n] += 1; break;
                case GenKind::F: mm.e[i] += 1; break;
                case GenKind::Pi: break;
            }
            r.add_term(mm, coef);
        }
    }
    return r;
}

inline MultiPoly apply_word(const OperatorWord& w, const MultiPoly& p) {
    MultiPoly r = p;
    for (size_t i = w.gens.size(); i-- > 0;) r = apply_gen(w.gens[i], r);
    return r;
}

// E_{mu_1,0} E_{mu_2,0} ... applied to p; the E_{r,0} commute, so any
// arrangement of the parts gives the same operator
inline MultiPoly apply_e_word(const Partition& word, const MultiPoly& p) {
    MultiPoly r = p;
    for (int i = word.length(); i-- > 0;) r = apply_gen(gen_E(word.part(i), 0), r);
    return r;
}

inline MultiPoly sl2_E(const MultiPoly& p) { return apply_gen(gen_E(1, 0), p); }

inline MultiPoly sl2_F(const MultiPoly& p) { return apply_gen(gen_F(0, 1), p); }

// H = [E,F]: the Euler operator in the y's minus the Euler operator in the
// x's; scales a monomial of bi-degree (a,b) by (b - a)
inline MultiPoly sl2_H(const MultiPoly& p) {
    MultiPoly r(p.n());
    for (const auto& [m, c] : p.terms()) {
        const int diff = m.y_degree(p.n()) - m.x_degree(p.n());
        r.add_term(m, c * diff);
    }
    return r;
}

// prod_{i<j} (x_i - x_j), expanded; n! terms with coefficients +-1
inline MultiPoly vandermonde(int n) {
    MultiPoly v = MultiPoly::constant(n, Rat(1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            v *= MultiPoly::variable(n, VarKind::X, i) - MultiPoly::variable(n, VarKind::X, j);
    return v;
}

// Delta_mu for |mu| = n: the n x n determinant whose column for cell c
// carries the monomials x_i^{coleg(c)} y_i^{coarm(c)}, cells in row-major
// order from (0,0). The global sign is fixed so that Delta_{1^n} equals
// vandermonde(n) exactly; this makes Delta_{[1,1]} = +(x_1 - x_2).
inline MultiPoly partition_alternant(const Partition& mu) {
    const int n = mu.sum();
    if (n < 1) throw std::invalid_argument("partition_alternant: empty partition");
    const std::vector<CellStats> cells = cell_stats(mu);

    // expand det over permutations: sum_sigma sgn(sigma) prod_i M[i][sigma(i)]
    MultiPoly det(n);
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int sign = 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) sign = -sign;
        Monomial m{std::vector<int>(2 * static_cast<size_t>(n), 0)};
        for (int i = 0; i < n; ++i) {
            const CellStats& c = cells[static_cast<size_t>(perm[static_cast<size_t>(i)])];
            m.e[static_cast<size_t>(i)] = c.coleg;
            m.e[static_cast<size_t>(n + i)] = c.coarm;
        }
        det.add_term(m, Rat(sign));
    } while (std::next_permutation(perm.begin(), perm.end()));

    const int c2 = n * (n - 1) / 2;
    return (c2 % 2 == 0) ? det : -det;
}

namespace detail {

// right-hand sides of the bracket identities; scalar * generator, where a
// zero scalar suppresses the generator entirely
struct ScaledGen {
    long scalar = 0;
    int r = 0;
    int s = 0;
    GenKind kind = GenKind::E;
};

inline MultiPoly apply_scaled(const std::vector<ScaledGen>& rhs, const MultiPoly& p) {
    MultiPoly total(p.n());
    for (const ScaledGen& g : rhs) {
        if (g.scalar == 0) continue;
        if (g.r < 0 || g.s < 0)
            throw std::invalid_argument(
                "commutator_check: identity used outside its valid index range");
        total += apply_gen(OpGen(g.kind, g.r, g.s), p).scaled(Rat(g.scalar));
    }
    return total;
}

} // namespace detail

// Checks the bracket identity for g1, g2 of kinds E/F on the given
// polynomial:
//   [F_{p,q}, F_{r,s}] = (p-r) F_{p+r-1, q+s}
//   [F_{p,q}, E_{r,s}] = q F_{p+r, q+s-1} - r E_{p+r-1, q+s}
//   [E_{p,q}, E_{r,s}] = (q-s) E_{p+r, q+s-1}
inline bool commutator_check(const OpGen& g1, const OpGen& g2, const MultiPoly& poly) {
    if (g1.kind == GenKind::Pi || g2.kind == GenKind::Pi)
        throw std::invalid_argument("commutator_check: generators must be of kind E or F");

    const MultiPoly lhs = apply_gen(g1, apply_gen(g2, poly)) - apply_gen(g2, apply_gen(g1, poly));

    std::vector<detail::ScaledGen> rhs;
    const int p = g1.r, q = g1.s, r = g2.r, s = g2.s;
    if (g1.kind == GenKind::F && g2.kind == GenKind::F) {
        rhs.push_back({p - r, p + r - 1, q + s, GenKind::F});
    } else if (g1.kind == GenKind::F && g2.kind == GenKind::E) {
        rhs.push_back({q, p + r, q + s - 1, GenKind::F});
        rhs.push_back({-r, p + r - 1, q + s, GenKind::E});
    } else if (g1.kind == GenKind::E && g2.kind == GenKind::E) {
        rhs.push_back({q - s, p + r, q + s - 1, GenKind::E});
    } else {
        // [E_{p,q}, F_{r,s}] = -[F_{r,s}, E_{p,q}]
        rhs.push_back({-s, p + r, q + s - 1, GenKind::F});
        rhs.push_back({p, p + r - 1, q + s, GenKind::E});
    }
    return lhs == detail::apply_scaled(rhs, poly);
}

// For harmonic P, checks that g preserves harmonicity, and verifies the
// exchange identities on P for every Pi_{p,q} up to the degree bound:
//   Pi_{p,q} E_{r,s} = E_{r,s} Pi_{p,q} + q Pi_{p+r, q+s-1}
//   Pi_{p,q} F_{r,s} = F_{r,s} Pi_{p,q} + p Pi_{p+r-1, q+s}
inline bool harmonic_preservation_check(const OpGen& g, const MultiPoly& poly) {
    if (g.kind == GenKind::Pi)
        throw std::invalid_argument("harmonic_preservation_check: generator must be E or F");
    if (!is_diagonal_harmonic(poly))
        throw std::invalid_argument("harmonic_preservation_check: input is not diagonal harmonic");

    const MultiPoly image = apply_gen(g, poly);
    if (!is_diagonal_harmonic(image)) return false;

    const int deg = poly.total_degree() + 1;
    for (int total = 1; total <= deg; ++total) {
        for (int p = 0; p <= total; ++p) {
            const int q = total - p;
            const MultiPoly lhs = polarized_power_sum(p, q, image);
            MultiPoly rhs = apply_gen(g, polarized_power_sum(p, q, poly));
            if (g.kind == GenKind::E) {
                if (q >= 1 && p + g.r + q + g.s - 1 >= 1)
                    rhs += polarized_power_sum(p + g.r, q + g.s - 1, poly).scaled(Rat(q));
            } else {
                if (p >= 1 && p + g.r - 1 + q + g.s >= 1)
                    rhs += polarized_power_sum(p + g.r - 1, q + g.s, poly).scaled(Rat(p));
            }
            if (lhs != rhs) return false;
        }
    }
    return true;
}

} // namespace dha
