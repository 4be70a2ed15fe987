/**
 * @file mvpoly.hpp
 * @brief Sparse multivariate polynomials and rational functions over exact
 *        rationals, for the ansatz eliminations and the parametric identities.
 *
 * The symbol universe is fixed: {a, b, c, b1, c1, A, B, C, x, n, m, k, d, q, y}
 * in that global order. Terms are kept in a map under graded-lex order, so
 * iteration and printing are deterministic.
 *
 * MvRatFunc normalization cancels shared monomial content and the rational
 * content of the denominator, then fixes the sign of the denominator's leading
 * coefficient. Full polynomial GCDs are never computed; equality testing
 * cross-multiplies.
 */
#ifndef CUBES_MVPOLY_HPP
#define CUBES_MVPOLY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cubes/rational.hpp"

namespace cubes {

inline constexpr std::size_t kNumSymbols = 15;
inline constexpr std::array<std::string_view, kNumSymbols> kSymbolNames = {
    "a", "b", "c", "b1", "c1", "A", "B", "C", "x", "n", "m", "k", "d", "q", "y"};

using SymId = std::uint8_t;

inline SymId symbol_id(std::string_view name) {
    for (std::size_t i = 0; i < kNumSymbols; ++i)
        if (kSymbolNames[i] == name) return static_cast<SymId>(i);
    throw std::invalid_argument("unknown symbol: " + std::string(name));
}

/// Exponent vector over the fixed symbol universe.
struct Monomial {
    std::array<std::uint16_t, kNumSymbols> e{};

    unsigned total_degree() const {
        unsigned t = 0;
        for (auto v : e) t += v;
        return t;
    }
    bool operator==(const Monomial&) const = default;
};

/// Graded-lex: first by total degree, then lexicographically in symbol order.
struct GrlexLess {
    bool operator()(const Monomial& lhs, const Monomial& rhs) const {
        unsigned lt = lhs.total_degree(), rt = rhs.total_degree();
        if (lt != rt) return lt < rt;
        for (std::size_t i = 0; i < kNumSymbols; ++i)
            if (lhs.e[i] != rhs.e[i]) return lhs.e[i] < rhs.e[i];
        return false;
    }
};

class MvPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexLess>;

    MvPoly() = default;

    static MvPoly constant(const Rational& c) {
        MvPoly p;
        if (c != 0) p.terms_[Monomial{}] = c;
        return p;
    }

    static MvPoly sym(std::string_view name, unsigned exp = 1) {
        MvPoly p;
        if (exp == 0) return constant(1);
        Monomial mo;
        mo.e[symbol_id(name)] = static_cast<std::uint16_t>(exp);
        p.terms_[mo] = 1;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{}); }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    unsigned degree_in(SymId s) const {
        unsigned d = 0;
        for (const auto& [mo, c] : terms_) d = std::max<unsigned>(d, mo.e[s]);
        return d;
    }

    bool contains(SymId s) const { return degree_in(s) > 0; }

    MvPoly operator-() const {
        MvPoly r(*this);
        for (auto& [mo, c] : r.terms_) c = -c;
        return r;
    }

    MvPoly operator+(const MvPoly& o) const {
        MvPoly r(*this);
        for (const auto& [mo, c] : o.terms_) {
            auto it = r.terms_.find(mo);
            if (it == r.terms_.end()) {
                r.terms_.emplace(mo, c);
            } else {
                it->second += c;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
        return r;
    }

    MvPoly operator-(const MvPoly& o) const { return *this + (-o); }

    MvPoly operator*(const MvPoly& o) const {
        MvPoly r;
        for (const auto& [m1, c1] : terms_) {
            for (const auto& [m2, c2] : o.terms_) {
                Monomial mo;
                for (std::size_t i = 0; i < kNumSymbols; ++i)
                    mo.e[i] = static_cast<std::uint16_t>(m1.e[i] + m2.e[i]);
                auto it = r.terms_.find(mo);
                if (it == r.terms_.end()) {
                    r.terms_.emplace(mo, c1 * c2);
                } else {
                    it->second += c1 * c2;
                    if (it->second == 0) r.terms_.erase(it);
                }
            }
        }
        return r;
    }

    MvPoly operator*(const Rational& s) const {
        if (s == 0) return MvPoly{};
        MvPoly r(*this);
        for (auto& [mo, c] : r.terms_) c *= s;
        return r;
    }

    MvPoly pow(unsigned e) const {
        MvPoly acc = constant(1), base = *this;
        while (e) {
            if (e & 1u) acc = acc * base;
            base = base * base;
            e >>= 1u;
        }
        return acc;
    }

    bool operator==(const MvPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MvPoly& o) const { return !(*this == o); }

    /// Coefficient of sym^k: terms with exponent k in sym, with sym^k divided out.
    MvPoly coefficient_of(SymId s, unsigned k) const {
        MvPoly r;
        for (const auto& [mo, c] : terms_) {
            if (mo.e[s] == k) {
                Monomial red = mo;
                red.e[s] = 0;
                r.terms_[red] = c;
            }
        }
        return r;
    }

    /// Full exact evaluation at a rational point per symbol.
    Rational eval(const std::array<Rational, kNumSymbols>& point) const {
        Rational acc(0);
        for (const auto& [mo, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < kNumSymbols; ++i)
                if (mo.e[i]) t *= pow_rational(point[i], mo.e[i]);
            acc += t;
        }
        return acc;
    }

    /// Per-symbol minimum exponent across all terms (monomial content).
    Monomial monomial_content() const {
        Monomial mo;
        if (terms_.empty()) return mo;
        for (std::size_t i = 0; i < kNumSymbols; ++i) mo.e[i] = UINT16_MAX;
        for (const auto& [t, c] : terms_)
            for (std::size_t i = 0; i < kNumSymbols; ++i) mo.e[i] = std::min(mo.e[i], t.e[i]);
        return mo;
    }

    MvPoly divide_monomial(const Monomial& g) const {
        MvPoly r;
        for (const auto& [mo, c] : terms_) {
            Monomial red;
            for (std::size_t i = 0; i < kNumSymbols; ++i) {
                if (mo.e[i] < g.e[i]) throw std::invalid_argument("monomial does not divide term");
                red.e[i] = static_cast<std::uint16_t>(mo.e[i] - g.e[i]);
            }
            r.terms_[red] = c;
        }
        return r;
    }

    /// Positive gcd of all coefficients (0 for the zero polynomial).
    Rational rational_content() const {
        BigInt g = 0, l = 1;
        for (const auto& [mo, c] : terms_) {
            g = big_gcd(g, big_abs(num(c)));
            l = big_lcm(l, den(c));
        }
        return terms_.empty() ? Rational(0) : Rational(g, l);
    }

    Rational leading_coeff() const {
        if (terms_.empty()) return Rational(0);
        return terms_.rbegin()->second;  // grlex-largest term
    }

    /// Renders leading term first (descending graded-lex), e.g. "3a^2b - 3a^2b1".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [mo, c] = *it;
            Rational ac = rat_abs(c);
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            bool is_const_term = mo == Monomial{};
            if (ac != 1 || is_const_term) os << to_string(ac);
            for (std::size_t i = 0; i < kNumSymbols; ++i) {
                if (mo.e[i]) {
                    os << kSymbolNames[i];
                    if (mo.e[i] > 1) os << "^" << mo.e[i];
                }
            }
        }
        return os.str();
    }

private:
    TermMap terms_;
};

inline MvPoly operator*(const Rational& s, const MvPoly& p) { return p * s; }

// ---------------------------------------------------------------------------

class MvRatFunc {
public:
    MvRatFunc() : num_(MvPoly::constant(0)), den_(MvPoly::constant(1)) {}
    MvRatFunc(MvPoly n) : num_(std::move(n)), den_(MvPoly::constant(1)) {}
    MvRatFunc(MvPoly n, MvPoly d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        normalize();
    }

    static MvRatFunc constant(const Rational& c) { return MvRatFunc(MvPoly::constant(c)); }
    static MvRatFunc sym(std::string_view name, unsigned exp = 1) { return MvRatFunc(MvPoly::sym(name, exp)); }

    const MvPoly& numerator() const { return num_; }
    const MvPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == MvPoly::constant(1); }

    MvRatFunc operator-() const { return MvRatFunc(-num_, den_); }

    MvRatFunc operator+(const MvRatFunc& o) const {
        return MvRatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    MvRatFunc operator-(const MvRatFunc& o) const { return *this + (-o); }
    MvRatFunc operator*(const MvRatFunc& o) const {
        return MvRatFunc(num_ * o.num_, den_ * o.den_);
    }
    MvRatFunc operator/(const MvRatFunc& o) const {
        if (o.num_.is_zero()) throw std::domain_error("division by zero rational function");
        return MvRatFunc(num_ * o.den_, den_ * o.num_);
    }

    MvRatFunc pow(unsigned e) const {
        MvRatFunc acc = constant(1), base = *this;
        while (e) {
            if (e & 1u) acc = acc * base;
            base = base * base;
            e >>= 1u;
        }
        return acc;
    }

    /// Equality via cross-multiplied numerators.
    bool operator==(const MvRatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const MvRatFunc& o) const { return !(*this == o); }

    Rational eval(const std::array<Rational, kNumSymbols>& point) const {
        Rational dv = den_.eval(point);
        if (dv == 0) throw std::domain_error("evaluation hits a denominator zero");
        return num_.eval(point) / dv;
    }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        std::string ns = num_.terms().size() > 1 ? "(" + num_.str() + ")" : num_.str();
        std::string ds = den_.terms().size() > 1 ? "(" + den_.str() + ")" : den_.str();
        return ns + "/" + ds;
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = MvPoly::constant(1);
            return;
        }
        Monomial gn = num_.monomial_content(), gd = den_.monomial_content();
        Monomial g;
        for (std::size_t i = 0; i < kNumSymbols; ++i) g.e[i] = std::min(gn.e[i], gd.e[i]);
        if (g.total_degree() > 0) {
            num_ = num_.divide_monomial(g);
            den_ = den_.divide_monomial(g);
        }
        Rational dc = den_.rational_content();
        if (den_.leading_coeff() < 0) dc = -dc;
        num_ = num_ * (Rational(1) / dc);
        den_ = den_ * (Rational(1) / dc);
    }

    MvPoly num_, den_;
};

// ---------------------------------------------------------------------------
// Substitution and linear solving.
// ---------------------------------------------------------------------------

using Bindings = std::map<SymId, MvRatFunc>;

/// Simultaneous substitution of rational functions for symbols.
inline MvRatFunc substitute(const MvPoly& e, const Bindings& bindings) {
    for (const auto& [s, r] : bindings)
        if (r.denominator().is_zero()) throw std::domain_error("binding with zero denominator");
    MvRatFunc acc = MvRatFunc::constant(0);
    for (const auto& [mo, c] : e.terms()) {
        MvRatFunc term = MvRatFunc::constant(c);
        for (std::size_t i = 0; i < kNumSymbols; ++i) {
            if (!mo.e[i]) continue;
            auto it = bindings.find(static_cast<SymId>(i));
            MvRatFunc base = (it == bindings.end())
                                 ? MvRatFunc::sym(kSymbolNames[i])
                                 : it->second;
            term = term * base.pow(mo.e[i]);
        }
        acc = acc + term;
    }
    return acc;
}

inline MvRatFunc substitute(const MvRatFunc& e, const Bindings& bindings) {
    MvRatFunc dsub = substitute(e.denominator(), bindings);
    if (dsub.is_zero())
        throw std::domain_error("substitution makes a denominator identically zero");
    return substitute(e.numerator(), bindings) / dsub;
}

/// Solves coeff == 0 for the given symbol; coeff must be degree exactly 1 in it
/// and the symbol must not appear in the denominator.
inline MvRatFunc solve_linear(const MvRatFunc& coeff, SymId s) {
    if (coeff.denominator().contains(s))
        throw std::invalid_argument("solve_linear: symbol occurs in the denominator");
    const MvPoly& n = coeff.numerator();
    if (n.degree_in(s) != 1)
        throw std::invalid_argument(std::string("solve_linear: symbol ") +
                                    std::string(kSymbolNames[s]) +
                                    " is not linear in the coefficient");
    MvPoly u = n.coefficient_of(s, 1);  // n = u*s + v
    MvPoly v = n.coefficient_of(s, 0);
    return MvRatFunc(-v, u);
}

inline MvRatFunc solve_linear(const MvRatFunc& coeff, std::string_view symbol) {
    return solve_linear(coeff, symbol_id(symbol));
}

/// x^k coefficient of a rational function whose denominator is x-free.
inline MvRatFunc coefficient_of(const MvRatFunc& e, SymId s, unsigned k) {
    if (e.denominator().contains(s))
        throw std::invalid_argument("coefficient_of: denominator depends on the symbol");
    return MvRatFunc(e.numerator().coefficient_of(s, k), e.denominator());
}

}  // namespace cubes

#endif
