/**
 * @file unipoly.hpp
 * @brief Sparse univariate polynomials over exact rationals.
 *
 * Coefficients are keyed by degree in an ordered map, so iteration is always
 * ascending-degree and printed forms are byte-stable. Explicit zeros are never
 * stored; the zero polynomial has no degree. Values are immutable in practice:
 * every operation returns a fresh polynomial.
 */
#ifndef CUBES_UNIPOLY_HPP
#define CUBES_UNIPOLY_HPP

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cubes/rational.hpp"

namespace cubes {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::string var) : var_(std::move(var)) {}

    static UniPoly constant(const Rational& c) {
        UniPoly p;
        if (c != 0) p.coeffs_[0] = c;
        return p;
    }

    static UniPoly monomial(std::string var, int degree, const Rational& c) {
        if (degree < 0) throw std::invalid_argument("negative degree");
        UniPoly p(std::move(var));
        if (c != 0) p.coeffs_[degree] = c;
        return p;
    }

    /// Builds from (degree, coefficient) pairs; zero coefficients are dropped.
    static UniPoly from_terms(std::string var, const std::vector<std::pair<int, Rational>>& terms) {
        UniPoly p(std::move(var));
        for (const auto& [deg, c] : terms) {
            if (deg < 0) throw std::invalid_argument("negative degree");
            if (c != 0) p.coeffs_[deg] += c;
        }
        p.prune();
        return p;
    }

    const std::string& variable() const { return var_; }
    const std::map<int, Rational>& terms() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0); }

    /// Degree of the zero polynomial is "none".
    std::optional<int> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.rbegin()->first;
    }

    Rational coeff(int degree) const {
        auto it = coeffs_.find(degree);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    Rational leading_coeff() const {
        if (coeffs_.empty()) return Rational(0);
        return coeffs_.rbegin()->second;
    }

    UniPoly operator-() const {
        UniPoly r(*this);
        for (auto& [deg, c] : r.coeffs_) c = -c;
        return r;
    }

    UniPoly operator+(const UniPoly& o) const {
        UniPoly r(*this);
        r.var_ = joined_var(o);
        for (const auto& [deg, c] : o.coeffs_) {
            r.coeffs_[deg] += c;
        }
        r.prune();
        return r;
    }

    UniPoly operator-(const UniPoly& o) const { return *this + (-o); }

    UniPoly operator*(const UniPoly& o) const {
        UniPoly r(joined_var(o));
        for (const auto& [d1, c1] : coeffs_)
            for (const auto& [d2, c2] : o.coeffs_)
                r.coeffs_[d1 + d2] += c1 * c2;
        r.prune();
        return r;
    }

    UniPoly operator*(const Rational& s) const {
        UniPoly r(var_);
        if (s == 0) return r;
        r.coeffs_ = coeffs_;
        for (auto& [deg, c] : r.coeffs_) c *= s;
        return r;
    }

    UniPoly operator/(const Rational& s) const {
        if (s == 0) throw std::invalid_argument("division by zero scalar");
        return *this * (Rational(1) / s);
    }

    UniPoly pow(unsigned e) const {
        UniPoly acc = UniPoly::constant(1);
        acc.var_ = var_;
        UniPoly base = *this;
        while (e) {
            if (e & 1u) acc = acc * base;
            base = base * base;
            e >>= 1u;
        }
        return acc;
    }

    bool operator==(const UniPoly& o) const {
        if (coeffs_ != o.coeffs_) return false;
        // Constants compare equal across variable names.
        if (is_constant() || o.is_constant()) return true;
        return var_ == o.var_;
    }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    /// Exact evaluation, sparse Horner over descending degrees.
    Rational eval(const Rational& point) const {
        if (coeffs_.empty()) return Rational(0);
        auto it = coeffs_.rbegin();
        Rational acc = it->second;
        int prev = it->first;
        for (++it; it != coeffs_.rend(); ++it) {
            acc *= pow_rational(point, static_cast<unsigned>(prev - it->first));
            acc += it->second;
            prev = it->first;
        }
        if (prev > 0) acc *= pow_rational(point, static_cast<unsigned>(prev));
        return acc;
    }

    /// p(s*var): coefficient of degree k picks up s^k. s must be nonzero.
    UniPoly compose_scale(const Rational& s) const {
        if (s == 0) throw std::invalid_argument("compose_scale: scale must be nonzero");
        UniPoly r(var_);
        for (const auto& [deg, c] : coeffs_)
            r.coeffs_[deg] = c * pow_rational(s, static_cast<unsigned>(deg));
        return r;
    }

    /// Positive content c and primitive integer part q with p = c*q.
    std::pair<Rational, UniPoly> content_and_primitive() const {
        if (coeffs_.empty())
            throw std::invalid_argument("content of the zero polynomial is undefined");
        BigInt g = 0, l = 1;
        for (const auto& [deg, c] : coeffs_) {
            g = big_gcd(g, big_abs(num(c)));
            l = big_lcm(l, den(c));
        }
        Rational content(g, l);
        return {content, *this / content};
    }

    /// "54y^2 + 1944y^5 + 23328y^8", ascending degree; "0" for the zero polynomial.
    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [deg, c] : coeffs_) {
            Rational ac = rat_abs(c);
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            bool unit = (ac == 1) && deg > 0;
            if (!unit) os << to_string(ac);
            if (deg > 0) {
                os << var_;
                if (deg > 1) os << "^" << deg;
            }
        }
        return os.str();
    }

private:
    void prune() {
        for (auto it = coeffs_.begin(); it != coeffs_.end();)
            it = (it->second == 0) ? coeffs_.erase(it) : std::next(it);
    }

    std::string joined_var(const UniPoly& o) const {
        if (is_constant()) return o.is_constant() ? var_ : o.var_;
        if (o.is_constant()) return var_;
        if (var_ != o.var_)
            throw std::invalid_argument("variable mismatch: '" + var_ + "' vs '" + o.var_ + "'");
        return var_;
    }

    std::map<int, Rational> coeffs_;
    std::string var_ = "y";
};

inline UniPoly operator*(const Rational& s, const UniPoly& p) { return p * s; }

}  // namespace cubes

#endif
