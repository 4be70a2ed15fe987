/**
 * @file identity.hpp
 * @brief Cube identities p1^3 + p2^3 + p3^3 = q, exact verification, and the
 *        scaling/division transforms that generate derived families.
 *
 * Identities published in subtraction form are stored with p2/p3 negated, so
 * the claim is always a plain sum of three cubes.
 */
#ifndef CUBES_IDENTITY_HPP
#define CUBES_IDENTITY_HPP

#include <stdexcept>
#include <string>

#include "cubes/unipoly.hpp"

namespace cubes {

struct CubeIdentity {
    std::string name;
    UniPoly p1, p2, p3, q;
    std::string source;
    enum class Status { MustVerify, AsPrinted } status = Status::MustVerify;
};

inline const char* status_str(CubeIdentity::Status s) {
    return s == CubeIdentity::Status::MustVerify ? "must-verify" : "as-printed";
}

struct VerificationReport {
    bool verified = false;
    UniPoly residual;  // p1^3 + p2^3 + p3^3 - q
};

inline UniPoly residual_of(const CubeIdentity& id) {
    return id.p1.pow(3) + id.p2.pow(3) + id.p3.pow(3) - id.q;
}

inline VerificationReport verify_identity(const CubeIdentity& id) {
    UniPoly r = residual_of(id);
    return {r.is_zero(), r};
}

/// p_i -> m^w * p_i(t/m), q -> m^{3w} * q(t/m). Requires w >= max deg(p_i) so
/// integer coefficients stay integral.
inline CubeIdentity derive_scaled(const CubeIdentity& id, const BigInt& m, unsigned w) {
    if (m <= 0) throw std::invalid_argument("derive_scaled: m must be positive");
    int maxdeg = 0;
    for (const UniPoly* p : {&id.p1, &id.p2, &id.p3})
        if (auto d = p->degree()) maxdeg = std::max(maxdeg, *d);
    if (static_cast<int>(w) < maxdeg)
        throw std::invalid_argument(
            "derive_scaled: w=" + std::to_string(w) + " is below the maximum degree " +
            std::to_string(maxdeg) + "; m^w*p(t/m) would leave fractional coefficients");
    Rational inv_m = Rational(1) / Rational(m);
    Rational mw = pow_rational(Rational(m), w);
    CubeIdentity out;
    out.name = id.name + "*m" + m.str() + "w" + std::to_string(w);
    out.p1 = id.p1.compose_scale(inv_m) * mw;
    out.p2 = id.p2.compose_scale(inv_m) * mw;
    out.p3 = id.p3.compose_scale(inv_m) * mw;
    out.q = id.q.compose_scale(inv_m) * pow_rational(Rational(m), 3 * w);
    out.source = "derived: scale m=" + m.str() + " w=" + std::to_string(w) + " of " + id.name;
    out.status = id.status;
    return out;
}

/// p_i -> p_i/g, q -> q/g^3.
inline CubeIdentity derive_divided(const CubeIdentity& id, const Rational& g) {
    if (g == 0) throw std::invalid_argument("derive_divided: divisor must be nonzero");
    CubeIdentity out;
    out.name = id.name + "/" + to_string(g);
    out.p1 = id.p1 / g;
    out.p2 = id.p2 / g;
    out.p3 = id.p3 / g;
    out.q = id.q / pow_rational(g, 3);
    out.source = "derived: divide by " + to_string(g) + " of " + id.name;
    out.status = id.status;
    return out;
}

}  // namespace cubes

#endif
