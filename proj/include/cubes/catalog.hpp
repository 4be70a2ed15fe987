/**
 * @file catalog.hpp
 * @brief The compiled-in identity catalog and the derived-family generators.
 *
 * Family formulas are never transcribed from their printed forms: each member
 * is regenerated from the base identity via derive_scaled/derive_divided, so a
 * generated member verifies by construction. Printed-form discrepancies are
 * recorded in the source notes.
 */
#ifndef CUBES_CATALOG_HPP
#define CUBES_CATALOG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubes/identity.hpp"

namespace cubes {

namespace detail {

inline UniPoly upoly(std::string var, std::initializer_list<std::pair<int, const char*>> terms) {
    std::vector<std::pair<int, Rational>> t;
    for (const auto& [deg, s] : terms) t.emplace_back(deg, parse_rational(s));
    return UniPoly::from_terms(std::move(var), t);
}

}  // namespace detail

inline const CubeIdentity& mahler_identity() {
    static const CubeIdentity id{
        "mahler",
        detail::upoly("t", {{4, "9"}}),
        detail::upoly("t", {{1, "3"}, {4, "-9"}}),
        detail::upoly("t", {{0, "1"}, {3, "-9"}}),
        detail::upoly("t", {{0, "1"}}),
        "Mahler 1936 parametric d=1 family; canonical form of the ambiguous "
        "'(1+-9m^3)' print (variable renamed m->t)",
        CubeIdentity::Status::MustVerify};
    return id;
}

inline const CubeIdentity& werebrusov_identity() {
    static const CubeIdentity id{
        "werebrusov-2",
        detail::upoly("t", {{0, "1"}, {3, "6"}}),
        detail::upoly("t", {{0, "1"}, {3, "-6"}}),
        detail::upoly("t", {{2, "-6"}}),
        detail::upoly("t", {{0, "2"}}),
        "Werebrusov 1908 parametric d=2 family",
        CubeIdentity::Status::MustVerify};
    return id;
}

// ---------------------------------------------------------------------------
// Derived families. Recipes only; the printed forms of the scaled families
// carry typos (the base-scaling of the degree-2 term loses its m factor, and
// two of the divided forms garble their prefactors), so members are generated,
// not transcribed.
// ---------------------------------------------------------------------------

using FamilyParams = std::map<std::string, long>;

inline const std::vector<std::string>& family_ids() {
    static const std::vector<std::string> ids{"two-m9", "two-m9-l", "two-m9-k",
                                              "two-m9-lk", "m12", "m12-k"};
    return ids;
}

inline CubeIdentity family(const std::string& family_id, const FamilyParams& params) {
    auto need = [&](const char* key) -> long {
        auto it = params.find(key);
        if (it == params.end())
            throw std::invalid_argument("family " + family_id + ": missing parameter '" + key + "'");
        if (it->second < 1)
            throw std::invalid_argument("family " + family_id + ": parameter '" + key +
                                        "' must be a positive integer");
        return it->second;
    };
    auto name = [&](std::initializer_list<const char*> keys) {
        std::string s = family_id + "(";
        bool first = true;
        for (const char* k : keys) {
            if (!first) s += ",";
            s += std::string(k) + "=" + std::to_string(params.at(k));
            first = false;
        }
        return s + ")";
    };

    CubeIdentity out;
    if (family_id == "two-m9") {
        long m = need("m");
        out = derive_scaled(werebrusov_identity(), BigInt(m), 3);
        out.name = name({"m"});
        out.source = "2m^9 family: werebrusov-2 scaled by m";
    } else if (family_id == "two-m9-l") {
        long l = need("l"), m = need("m");
        out = derive_divided(derive_scaled(werebrusov_identity(),
                                           pow_bigint(BigInt(2), static_cast<unsigned>(l)) * m, 3),
                             Rational(2));
        out.name = name({"l", "m"});
        out.source = "2^{9l-2}m^9 family: werebrusov-2 scaled by 2^l m, divided by 2";
    } else if (family_id == "two-m9-k") {
        long k = need("k"), m = need("m");
        out = derive_divided(derive_scaled(werebrusov_identity(),
                                           pow_bigint(BigInt(3), static_cast<unsigned>(k)) * m, 3),
                             Rational(3));
        out.name = name({"k", "m"});
        out.source = "2*3^{9k-3}m^9 family: werebrusov-2 scaled by 3^k m, divided by 3";
    } else if (family_id == "two-m9-lk") {
        long l = need("l"), k = need("k"), m = need("m");
        BigInt scale = pow_bigint(BigInt(2), static_cast<unsigned>(l)) *
                       pow_bigint(BigInt(3), static_cast<unsigned>(k)) * m;
        out = derive_divided(derive_scaled(werebrusov_identity(), scale, 3), Rational(6));
        out.name = name({"l", "k", "m"});
        out.source = "2^{9l-2}3^{9k-3}m^9 family: werebrusov-2 scaled by 2^l 3^k m, divided by 6";
    } else if (family_id == "m12") {
        long m = need("m");
        out = derive_scaled(mahler_identity(), BigInt(m), 4);
        out.name = name({"m"});
        out.source = "m^12 family: mahler scaled by m";
    } else if (family_id == "m12-k") {
        long k = need("k"), m = need("m");
        out = derive_divided(derive_scaled(mahler_identity(),
                                           pow_bigint(BigInt(3), static_cast<unsigned>(k)) * m, 4),
                             Rational(9));
        out.name = name({"k", "m"});
        out.source = "3^{12k-6}m^12 family: mahler scaled by 3^k m, divided by 9";
    } else {
        throw std::invalid_argument("unknown family id: " + family_id);
    }
    out.status = CubeIdentity::Status::MustVerify;
    return out;
}

// ---------------------------------------------------------------------------
// Compiled-in catalog.
// ---------------------------------------------------------------------------

inline std::vector<CubeIdentity> catalog() {
    using detail::upoly;
    std::vector<CubeIdentity> out;
    out.push_back(mahler_identity());
    out.push_back(werebrusov_identity());
    out.push_back({"d1-degree10",
                   upoly("t", {{0, "1"}, {3, "-9"}, {6, "648"}, {9, "3888"}}),
                   upoly("t", {{4, "-135"}, {10, "3888"}}),
                   upoly("t", {{1, "3"}, {4, "-81"}, {7, "-1296"}, {10, "-3888"}}),
                   upoly("t", {{0, "1"}}),
                   "degree-10 algebraic d=1 family",
                   CubeIdentity::Status::MustVerify});
    out.push_back({"result-1",
                   upoly("y", {{2, "54"}, {5, "1944"}, {8, "23328"}}),
                   upoly("y", {{2, "-18"}, {5, "-1944"}, {8, "-23328"}}),
                   upoly("y", {{0, "-1"}, {3, "-216"}, {6, "-3888"}}),
                   upoly("y", {{0, "-1"}, {3, "-648"}}),
                   "degrees (8,8,6): output of the (8,8,6) ansatz elimination, case 2",
                   CubeIdentity::Status::MustVerify});
    out.push_back({"result-2",
                   upoly("y", {{0, "3"}, {3, "360"}, {6, "10368"}, {9, "93312"}}),
                   upoly("y", {{0, "1"}, {3, "-216"}, {6, "-10368"}, {9, "-93312"}}),
                   upoly("y", {{1, "-20"}, {4, "-1296"}, {7, "-15552"}}),
                   upoly("y", {{0, "28"}, {3, "1072"}}),
                   "degrees (9,9,7)",
                   CubeIdentity::Status::MustVerify});
    out.push_back({"result-3",
                   upoly("y", {{1, "7/2"}, {4, "2"}, {7, "140/9"}, {13, "112/3"},
                               {19, "128/3"}, {25, "256/9"}}),
                   upoly("y", {{1, "-7/2"}, {4, "2"}, {7, "-140/9"}, {13, "-112/3"},
                               {19, "-128/3"}, {25, "-256/9"}}),
                   upoly("y", {{0, "-2"}, {6, "-40/3"}, {12, "-64/3"}, {18, "-64/3"}}),
                   upoly("y", {{0, "-8"}, {6, "-13"}}),
                   "degrees (25,25,18); the (1/18)y(63 +- 36y^3 + ...) pair",
                   CubeIdentity::Status::MustVerify});
    out.push_back({"result-4",
                   upoly("y", {{0, "1"},
                               {3, "177710598"},
                               {6, "17738799316992"},
                               {9, "7466750649114265387008"},
                               {15, "123267709616967231382892912798859264"},
                               {21, "945048866667847329755658073857921409357870792704"},
                               {27, "2867531822071470533473102364531302968788957393604240929193984"}}),
                   upoly("y", {{0, "1"},
                               {3, "-177710598"},
                               {6, "17738799316992"},
                               {9, "-7466750649114265387008"},
                               {15, "-123267709616967231382892912798859264"},
                               {21, "-945048866667847329755658073857921409357870792704"},
                               {27, "-2867531822071470533473102364531302968788957393604240929193984"}}),
                   upoly("y", {{2, "-574470"},
                               {8, "-19480075335546568704"},
                               {14, "-228135272526186073290904845680640"},
                               {20, "-956527192983651143477386714431094543884484608"}}),
                   upoly("y", {{0, "2"}, {6, "8606991384576"}}),
                   "degrees (27,27,20); constant term of the second polynomial follows the "
                   "expansion listing (its restatement later prints +1, which fails at y=0)",
                   CubeIdentity::Status::MustVerify});
    // A few generated family members so derived entries are first-class
    // catalog citizens.
    out.push_back(family("two-m9", {{"m", 2}}));
    out.push_back(family("two-m9-l", {{"l", 1}, {"m", 1}}));
    out.push_back(family("two-m9-k", {{"k", 1}, {"m", 1}}));
    out.push_back(family("two-m9-lk", {{"l", 1}, {"k", 1}, {"m", 1}}));
    out.push_back(family("m12", {{"m", 2}}));
    out.push_back(family("m12-k", {{"k", 1}, {"m", 1}}));
    return out;
}

/// Parametric (multivariate) entries live in the symbolic layer; the catalog
/// only lists their names so the CLI can report them alongside.
inline const std::vector<std::string>& parametric_entries() {
    static const std::vector<std::string> names{"ryley", "ramanujan-d3", "complete-d3"};
    return names;
}

inline std::optional<CubeIdentity> find_identity(const std::vector<CubeIdentity>& cat,
                                                 const std::string& name) {
    for (const auto& id : cat)
        if (id.name == name) return id;
    return std::nullopt;
}

}  // namespace cubes

#endif
