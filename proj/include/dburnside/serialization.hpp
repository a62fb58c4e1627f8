#pragma once

/**
 * @file serialization.hpp
 * @brief JSON encodings of ring elements, solver results, fingerprints, and
 *        unit-group reports.
 *
 * RingElement schema (stable):
 *   {"p": <int>, "n": <int>, "terms": [{"q": [i,j,k,l,u], "c": <coeff>}, ...]}
 * with terms in canonical basis order. Coefficients are JSON integers when
 * they fit in 64 bits and decimal strings otherwise.
 */

#include <json.hpp>

#include "solver.hpp"

namespace dburnside {

using nlohmann::json;

inline json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("coefficient must be an integer or a string");
}

inline json to_json(const RingElement& a) {
    json terms = json::array();
    for (const auto& [q, c] : a.coeffs)
        terms.push_back({{"q", {q.i, q.j, q.k, q.l, q.u}},
                         {"c", int_to_json(c)}});
    return {{"p", a.group.p}, {"n", a.group.n}, {"terms", terms}};
}

inline RingElement ring_element_from_json(const json& j) {
    const CyclicPGroup g(j.at("p").get<std::int64_t>(), j.at("n").get<int>());
    RingElement out(g);
    for (const auto& term : j.at("terms")) {
        const auto& q = term.at("q");
        if (!q.is_array() || q.size() != 5)
            throw std::invalid_argument("term q must be a 5-integer array");
        const Quintuple quint =
            make_quintuple(g, q.at(0).get<int>(), q.at(1).get<int>(),
                           q.at(2).get<int>(), q.at(3).get<int>(),
                           q.at(4).get<std::int64_t>());
        add_term(out, quint, int_from_json(term.at("c")));
    }
    return out;
}

inline json to_json(const GroupFingerprint& fp) {
    json stats = json::object();
    for (const auto& [o, c] : fp.order_statistics)
        stats[std::to_string(o)] = c;
    return {{"order", fp.order},
            {"abelian", fp.is_abelian},
            {"order_stats", stats},
            {"invariants", fp.abelian_invariants},
            {"center", fp.center_order}};
}

inline json to_json(const KernelSearchResult& r) {
    json kernel = json::array();
    for (const auto& a : r.solutions) kernel.push_back(to_json(a));
    const bool verified = r.complete && !(r.group.p == 2 && r.group.n > 1);
    return {{"group", {{"p", r.group.p}, {"n", r.group.n}}},
            {"kernel", kernel},
            {"bound_used", r.bound_used},
            {"mode", to_string(r.mode)},
            {"verified", verified},
            {"complete", r.complete},
            {"budget_exceeded", r.budget_exceeded},
            {"support_in_lifted_basis", r.support_in_lifted_basis},
            {"notes", r.notes}};
}

inline json to_json(const UnitGroupReport& r) {
    json elements = json::array();
    for (const auto& u : r.elements) elements.push_back(to_json(u));
    json out = {{"group", {{"p", r.group.p}, {"n", r.group.n}}},
                {"solver", to_json(r.kernel)},
                {"order", r.elements.size()},
                {"elements", elements},
                {"claimed", r.claimed ? json(r.claimed->to_string()) : json()},
                {"match", r.match ? json(*r.match) : json()},
                {"verified", r.verified},
                {"direct_product_verified", r.direct_product_verified},
                {"notes", r.notes}};
    out["fingerprint"] = r.fingerprint ? to_json(*r.fingerprint) : json();
    return out;
}

/// Human-readable rendering, e.g. "Id - 2*(2,1;2,1)_1" style sums.
inline std::string format_element(const RingElement& a) {
    if (a.coeffs.empty()) return "0";
    std::string out;
    for (const auto& [q, c] : a.coeffs) {
        const bool neg = c < 0;
        const Int mag = neg ? Int(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (mag != 1) out += mag.str() + "*";
        out += to_string(q);
    }
    return out;
}

}  // namespace dburnside
