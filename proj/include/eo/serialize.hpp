#pragma once

// Canonical JSON form for series. All numbers are serialized as strings so
// that exact values survive the round trip; entries are emitted in a fixed
// order ((j, n) lexicographic, x-exponents ascending) so identical series
// produce identical bytes.

#include <json.hpp>

#include "totalseries.hpp"
#include "uniseries.hpp"

namespace eo {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const USeries& s) {
    ordered_json j;
    j["order"] = s.order();
    ordered_json coeffs = ordered_json::array();
    for (long k = 0; k <= s.order(); ++k) coeffs.push_back(s.coeff(k).to_string());
    j["coeffs"] = coeffs;
    return j;
}

inline USeries useries_from_json(const json& j) {
    long order = j.at("order").get<long>();
    USeries s(order);
    const auto& coeffs = j.at("coeffs");
    if (long(coeffs.size()) != order + 1) throw std::invalid_argument("useries_from_json: bad coeff count");
    for (long k = 0; k <= order; ++k) s.set_coeff(k, Rational(coeffs.at(size_t(k)).get<std::string>()));
    return s;
}

inline ordered_json to_json(const TotalSeries& s) {
    ordered_json j;
    j["order"] = s.order();
    ordered_json entries = ordered_json::array();
    for (long a = 0; a <= s.order(); ++a)
        for (long n = 0; a + n <= s.order(); ++n) {
            const XLaurent& c = s.cell(a, n);
            if (c.is_zero()) continue;
            ordered_json e;
            e["j"] = a;
            e["n"] = n;
            ordered_json terms = ordered_json::array();
            for (long k = c.lo(); k <= c.hi(); ++k) {
                if (c.coeff(k).is_zero()) continue;
                terms.push_back(ordered_json::array({k, c.coeff(k).to_string()}));
            }
            e["x"] = terms;
            entries.push_back(e);
        }
    j["entries"] = entries;
    return j;
}

inline TotalSeries totalseries_from_json(const json& j) {
    TotalSeries s(j.at("order").get<long>());
    for (const auto& e : j.at("entries")) {
        long a = e.at("j").get<long>(), n = e.at("n").get<long>();
        XLaurent c;
        for (const auto& term : e.at("x"))
            c.add_term(term.at(0).get<long>(), Rational(term.at(1).get<std::string>()));
        s.cell(a, n) = c;
    }
    return s;
}

} // namespace eo
