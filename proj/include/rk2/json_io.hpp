#pragma once

// Canonical JSON for polynomials and series.
//
//   series: [{"exp":[a,b],"coeff":[{"q1":[...],"q2":[...],"n":"<decimal>"}, ...]}, ...]
//
// Keys keep insertion order and terms are emitted in canonical order, so
// identical values always serialize to identical bytes.

#include <string>

#include "json.hpp"
#include "rk2/laurent.hpp"
#include "rk2/poly.hpp"
#include "rk2/series1.hpp"

namespace rk2 {

using Json = nlohmann::ordered_json;

template <class C>
Json poly_to_json(const Poly<C> &p, int l1, int l2) {
    Json arr = Json::array();
    for (const auto &[m, c] : p.terms()) {
        Json t;
        t["q1"] = m.exps(1, l1);
        t["q2"] = m.exps(2, l2);
        t["n"] = coeff::str(c);
        arr.push_back(std::move(t));
    }
    return arr;
}

template <class C>
Poly<C> poly_from_json(const Json &arr) {
    std::vector<typename Poly<C>::Term> terms;
    for (const auto &t : arr) {
        Mono m = Mono::from_vectors(t.at("q1").get<std::vector<int>>(), t.at("q2").get<std::vector<int>>());
        std::string n = t.at("n").get<std::string>();
        if constexpr (std::is_same_v<C, Int>) {
            terms.emplace_back(m, Int(n));
        } else {
            terms.emplace_back(m, C(n));
        }
    }
    return Poly<C>::from_terms(std::move(terms));
}

template <class C>
Json series_to_json(const LaurentSeries2<C> &s, int l1, int l2) {
    Json arr = Json::array();
    for (const auto &[e, p] : s.terms()) {
        Json t;
        t["exp"] = {e.first, e.second};
        t["coeff"] = poly_to_json(p, l1, l2);
        arr.push_back(std::move(t));
    }
    return arr;
}

template <class C>
LaurentSeries2<C> series_from_json(const Json &arr, int order, Filtration filt = Filtration::Coefficient) {
    LaurentSeries2<C> s(order, filt);
    for (const auto &t : arr) {
        auto e = t.at("exp").get<std::vector<int>>();
        s.add_term({e.at(0), e.at(1)}, poly_from_json<C>(t.at("coeff")));
    }
    return s;
}

// A wall function f(z), z = x^a y^b, written as the series 1 + sum c_k x^{ka} y^{kb}.
template <class C>
Json wall_to_json(const Series1<C> &f, Exponent dir, int l1, int l2) {
    Json arr = Json::array();
    for (int k = 0; k <= f.max_power(); ++k) {
        if (f[k].is_zero()) continue;
        Json t;
        t["exp"] = {k * dir.first, k * dir.second};
        t["coeff"] = poly_to_json(f[k], l1, l2);
        arr.push_back(std::move(t));
    }
    return arr;
}

}  // namespace rk2
