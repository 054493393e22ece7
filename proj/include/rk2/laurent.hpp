#pragma once

// Truncated series in the lattice monomials x^a y^b with polynomial
// coefficients.  Terms are kept in a map ordered by exponent (a,b), so
// iteration and serialization follow the canonical order.
//
// Two filtrations are supported.  The default drops monomials whose weighted
// coefficient degree exceeds `order`; the lattice filtration drops exponents
// with a + b > order and is used when coefficients have been specialized to
// numbers.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "rk2/poly.hpp"
#include "rk2/series1.hpp"

namespace rk2 {

using Exponent = std::pair<int, int>;

enum class Filtration { Coefficient, Lattice };

template <class C>
class LaurentSeries2 {
public:
    using Terms = std::map<Exponent, Poly<C>>;

    explicit LaurentSeries2(int order = 0, Filtration filt = Filtration::Coefficient) : order_(order), filt_(filt) {}

    static LaurentSeries2 one(int order, Filtration filt = Filtration::Coefficient) {
        LaurentSeries2 s(order, filt);
        s.add_term({0, 0}, Poly<C>(1));
        return s;
    }
    static LaurentSeries2 monomial(Exponent e, const Poly<C> &c, int order,
                                   Filtration filt = Filtration::Coefficient) {
        LaurentSeries2 s(order, filt);
        s.add_term(e, c);
        return s;
    }
    // 1 + sum_k coeffs[k] z^k with z = x^dir.
    static LaurentSeries2 from_wall(const Series1<C> &f, Exponent dir, int order,
                                    Filtration filt = Filtration::Coefficient) {
        LaurentSeries2 s(order, filt);
        for (int j = 0; j <= f.max_power(); ++j) s.add_term({j * dir.first, j * dir.second}, f[j]);
        return s;
    }

    int order() const noexcept { return order_; }
    Filtration filtration() const noexcept { return filt_; }
    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Poly<C> coeff(Exponent e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Poly<C>() : it->second;
    }

    // Adds c x^e, applying the truncation.
    void add_term(Exponent e, const Poly<C> &c) {
        Poly<C> t = truncate_coeff(e, c);
        if (t.is_zero()) return;
        auto [it, fresh] = terms_.emplace(e, t);
        if (!fresh) {
            it->second += t;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LaurentSeries2 &operator+=(const LaurentSeries2 &o) {
        check_compatible(o);
        for (const auto &[e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentSeries2 &operator-=(const LaurentSeries2 &o) {
        check_compatible(o);
        for (const auto &[e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentSeries2 operator+(LaurentSeries2 a, const LaurentSeries2 &b) { return a += b; }
    friend LaurentSeries2 operator-(LaurentSeries2 a, const LaurentSeries2 &b) { return a -= b; }

    friend LaurentSeries2 operator*(const LaurentSeries2 &a, const LaurentSeries2 &b) {
        a.check_compatible(b);
        std::map<Exponent, PolyAccumulator<C>> acc;
        for (const auto &[ea, ca] : a.terms_) {
            for (const auto &[eb, cb] : b.terms_) {
                Exponent e{ea.first + eb.first, ea.second + eb.second};
                if (a.filt_ == Filtration::Lattice && e.first + e.second > a.order_) continue;
                if (a.filt_ == Filtration::Coefficient &&
                    ca.min_total_degree() + cb.min_total_degree() > a.order_)
                    continue;
                acc[e].add_mul(ca, cb);
            }
        }
        LaurentSeries2 r(a.order_, a.filt_);
        for (auto &[e, p] : acc) r.add_term(e, p.take());
        return r;
    }
    LaurentSeries2 &operator*=(const LaurentSeries2 &o) { return *this = *this * o; }

    friend bool operator==(const LaurentSeries2 &a, const LaurentSeries2 &b) {
        return a.order_ == b.order_ && a.filt_ == b.filt_ && a.terms_ == b.terms_;
    }

    LaurentSeries2 scaled(const Poly<C> &c) const {
        LaurentSeries2 r(order_, filt_);
        for (const auto &[e, p] : terms_) r.add_term(e, p * c);
        return r;
    }
    LaurentSeries2 shifted(Exponent by) const {
        LaurentSeries2 r(order_, filt_);
        for (const auto &[e, p] : terms_) r.add_term({e.first + by.first, e.second + by.second}, p);
        return r;
    }

    // Re-truncates at a (usually smaller) order.
    LaurentSeries2 with_order(int order) const {
        LaurentSeries2 r(order, filt_);
        for (const auto &[e, p] : terms_) r.add_term(e, p);
        return r;
    }

    LaurentSeries2 inv() const {
        LaurentSeries2 h = minus_one("inverse");
        LaurentSeries2 r = one(order_, filt_), t = one(order_, filt_);
        LaurentSeries2 neg = LaurentSeries2(order_, filt_) - h;
        while (true) {
            t = t * neg;
            if (t.is_zero()) break;
            r += t;
        }
        return r;
    }

    LaurentSeries2 pow(long n) const {
        if (n < 0) return inv().pow(-n);
        LaurentSeries2 r = one(order_, filt_), base = *this;
        while (n > 0) {
            if (n & 1) r = r * base;
            n >>= 1;
            if (n) base = base * base;
        }
        return r;
    }

    // log(1 + h) = sum_{k>=1} (-1)^{k+1} h^k / k; rational coefficients only.
    LaurentSeries2 log() const {
        LaurentSeries2 h = minus_one("logarithm");
        LaurentSeries2 r(order_, filt_), t = one(order_, filt_);
        for (long k = 1;; ++k) {
            t = t * h;
            if (t.is_zero()) break;
            C w(k % 2 == 1 ? 1 : -1);
            w /= C(k);
            r += t.scaled(Poly<C>(w));
        }
        return r;
    }

    // exp(h) for h without constant term; rational coefficients only.
    LaurentSeries2 exp() const {
        if (!coeff({0, 0}).is_zero()) throw std::domain_error("exp needs a zero constant term");
        require_positive(*this, "exponential");
        LaurentSeries2 r = one(order_, filt_), t = one(order_, filt_);
        for (long k = 1;; ++k) {
            t = t * *this;
            if (t.is_zero()) break;
            t = t.scaled(Poly<C>(C(1) / C(k)));
            r += t;
        }
        return r;
    }

    // True when the coefficient at (a,b) has bidegree exactly (a,b).
    bool is_diagram_homogeneous() const {
        for (const auto &[e, p] : terms_)
            if (!p.is_homogeneous(e.first, e.second)) return false;
        return true;
    }

    template <class F>
    LaurentSeries2 map_coeffs(F &&f) const {
        LaurentSeries2 r(order_, filt_);
        for (const auto &[e, p] : terms_) r.add_term(e, f(p));
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto &[e, p] : terms_) {
            if (!s.empty()) s += " + ";
            s += "(" + p.str() + ")*x^" + std::to_string(e.first) + "*y^" + std::to_string(e.second);
        }
        return s;
    }

private:
    Poly<C> truncate_coeff(Exponent e, const Poly<C> &c) const {
        if (filt_ == Filtration::Lattice) return e.first + e.second > order_ ? Poly<C>() : c;
        return c.max_total_degree() > order_ ? c.truncated(order_) : c;
    }
    void check_compatible(const LaurentSeries2 &o) const {
        if (order_ != o.order_ || filt_ != o.filt_) throw std::invalid_argument("truncation order mismatch");
    }
    static void require_positive(const LaurentSeries2 &h, const char *what) {
        for (const auto &[e, p] : h.terms_) {
            bool ok = h.filt_ == Filtration::Lattice ? (e.first + e.second >= 1) : (p.min_total_degree() >= 1);
            if (!ok) throw std::domain_error(std::string(what) + " needs every non-constant term in the maximal ideal");
        }
    }
    LaurentSeries2 minus_one(const char *what) const {
        if (!coeff({0, 0}).is_one()) throw std::domain_error(std::string(what) + " needs constant term 1");
        LaurentSeries2 h = *this - one(order_, filt_);
        require_positive(h, what);
        return h;
    }

    int order_;
    Filtration filt_;
    Terms terms_;
};

using Series2 = LaurentSeries2<Int>;

}  // namespace rk2
