#pragma once

// Sparse polynomials in the coefficient variables p_{i,k}.
//
// Poly<C> keeps its terms sorted by monomial with no stored zeros, so two
// equal polynomials are equal term for term.  C is Int (the default ring) or
// Rat (rational mode, used for logarithms and Gromov-Witten numbers).

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rk2/integer.hpp"
#include "rk2/monomial.hpp"

namespace rk2 {

using Rat = mpq_class;

namespace coeff {

inline bool is_zero(const Int &x) { return x.is_zero(); }
inline bool is_zero(const Rat &x) { return sgn(x) == 0; }
inline int sign(const Int &x) { return x.sign(); }
inline int sign(const Rat &x) { return sgn(x); }
inline void add_mul(Int &acc, const Int &a, const Int &b) { acc.add_mul(a, b); }
inline void add_mul(Rat &acc, const Rat &a, const Rat &b) { acc += a * b; }
inline std::string str(const Int &x) { return x.str(); }
inline std::string str(const Rat &x) { return x.get_str(); }
inline Rat to_rat(const Int &x) { return Rat(x.to_mpz()); }
inline Rat to_rat(const Rat &x) { return x; }
inline Int pow(const Int &x, int n) {
    Int r(1);
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}
inline Rat pow(const Rat &x, int n) {
    Rat r(1);
    if (n >= 0) {
        for (int i = 0; i < n; ++i) r *= x;
    } else {
        for (int i = 0; i < -n; ++i) r /= x;
    }
    return r;
}
// Exact quotient a / b; Int throws when b does not divide a.
inline Int divexact(const Int &a, const Int &b) { return a.divexact(b); }
inline Rat divexact(const Rat &a, const Rat &b) { return a / b; }

}  // namespace coeff

// Substitution of constants for coefficient variables.  Slots without a
// value stay symbolic.
template <class C>
struct Specialization {
    std::array<std::optional<C>, 2 * kMaxL> value;

    void set(int side, int k, C v) { value[static_cast<std::size_t>((side - 1) * kMaxL + k - 1)] = std::move(v); }

    // p_{i,k} = 0 for k < l_i and p_{i,l_i} = 1.
    static Specialization binomial(int l1, int l2) {
        Specialization s;
        for (int k = 1; k <= kMaxL; ++k) {
            s.set(1, k, C(k == l1 ? 1 : 0));
            s.set(2, k, C(k == l2 ? 1 : 0));
        }
        return s;
    }
};

template <class C>
class Poly {
public:
    using Term = std::pair<Mono, C>;
    using coeff_type = C;

    Poly() = default;
    Poly(C c) {  // NOLINT: constants convert implicitly
        if (!coeff::is_zero(c)) terms_.emplace_back(Mono(), std::move(c));
    }
    Poly(int c) : Poly(C(c)) {}  // NOLINT

    static Poly monomial(const Mono &m, C c = C(1)) {
        Poly p;
        if (!coeff::is_zero(c)) p.terms_.emplace_back(m, std::move(c));
        return p;
    }
    static Poly var(int side, int k) { return monomial(Mono::var(side, k)); }

    // Builds from arbitrary (possibly repeated, unsorted) terms.
    static Poly from_terms(std::vector<Term> terms) {
        Poly p;
        p.terms_ = std::move(terms);
        p.canonicalize();
        return p;
    }

    const std::vector<Term> &terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const noexcept { return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second == C(1); }

    C coeff(const Mono &m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term &t, const Mono &x) { return t.first < x; });
        if (it != terms_.end() && it->first == m) return it->second;
        return C(0);
    }
    C constant_term() const { return coeff(Mono()); }

    Poly &operator+=(const Poly &o) { return merge(o, false); }
    Poly &operator-=(const Poly &o) { return merge(o, true); }
    Poly &operator*=(const Poly &o) {
        *this = *this * o;
        return *this;
    }
    Poly &operator*=(const C &c) {
        if (coeff::is_zero(c)) {
            terms_.clear();
        } else {
            for (auto &t : terms_) t.second *= c;
        }
        return *this;
    }

    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto &t : a.terms_) t.second = -t.second;
        return a;
    }
    friend Poly operator*(const Poly &a, const Poly &b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        if (a.terms_.size() == 1) return b.scaled(a.terms_[0].first, a.terms_[0].second);
        if (b.terms_.size() == 1) return a.scaled(b.terms_[0].first, b.terms_[0].second);
        std::vector<Term> out;
        out.reserve(a.terms_.size() * b.terms_.size());
        for (const auto &[ma, ca] : a.terms_)
            for (const auto &[mb, cb] : b.terms_) out.emplace_back(ma * mb, ca * cb);
        return from_terms(std::move(out));
    }
    friend Poly operator*(Poly a, const C &c) { return a *= c; }

    friend bool operator==(const Poly &a, const Poly &b) { return a.terms_ == b.terms_; }

    // m * c * this
    Poly scaled(const Mono &m, const C &c) const {
        Poly r;
        if (coeff::is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto &[mm, cc] : terms_) r.terms_.emplace_back(mm * m, cc * c);
        return r;  // multiplying by a monomial keeps the order
    }

    Poly pow(int n) const {
        if (n < 0) throw std::domain_error("negative power of a coefficient polynomial");
        Poly r(1), base = *this;
        while (n > 0) {
            if (n & 1) r *= base;
            n >>= 1;
            if (n) base *= base;
        }
        return r;
    }

    // Exact division of every coefficient by an integer.
    Poly divexact(const C &d) const {
        Poly r;
        r.terms_.reserve(terms_.size());
        for (const auto &[m, c] : terms_) r.terms_.emplace_back(m, coeff::divexact(c, d));
        return r;
    }

    // Divides every monomial by m; throws if a negative exponent appears.
    Poly div_mono(const Mono &m) const {
        Poly r;
        r.terms_.reserve(terms_.size());
        for (const auto &[mm, c] : terms_) {
            Mono q = mm / m;
            if (!q.is_nonnegative()) throw std::domain_error("monomial " + m.str() + " does not divide " + mm.str());
            r.terms_.emplace_back(q, c);
        }
        return r;
    }

    // Applies a monomial map term by term, merging collisions.
    template <class F>
    Poly map_monos(F &&f) const {
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (const auto &[m, c] : terms_) out.emplace_back(f(m), c);
        return from_terms(std::move(out));
    }

    // Drops terms whose weighted total degree exceeds max_deg.
    Poly truncated(int max_deg) const {
        Poly r;
        for (const auto &t : terms_)
            if (t.first.total_degree() <= max_deg) r.terms_.push_back(t);
        return r;
    }

    Poly specialize(const Specialization<C> &s) const {
        std::vector<Term> out;
        for (const auto &[m, c] : terms_) {
            Mono rest = m;
            C v = c;
            for (int side = 1; side <= 2; ++side) {
                for (int k = 1; k <= kMaxL; ++k) {
                    const auto &val = s.value[static_cast<std::size_t>((side - 1) * kMaxL + k - 1)];
                    int e = m.exp(side, k);
                    if (!val || e == 0) continue;
                    v *= coeff::pow(*val, e);
                    rest.set_exp(side, k, 0);
                }
            }
            if (!coeff::is_zero(v)) out.emplace_back(rest, std::move(v));
        }
        return from_terms(std::move(out));
    }

    bool is_homogeneous(int w1, int w2) const {
        for (const auto &t : terms_)
            if (t.first.bidegree() != std::make_pair(w1, w2)) return false;
        return true;
    }
    bool has_nonnegative_coefficients() const {
        for (const auto &t : terms_)
            if (coeff::sign(t.second) < 0) return false;
        return true;
    }
    bool has_polynomial_monomials() const {
        for (const auto &t : terms_)
            if (!t.first.is_nonnegative()) return false;
        return true;
    }
    int max_total_degree() const {
        int d = 0;
        for (const auto &t : terms_) d = std::max(d, t.first.total_degree());
        return d;
    }
    int min_total_degree() const {
        if (terms_.empty()) return 0;
        int d = terms_.front().first.total_degree();
        for (const auto &t : terms_) d = std::min(d, t.first.total_degree());
        return d;
    }

    // Sum of coefficients (the value at p_{i,k} = 1).
    C coefficient_sum() const {
        C s(0);
        for (const auto &t : terms_) s += t.second;
        return s;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto &[m, c] : terms_) {
            std::string cs = coeff::str(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (neg) cs.erase(0, 1);
            if (!s.empty()) s += neg ? " - " : " + ";
            else if (neg) s += "-";
            if (m.is_one()) {
                s += cs;
            } else {
                if (cs != "1") s += cs + "*";
                s += m.str();
            }
        }
        return s;
    }

private:
    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term &a, const Term &b) { return a.first < b.first; });
        std::size_t w = 0;
        for (std::size_t r = 0; r < terms_.size();) {
            Mono m = terms_[r].first;
            C c = std::move(terms_[r].second);
            for (++r; r < terms_.size() && terms_[r].first == m; ++r) c += terms_[r].second;
            if (!coeff::is_zero(c)) terms_[w++] = Term(m, std::move(c));
        }
        terms_.resize(w);
    }

    Poly &merge(const Poly &o, bool subtract) {
        std::vector<Term> out;
        out.reserve(terms_.size() + o.terms_.size());
        auto i = terms_.begin();
        auto j = o.terms_.begin();
        while (i != terms_.end() || j != o.terms_.end()) {
            if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
                out.push_back(std::move(*i++));
            } else if (i == terms_.end() || j->first < i->first) {
                out.emplace_back(j->first, subtract ? C(-j->second) : j->second);
                ++j;
            } else {
                C c = std::move(i->second);
                if (subtract) c -= j->second;
                else c += j->second;
                if (!coeff::is_zero(c)) out.emplace_back(i->first, std::move(c));
                ++i;
                ++j;
            }
        }
        terms_ = std::move(out);
        return *this;
    }

    std::vector<Term> terms_;
};

using CoeffPoly = Poly<Int>;
using RationalPoly = Poly<Rat>;

inline RationalPoly to_rational(const CoeffPoly &p) {
    std::vector<RationalPoly::Term> t;
    for (const auto &[m, c] : p.terms()) t.emplace_back(m, coeff::to_rat(c));
    return RationalPoly::from_terms(std::move(t));
}

// Coefficientwise maximum; absent monomials count as zero.
template <class C>
Poly<C> tmax(const Poly<C> &f, const Poly<C> &g) {
    std::vector<typename Poly<C>::Term> out;
    auto i = f.terms().begin();
    auto j = g.terms().begin();
    C zero(0);
    while (i != f.terms().end() || j != g.terms().end()) {
        if (j == g.terms().end() || (i != f.terms().end() && i->first < j->first)) {
            out.emplace_back(i->first, std::max(i->second, zero));
            ++i;
        } else if (i == f.terms().end() || j->first < i->first) {
            out.emplace_back(j->first, std::max(j->second, zero));
            ++j;
        } else {
            out.emplace_back(i->first, std::max(i->second, j->second));
            ++i;
            ++j;
        }
    }
    return Poly<C>::from_terms(std::move(out));
}

// Hash accumulator for long sums of products.
template <class C>
class PolyAccumulator {
public:
    void add(const Poly<C> &p) {
        for (const auto &[m, c] : p.terms()) acc_[m] += c;
    }
    void add(const Mono &m, const C &c) { acc_[m] += c; }
    void add_mul(const Poly<C> &a, const Poly<C> &b) {
        for (const auto &[ma, ca] : a.terms())
            for (const auto &[mb, cb] : b.terms()) coeff::add_mul(acc_[ma * mb], ca, cb);
    }
    // acc += scalar * a * b
    void add_mul(const Poly<C> &a, const Poly<C> &b, const C &scalar) {
        for (const auto &[ma, ca] : a.terms())
            for (const auto &[mb, cb] : b.terms()) {
                C t = ca * cb;
                coeff::add_mul(acc_[ma * mb], t, scalar);
            }
    }
    bool empty() const { return acc_.empty(); }
    Poly<C> take() {
        std::vector<typename Poly<C>::Term> out;
        out.reserve(acc_.size());
        for (auto &[m, c] : acc_)
            if (!coeff::is_zero(c)) out.emplace_back(m, std::move(c));
        acc_.clear();
        return Poly<C>::from_terms(std::move(out));
    }

private:
    std::unordered_map<Mono, C, MonoHash> acc_;
};

}  // namespace rk2
