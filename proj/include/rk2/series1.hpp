#pragma once

// Truncated power series in one variable z with polynomial coefficients.
// Wall functions are stored this way, with z = x^a y^b for the ray's
// primitive direction (a,b).

#include <stdexcept>
#include <string>
#include <vector>

#include "rk2/poly.hpp"

namespace rk2 {

template <class C>
class Series1 {
public:
    Series1() : c_(1, Poly<C>(1)) {}
    // The constant 1 truncated at z^max_power.
    explicit Series1(int max_power) : c_(static_cast<std::size_t>(max_power) + 1) {
        if (max_power < 0) throw std::invalid_argument("negative truncation");
        c_[0] = Poly<C>(1);
    }
    explicit Series1(std::vector<Poly<C>> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("series needs at least a constant term");
    }

    int max_power() const noexcept { return static_cast<int>(c_.size()) - 1; }
    const Poly<C> &operator[](int j) const { return c_.at(static_cast<std::size_t>(j)); }
    Poly<C> &operator[](int j) { return c_.at(static_cast<std::size_t>(j)); }
    const std::vector<Poly<C>> &coeffs() const noexcept { return c_; }

    // Highest power with a nonzero coefficient.
    int degree() const {
        for (int j = max_power(); j >= 0; --j)
            if (!c_[j].is_zero()) return j;
        return -1;
    }
    bool is_one() const {
        if (!c_[0].is_one()) return false;
        for (int j = 1; j <= max_power(); ++j)
            if (!c_[j].is_zero()) return false;
        return true;
    }

    Series1 truncated(int max_power) const {
        std::vector<Poly<C>> v(static_cast<std::size_t>(max_power) + 1);
        for (int j = 0; j <= std::min(max_power, this->max_power()); ++j) v[j] = c_[j];
        return Series1(std::move(v));
    }

    friend Series1 operator*(const Series1 &a, const Series1 &b) {
        int n = std::min(a.max_power(), b.max_power());
        std::vector<Poly<C>> out(static_cast<std::size_t>(n) + 1);
        for (int j = 0; j <= n; ++j) {
            PolyAccumulator<C> acc;
            for (int i = 0; i <= j; ++i) acc.add_mul(a.c_[i], b.c_[j - i]);
            out[j] = acc.take();
        }
        return Series1(std::move(out));
    }
    friend bool operator==(const Series1 &a, const Series1 &b) { return a.c_ == b.c_; }

    // f^n for any integer n, requiring constant term 1.  Uses the recurrence
    // j F_j = sum_{k=1..j} ((n+1)k - j) f_k F_{j-k}; the division by j is exact.
    Series1 pow(long n) const {
        require_unit();
        int K = max_power();
        std::vector<Poly<C>> F(static_cast<std::size_t>(K) + 1);
        F[0] = Poly<C>(1);
        for (int j = 1; j <= K; ++j) {
            PolyAccumulator<C> acc;
            for (int k = 1; k <= j; ++k) {
                if (c_[k].is_zero() || F[j - k].is_zero()) continue;
                C w(static_cast<long>((n + 1) * k - j));
                if (coeff::is_zero(w)) continue;
                acc.add_mul(c_[k], F[j - k], w);
            }
            F[j] = acc.take().divexact(C(j));
        }
        return Series1(std::move(F));
    }
    Series1 inv() const { return pow(-1); }

    // log f; only meaningful with rational coefficients.
    Series1 log() const {
        require_unit();
        int K = max_power();
        std::vector<Poly<C>> L(static_cast<std::size_t>(K) + 1);
        for (int j = 1; j <= K; ++j) {
            Poly<C> s = c_[j] * C(j);
            for (int k = 1; k < j; ++k) s -= (L[k] * c_[j - k]) * C(k);
            L[j] = s.divexact(C(j));
        }
        return Series1(std::move(L));
    }

    // exp of a series with zero constant term.
    Series1 exp() const {
        if (!c_[0].is_zero()) throw std::domain_error("exp needs a zero constant term");
        int K = max_power();
        std::vector<Poly<C>> E(static_cast<std::size_t>(K) + 1);
        E[0] = Poly<C>(1);
        for (int j = 1; j <= K; ++j) {
            PolyAccumulator<C> acc;
            for (int k = 1; k <= j; ++k) acc.add_mul(c_[k], E[j - k], C(k));
            E[j] = acc.take().divexact(C(j));
        }
        return Series1(std::move(E));
    }

    template <class F>
    auto map_coeffs(F &&f) const {
        using Out = decltype(f(c_[0]));
        std::vector<Out> v;
        v.reserve(c_.size());
        for (const auto &p : c_) v.push_back(f(p));
        return Series1<typename Out::coeff_type>(std::move(v));
    }

    std::string str() const {
        std::string s;
        for (int j = 0; j <= max_power(); ++j) {
            if (c_[j].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c_[j].str() + ")";
            if (j > 0) s += "*z^" + std::to_string(j);
        }
        return s.empty() ? "0" : s;
    }

private:
    void require_unit() const {
        if (!c_[0].is_one()) throw std::domain_error("series must have constant term 1");
    }
    std::vector<Poly<C>> c_;
};

using WallFn = Series1<Int>;

}  // namespace rk2
