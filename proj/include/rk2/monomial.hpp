#pragma once

// Monomials in the coefficient variables p_{1,1..l1} and p_{2,1..l2}.
//
// Exponents live in a fixed 16-slot array: slots [0, 8) hold p_{1,k+1},
// slots [8, 16) hold p_{2,k+1}.  The fixed layout keeps multiplication a
// straight-line lane-wise add that compilers vectorize.  Exponents are
// signed so that intermediate quotients (mutation, P-bar) can be formed and
// then checked.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace rk2 {

inline constexpr int kMaxL = 8;

class Mono {
public:
    using Exp = std::int16_t;

    Mono() noexcept { e_.fill(0); }

    // p_{side,k}^pow, side in {1,2}, 1 <= k <= kMaxL.
    static Mono var(int side, int k, int pow = 1);
    static Mono from_vectors(const std::vector<int> &q1, const std::vector<int> &q2);

    int exp(int side, int k) const { return e_[slot(side, k)]; }
    void set_exp(int side, int k, int v) { e_[slot(side, k)] = static_cast<Exp>(v); }

    bool is_one() const noexcept;
    bool is_nonnegative() const noexcept;

    // Weighted degree w(q_side) = sum_k k * q_{side,k}.
    int wdeg(int side) const noexcept;
    std::pair<int, int> bidegree() const noexcept { return {wdeg(1), wdeg(2)}; }
    int total_degree() const noexcept { return wdeg(1) + wdeg(2); }
    // Number of variables (with multiplicity) on one side.
    int count(int side) const noexcept;

    // Highest index k with a nonzero exponent on that side (0 if none).
    int max_index(int side) const noexcept;

    std::vector<int> exps(int side, int l) const;

    Mono &operator*=(const Mono &o) noexcept {
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] = static_cast<Exp>(e_[i] + o.e_[i]);
        return *this;
    }
    Mono &operator/=(const Mono &o) noexcept {
        for (std::size_t i = 0; i < e_.size(); ++i) e_[i] = static_cast<Exp>(e_[i] - o.e_[i]);
        return *this;
    }
    friend Mono operator*(Mono a, const Mono &b) noexcept { return a *= b; }
    friend Mono operator/(Mono a, const Mono &b) noexcept { return a /= b; }
    Mono pow(int n) const noexcept;

    bool divides(const Mono &o) const noexcept;

    friend bool operator==(const Mono &, const Mono &) noexcept = default;
    // Canonical order: lexicographic on (q1, q2).
    friend std::strong_ordering operator<=>(const Mono &a, const Mono &b) noexcept { return a.e_ <=> b.e_; }

    std::size_t hash() const noexcept;
    // Human-readable form like "p11^2*p21"; "1" for the unit.
    std::string str() const;

    const std::array<Exp, 2 * kMaxL> &raw() const noexcept { return e_; }

private:
    static std::size_t slot(int side, int k);
    std::array<Exp, 2 * kMaxL> e_;
};

struct MonoHash {
    std::size_t operator()(const Mono &m) const noexcept { return m.hash(); }
};

}  // namespace rk2
