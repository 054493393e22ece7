#pragma once

// Greedy elements x[d1,d2] of a generalized rank-2 cluster algebra, via the
// coefficient recursion c(p,q) and its one-sided parts d+(p,q), d-(p,q).

#include <map>
#include <utility>

#include "rk2/laurent.hpp"
#include "rk2/poly.hpp"
#include "rk2/series1.hpp"

namespace rk2 {

// Coefficient of x^n in (1 + sum_k p_{side,k} x^k)^m, with l = number of
// p-variables on that side; zero for m < 0 and n != 0.
CoeffPoly pi_poly(int m, int n, int side, int l);
// Coefficient of x^n in (1 + sum_k p_{side,k} x^k)^{-m}; same conventions.
CoeffPoly sigma_poly(int m, int n, int side, int l);

enum class GreedyEvaluator { Sharpened, TMax };

class GreedyContext {
public:
    GreedyContext(int d1, int d2, int l1, int l2);

    int d1() const noexcept { return d1_; }
    int d2() const noexcept { return d2_; }
    int l1() const noexcept { return l1_; }
    int l2() const noexcept { return l2_; }

    // c(p,q).  The sharpened evaluator picks one branch by the sign of
    // d1*q - d2*p and needs d1,d2 >= 0; otherwise the T-max form is used.
    const CoeffPoly &coeff(int p, int q, GreedyEvaluator ev = GreedyEvaluator::Sharpened);
    CoeffPoly d_plus(int p, int q);
    CoeffPoly d_minus(int p, int q);

    // The two recursion branches at (p,q), before taking the maximum; which
    // = 1 or 2 computes only that one and leaves the other zero.
    std::pair<CoeffPoly, CoeffPoly> branches(int p, int q, GreedyEvaluator ev, int which = 0);

    // Bounds on the support of c: p <= p_bound(), q <= q_bound().
    int p_bound() const;
    int q_bound() const;

    // x1^{-d1} x2^{-d2} sum c(p,q) x1^p x2^q as a finite Laurent polynomial.
    Series2 element(GreedyEvaluator ev = GreedyEvaluator::Sharpened);

private:
    const CoeffPoly &sigma(int m, int n, int side);

    int d1_, d2_, l1_, l2_;
    std::map<std::pair<int, int>, CoeffPoly> memo_[2];
    std::map<int, WallFn> sigma_cache_[2];
};

Series2 greedy_element(int d1, int d2, int l1, int l2);

}  // namespace rk2
