#include "rk2/greedy.hpp"

#include <algorithm>
#include <stdexcept>

namespace rk2 {

namespace {

WallFn side_series(int side, int l, int n) {
    WallFn f(n);
    for (int k = 1; k <= std::min(l, n); ++k) f[k] = CoeffPoly::var(side, k);
    return f;
}

CoeffPoly power_coeff(int m, int n, int side, int l) {
    if (n == 0) return CoeffPoly(1);
    if (m < 0 || n < 0) return CoeffPoly();
    return side_series(side, l, n).pow(m)[n];
}

}  // namespace

CoeffPoly pi_poly(int m, int n, int side, int l) { return power_coeff(m, n, side, l); }

CoeffPoly sigma_poly(int m, int n, int side, int l) {
    if (n == 0) return CoeffPoly(1);
    if (m < 0 || n < 0) return CoeffPoly();
    return side_series(side, l, n).pow(-m)[n];
}

GreedyContext::GreedyContext(int d1, int d2, int l1, int l2) : d1_(d1), d2_(d2), l1_(l1), l2_(l2) {
    if (l1 < 1 || l2 < 1 || l1 > kMaxL || l2 > kMaxL) throw std::invalid_argument("l1, l2 must lie in 1..8");
}

int GreedyContext::p_bound() const { return std::max(0, d1_) + l1_ * std::max(0, d2_); }
int GreedyContext::q_bound() const { return std::max(0, d2_) + l2_ * std::max(0, d1_); }

const CoeffPoly &GreedyContext::sigma(int m, int n, int side) {
    static const CoeffPoly one(1), zero;
    if (n == 0) return one;
    if (m < 0) return zero;
    auto &cache = sigma_cache_[side - 1];
    auto it = cache.find(m);
    if (it == cache.end() || it->second.max_power() < n) {
        int len = std::max(n, side == 1 ? p_bound() : q_bound());
        WallFn f = side_series(side, side == 1 ? l1_ : l2_, len).pow(-m);
        it = cache.insert_or_assign(m, std::move(f)).first;
    }
    return it->second[n];
}

std::pair<CoeffPoly, CoeffPoly> GreedyContext::branches(int p, int q, GreedyEvaluator ev, int which) {
    PolyAccumulator<Int> left, right;
    for (int k = 1; k <= p && which != 2; ++k) {
        const CoeffPoly &c = coeff(p - k, q, ev);
        left.add_mul(c, sigma(d2_ - q, k, 1), Int(-1));
    }
    for (int k = 1; k <= q && which != 1; ++k) {
        const CoeffPoly &c = coeff(p, q - k, ev);
        right.add_mul(c, sigma(d1_ - p, k, 2), Int(-1));
    }
    return {left.take(), right.take()};
}

const CoeffPoly &GreedyContext::coeff(int p, int q, GreedyEvaluator ev) {
    if (p < 0 || q < 0) throw std::invalid_argument("c(p,q) needs p,q >= 0");
    if (ev == GreedyEvaluator::Sharpened && (d1_ < 0 || d2_ < 0)) ev = GreedyEvaluator::TMax;
    auto &memo = memo_[ev == GreedyEvaluator::Sharpened ? 0 : 1];
    auto it = memo.find({p, q});
    if (it != memo.end()) return it->second;

    CoeffPoly value;
    if (p == 0 && q == 0) {
        value = CoeffPoly(1);
    } else if (ev == GreedyEvaluator::Sharpened) {
        auto [l, r] = branches(p, q, ev, static_cast<long>(d1_) * q <= static_cast<long>(d2_) * p ? 1 : 2);
        value = std::move(l.is_zero() ? r : l);
    } else {
        auto [l, r] = branches(p, q, ev);
        value = tmax(l, r);
    }
    return memo.emplace(std::make_pair(p, q), std::move(value)).first->second;
}

CoeffPoly GreedyContext::d_plus(int p, int q) {
    if (p == 0 && q == 0) return CoeffPoly(1);
    GreedyEvaluator ev = d1_ >= 0 && d2_ >= 0 ? GreedyEvaluator::Sharpened : GreedyEvaluator::TMax;
    CoeffPoly c = coeff(p, q, ev);
    return c - branches(p, q, ev, 1).first;
}

CoeffPoly GreedyContext::d_minus(int p, int q) {
    if (p == 0 && q == 0) return CoeffPoly(1);
    GreedyEvaluator ev = d1_ >= 0 && d2_ >= 0 ? GreedyEvaluator::Sharpened : GreedyEvaluator::TMax;
    CoeffPoly c = coeff(p, q, ev);
    return c - branches(p, q, ev, 2).second;
}

Series2 GreedyContext::element(GreedyEvaluator ev) {
    int pb = p_bound(), qb = q_bound();
    Series2 out(pb + qb);
    for (int p = 0; p <= pb; ++p)
        for (int q = 0; q <= qb; ++q) {
            const CoeffPoly &c = coeff(p, q, ev);
            if (!c.is_zero()) out.add_term({p - d1_, q - d2_}, c);
        }
    return out;
}

Series2 greedy_element(int d1, int d2, int l1, int l2) { return GreedyContext(d1, d2, l1, l2).element(); }

}  // namespace rk2
