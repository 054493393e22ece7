#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rk2/dyck.hpp"
#include "rk2/greedy.hpp"

using namespace rk2;

namespace {

CoeffPoly p(int side, int k) { return CoeffPoly::var(side, k); }

}  // namespace

TEST_CASE("pi and sigma") {
    CHECK(pi_poly(5, 0, 1, 2) == CoeffPoly(1));
    CHECK(pi_poly(-2, 0, 1, 2) == CoeffPoly(1));
    CHECK(pi_poly(-2, 3, 1, 2).is_zero());
    CHECK(pi_poly(2, 1, 2, 1) == p(2, 1) * Int(2));
    CHECK(pi_poly(3, 2, 1, 2) == p(1, 2) * Int(3) + p(1, 1).pow(2) * Int(3));
    CHECK(sigma_poly(1, 1, 1, 1) == -p(1, 1));
    CHECK(sigma_poly(2, 2, 1, 1) == p(1, 1).pow(2) * Int(3));
    CHECK(sigma_poly(-1, 2, 1, 1).is_zero());
    for (int m = 0; m <= 4; ++m)
        for (int s = 1; s <= 6; ++s) {
            CoeffPoly sum;
            for (int k = 0; k <= s; ++k) sum += pi_poly(m, s - k, 1, 3) * sigma_poly(m, k, 1, 3);
            CHECK(sum.is_zero());
        }
}

TEST_CASE("base values and easy cases") {
    GreedyContext a(1, 1, 1, 1);
    CHECK(a.coeff(0, 0) == CoeffPoly(1));
    CHECK(a.coeff(1, 1).is_zero());
    CHECK(a.d_plus(0, 0) == CoeffPoly(1));
    CHECK(a.d_minus(0, 0) == CoeffPoly(1));

    GreedyContext b(-2, 3, 2, 1);
    for (int pp = 0; pp <= 8; ++pp)
        for (int q = 0; q <= 3; ++q) {
            CoeffPoly expect = q == 0 ? pi_poly(3, pp, 1, 2) : CoeffPoly();
            CHECK(b.coeff(pp, q) == expect);
        }

    Series2 neg = greedy_element(-1, -2, 2, 2);
    CHECK(neg == Series2::monomial({1, 2}, CoeffPoly(1), neg.order()));

    Series2 mixed = greedy_element(2, -1, 3, 1);
    Series2 expect(mixed.order());
    for (int q = 0; q <= 2; ++q) expect.add_term({-2, 1 + q}, pi_poly(2, q, 2, 1));
    CHECK(mixed == expect);
}

TEST_CASE("sharpened recursion agrees with the T-max definition") {
    for (int l1 = 1; l1 <= 3; ++l1)
        for (int l2 = 1; l2 <= 3; ++l2)
            for (int d1 = -1; d1 <= 4; ++d1)
                for (int d2 = -1; d2 <= 4; ++d2) {
                    GreedyContext ctx(d1, d2, l1, l2);
                    for (int pp = 0; pp <= ctx.p_bound(); ++pp)
                        for (int q = 0; q <= ctx.q_bound(); ++q) {
                            const CoeffPoly &s = ctx.coeff(pp, q, GreedyEvaluator::Sharpened);
                            const CoeffPoly &t = ctx.coeff(pp, q, GreedyEvaluator::TMax);
                            CHECK(s == t);
                            CHECK(s.has_nonnegative_coefficients());
                            if (d1 >= 0 && d2 >= 0 && (pp || q)) {
                                auto [l, r] = ctx.branches(pp, q, GreedyEvaluator::TMax);
                                CHECK((l == s || r == s));
                            }
                        }
                }
}

TEST_CASE("c(p,q) counts compatible gradings") {
    for (int l1 = 1; l1 <= 3; ++l1)
        for (int l2 = 1; l2 <= 3; ++l2)
            for (int d1 = -1; d1 <= 3; ++d1)
                for (int d2 = -1; d2 <= 3; ++d2) {
                    if (l1 * l2 * std::max(d1, 0) * std::max(d2, 0) > 18) continue;
                    GreedyContext ctx(d1, d2, l1, l2);
                    int e1 = std::max(d1, 0), e2 = std::max(d2, 0);
                    for (int pp = 0; pp <= ctx.p_bound() + 1; ++pp)
                        for (int q = 0; q <= ctx.q_bound() + 1; ++q) {
                            CoeffPoly oracle = enumerate_weighted(e1, e2, pp, q, l1, l2, Predicate::Compatible);
                            CHECK_MESSAGE(ctx.coeff(pp, q) == oracle, "d=(", d1, ",", d2, ") l=(", l1, ",", l2,
                                          ") p=", pp, " q=", q);
                        }
                }
}

TEST_CASE("d+ and d- count one-sided shadowed gradings") {
    for (int l1 = 1; l1 <= 2; ++l1)
        for (int l2 = 1; l2 <= 3; ++l2)
            for (int d1 = 1; d1 <= 3; ++d1)
                for (int d2 = 1; d2 <= 3; ++d2) {
                    GreedyContext ctx(d1, d2, l1, l2);
                    for (int pp = 0; pp <= l1 * d2; ++pp)
                        for (int q = 0; q <= l2 * d1; ++q) {
                            CoeffPoly dp = ctx.d_plus(pp, q), dm = ctx.d_minus(pp, q);
                            CHECK(dp.has_nonnegative_coefficients());
                            CHECK(dm.has_nonnegative_coefficients());
                            if (pp || q) {
                                CHECK(dp == enumerate_weighted(d1, d2, pp, q, l1, l2, Predicate::ShadowedPlus));
                                CHECK(dm == enumerate_weighted(d1, d2, pp, q, l1, l2, Predicate::ShadowedMinus));
                                if (d1 * q <= d2 * pp) CHECK(dp.is_zero());
                                if (d1 * q >= d2 * pp) CHECK(dm.is_zero());
                            }
                            // c = d+ + sum_s pi_{d2-q,s} d+(p-s,q), and the mirrored identity.
                            CoeffPoly plus = dp, minus = dm;
                            for (int s = 1; s <= pp; ++s) plus += pi_poly(d2 - q, s, 1, l1) * ctx.d_plus(pp - s, q);
                            for (int s = 1; s <= q; ++s) minus += pi_poly(d1 - pp, s, 2, l2) * ctx.d_minus(pp, q - s);
                            CHECK(plus == ctx.coeff(pp, q));
                            CHECK(minus == ctx.coeff(pp, q));
                        }
                }
}

TEST_CASE("greedy element support stays inside the bound") {
    GreedyContext ctx(3, 2, 2, 3);
    Series2 x = ctx.element();
    for (const auto &[e, c] : x.terms()) {
        CHECK(e.first + 3 <= 2 * 2);
        CHECK(e.second + 2 <= 3 * 3);
        CHECK(c.is_homogeneous(e.first + 3, e.second + 2));
    }
    CHECK(x.coeff({-3, -2}) == CoeffPoly(1));
}
