#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rk2/invariants.hpp"
#include "rk2/scatter.hpp"

using namespace rk2;

namespace {

CoeffPoly p(int side, int k, int e = 1) { return CoeffPoly::monomial(Mono::var(side, k, e)); }

OrderedPartition part(std::vector<int> v) { return {std::move(v)}; }

void compositions(int n, int l, std::vector<int> &cur, std::vector<OrderedPartition> &out) {
    if (static_cast<int>(cur.size()) == l - 1) {
        cur.push_back(n);
        out.push_back({cur});
        cur.pop_back();
        return;
    }
    for (int x = 0; x <= n; ++x) {
        cur.push_back(x);
        compositions(n - x, l, cur, out);
        cur.pop_back();
    }
}

std::vector<OrderedPartition> all_partitions(int n, int l) {
    std::vector<OrderedPartition> out;
    std::vector<int> cur;
    compositions(n, l, cur, out);
    return out;
}

// prod_{i,j} (1 + s_i t_j z) / (1 - s1 s2 t1 t2 z^2)^4 through z^K, with s_i, t_j in the root slots.
Series1<Int> closed_form_22(int K) {
    Series1<Int> num(K);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            std::vector<CoeffPoly> f(static_cast<std::size_t>(K) + 1);
            f[0] = CoeffPoly(1);
            if (K >= 1) f[1] = p(1, i) * p(2, j);
            num = num * Series1<Int>(f);
        }
    std::vector<CoeffPoly> den(static_cast<std::size_t>(K) + 1);
    CoeffPoly u = p(1, 1) * p(1, 2) * p(2, 1) * p(2, 2);
    for (int n = 0; 2 * n <= K; ++n) den[2 * n] = u.pow(n) * binomial(n + 3, 3);
    return num * Series1<Int>(den);
}

}  // namespace

TEST_CASE("elementary symmetric expansion") {
    auto e = elementary_expand(Mono::var(1, 1), 2, 1);
    CHECK(e.size() == 2);
    CHECK(e.at({part({1, 0}), part({0})}) == Int(1));
    CHECK(e.at({part({0, 1}), part({0})}) == Int(1));

    auto cube = elementary_expand(Mono::var(1, 1, 3), 3, 2);
    CHECK(cube.at({part({3, 0, 0}), part({0, 0})}) == Int(1));
    CHECK(cube.at({part({1, 1, 1}), part({0, 0})}) == Int(6));
    CHECK(cube.at({part({2, 1, 0}), part({0, 0})}) == Int(3));
    CHECK(cube.size() == 10);

    auto e2 = elementary_expand(Mono::var(1, 2), 2, 1);
    REQUIRE(e2.size() == 1);
    CHECK(e2.begin()->first.first == part({1, 1}));

    CHECK(elementary_expand(Mono::var(2, 3), 1, 2).empty());

    // Mixed sides multiply independently.
    Mono q = Mono::var(1, 1) * Mono::var(2, 2);
    auto mixed = elementary_expand(q, 2, 2);
    CHECK(mixed.size() == 2);
    CHECK(mixed.at({part({0, 1}), part({1, 1})}) == Int(1));
}

TEST_CASE("partition parsing") {
    CHECK(OrderedPartition::parse("3+0+0") == part({3, 0, 0}));
    CHECK(OrderedPartition::parse("3,0") == part({3, 0}));
    CHECK(part({2, 0, 1}).str() == "2+0+1");
    CHECK(part({2, 0, 1}).total() == 3);
    CHECK_THROWS(OrderedPartition::parse("3,-1"));
    CHECK_THROWS(OrderedPartition::parse("a,b"));
}

TEST_CASE("the multiple cover contribution") {
    CoeffPoly lam = lambda_power(1, 1, 3, 3, 3, 2);
    CHECK(lam.coeff(Mono::var(1, 1, 3) * Mono::var(2, 1, 3)) == Int(1));
    CHECK(lambda_power(1, 1, 1, 3, 3, 2).coeff(Mono::var(1, 1, 3) * Mono::var(2, 1, 3)) == Int(0));
    CHECK(lambda_power(1, 1, 2, 3, 3, 2).coeff(Mono::var(1, 1, 3) * Mono::var(2, 1, 3)) == Int(0));

    CHECK(gw_invariant(1, 1, 3, part({3, 0, 0}), part({3, 0})) == Rat(1, 9));
    CHECK(gw_invariant(1, 1, 3, part({3, 0}), part({3, 0, 0})) == Rat(1, 9));
}

TEST_CASE("single cover collapses to the tight count") {
    for (auto [a, b] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}, std::pair{3, 2}}) {
        CoeffPoly tight = expand_in_roots(lambda_power(a, b, 1, 1, 2, 2), 2, 2);
        for (const auto &P1 : all_partitions(a, 2))
            for (const auto &P2 : all_partitions(b, 2)) {
                Rat n = gw_invariant(a, b, 1, P1, P2);
                CHECK(n == coeff::to_rat(root_coeff(tight, P1, P2)));
                if (b == 1) CHECK(n == coeff::to_rat(euler_char(a, b, 1, P1, P2, Framing::Back)));
                if (a == 1) CHECK(n == coeff::to_rat(euler_char(a, b, 1, P1, P2, Framing::Front)));
            }
    }
}

TEST_CASE("log of the wall function matches k N") {
    struct Case {
        int l1, l2, a, b, kmax;
    };
    for (auto c : {Case{2, 2, 1, 1, 3}, Case{3, 2, 1, 1, 3}, Case{2, 1, 1, 1, 3}, Case{2, 1, 2, 1, 3}, Case{3, 1, 1, 1, 3},
                   Case{2, 2, 1, 2, 2}}) {
        CAPTURE(c.l1);
        CAPTURE(c.l2);
        CAPTURE(c.a);
        CAPTURE(c.b);
        auto d = ks_complete(c.l1, c.l2, c.kmax * (c.a + c.b));
        const WallFn *f = d.ray(c.a, c.b);
        REQUIRE(f != nullptr);
        auto roots = f->truncated(c.kmax).map_coeffs([&](const CoeffPoly &q) { return expand_in_roots(q, c.l1, c.l2); });
        auto lg = roots.map_coeffs([](const CoeffPoly &q) { return to_rational(q); }).log();
        for (int k = 1; k <= c.kmax; ++k) {
            auto table = gw_table(c.a, c.b, k, c.l1, c.l2);
            for (const auto &P1 : all_partitions(k * c.a, c.l1))
                for (const auto &P2 : all_partitions(k * c.b, c.l2)) {
                    CAPTURE(k);
                    CAPTURE(P1.str());
                    CAPTURE(P2.str());
                    auto it = table.find({P1, P2});
                    Rat n = it == table.end() ? Rat(0) : it->second;
                    CHECK(root_coeff(lg[k], P1, P2) == Rat(k) * n);
                }
        }
        // The single-pair route agrees with the table on one entry.
        auto P1 = all_partitions(c.a, c.l1).front(), P2 = all_partitions(c.b, c.l2).back();
        CHECK(root_coeff(lg[1], P1, P2) == gw_invariant(c.a, c.b, 1, P1, P2));
    }
}

TEST_CASE("Euler characteristics from the closed form") {
    const int K = 4;
    Series1<Int> rw = closed_form_22(K);
    for (int k = 0; k <= K; ++k)
        for (const auto &P1 : all_partitions(k, 2))
            for (const auto &P2 : all_partitions(k, 2)) {
                CAPTURE(k);
                CAPTURE(P1.str());
                CAPTURE(P2.str());
                Int want = root_coeff(rw[k], P1, P2);
                CHECK(euler_char(1, 1, k, P1, P2, Framing::Back) == want);
                CHECK(euler_char(1, 1, k, P1, P2, Framing::Front) == want);
            }
    CHECK(euler_char(1, 1, 0, part({0, 0}), part({0})) == Int(1));
    CHECK(euler_char(2, 3, 0, part({0}), part({0, 0, 0}), Framing::Front) == Int(1));
}

TEST_CASE("both framings read the same wall function") {
    for (auto [l1, l2] : {std::pair{2, 2}, std::pair{3, 1}, std::pair{2, 1}})
        for (auto [a, b] : {std::pair{1, 2}, std::pair{2, 1}, std::pair{1, 1}}) {
            const int kmax = 2;
            auto d = ks_complete(l1, l2, kmax * (a + b));
            const WallFn *f = d.ray(a, b);
            if (!f) continue;
            WallFn back = f->truncated(kmax).pow(b), front = f->truncated(kmax).pow(a);
            for (int k = 1; k <= kmax; ++k) {
                CoeffPoly rb = expand_in_roots(back[k], l1, l2), rf = expand_in_roots(front[k], l1, l2);
                for (const auto &P1 : all_partitions(k * a, l1))
                    for (const auto &P2 : all_partitions(k * b, l2)) {
                        CAPTURE(l1);
                        CAPTURE(l2);
                        CAPTURE(a);
                        CAPTURE(b);
                        CAPTURE(k);
                        CAPTURE(P1.str());
                        CAPTURE(P2.str());
                        Int xb = euler_char(a, b, k, P1, P2, Framing::Back);
                        Int xf = euler_char(a, b, k, P1, P2, Framing::Front);
                        auto tb = euler_table(a, b, k, l1, l2, Framing::Back);
                        CHECK(xb == (tb.count({P1, P2}) ? tb.at({P1, P2}) : Int(0)));
                        CHECK(xb == root_coeff(rb, P1, P2));
                        CHECK(xf == root_coeff(rf, P1, P2));
                        CHECK(xb >= Int(0));
                        CHECK(xf >= Int(0));
                    }
            }
        }
}

TEST_CASE("argument checks") {
    CHECK_THROWS(euler_char(1, 1, 2, part({1, 0}), part({2, 0}), Framing::Back));
    CHECK_THROWS(gw_invariant(2, 2, 1, part({2}), part({2})));
    CHECK_THROWS(gw_invariant(1, 1, 0, part({0}), part({0})));
    CHECK_THROWS(parse_framing("sideways"));
    CHECK(parse_framing("front") == Framing::Front);
}
