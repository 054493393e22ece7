#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "rk2/json_io.hpp"
#include "rk2/laurent.hpp"
#include "rk2/poly.hpp"
#include "rk2/series1.hpp"

using namespace rk2;

namespace {

CoeffPoly p(int side, int k) { return CoeffPoly::var(side, k); }

CoeffPoly random_poly(std::mt19937 &rng) {
    std::uniform_int_distribution<int> nterms(0, 4), e(0, 2), c(-5, 5);
    std::vector<CoeffPoly::Term> t;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i)
        t.emplace_back(Mono::from_vectors({e(rng), e(rng)}, {e(rng), e(rng)}), Int(c(rng)));
    return CoeffPoly::from_terms(std::move(t));
}

}  // namespace

TEST_CASE("Int promotes past 64 bits and demotes back") {
    Int a(INT64_MAX);
    Int b = a + Int(1);
    CHECK(!b.is_small());
    CHECK(b.str() == "9223372036854775808");
    b -= Int(1);
    CHECK(b.is_small());
    CHECK(b == a);
    Int sq = a * a;
    CHECK(sq.str() == "85070591730234615847396907784232501249");
    CHECK(sq.divexact(a) == a);
    CHECK_THROWS(Int(7).divexact(Int(2)));
    Int acc(1);
    acc.add_mul(a, a);
    CHECK(acc.str() == "85070591730234615847396907784232501250");
    CHECK(binomial(6, 3) == Int(20));
}

TEST_CASE("coefficient polynomial arithmetic") {
    CoeffPoly f = p(1, 1) * p(2, 1) + CoeffPoly(3);
    CHECK(CoeffPoly(1) * f == f);
    CHECK((p(1, 1) + p(2, 1)) * (p(1, 1) - p(2, 1)) == p(1, 1) * p(1, 1) - p(2, 1) * p(2, 1));
    CoeffPoly cube = (CoeffPoly(1) + p(1, 1)).pow(3);
    CoeffPoly expect = CoeffPoly(1) + p(1, 1) * Int(3) + p(1, 1).pow(2) * Int(3) + p(1, 1).pow(3);
    CHECK(cube == expect);
    CHECK((f - f).is_zero());
    CHECK(f.str() == "3 + p11*p21");
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(12345);
    for (int i = 0; i < 200; ++i) {
        CoeffPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("tmax") {
    CoeffPoly f = p(1, 1) * Int(2) + p(2, 1);
    CHECK(tmax(f, f) == f);
    CHECK(tmax(p(1, 1), p(2, 1)) == p(1, 1) + p(2, 1));
    CHECK(tmax(f, p(1, 1) + p(2, 1) * Int(3)) == p(1, 1) * Int(2) + p(2, 1) * Int(3));
}

TEST_CASE("series multiplication and inverse") {
    const int order = 3;
    Series2 a = Series2::one(order);
    a.add_term({1, 0}, p(1, 1));
    Series2 b = Series2::one(order);
    b.add_term({0, 1}, p(2, 1));
    Series2 prod = a * b;
    Series2 expect = Series2::one(order);
    expect.add_term({1, 0}, p(1, 1));
    expect.add_term({0, 1}, p(2, 1));
    expect.add_term({1, 1}, p(1, 1) * p(2, 1));
    CHECK(prod == expect);
    CHECK(a * Series2::one(order) == a);

    Series2 inv = a.inv();
    Series2 geo = Series2::one(order);
    geo.add_term({1, 0}, -p(1, 1));
    geo.add_term({2, 0}, p(1, 1).pow(2));
    geo.add_term({3, 0}, -p(1, 1).pow(3));
    CHECK(inv == geo);
    CHECK(Series2::one(order).inv() == Series2::one(order));

    // P1 for l1 = 2 at order 2.
    Series2 P1 = Series2::one(2);
    P1.add_term({1, 0}, p(1, 1));
    P1.add_term({2, 0}, p(1, 2));
    Series2 Pinv = P1.inv();
    CHECK(Pinv.coeff({2, 0}) == p(1, 1).pow(2) - p(1, 2));
    CHECK(P1 * Pinv == Series2::one(2));
    CHECK(Pinv.is_diagram_homogeneous());
    CHECK_THROWS(Series2(2).inv());
    CHECK_THROWS(a.with_order(4) * a);
}

TEST_CASE("inverse identity at several orders and homogeneity preservation") {
    for (int order = 1; order <= 7; ++order) {
        Series2 f = Series2::one(order);
        f.add_term({1, 0}, p(1, 1));
        f.add_term({2, 0}, p(1, 2));
        f.add_term({0, 1}, p(2, 1));
        f.add_term({1, 1}, p(1, 1) * p(2, 1) * Int(2));
        CHECK(f * f.inv() == Series2::one(order));
        CHECK(f.pow(3).is_diagram_homogeneous());
        CHECK(f.pow(-2) == f.inv().pow(2));
        CHECK(f.pow(-2) * f.pow(2) == Series2::one(order));
    }
}

TEST_CASE("powers") {
    const int order = 8;
    Series2 f = Series2::one(order, Filtration::Lattice);
    f.add_term({1, 1}, CoeffPoly(1));
    CHECK(f.pow(0) == Series2::one(order, Filtration::Lattice));
    Series2 sq = f.pow(2);
    Series2 expect = Series2::one(order, Filtration::Lattice);
    expect.add_term({1, 1}, CoeffPoly(2));
    expect.add_term({2, 2}, CoeffPoly(1));
    CHECK(sq == expect);
}

TEST_CASE("logarithm and exponential") {
    using RS = LaurentSeries2<Rat>;
    RS f = RS::one(4, Filtration::Lattice);
    f.add_term({1, 1}, RationalPoly(1));
    RS l = f.log();
    RS expect(4, Filtration::Lattice);
    expect.add_term({1, 1}, RationalPoly(1));
    expect.add_term({2, 2}, RationalPoly(Rat(-1, 2)));
    CHECK(l == expect);
    CHECK(RS::one(4).log().is_zero());

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        RS g = RS::one(6);
        g.add_term({1, 0}, RationalPoly::var(1, 1) * Rat(c(rng)));
        g.add_term({0, 1}, RationalPoly::var(2, 1) * Rat(c(rng)));
        g.add_term({1, 1}, RationalPoly::var(1, 1) * RationalPoly::var(2, 1) * Rat(c(rng)));
        g.add_term({2, 1}, RationalPoly::var(1, 2) * RationalPoly::var(2, 1) * Rat(c(rng)));
        CHECK(g.log().exp() == g);
    }
}

TEST_CASE("one-variable series powers agree with repeated products") {
    WallFn f(6);
    f[1] = p(1, 1) * p(2, 1);
    f[2] = p(1, 2) * p(2, 1).pow(2);
    WallFn cube = f * f * f;
    CHECK(f.pow(3) == cube);
    CHECK(f.pow(-1) * f == WallFn(6));
    CHECK(f.pow(-3) * cube == WallFn(6));
    using R1 = Series1<Rat>;
    R1 g = f.map_coeffs([](const CoeffPoly &q) { return to_rational(q); });
    CHECK(g.log().exp() == g);
}

TEST_CASE("specialization") {
    CoeffPoly f = p(1, 2) * p(2, 2) * Int(3) + p(1, 1) * p(2, 2) + CoeffPoly(1);
    CoeffPoly v = f.specialize(Specialization<Int>::binomial(2, 2));
    CHECK(v == CoeffPoly(4));
}

TEST_CASE("canonical json is deterministic and round-trips") {
    Series2 s = Series2::one(4);
    s.add_term({1, 1}, p(1, 1) * p(2, 1) * Int(-2));
    s.add_term({1, 0}, p(1, 1));
    Json j = series_to_json(s, 2, 1);
    CHECK(j.dump() ==
          R"([{"exp":[0,0],"coeff":[{"q1":[0,0],"q2":[0],"n":"1"}]},{"exp":[1,0],"coeff":[{"q1":[1,0],"q2":[0],"n":"1"}]},{"exp":[1,1],"coeff":[{"q1":[1,0],"q2":[1],"n":"-2"}]}])");
    CHECK(series_from_json<Int>(j, 4) == s);
}
