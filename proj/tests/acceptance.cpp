// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <sstream>

#include "rk2/broken.hpp"
#include "rk2/dyck.hpp"
#include "rk2/greedy.hpp"
#include "rk2/invariants.hpp"
#include "rk2/json_io.hpp"
#include "rk2/scatter.hpp"

#ifndef RK2_GOLDEN_DIR
#define RK2_GOLDEN_DIR "tests/golden"
#endif

using namespace rk2;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string &what) {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

CoeffPoly p(int side, int k, int e = 1) { return CoeffPoly::monomial(Mono::var(side, k, e)); }

Int binom(long n, long k) { return binomial(n, k); }

std::string str(const CoeffPoly &c) { return c.is_zero() ? "0" : c.str(); }

// Displayed expansion of the (1,1) wall for l1 = l2 = 2, collected by powers of z.
CoeffPoly refined22(int j) {
    CoeffPoly out;
    for (int k = 0; 2 * k <= j; ++k) {
        if (2 * k == j) out += p(1, 2, k) * p(2, 2, k) * Int(k + 1);
        if (2 * k + 1 == j) out += p(1, 1) * p(2, 1) * p(1, 2, k) * p(2, 2, k) * (binom(k + 3, 3) + binom(k + 2, 3));
        if (2 * k + 2 == j) {
            out += p(2, 1, 2) * p(1, 2, k + 1) * p(2, 2, k) * binom(k + 3, 3);
            out += p(1, 1, 2) * p(1, 2, k) * p(2, 2, k + 1) * binom(k + 3, 3);
        }
    }
    return out;
}

// Displayed expansion of the (2,1) wall for l1 = 4, l2 = 1.
CoeffPoly refined41(int j) {
    CoeffPoly out;
    for (int k = 0; 2 * k <= j; ++k) {
        if (2 * k == j) out += p(1, 4, k) * p(2, 1, 2 * k) * Int(2 * k + 1);
        if (2 * k + 1 == j) out += p(1, 2) * p(1, 4, k) * p(2, 1, 2 * k + 1) * Int(k + 1);
        if (2 * k + 3 == j) {
            out += p(1, 1, 2) * p(1, 4, k + 1) * p(2, 1, 2 * k + 3) * binom(k + 3, 3);
            out += p(1, 3, 2) * p(1, 4, k) * p(2, 1, 2 * k + 3) * binom(k + 3, 3);
        }
        if (2 * k + 2 == j) out += p(1, 1) * p(1, 3) * p(1, 4, k) * p(2, 1, 2 * k + 2) * (binom(k + 3, 3) + binom(k + 2, 3));
    }
    return out;
}

WallFn series(std::vector<CoeffPoly> c) { return WallFn(std::move(c)); }

Outcome criterion1() {
    Outcome o;
    std::map<Exponent, WallFn> want{
        {{3, 1}, series({CoeffPoly(1), p(1, 3) * p(2, 1)})},
        {{2, 1}, series({CoeffPoly(1), p(1, 2) * p(2, 1), p(1, 1) * p(1, 3) * p(2, 1, 2), p(1, 3, 2) * p(2, 1, 3)})},
        {{3, 2}, series({CoeffPoly(1), p(1, 3) * p(2, 1, 2)})},
        {{1, 1}, series({CoeffPoly(1), p(1, 1) * p(2, 1), p(1, 2) * p(2, 1, 2), p(1, 3) * p(2, 1, 3)})},
    };
    for (int order : {9, 12}) {
        auto d = ks_complete(3, 1, order);
        o.require(d.rays.size() == 4, "expected four rays at order " + std::to_string(order));
        for (const auto &[dir, f] : d.rays) {
            auto it = want.find(dir);
            o.require(it != want.end(), "unexpected ray");
            if (it == want.end()) continue;
            // Every stored power beyond the displayed ones must vanish.
            o.require(f.truncated(it->second.max_power()) == it->second, "ray function differs");
            for (int k = it->second.max_power() + 1; k <= f.max_power(); ++k) o.require(f[k].is_zero(), "extra term");
        }
    }
    // The shipped golden file carries the same data.
    std::ifstream in(std::string(RK2_GOLDEN_DIR) + "/g2.json");
    o.require(static_cast<bool>(in), "golden file missing");
    if (in) {
        Json g = Json::parse(in);
        o.require(g.at("rays").size() == 4, "golden ray count");
        for (const auto &ray : g.at("rays")) {
            Exponent dir{ray.at("dir").at(0).get<int>(), ray.at("dir").at(1).get<int>()};
            for (const auto &t : ray.at("fn")) {
                int k = t.at("exp").at(0).get<int>() / dir.first;
                const WallFn &w = want.at(dir);
                o.require(k <= w.max_power() && poly_from_json<Int>(t.at("coeff")) == w[k], "golden term differs");
            }
        }
    }
    return o;
}

Outcome criterion2() {
    Outcome o;
    auto d = ks_complete(2, 2, 16);
    const WallFn *f = d.ray(1, 1);
    o.require(f != nullptr && f->max_power() == 8, "ray (1,1) missing");
    if (!f) return o;
    WallFn t = wall_fn_tight(1, 1, 1, 2, 2, 8);
    auto bin = Specialization<Int>::binomial(2, 2);
    for (int j = 1; j <= 8; ++j) {
        o.require((*f)[j] == refined22(j), "ks z^" + std::to_string(j) + ": " + str((*f)[j]));
        o.require(t[j] == refined22(j), "tight z^" + std::to_string(j));
        Int c = (*f)[j].specialize(bin).constant_term();
        o.require(c == Int(j % 2 == 0 ? j / 2 + 1 : 0), "binomial z^" + std::to_string(j));
    }
    return o;
}

Outcome criterion3() {
    Outcome o;
    KsOptions opt;
    opt.order = 27;
    opt.max_x = 18;
    opt.max_y = 9;
    auto d = ks_complete(InitialData::generic(4, 1), opt);
    const WallFn *f = d.ray(2, 1);
    o.require(f != nullptr && f->max_power() == 9, "ray (2,1) missing");
    if (!f) return o;
    WallFn t = wall_fn_tight(2, 1, 1, 4, 1, 9);
    auto bin = Specialization<Int>::binomial(4, 1);
    for (int j = 1; j <= 9; ++j) {
        o.require((*f)[j] == refined41(j), "ks z^" + std::to_string(j) + ": " + str((*f)[j]));
        o.require(t[j] == refined41(j), "tight z^" + std::to_string(j));
        Int c = (*f)[j].specialize(bin).constant_term();
        o.require(c == Int(j % 2 == 0 ? j + 1 : 0), "binomial z^" + std::to_string(j));
    }
    return o;
}

Outcome criterion4() {
    Outcome o;
    int rays = 0;
    for (int l1 = 1; l1 <= 3; ++l1)
        for (int l2 = 1; l2 <= 3; ++l2) {
            auto d = ks_complete(l1, l2, 6);
            for (const auto &[dir, f] : d.rays) {
                if (f.is_one()) continue;
                ++rays;
                int kmax = 6 / (dir.first + dir.second);
                WallFn t = wall_fn_tight(dir.first, dir.second, 1, l1, l2, kmax);
                o.require(t == f.truncated(kmax), "l=(" + std::to_string(l1) + "," + std::to_string(l2) + ")");
            }
        }
    o.require(rays > 20, "too few rays compared");
    o.note = o.ok ? std::to_string(rays) + " rays" : o.note;
    return o;
}

Outcome criterion5() {
    Outcome o;
    GradingWeights w;
    w.north = {CoeffPoly(1), CoeffPoly(), CoeffPoly(), p(1, 3)};
    w.east = {CoeffPoly(1), CoeffPoly(), p(2, 2)};
    int count = 0;
    CoeffPoly sum;
    for_each_grading(14, 9, 12, 8, w, Predicate::Tight, [&](const DyckGrading &, const CoeffPoly &wt) {
        ++count;
        sum += wt;
    });
    o.require(count == 14, "P(14,9): " + std::to_string(count) + " gradings");
    o.require(sum == p(1, 3, 4) * p(2, 2, 4) * Int(14), "P(14,9) weight");

    GradingWeights v;
    v.north = {CoeffPoly(1), CoeffPoly(), CoeffPoly(), p(1, 3)};
    v.east = {CoeffPoly(1), p(2, 1), p(2, 2)};
    count = 0;
    sum = CoeffPoly();
    for_each_grading(4, 3, 3, 3, v, Predicate::Tight, [&](const DyckGrading &, const CoeffPoly &wt) {
        ++count;
        sum += wt;
    });
    o.require(count == 7, "P(4,3): " + std::to_string(count) + " gradings");
    o.require(sum == p(1, 3) * p(2, 1) * p(2, 2) * Int(6) + p(1, 3) * p(2, 1, 3), "P(4,3) weight " + str(sum));
    return o;
}

Outcome criterion6() {
    Outcome o;
    long compared = 0;
    for (int l1 = 1; l1 <= 2; ++l1)
        for (int l2 = 1; l2 <= 2; ++l2)
            for (int d1 = 1; d1 <= 5; ++d1)
                for (int d2 = 1; d2 <= 5; ++d2) {
                    GreedyContext g(d1, d2, l1, l2);
                    for (int pp = 0; pp <= g.p_bound(); ++pp)
                        for (int qq = 0; qq <= g.q_bound(); ++qq) {
                            ++compared;
                            o.require(g.coeff(pp, qq) == enumerate_weighted(d1, d2, pp, qq, l1, l2, Predicate::Compatible),
                                      "c(" + std::to_string(pp) + "," + std::to_string(qq) + ")");
                        }
                }
    if (o.ok) o.note = std::to_string(compared) + " coefficients";
    return o;
}

Outcome criterion7() {
    Outcome o;
    for (int l1 = 1; l1 <= 2; ++l1)
        for (int l2 = 1; l2 <= 2; ++l2)
            for (int d1 = 1; d1 <= 4; ++d1)
                for (int d2 = 1; d2 <= 4; ++d2) {
                    GreedyContext g(d1, d2, l1, l2);
                    auto d = ks_complete(l1, l2, g.p_bound() + g.q_bound());
                    o.require(theta(d, {-d1, -d2}).terms.terms() == g.element().terms(),
                              "d=(" + std::to_string(d1) + "," + std::to_string(d2) + ")");
                }
    return o;
}

constexpr int kWide = 60;

Series2 widen(const Series2 &s) { return s.with_order(kWide); }

Series2 evaluate(const WallFn &f, const Series2 &x, bool reversed) {
    int deg = f.degree();
    Series2 out(kWide), pw = Series2::one(kWide);
    int top = reversed ? deg : f.max_power();
    for (int j = 0; j <= top; ++j) {
        const CoeffPoly &c = reversed ? f[deg - j] : f[j];
        if (!c.is_zero()) out += pw.scaled(c);
        pw = pw * x;
    }
    return out;
}

Outcome criterion8() {
    Outcome o;
    auto d = ks_complete(2, 1, 12);
    auto x = [&](int n) {
        auto [d1, d2] = dvector(n, 2, 1);
        return widen(theta(d, {-d1, -d2}).terms);
    };
    o.require(x(1) == Series2::monomial({1, 0}, CoeffPoly(1), kWide), "x1 = x");
    o.require(x(2) == Series2::monomial({0, 1}, CoeffPoly(1), kWide), "x2 = y");
    o.require(x(0) * x(2) == evaluate(d.init.P1, x(1), false), "x0 x2 = P1(x1)");
    o.require(x(1) * x(3) == evaluate(d.init.P2, x(2), false), "x1 x3 = P2(x2)");
    for (int n = 4; n <= 6; ++n)
        o.require(x(n - 1) * x(n + 1) == evaluate(zeta(n, 2, 1), x(n), true), "n = " + std::to_string(n));
    return o;
}

Outcome criterion9() {
    Outcome o;
    OrderedPartition P1{{3, 0, 0}}, P2{{3, 0}};
    Rat n = gw_invariant(1, 1, 3, P1, P2);
    o.require(n == Rat(1, 9), "got " + n.get_str());
    CoeffPoly lam = lambda_power(1, 1, 3, 3, 3, 2);
    o.require(lam.coeff(Mono::var(1, 1, 3) * Mono::var(2, 1, 3)) == Int(1), "lambda^(3)(p11^3 p21^3) != 1");
    if (o.ok) o.note = "N = " + n.get_str();
    return o;
}

Outcome criterion10() {
    Outcome o;
    // lambda(2,2) at l1 = l2 = 2, then the scaled coefficient <1,1>_2.
    CoeffPoly lam22 = wall_fn_tight(1, 1, 1, 2, 2, 2)[2];
    o.require(lam22 == p(1, 1, 2) * p(2, 2) + p(2, 1, 2) * p(1, 2) + p(1, 2) * p(2, 2) * Int(2), "lambda(2,2) " + str(lam22));
    o.require(scaled_coefficients(1, 1, 2, 2, 2, 1)[1] == p(1, 1) * p(2, 1) * Int(2), "<1,1>_2");

    // Every ray equals (1 + sum <dp,dq>_ell z^d)^(ell/ind), and matches the indexed completion.
    LatticeContext ctx({1, 0}, {1, 2});
    const int order = 6;
    auto ns = nonstandard_commutator(ctx, 2, 2, order);
    KsOptions opt;
    opt.order = order;
    opt.index = [&ctx](int a, int b) { return ctx.ind(a, b); };
    auto oracle = ks_complete(InitialData::generic(2, 2), opt);
    o.require(ctx.ell() == 2, "ell");
    o.require(ns.size() == oracle.rays.size(), "ray count");
    for (const auto &[dir, f] : ns) {
        int e = ctx.ell() / ctx.ind(dir.first, dir.second);
        o.require(ctx.ell() % ctx.ind(dir.first, dir.second) == 0, "ind does not divide ell");
        WallFn base = scaled_coefficients(dir.first, dir.second, ctx.ell(), 2, 2, f.max_power());
        base[0] = CoeffPoly(1);
        o.require(base.pow(e) == f, "powering at (" + std::to_string(dir.first) + "," + std::to_string(dir.second) + ")");
        const WallFn *g = oracle.ray(dir.first, dir.second);
        o.require(g && *g == f, "indexed completion differs");
    }
    return o;
}

Outcome criterion11() {
    Outcome o;
    for (int l1 = 1; l1 <= 3; ++l1)
        for (int l2 = 1; l2 <= 3; ++l2) {
            auto d = ks_complete(l1, l2, 10);
            for (const auto &[dir, f] : d.rays)
                for (int k = 1; k <= f.max_power(); ++k) {
                    o.require(f[k].has_nonnegative_coefficients(), "negative coefficient");
                    o.require(f[k].is_homogeneous(k * dir.first, k * dir.second), "inhomogeneous term");
                }
        }
    for (auto [l1, l2] : {std::pair{2, 2}, std::pair{3, 1}, std::pair{2, 3}})
        for (auto [a, b] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 2}})
            for (int m = 1; m <= 2; ++m) {
                auto second = [&](int k) { return admissible_dvecs(a, b, k, m, 2).back(); };
                auto w = GradingWeights::generic(l1, l2);
                o.require(wall_fn_tight(a, b, m, w, 3) == wall_fn_tight(a, b, m, w, 3, second), "d-vector dependence");
            }
    auto d = ks_complete(3, 3, 6);
    for (int k = 1; k <= 3; ++k) {
        if (k % 3 != 0) continue;
        CoeffPoly lam = wall_fn_tight(1, 1, 1, 3, 3, k)[k];
        Int c = lam.coeff(Mono::var(1, 3, k / 3) * Mono::var(2, 3, k / 3));
        o.require(c >= Int(k), "badlands bound at k = " + std::to_string(k));
        const WallFn *f = d.ray(1, 1);
        o.require(f && (*f)[k] == lam, "badlands ray differs from the tight sum");
    }
    return o;
}

}  // namespace

int main() {
    struct Item {
        int id;
        const char *name;
        double budget;  // seconds
        std::function<Outcome()> run;
    };
    std::vector<Item> items{
        {1, "golden G2 diagram", 1, criterion1},
        {2, "affine (2,2) wall", 30, criterion2},
        {3, "affine (4,1) wall", 60, criterion3},
        {4, "ks = tight gradings for l in {1,2,3}^2", 300, criterion4},
        {5, "tight grading counts", 2, criterion5},
        {6, "greedy = compatible gradings", 120, criterion6},
        {7, "greedy = theta", 300, criterion7},
        {8, "exchange relations", 60, criterion8},
        {9, "multiple cover GW invariant", 10, criterion9},
        {10, "change of lattice", 60, criterion10},
        {11, "property suites", 300, criterion11},
    };
    int failed = 0;
    for (const auto &it : items) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = it.run();
        } catch (const std::exception &e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (o.ok && secs > it.budget) {
            o.ok = false;
            o.note = "over the time budget";
        }
        std::ostringstream line;
        line << (o.ok ? "PASS" : "FAIL") << " " << it.id << " " << it.name << " (" << std::fixed << std::setprecision(2)
             << secs << " s)";
        if (!o.note.empty()) line << " " << o.note;
        std::cout << line.str() << std::endl;
        if (!o.ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
