#include "rk2/broken.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

namespace rk2 {

namespace {

struct BWall {
    Exponent dir;
    bool line;
    const WallFn *f;
    int kmax;  // highest reliable power of z
};

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

long next_prime(long n) {
    while (!is_prime(n)) ++n;
    return n;
}

class Enumerator {
public:
    Enumerator(const ScatteringDiagram2 &d, Exponent m0, const RPoint &q, const BrokenOptions &opt)
        : d_(d), m0_(m0), q_(q), opt_(opt) {
        if (d.index) throw std::invalid_argument("broken lines need the standard lattice");
        if (on_wall(d, q)) throw std::invalid_argument("endpoint lies on a wall");
        walls_.push_back({{1, 0}, true, &d.init.P1, d.order});
        walls_.push_back({{0, 1}, true, &d.init.P2, d.order});
        for (const auto &[dir, fn] : d.rays) walls_.push_back({dir, false, &fn, fn.max_power()});
        powers_.resize(walls_.size());
    }

    std::vector<BrokenLine> run() {
        if (m0_ == Exponent{0, 0}) {
            out_.push_back({m0_, q_, {}, m0_, CoeffPoly(1)});
            return out_;
        }
        auto start = [&](Exponent m) { dfs(q_, m, CoeffPoly(1)); };
        if (opt_.final_exponent) {
            start(*opt_.final_exponent);
        } else {
            for (int s = 0; s <= d_.order; ++s)
                for (int vx = 0; vx <= s; ++vx) start({m0_.first + vx, m0_.second + s - vx});
        }
        return std::move(out_);
    }

private:
    bool within(Exponent m) const {
        int vx = m.first - m0_.first, vy = m.second - m0_.second;
        return vx >= 0 && vy >= 0 && d_.keeps(vx, vy);
    }

    // Backward hit of q + t m (t > 0) with wall w.
    std::optional<RPoint> hit(const RPoint &p, Exponent m, const BWall &w) const {
        Rat mx(m.first), my(m.second);
        Rat t;
        if (w.line) {
            if (w.dir.first == 1) {
                if (m.second == 0) return std::nullopt;
                t = -p.second / my;
            } else {
                if (m.first == 0) return std::nullopt;
                t = -p.first / mx;
            }
        } else {
            Rat a(w.dir.first), b(w.dir.second);
            Rat den = mx * b - my * a;
            if (sgn(den) == 0) return std::nullopt;
            t = (p.second * a - p.first * b) / den;
        }
        if (sgn(t) <= 0) return std::nullopt;
        RPoint at{p.first + t * mx, p.second + t * my};
        if (sgn(at.first) == 0 && sgn(at.second) == 0) throw std::logic_error("broken line runs through the origin");
        if (!w.line && sgn(at.first) >= 0) return std::nullopt;
        return at;
    }

    const CoeffPoly &power(std::size_t wi, int e, int j) {
        auto &cache = powers_[wi];
        auto it = cache.find(e);
        if (it == cache.end()) {
            const BWall &w = walls_[wi];
            int K = std::max(0, w.line ? d_.order : w.kmax);
            it = cache.emplace(e, w.f->truncated(K).pow(e)).first;
        }
        return it->second[j];
    }

    void dfs(const RPoint &p, Exponent m, const CoeffPoly &c) {
        if (m == m0_) out_.push_back({m0_, q_, std::vector<Bend>(stack_.rbegin(), stack_.rend()), finals_(), c});
        for (std::size_t wi = 0; wi < walls_.size(); ++wi) {
            const BWall &w = walls_[wi];
            int e = std::abs(w.dir.first * m.second - w.dir.second * m.first);
            if (e == 0) continue;
            auto at = hit(p, m, w);
            if (!at) continue;
            if (!opt_.positive_axis_bends && w.line && (sgn(at->first) > 0 || sgn(at->second) > 0)) continue;
            int jmax = w.line ? d_.order : w.kmax;
            for (int j = 1; j <= jmax; ++j) {
                Exponent prev{m.first - j * w.dir.first, m.second - j * w.dir.second};
                if (!within(prev)) break;
                const CoeffPoly &F = power(wi, e, j);
                if (F.is_zero()) continue;
                stack_.push_back({w.dir, w.line, j, *at, m});
                dfs(*at, prev, c * F);
                stack_.pop_back();
            }
        }
    }

    // The exponent of the last segment is the one the search started from.
    Exponent finals_() const { return stack_.empty() ? m0_ : stack_.front().exponent; }

    const ScatteringDiagram2 &d_;
    Exponent m0_;
    RPoint q_;
    BrokenOptions opt_;
    std::vector<BWall> walls_;
    std::vector<std::map<int, WallFn>> powers_;
    std::vector<Bend> stack_;
    std::vector<BrokenLine> out_;
};

}  // namespace

bool on_wall(const ScatteringDiagram2 &d, const RPoint &p) {
    if (sgn(p.first) == 0 || sgn(p.second) == 0) return true;
    for (const auto &[dir, fn] : d.rays) {
        if (sgn(p.first) >= 0) break;
        if (sgn(p.first * dir.second - p.second * dir.first) == 0) return true;
    }
    return false;
}

RPoint generic_point(const ScatteringDiagram2 &d, const RPoint &near) {
    long p = 10007;
    for (int attempt = 0; attempt < 64; ++attempt) {
        p = next_prime(p);
        long p2 = next_prime(p + 1);
        RPoint q{near.first + Rat(1, p) / 1000, near.second + Rat(1, p2) / 1000};
        q.first.canonicalize();
        q.second.canonicalize();
        if (!on_wall(d, q)) return q;
        p = p2 + 1;
    }
    throw std::runtime_error("no generic point found");
}

RPoint first_quadrant_point() { return {Rat(10009, 10007), Rat(10007, 10037)}; }

std::vector<BrokenLine> enumerate_broken(const ScatteringDiagram2 &d, Exponent m0, const RPoint &q,
                                         const BrokenOptions &opt) {
    return Enumerator(d, m0, q, opt).run();
}

ThetaFunction theta(const ScatteringDiagram2 &d, Exponent m0, const RPoint &q) {
    ThetaFunction t{m0, q, d.order, Series2(d.order + 1)};
    std::map<Exponent, PolyAccumulator<Int>> acc;
    for (const auto &bl : enumerate_broken(d, m0, q)) acc[bl.final_exponent].add(bl.weight);
    int top = d.order;
    std::map<Exponent, CoeffPoly> sum;
    for (auto &[e, a] : acc) {
        CoeffPoly c = a.take();
        if (c.is_zero()) continue;
        top = std::max(top, c.max_total_degree());
        sum.emplace(e, std::move(c));
    }
    t.terms = Series2(top);
    for (const auto &[e, c] : sum) t.terms.add_term(e, c);
    return t;
}

ThetaFunction theta(const ScatteringDiagram2 &d, Exponent m0) { return theta(d, m0, first_quadrant_point()); }

CoeffPoly structure_constant(const ScatteringDiagram2 &d, Exponent p1, Exponent p2, Exponent q) {
    RPoint z = generic_point(d, {Rat(q.first), Rat(q.second)});
    std::map<Exponent, CoeffPoly> a1, a2;
    for (const auto &bl : enumerate_broken(d, p1, z)) a1[bl.final_exponent] += bl.weight;
    for (const auto &bl : enumerate_broken(d, p2, z)) a2[bl.final_exponent] += bl.weight;
    PolyAccumulator<Int> acc;
    for (const auto &[m1, c1] : a1) {
        auto it = a2.find({q.first - m1.first, q.second - m1.second});
        if (it != a2.end()) acc.add_mul(c1, it->second);
    }
    return acc.take();
}

bool satisfies_one_bending_bound(int d1, int d2, int a, int b, int k) {
    if (d1 <= 0 || d2 <= 0 || a <= 0 || b <= 0 || k <= 0) return false;
    long A = a, B = b, K = k, D1 = d1, D2 = d2;
    long s = D1 * B - D2 * A;
    if (s > 0) return (K * A * B + 1) * D2 >= K * B * B * D1;
    if (s < 0) return K * A * A * D2 <= (K * A * B + 1) * D1;
    return false;
}

CoeffPoly one_bending_broken_count(const ScatteringDiagram2 &d, int d1, int d2, int a, int b, int k) {
    if (!satisfies_one_bending_bound(d1, d2, a, b, k)) throw std::invalid_argument("one-bending bound fails");
    long s = static_cast<long>(d1) * b - static_cast<long>(d2) * a;
    // Below both lines of slope (kb-d2)/(ka-d1) and d2/d1 when s > 0; mirrored otherwise.
    auto below = [](long u1, long u2, long v1, long v2) {
        // q1 = 1, q2 under min(u2/u1, v2/v1).
        Rat lo = std::min(Rat(u2) / Rat(u1), Rat(v2) / Rat(v1));
        return lo - 1;
    };
    RPoint q;
    if (s > 0) q = {Rat(1), below(static_cast<long>(k) * a - d1, static_cast<long>(k) * b - d2, d1, d2)};
    else {
        Rat left = below(static_cast<long>(k) * b - d2, static_cast<long>(k) * a - d1, d2, d1);
        q = {left, Rat(1)};
    }
    q = generic_point(d, q);
    BrokenOptions opt;
    opt.positive_axis_bends = false;
    opt.final_exponent = Exponent{k * a - d1, k * b - d2};
    PolyAccumulator<Int> acc;
    for (const auto &bl : enumerate_broken(d, {-d1, -d2}, q, opt)) acc.add(bl.weight);
    return acc.take();
}

Rat angular_momentum(const RPoint &q, Exponent m) { return q.second * m.first - q.first * m.second; }

}  // namespace rk2
