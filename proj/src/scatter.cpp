#include "rk2/scatter.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rk2 {

namespace {

int lattice_gcd(int a, int b) { return std::gcd(std::abs(a), std::abs(b)); }

std::string dir_str(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

WallFn coeff_series(int side, int l) {
    WallFn f(l);
    for (int k = 1; k <= l; ++k) f[k] = CoeffPoly::var(side, k);
    return f;
}

// Coefficient vector f_0..f_K of a wall function, f_0 = 1.
std::vector<CoeffPoly> coeff_vector(const WallFn &f) { return f.coeffs(); }

// Cached powers f^e of every wall function, extended one coefficient at a
// time with j F_j = sum_t ((e+1) t - j) f_t F_{j-t}.
class PowerCache {
public:
    const CoeffPoly &get(const std::vector<CoeffPoly> &f, int fid, int e, int j) {
        auto &F = cache_[{fid, e}];
        if (F.empty()) F.emplace_back(1);
        while (static_cast<int>(F.size()) <= j) {
            int jj = static_cast<int>(F.size());
            PolyAccumulator<Int> acc;
            int tmax = std::min(jj, static_cast<int>(f.size()) - 1);
            for (int t = 1; t <= tmax; ++t) {
                if (f[t].is_zero()) continue;
                long w = static_cast<long>(e + 1) * t - jj;
                if (w == 0 || F[jj - t].is_zero()) continue;
                acc.add_mul(f[t], F[jj - t], Int(w));
            }
            F.push_back(acc.take().divexact(Int(jj)));
        }
        return F[j];
    }
    // f gained g z^k: every cached power that already holds F_k shifts by e g.
    void patch(int fid, int k, const CoeffPoly &g) {
        for (auto it = cache_.lower_bound({fid, INT_MIN}); it != cache_.end() && it->first.first == fid; ++it) {
            auto &F = it->second;
            if (static_cast<int>(F.size()) > k) F[k] += g * Int(it->first.second);
        }
    }

private:
    std::map<std::pair<int, int>, std::vector<CoeffPoly>> cache_;
};

struct EngineWall {
    int fid;  // 0: P1, 1: P2, >= 2: added ray
    Exponent dir;
    int deg;
    int ex, ey;  // crossing exponent e(m) = ex m_x + ey m_y
};

using Layer = std::vector<CoeffPoly>;  // indexed by r_x, r_y = degree - r_x

class KsEngine {
public:
    KsEngine(const InitialData &init, const KsOptions &opt) : init_(init), opt_(opt) {
        if (opt.order < 0) throw std::invalid_argument("negative order");
        fns_.push_back(coeff_vector(init.P1));
        fns_.push_back(coeff_vector(init.P2));
        int ix = ind(1, 0), iy = ind(0, 1);
        // Loop order: +y axis, -x axis, rays by slope, -y axis, +x axis.
        walls_.push_back({-1, {0, 0}, 0, 0, 0});
        walls_.push_back({1, {0, 1}, 1, iy, 0});
        walls_.push_back({0, {1, 0}, 1, 0, ix});
        walls_.push_back({1, {0, 1}, 1, -iy, 0});
        walls_.push_back({0, {1, 0}, 1, 0, -ix});
        for (int b = 0; b < 2; ++b) {
            S_[b].assign(walls_.size(), std::vector<Layer>{Layer{CoeffPoly(1)}});
        }
    }

    ScatteringDiagram2 run() {
        for (int D = 1; D <= opt_.order; ++D) step(D);
        ScatteringDiagram2 out;
        out.init = init_;
        out.order = opt_.order;
        out.max_x = opt_.max_x;
        out.max_y = opt_.max_y;
        out.index = opt_.index;
        for (const auto &[dir, fid] : ray_fid_) {
            const auto &f = fns_[fid];
            int K = 0;
            while (out.keeps((K + 1) * dir.first, (K + 1) * dir.second)) ++K;
            WallFn w(K);
            for (int k = 1; k <= K && k < static_cast<int>(f.size()); ++k) w[k] = f[k];
            if (!w.is_one()) out.rays.emplace(dir, std::move(w));
        }
        return out;
    }

private:
    int ind(int a, int b) const { return opt_.index ? opt_.index(a, b) : 1; }
    bool in_box(int rx, int ry) const {
        return (opt_.max_x < 0 || rx <= opt_.max_x) && (opt_.max_y < 0 || ry <= opt_.max_y);
    }
    static Exponent base(int b) { return b == 0 ? Exponent{1, 0} : Exponent{0, 1}; }

    Layer compute_layer(int b, std::size_t w, int D) {
        const EngineWall &wall = walls_[w];
        const auto &prev = S_[b][w - 1];
        Exponent m0 = base(b);
        std::vector<PolyAccumulator<Int>> acc(static_cast<std::size_t>(D) + 1);
        for (int rx = 0; rx <= D; ++rx)
            if (!prev[D][rx].is_zero()) acc[rx].add(prev[D][rx]);
        const auto &f = fns_[wall.fid];
        for (int j = 1; j * wall.deg <= D; ++j) {
            if (wall.fid < 2 && j >= static_cast<int>(f.size())) {
                // Initial functions are polynomials, but powers are not; keep going.
            }
            int L = D - j * wall.deg;
            for (int rx = 0; rx <= L; ++rx) {
                const CoeffPoly &c = prev[L][rx];
                if (c.is_zero()) continue;
                int ry = L - rx;
                int e = wall.ex * (m0.first + rx) + wall.ey * (m0.second + ry);
                if (e == 0) continue;
                int nx = rx + j * wall.dir.first, ny = ry + j * wall.dir.second;
                if (!in_box(nx, ny)) continue;
                const CoeffPoly &F = powers_.get(f, wall.fid, e, j);
                if (F.is_zero()) continue;
                acc[nx].add_mul(c, F);
            }
        }
        Layer out(static_cast<std::size_t>(D) + 1);
        for (int rx = 0; rx <= D; ++rx) out[rx] = acc[rx].take();
        return out;
    }

    void step(int D) {
        for (int b = 0; b < 2; ++b) {
            S_[b][0].emplace_back(static_cast<std::size_t>(D) + 1);
            for (std::size_t w = 1; w < walls_.size(); ++w) S_[b][w].push_back(compute_layer(b, w, D));
        }

        // Read off the new ray terms at degree D.
        const Layer &dx = S_[0].back()[D], &dy = S_[1].back()[D];
        struct NewTerm {
            Exponent dir;
            int k;
            CoeffPoly g;
        };
        std::vector<NewTerm> found;
        for (int rx = 0; rx <= D; ++rx) {
            int ry = D - rx;
            if (dx[rx].is_zero() && dy[rx].is_zero()) continue;
            if (rx == 0 || ry == 0)
                throw std::logic_error("loop defect on a coordinate axis at degree " + std::to_string(D));
            int k = lattice_gcd(rx, ry), a = rx / k, bb = ry / k;
            int id = ind(a, bb);
            CoeffPoly g = dx[rx].divexact(Int(static_cast<long>(bb) * id));
            if (dy[rx] != g * Int(-static_cast<long>(a) * id))
                throw std::logic_error("loop defect does not factor at " + dir_str(rx, ry));
            found.push_back({{a, bb}, k, std::move(g)});
        }

        for (const auto &t : found) {
            if (!ray_fid_.count(t.dir)) insert_ray(t.dir, D);
        }
        for (const auto &t : found) {
            int fid = ray_fid_.at(t.dir);
            auto &f = fns_[fid];
            if (static_cast<int>(f.size()) <= t.k) f.resize(static_cast<std::size_t>(t.k) + 1);
            f[t.k] = t.g;
            powers_.patch(fid, t.k, t.g);
            std::size_t pos = position(fid);
            const EngineWall &wall = walls_[pos];
            int rx = t.k * t.dir.first;
            for (int b = 0; b < 2; ++b) {
                Exponent m0 = base(b);
                int e = wall.ex * m0.first + wall.ey * m0.second;
                CoeffPoly delta = t.g * Int(e);
                for (std::size_t w = pos; w < walls_.size(); ++w) S_[b][w][D][rx] += delta;
            }
        }
        for (int b = 0; b < 2; ++b)
            for (const auto &c : S_[b].back()[D])
                if (!c.is_zero()) throw std::logic_error("loop defect survives correction at degree " + std::to_string(D));
    }

    std::size_t position(int fid) const {
        for (std::size_t w = 1; w < walls_.size(); ++w)
            if (walls_[w].fid == fid) return w;
        throw std::logic_error("unknown wall");
    }

    void insert_ray(Exponent dir, int D) {
        int fid = static_cast<int>(fns_.size());
        fns_.push_back({CoeffPoly(1)});
        ray_fid_.emplace(dir, fid);
        // Rays sit between the -x axis (slot 2) and the -y axis, by slope.
        std::size_t pos = 3;
        while (walls_[pos].fid >= 2 && SlopeLess()(walls_[pos].dir, dir)) ++pos;
        int id = ind(dir.first, dir.second);
        walls_.insert(walls_.begin() + static_cast<long>(pos),
                      EngineWall{fid, dir, dir.first + dir.second, -dir.second * id, dir.first * id});
        for (int b = 0; b < 2; ++b) {
            std::vector<Layer> copy(S_[b][pos - 1].begin(), S_[b][pos - 1].begin() + D + 1);
            S_[b].insert(S_[b].begin() + static_cast<long>(pos), std::move(copy));
        }
    }

    const InitialData &init_;
    KsOptions opt_;
    std::vector<std::vector<CoeffPoly>> fns_;
    std::map<Exponent, int, SlopeLess> ray_fid_;
    std::vector<EngineWall> walls_;
    std::vector<std::vector<Layer>> S_[2];  // [base][wall][degree][r_x]
    PowerCache powers_;
};

CoeffPoly swap_sides(const CoeffPoly &c) {
    return c.map_monos([](const Mono &m) {
        Mono out;
        for (int k = 1; k <= kMaxL; ++k) {
            out.set_exp(1, k, m.exp(2, k));
            out.set_exp(2, k, m.exp(1, k));
        }
        return out;
    });
}

WallFn swap_sides(const WallFn &f) { return f.map_coeffs([](const CoeffPoly &c) { return swap_sides(c); }); }

ScatteringDiagram2 transpose(const ScatteringDiagram2 &d) {
    ScatteringDiagram2 t;
    t.init.l1 = d.init.l2;
    t.init.l2 = d.init.l1;
    t.init.P1 = swap_sides(d.init.P2);
    t.init.P2 = swap_sides(d.init.P1);
    t.order = d.order;
    t.max_x = d.max_y;
    t.max_y = d.max_x;
    if (d.index) {
        IndexFn f = d.index;
        t.index = [f](int a, int b) { return f(b, a); };
    }
    for (const auto &[dir, fn] : d.rays) t.rays.emplace(Exponent{dir.second, dir.first}, swap_sides(fn));
    return t;
}

bool same_series(const WallFn &a, const WallFn &b) {
    int n = std::max(a.max_power(), b.max_power());
    for (int k = 0; k <= n; ++k) {
        CoeffPoly x = k <= a.max_power() ? a[k] : CoeffPoly();
        CoeffPoly y = k <= b.max_power() ? b[k] : CoeffPoly();
        if (x != y) return false;
    }
    return true;
}

}  // namespace

InitialData InitialData::generic(int l1, int l2) {
    if (l1 < 1 || l2 < 1 || l1 > kMaxL || l2 > kMaxL) throw std::invalid_argument("l1, l2 must lie in 1..8");
    return {l1, l2, coeff_series(1, l1), coeff_series(2, l2)};
}

InitialData InitialData::from_json(const Json &j) {
    InitialData d;
    d.l1 = j.at("l1").get<int>();
    d.l2 = j.at("l2").get<int>();
    if (d.l1 < 1 || d.l2 < 1 || d.l1 > kMaxL || d.l2 > kMaxL) throw std::invalid_argument("l1, l2 must lie in 1..8");
    d.P1 = coeff_series(1, d.l1);
    d.P2 = coeff_series(2, d.l2);
    for (int side = 1; side <= 2; ++side) {
        const char *key = side == 1 ? "P1" : "P2";
        if (!j.contains(key)) continue;
        const Json &arr = j.at(key);
        int l = side == 1 ? d.l1 : d.l2;
        if (static_cast<int>(arr.size()) != l) throw std::invalid_argument(std::string(key) + " needs one entry per power");
        WallFn &P = side == 1 ? d.P1 : d.P2;
        for (int k = 1; k <= l; ++k) P[k] = poly_from_json<Int>(arr.at(static_cast<std::size_t>(k - 1)));
    }
    return d;
}

Json InitialData::to_json() const {
    Json j;
    j["l1"] = l1;
    j["l2"] = l2;
    Json p1 = Json::array(), p2 = Json::array();
    for (int k = 1; k <= P1.max_power(); ++k) p1.push_back(poly_to_json(P1[k], l1, l2));
    for (int k = 1; k <= P2.max_power(); ++k) p2.push_back(poly_to_json(P2[k], l1, l2));
    j["P1"] = std::move(p1);
    j["P2"] = std::move(p2);
    return j;
}

const WallFn *ScatteringDiagram2::ray(int a, int b) const {
    auto it = rays.find({a, b});
    return it == rays.end() ? nullptr : &it->second;
}

Json ScatteringDiagram2::to_json() const {
    Json j;
    j["l1"] = init.l1;
    j["l2"] = init.l2;
    j["order"] = order;
    Json arr = Json::array();
    for (const auto &[dir, fn] : rays) {
        Json r;
        r["dir"] = {dir.first, dir.second};
        r["fn"] = wall_to_json(fn, dir, init.l1, init.l2);
        arr.push_back(std::move(r));
    }
    j["rays"] = std::move(arr);
    return j;
}

ScatteringDiagram2 ks_complete(const InitialData &init, const KsOptions &opt) { return KsEngine(init, opt).run(); }

ScatteringDiagram2 ks_complete(int l1, int l2, int order) {
    KsOptions opt;
    opt.order = order;
    return ks_complete(InitialData::generic(l1, l2), opt);
}

ScatteringDiagram2 ks_complete_naive(const InitialData &init, int order, IndexFn index) {
    ScatteringDiagram2 d;
    d.init = init;
    d.index = std::move(index);
    for (int D = 1; D <= order; ++D) {
        d.order = D;
        for (auto &[dir, fn] : d.rays) fn = fn.truncated(D / (dir.first + dir.second));
        Series2 px = loop_product(d, {1, 0}), py = loop_product(d, {0, 1});
        std::map<Exponent, CoeffPoly, SlopeLess> found;
        for (const auto &[e, c] : px.terms()) {
            int rx = e.first - 1, ry = e.second;
            if (rx + ry != D) continue;
            if (rx <= 0 || ry <= 0) throw std::logic_error("loop defect on a coordinate axis");
            int k = lattice_gcd(rx, ry), a = rx / k, b = ry / k;
            CoeffPoly g = c.divexact(Int(static_cast<long>(b) * d.ind(a, b)));
            if (py.coeff({rx, ry + 1}) != g * Int(-static_cast<long>(a) * d.ind(a, b)))
                throw std::logic_error("loop defect does not factor");
            auto &fn = d.rays[{a, b}];
            if (fn.max_power() < k) fn = fn.truncated(k);
            fn[k] = g;
        }
    }
    return d;
}

Series2 wall_cross(const WallFn &f, Exponent dir, Exponent point, Exponent mono, const CoeffPoly &weight,
                   int orientation, int order, int index) {
    int g = lattice_gcd(point.first, point.second);
    if (g == 0) throw std::invalid_argument("wall support needs a nonzero point");
    int sx = point.first / g, sy = point.second / g;
    long e = static_cast<long>(orientation) * index * (static_cast<long>(sy) * mono.first - static_cast<long>(sx) * mono.second);
    int deg = dir.first + dir.second;
    int K = deg > 0 ? std::max(0, order) / deg : 0;
    Series2 out(order + std::max(0, weight.max_total_degree()));
    if (e == 0) {
        out.add_term(mono, weight);
        return out;
    }
    WallFn F = f.truncated(K).pow(e);
    for (int j = 0; j <= K; ++j)
        if (!F[j].is_zero()) out.add_term({mono.first + j * dir.first, mono.second + j * dir.second}, weight * F[j]);
    return out;
}

Series2 loop_product(const ScatteringDiagram2 &d, Exponent mono, const CoeffPoly &weight) {
    struct Crossing {
        const WallFn *f;
        Exponent dir, point;
        int index;
    };
    int ix = d.ind(1, 0), iy = d.ind(0, 1);
    std::vector<Crossing> loop{{&d.init.P2, {0, 1}, {0, 1}, iy}, {&d.init.P1, {1, 0}, {-1, 0}, ix}};
    for (const auto &[dir, fn] : d.rays) loop.push_back({&fn, dir, {-dir.first, -dir.second}, d.ind(dir.first, dir.second)});
    loop.push_back({&d.init.P2, {0, 1}, {0, -1}, iy});
    loop.push_back({&d.init.P1, {1, 0}, {1, 0}, ix});

    std::map<Exponent, CoeffPoly> cur{{{0, 0}, weight}};
    for (const auto &c : loop) {
        std::map<Exponent, PolyAccumulator<Int>> next;
        for (const auto &[r, w] : cur) {
            int budget = d.order - r.first - r.second;
            Series2 t = wall_cross(*c.f, c.dir, c.point, {mono.first + r.first, mono.second + r.second}, w, 1, budget,
                                   c.index);
            for (const auto &[e, p] : t.terms()) {
                Exponent rel{e.first - mono.first, e.second - mono.second};
                if (d.keeps(rel.first, rel.second)) next[rel].add(p);
            }
        }
        cur.clear();
        for (auto &[r, acc] : next) {
            CoeffPoly p = acc.take();
            if (!p.is_zero()) cur.emplace(r, std::move(p));
        }
    }
    int top = d.order;
    for (const auto &[r, p] : cur) top = std::max(top, p.max_total_degree());
    Series2 out(top);
    for (const auto &[r, p] : cur) out.add_term({mono.first + r.first, mono.second + r.second}, p);
    return out;
}

bool is_consistent(const ScatteringDiagram2 &d) {
    for (Exponent m : {Exponent{1, 0}, Exponent{0, 1}}) {
        Series2 s = loop_product(d, m);
        if (s.terms().size() != 1 || !s.coeff(m).is_one()) return false;
    }
    return true;
}

bool is_admissible_dvec(int a, int b, int k, int m, int d1, int d2) {
    if (d1 < k * a || d2 < k * b) return false;
    long s = static_cast<long>(d1) * b - static_cast<long>(d2) * a;
    if (std::abs(s) != m) return false;
    return s > 0 ? d2 >= static_cast<long>(m) * k * b : d1 >= static_cast<long>(m) * k * a;
}

std::vector<std::pair<int, int>> admissible_dvecs(int a, int b, int k, int m, int count) {
    if (a <= 0 || b <= 0 || std::gcd(a, b) != 1) throw std::invalid_argument("direction must be coprime and positive");
    if (k < 1 || m < 1) throw std::invalid_argument("k and m must be positive");
    std::vector<std::pair<int, int>> out;
    long limit = static_cast<long>(m + 2) * (k + 2) * (a + b) * 4 + static_cast<long>(count) * (a + b) * 2;
    for (long T = static_cast<long>(k) * (a + b); T <= limit && static_cast<int>(out.size()) < count; ++T) {
        std::vector<std::pair<int, int>> plus, minus;
        for (long d1 = static_cast<long>(k) * a; d1 <= T - static_cast<long>(k) * b; ++d1) {
            int x = static_cast<int>(d1), y = static_cast<int>(T - d1);
            if (!is_admissible_dvec(a, b, k, m, x, y)) continue;
            (static_cast<long>(x) * b > static_cast<long>(y) * a ? plus : minus).emplace_back(x, y);
        }
        for (auto *v : {&plus, &minus})
            for (auto &p : *v)
                if (static_cast<int>(out.size()) < count) out.push_back(p);
    }
    if (out.empty()) throw std::runtime_error("no admissible d-vector under the search bound");
    return out;
}

std::pair<int, int> choose_dvec(int a, int b, int k, int m) { return admissible_dvecs(a, b, k, m, 1).front(); }

WallFn wall_fn_tight(int a, int b, int m, const GradingWeights &w, int kmax,
                     const std::function<std::pair<int, int>(int)> &dvec) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    WallFn out(std::max(0, kmax));
    Predicate pred = m == 1 ? Predicate::Tight : Predicate::Shadowed;
    for (int k = 1; k <= kmax; ++k) {
        auto [d1, d2] = dvec ? dvec(k) : choose_dvec(a, b, k, m);
        if (!is_admissible_dvec(a, b, k, m, d1, d2))
            throw std::invalid_argument("d-vector " + dir_str(d1, d2) + " is not admissible");
        out[k] = enumerate_weighted(d1, d2, k * a, k * b, w, pred);
    }
    return out;
}

WallFn wall_fn_tight(int a, int b, int m, int l1, int l2, int kmax) {
    return wall_fn_tight(a, b, m, GradingWeights::generic(l1, l2), kmax);
}

std::pair<int, int> dvector(int n, int l1, int l2) {
    using V = std::pair<long, long>;
    auto coef = [&](long i) { return (i % 2 != 0) ? l1 : l2; };
    auto comb = [](long c, V u, V v) { return V{c * u.first - v.first, c * u.second - v.second}; };
    auto narrow = [](V v) {
        if (std::abs(v.first) > INT_MAX / 2 || std::abs(v.second) > INT_MAX / 2)
            throw std::overflow_error("d-vector out of range");
        return std::pair<int, int>(static_cast<int>(v.first), static_cast<int>(v.second));
    };
    const V seed[4] = {{0, 1}, {-1, 0}, {0, -1}, {1, 0}};
    if (n >= 0 && n <= 3) return narrow(seed[n]);
    if (n > 3) {
        V prev = seed[2], cur = seed[3];
        for (long i = 3; i < n; ++i) {
            V nxt = comb(coef(i), cur, prev);
            prev = cur;
            cur = nxt;
            narrow(cur);
        }
        return narrow(cur);
    }
    V next = seed[1], cur = seed[0];
    for (long i = 0; i > n; --i) {
        V prv = comb(coef(i), cur, next);
        next = cur;
        cur = prv;
        narrow(cur);
    }
    return narrow(cur);
}

WallFn zeta(int n, int l1, int l2) {
    if (l1 < 1 || l2 < 1 || l1 > kMaxL || l2 > kMaxL) throw std::invalid_argument("l1, l2 must lie in 1..8");
    auto [d1, d2] = dvector(n, l1, l2);
    int r = ((n % 4) + 4) % 4;
    // Base polynomial side, whether it is reversed (P-bar), and the shift of d.
    int side = (r == 0 || r == 2) ? 2 : 1;
    bool bar = r == 1 || r == 2;
    int wx = d1 + (r == 1 ? 1 : r == 3 ? -1 : 0);
    int wy = d2 + (r == 2 ? 1 : r == 0 ? -1 : 0);
    if (wx % l1 != 0 || wy % l2 != 0)
        throw std::logic_error("cluster wall exponent not divisible at n = " + std::to_string(n));
    int l = side == 1 ? l1 : l2;
    WallFn fn(l);
    for (int j = 1; j <= l; ++j) {
        // Coefficient of z^j before scaling: p_{side,j}, or p_{side,l-j}/p_{side,l} for P-bar.
        Mono m;
        if (bar) {
            if (l - j > 0) m.set_exp(side, l - j, 1);
            m.set_exp(side, l, m.exp(side, l) - 1);
        } else {
            m.set_exp(side, j, 1);
        }
        m.set_exp(1, l1, m.exp(1, l1) + j * (wx / l1));
        m.set_exp(2, l2, m.exp(2, l2) + j * (wy / l2));
        if (!m.is_nonnegative()) throw std::logic_error("cluster wall coefficient is not a polynomial");
        fn[j] = CoeffPoly::monomial(m);
    }
    return fn;
}

std::vector<ClusterWall> cluster_walls(int l1, int l2, int nmin, int nmax) {
    std::vector<ClusterWall> out;
    for (int n = nmin; n <= nmax; ++n) {
        if (n >= 0 && n <= 3) continue;
        auto [d1, d2] = dvector(n, l1, l2);
        if (d1 <= 0 || d2 <= 0) continue;
        out.push_back({n, {d1, d2}, zeta(n, l1, l2)});
    }
    return out;
}

Badlands badlands(int l1, int l2) {
    if (l1 < 1 || l2 < 1) throw std::invalid_argument("l1, l2 must be positive");
    long p = static_cast<long>(l1) * l2;
    return {l1, l2, p * p - 4 * p};
}

bool Badlands::is_inside(int a, int b) const {
    if (a <= 0 || b <= 0) return false;
    long q = static_cast<long>(l1) * b * b - static_cast<long>(l1) * l2 * a * b + static_cast<long>(l2) * a * a;
    return q <= 0;
}

ScatteringDiagram2 mutate(const ScatteringDiagram2 &d, int side) {
    if (side == 2) return transpose(mutate(transpose(d), 1));
    if (side != 1) throw std::invalid_argument("mutation side must be 1 or 2");
    if (d.max_x >= 0 || d.max_y >= 0 || d.index) throw std::invalid_argument("mutation needs a plain truncation");
    const int l1 = d.l1(), l2 = d.l2();
    InitialData gen = InitialData::generic(l1, l2);
    if (!same_series(d.init.P1, gen.P1) || !same_series(d.init.P2, gen.P2))
        throw std::invalid_argument("mutation needs generic initial functions");

    ScatteringDiagram2 out;
    out.init = gen;
    out.order = d.order / (l1 + 1);

    // p_{1,k} -> p'_{1,l1-k} / p'_{1,l1}, p_{1,l1} -> 1/p'_{1,l1}, times p'_{1,l1}^{kb}.
    auto convert = [&](const CoeffPoly &c, int kb) {
        return c.map_monos([&](const Mono &m) {
            Mono out_m;
            int total = 0;
            for (int k = 1; k <= l1; ++k) total += m.exp(1, k);
            for (int j = 1; j < l1; ++j) out_m.set_exp(1, j, m.exp(1, l1 - j));
            out_m.set_exp(1, l1, kb - total);
            for (int k = 1; k <= l2; ++k) out_m.set_exp(2, k, m.exp(2, k));
            if (!out_m.is_nonnegative()) throw std::logic_error("mutated coefficient is not a polynomial");
            return out_m;
        });
    };

    for (const auto &[dir, fn] : d.rays) {
        auto [a, b] = dir;
        int na = l1 * b - a;
        if (na < 0) throw std::logic_error("ray " + dir_str(a, b) + " lies beyond slope 1/l1");
        if (na == 0) {
            for (int k = 1; k <= fn.max_power(); ++k) {
                CoeffPoly expect = k <= l2 ? CoeffPoly::var(2, k) : CoeffPoly();
                if (convert(fn[k], k * b) != expect) throw std::logic_error("ray (l1,1) does not mutate to P2");
            }
            continue;
        }
        int K = out.order / (na + b);
        if (K == 0) continue;
        WallFn g(K);
        for (int k = 1; k <= K; ++k) {
            if (k > fn.max_power()) throw std::logic_error("mutation input truncated too early");
            g[k] = convert(fn[k], k * b);
        }
        if (!g.is_one()) out.rays.emplace(Exponent{na, b}, std::move(g));
    }
    // The negative half of the y-axis carried P2; it lands on R_{<=0}(l1, 1).
    int K = out.order / (l1 + 1);
    if (K > 0) {
        WallFn g(K);
        for (int k = 1; k <= std::min(K, l2); ++k) g[k] = CoeffPoly::var(2, k) * CoeffPoly::monomial(Mono::var(1, l1, k));
        out.rays.emplace(Exponent{l1, 1}, std::move(g));
    }
    return out;
}

LatticeContext::LatticeContext(Exponent a, Exponent b) : m1(a), m2(b) {
    if (lattice_gcd(m1.first, m1.second) != 1 || lattice_gcd(m2.first, m2.second) != 1)
        throw std::invalid_argument("lattice generators must be primitive");
    if (ell() == 0) throw std::invalid_argument("lattice generators must be independent");
}

int LatticeContext::ell() const { return std::abs(m1.first * m2.second - m1.second * m2.first); }

int LatticeContext::ind(int p, int q) const {
    int mx = p * m1.first + q * m2.first, my = p * m1.second + q * m2.second;
    int g = lattice_gcd(mx, my);
    if (g == 0) throw std::invalid_argument("zero direction");
    int nx = -my / g, ny = mx / g;
    return lattice_gcd(nx * m1.first + ny * m1.second, nx * m2.first + ny * m2.second);
}

WallFn scaled_coefficients(int p, int q, int ell, int l1, int l2, int dmax) {
    GradingWeights w;
    w.north.assign(static_cast<std::size_t>(ell * l1) + 1, CoeffPoly());
    w.east.assign(static_cast<std::size_t>(ell * l2) + 1, CoeffPoly());
    w.north[0] = w.east[0] = CoeffPoly(1);
    for (int j = 1; j <= l1; ++j) w.north[ell * j] = CoeffPoly::var(1, j);
    for (int j = 1; j <= l2; ++j) w.east[ell * j] = CoeffPoly::var(2, j);
    WallFn out(std::max(0, dmax));
    for (int dd = 1; dd <= dmax; ++dd) {
        int k = ell * dd;
        auto [d1, d2] = choose_dvec(p, q, k, 1);
        out[dd] = enumerate_weighted(d1, d2, k * p, k * q, w, Predicate::Tight);
    }
    return out;
}

std::map<Exponent, WallFn, SlopeLess> nonstandard_commutator(const LatticeContext &ctx, int l1, int l2, int order) {
    std::map<Exponent, WallFn, SlopeLess> out;
    const int ell = ctx.ell();
    for (int p = 1; p < order; ++p)
        for (int q = 1; p + q <= order; ++q) {
            if (std::gcd(p, q) != 1) continue;
            int id = ctx.ind(p, q);
            if (ell % id != 0) throw std::logic_error("index does not divide the lattice index");
            WallFn f = scaled_coefficients(p, q, ell, l1, l2, order / (p + q)).pow(ell / id);
            if (!f.is_one()) out.emplace(Exponent{p, q}, std::move(f));
        }
    return out;
}

}  // namespace rk2
