#include "verify.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "rk2/broken.hpp"
#include "rk2/dyck.hpp"
#include "rk2/greedy.hpp"
#include "rk2/scatter.hpp"

namespace rk2::cli {

namespace {

struct GoldenSpec {
    std::string name;
    int l1, l2, order;
    std::vector<Exponent> dirs;  // empty: every ray
    int kmax;                    // 0: full stored function
    bool complete;               // no rays beyond the listed ones
};

const std::vector<GoldenSpec> &golden_specs() {
    static const std::vector<GoldenSpec> specs{
        {"g2", 3, 1, 9, {}, 0, true},
        {"affine22", 2, 2, 6, {{1, 1}}, 3, false},
        {"affine41", 4, 1, 9, {{2, 1}}, 3, false},
    };
    return specs;
}

std::string dir_str(Exponent d) { return "(" + std::to_string(d.first) + "," + std::to_string(d.second) + ")"; }

std::string show(const CoeffPoly &p) { return p.is_zero() ? "0" : p.str(); }

std::string mismatch(const std::string &where, const CoeffPoly &want, const CoeffPoly &got) {
    return where + ": expected " + show(want) + ", got " + show(got);
}

CoeffPoly ray_coeff(const ScatteringDiagram2 &d, Exponent dir, int k) {
    const WallFn *f = d.ray(dir.first, dir.second);
    if (!f || k > f->max_power()) return k == 0 ? CoeffPoly(1) : CoeffPoly();
    return (*f)[k];
}

CheckResult ks_vs_tight(const ScatteringDiagram2 &d, int cap) {
    CheckResult r{"ks = tight gradings", true, ""};
    int T = std::min(cap, d.order), compared = 0;
    for (int s = 2; s <= T; ++s)
        for (int a = 1; a < s; ++a) {
            int b = s - a;
            if (std::gcd(a, b) != 1) continue;
            WallFn t = wall_fn_tight(a, b, 1, d.l1(), d.l2(), T / s);
            for (int k = 1; k <= T / s; ++k) {
                CoeffPoly ks = ray_coeff(d, {a, b}, k);
                ++compared;
                if (ks != t[k]) {
                    r.ok = false;
                    r.detail = mismatch("ray " + dir_str({a, b}) + " z^" + std::to_string(k), ks, t[k]);
                    return r;
                }
            }
        }
    r.detail = std::to_string(compared) + " coefficients through order " + std::to_string(T);
    return r;
}

CheckResult greedy_vs_compatible(int l1, int l2, int dmax) {
    CheckResult r{"greedy = compatible gradings", true, ""};
    int compared = 0;
    for (int d1 = 1; d1 <= dmax; ++d1)
        for (int d2 = 1; d2 <= dmax; ++d2) {
            GreedyContext g(d1, d2, l1, l2);
            for (int p = 0; p <= g.p_bound(); ++p)
                for (int q = 0; q <= g.q_bound(); ++q) {
                    CoeffPoly want = enumerate_weighted(d1, d2, p, q, l1, l2, Predicate::Compatible);
                    const CoeffPoly &got = g.coeff(p, q);
                    ++compared;
                    if (want != got) {
                        r.ok = false;
                        r.detail = mismatch("c(" + std::to_string(p) + "," + std::to_string(q) + ") at d=" +
                                                dir_str({d1, d2}),
                                            want, got);
                        return r;
                    }
                }
        }
    r.detail = std::to_string(compared) + " coefficients, d1,d2 <= " + std::to_string(dmax);
    return r;
}

CheckResult theta_vs_greedy(int l1, int l2, int dmax) {
    CheckResult r{"theta = greedy", true, ""};
    for (int d1 = 1; d1 <= dmax; ++d1)
        for (int d2 = 1; d2 <= dmax; ++d2) {
            GreedyContext g(d1, d2, l1, l2);
            auto d = ks_complete(l1, l2, g.p_bound() + g.q_bound());
            Series2 th = theta(d, {-d1, -d2}).terms, gr = g.element();
            std::map<Exponent, bool> seen;
            for (const auto &[e, c] : th.terms()) seen[e] = true;
            for (const auto &[e, c] : gr.terms()) seen[e] = true;
            for (const auto &[e, unused] : seen) {
                if (th.coeff(e) == gr.coeff(e)) continue;
                r.ok = false;
                r.detail = mismatch("x^" + dir_str(e) + " at d=" + dir_str({d1, d2}), gr.coeff(e), th.coeff(e));
                return r;
            }
        }
    r.detail = "d1,d2 <= " + std::to_string(dmax);
    return r;
}

CheckResult sweeps(const ScatteringDiagram2 &d) {
    CheckResult r{"positivity and homogeneity", true, ""};
    int terms = 0;
    for (const auto &[dir, f] : d.rays)
        for (int k = 1; k <= f.max_power(); ++k) {
            terms += static_cast<int>(f[k].size());
            std::string where = "ray " + dir_str(dir) + " z^" + std::to_string(k);
            if (!f[k].has_nonnegative_coefficients()) {
                r.ok = false;
                r.detail = where + " has a negative coefficient: " + show(f[k]);
                return r;
            }
            if (!f[k].is_homogeneous(k * dir.first, k * dir.second)) {
                r.ok = false;
                r.detail = where + " is not homogeneous: " + show(f[k]);
                return r;
            }
        }
    r.detail = std::to_string(d.rays.size()) + " rays, " + std::to_string(terms) + " terms";
    return r;
}

Json load_json(const std::filesystem::path &p) {
    std::ifstream f(p);
    if (!f) throw std::runtime_error("cannot read " + p.string());
    return Json::parse(f);
}

CheckResult golden_check(const ScatteringDiagram2 &d, const GoldenSpec &spec, const std::string &dir) {
    CheckResult r{"golden " + spec.name, true, ""};
    Json g = load_json(std::filesystem::path(dir) / (spec.name + ".json"));
    std::vector<Exponent> listed;
    int compared = 0;
    for (const auto &ray : g.at("rays")) {
        Exponent e{ray.at("dir").at(0).get<int>(), ray.at("dir").at(1).get<int>()};
        listed.push_back(e);
        int K = std::min(ray.at("kmax").get<int>(), d.order / (e.first + e.second));
        std::map<int, CoeffPoly> want;
        for (const auto &t : ray.at("fn")) {
            int k = t.at("exp").at(0).get<int>() / e.first;
            want[k] = poly_from_json<Int>(t.at("coeff"));
        }
        for (int k = 1; k <= K; ++k) {
            CoeffPoly w = want.count(k) ? want[k] : CoeffPoly();
            CoeffPoly got = ray_coeff(d, e, k);
            ++compared;
            if (w != got) {
                r.ok = false;
                r.detail = mismatch("ray " + dir_str(e) + " z^" + std::to_string(k), w, got);
                return r;
            }
        }
    }
    if (g.at("complete").get<bool>()) {
        for (const auto &[e, f] : d.rays)
            if (std::find(listed.begin(), listed.end(), e) == listed.end()) {
                r.ok = false;
                r.detail = "unexpected ray " + dir_str(e);
                return r;
            }
    }
    r.detail = std::to_string(compared) + " coefficients";
    return r;
}

}  // namespace

void write_goldens(const std::string &dir) {
    std::filesystem::create_directories(dir);
    for (const auto &spec : golden_specs()) {
        auto d = ks_complete(spec.l1, spec.l2, spec.order);
        Json rays = Json::array();
        for (const auto &[e, f] : d.rays) {
            if (!spec.dirs.empty() && std::find(spec.dirs.begin(), spec.dirs.end(), e) == spec.dirs.end()) continue;
            int K = spec.kmax > 0 ? spec.kmax : f.degree();
            Json ray;
            ray["dir"] = {e.first, e.second};
            ray["kmax"] = K;
            ray["fn"] = wall_to_json(f.truncated(K), e, spec.l1, spec.l2);
            rays.push_back(std::move(ray));
        }
        Json g;
        g["name"] = spec.name;
        g["l1"] = spec.l1;
        g["l2"] = spec.l2;
        g["complete"] = spec.complete;
        g["rays"] = std::move(rays);
        std::ofstream f(std::filesystem::path(dir) / (spec.name + ".json"), std::ios::binary);
        f << g.dump(2) << "\n";
    }
}

std::vector<CheckResult> run_verify(const RunConfig &cfg, const VerifyOptions &opt) {
    if (opt.regenerate) write_goldens(opt.golden_dir);
    std::vector<CheckResult> out;
    auto d = ks_complete(cfg.l1, cfg.l2, cfg.order);
    out.push_back(ks_vs_tight(d, opt.tight_order));
    out.push_back(greedy_vs_compatible(cfg.l1, cfg.l2, opt.greedy_max));
    out.push_back(theta_vs_greedy(cfg.l1, cfg.l2, opt.theta_max));
    out.push_back(sweeps(d));
    out.push_back({"loop consistency", is_consistent(d), ""});
    if (!out.back().ok) out.back().detail = "loop product is not the identity";
    for (const auto &spec : golden_specs())
        if (spec.l1 == cfg.l1 && spec.l2 == cfg.l2) out.push_back(golden_check(d, spec, opt.golden_dir));
    return out;
}

std::string format_report(const std::vector<CheckResult> &rs) {
    std::size_t w = 0;
    for (const auto &r : rs) w = std::max(w, r.name.size());
    std::ostringstream s;
    for (const auto &r : rs) {
        s << r.name << std::string(w - r.name.size() + 2, ' ') << (r.ok ? "PASS" : "FAIL");
        if (!r.detail.empty()) s << "  " << r.detail;
        s << "\n";
    }
    return s.str();
}

}  // namespace rk2::cli
