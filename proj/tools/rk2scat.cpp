// rk2scat: batch front-end for rank-2 scattering diagrams.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "config.hpp"
#include "rk2/broken.hpp"
#include "rk2/dyck.hpp"
#include "rk2/greedy.hpp"
#include "rk2/invariants.hpp"
#include "rk2/scatter.hpp"
#include "verify.hpp"

#ifndef RK2_GOLDEN_DIR
#define RK2_GOLDEN_DIR "tests/golden"
#endif

using namespace rk2;
using namespace rk2::cli;

namespace {

Json point_json(const RPoint &q) { return {q.first.get_str(), q.second.get_str()}; }

Json exponent_json(Exponent e) { return {e.first, e.second}; }

void cmd_scat(const RunConfig &cfg, int max_x, int max_y) {
    KsOptions opt;
    opt.order = cfg.order;
    opt.max_x = max_x;
    opt.max_y = max_y;
    auto d = ks_complete(InitialData::generic(cfg.l1, cfg.l2), opt);
    Json j;
    j["l1"] = cfg.l1;
    j["l2"] = cfg.l2;
    j["order"] = cfg.order;
    Json rays = Json::array();
    for (const auto &[dir, f] : d.rays) {
        Json fn = wall_json(f, dir, cfg);
        if (fn.size() <= 1) continue;
        Json r;
        r["dir"] = exponent_json(dir);
        r["fn"] = std::move(fn);
        rays.push_back(std::move(r));
    }
    j["rays"] = std::move(rays);
    emit(j, cfg);
}

void cmd_wall(const RunConfig &cfg, int a, int b, int m, int kmax, std::vector<int> dvec) {
    if (kmax < 0) kmax = cfg.order / (a + b);
    WallFn f = dvec.empty() ? wall_fn_tight(a, b, m, GradingWeights::generic(cfg.l1, cfg.l2), kmax)
                            : wall_fn_tight(a, b, m, GradingWeights::generic(cfg.l1, cfg.l2), kmax,
                                            [&](int) { return std::pair<int, int>(dvec[0], dvec[1]); });
    Json j;
    j["dir"] = {a, b};
    j["m"] = m;
    j["kmax"] = kmax;
    j["fn"] = wall_json(f, {a, b}, cfg);
    emit(j, cfg);
}

void cmd_gradings(const RunConfig &cfg, int d1, int d2, int p, int q, const std::string &pred_name, bool list) {
    Predicate pred = parse_predicate(pred_name);
    Json items = Json::array();
    long count = 0;
    PolyAccumulator<Int> sum;
    for_each_grading(d1, d2, p, q, GradingWeights::generic(cfg.l1, cfg.l2), pred,
                     [&](const DyckGrading &g, const CoeffPoly &w) {
                         ++count;
                         sum.add(w);
                         if (!list) return;
                         Json item = grading_to_json(g);
                         item["weight"] = poly_json(w, cfg);
                         items.push_back(std::move(item));
                     });
    Json j;
    j["d1"] = d1;
    j["d2"] = d2;
    j["p"] = p;
    j["q"] = q;
    j["predicate"] = predicate_name(pred);
    j["count"] = count;
    j["sum"] = poly_json(sum.take(), cfg);
    if (list) j["gradings"] = std::move(items);
    emit(j, cfg);
}

void cmd_greedy(const RunConfig &cfg, int d1, int d2) {
    Json j;
    j["d1"] = d1;
    j["d2"] = d2;
    j["element"] = series_json(greedy_element(d1, d2, cfg.l1, cfg.l2), cfg);
    emit(j, cfg);
}

void cmd_theta(const RunConfig &cfg, std::vector<int> m0v, std::vector<std::string> qv, bool lines) {
    auto d = ks_complete(cfg.l1, cfg.l2, cfg.order);
    Exponent m0{m0v.at(0), m0v.at(1)};
    RPoint q = qv.empty() ? first_quadrant_point() : RPoint{parse_rational(qv.at(0)), parse_rational(qv.at(1))};
    ThetaFunction t = theta(d, m0, q);
    Json j;
    j["m0"] = exponent_json(m0);
    j["Q"] = point_json(q);
    j["order"] = cfg.order;
    j["terms"] = series_json(t.terms, cfg);
    if (lines) {
        Json arr = Json::array();
        for (const auto &bl : enumerate_broken(d, m0, q)) {
            Json bends = Json::array();
            for (const auto &b : bl.bends) {
                Json jb;
                jb["wall"] = exponent_json(b.wall);
                jb["line"] = b.line;
                jb["power"] = b.power;
                jb["at"] = point_json(b.at);
                jb["exponent"] = exponent_json(b.exponent);
                bends.push_back(std::move(jb));
            }
            Json jl;
            jl["bends"] = std::move(bends);
            jl["final"] = exponent_json(bl.final_exponent);
            jl["weight"] = poly_json(bl.weight, cfg);
            arr.push_back(std::move(jl));
        }
        j["lines"] = std::move(arr);
    }
    emit(j, cfg);
}

template <class V>
void invariant_output(const RunConfig &cfg, const char *key, int a, int b, int k, const std::string &p1,
                      const std::string &p2, const std::string &framing, auto single, auto table) {
    Json j;
    j["a"] = a;
    j["b"] = b;
    j["k"] = k;
    if (!framing.empty()) j["framing"] = framing;
    auto str = [](const V &v) {
        if constexpr (std::is_same_v<V, Rat>) return v.get_str();
        else return v.str();
    };
    if (!p1.empty() || !p2.empty()) {
        auto P1 = OrderedPartition::parse(p1), P2 = OrderedPartition::parse(p2);
        j["P1"] = P1.str();
        j["P2"] = P2.str();
        j[key] = str(single(P1, P2));
    } else {
        Json rows = Json::array();
        for (const auto &[pp, v] : table()) {
            Json row;
            row["P1"] = pp.first.str();
            row["P2"] = pp.second.str();
            row[key] = str(v);
            rows.push_back(std::move(row));
        }
        j["l1"] = cfg.l1;
        j["l2"] = cfg.l2;
        j["table"] = std::move(rows);
    }
    emit(j, cfg);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Rank-2 scattering diagrams, gradings, greedy elements, theta functions and invariants"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::string spec_path, mode;
    auto *o_l1 = app.add_option("--l1", cfg.l1, "l1, degree of P1");
    auto *o_l2 = app.add_option("--l2", cfg.l2, "l2, degree of P2");
    auto *o_order = app.add_option("--order", cfg.order, "truncation order");
    app.add_option("--spec", spec_path, "run configuration json");
    auto *o_mode = app.add_option("--mode", mode, "integer or rational")->check(CLI::IsMember({"integer", "rational"}));
    auto *o_out = app.add_option("--out", cfg.out, "output path (default stdout)");

    auto *scat = app.add_subcommand("scat", "consistent completion of the initial diagram");
    int max_x = -1, max_y = -1;
    scat->add_option("--max-x", max_x, "drop terms with x-degree above this");
    scat->add_option("--max-y", max_y, "drop terms with y-degree above this");

    auto *wall = app.add_subcommand("wall", "wall function from tight or shadowed gradings");
    int a = 1, b = 1, m = 1, kmax = -1, k = 1;
    std::vector<int> dvec;
    wall->add_option("--a", a)->required();
    wall->add_option("--b", b)->required();
    wall->add_option("--m", m, "power of the wall function");
    wall->add_option("--kmax", kmax, "highest power of z (default order/(a+b))");
    wall->add_option("--dvec", dvec, "d1,d2 override")->delimiter(',')->expected(2);

    auto *grad = app.add_subcommand("gradings", "enumerate Dyck path gradings");
    int d1 = 1, d2 = 1, p = 0, q = 0;
    std::string pred = "compatible";
    bool list = false;
    grad->add_option("--d1", d1)->required();
    grad->add_option("--d2", d2)->required();
    grad->add_option("--p", p)->required();
    grad->add_option("--q", q)->required();
    grad->add_option("--pred", pred, "compatible, shadowed, tight, shadowed_plus, shadowed_minus");
    grad->add_flag("--list", list, "print every grading");

    auto *greedy = app.add_subcommand("greedy", "greedy element x[d1,d2]");
    greedy->add_option("--d1", d1)->required();
    greedy->add_option("--d2", d2)->required();

    auto *th = app.add_subcommand("theta", "theta function from broken lines");
    std::vector<int> m0;
    std::vector<std::string> qpt;
    bool lines = false;
    th->add_option("--m0", m0, "initial exponent a,b")->delimiter(',')->expected(2)->required();
    th->add_option("--Q", qpt, "endpoint qx,qy (rationals)")->delimiter(',')->expected(2);
    th->add_flag("--lines", lines, "include the broken lines");

    auto *euler = app.add_subcommand("euler", "Euler characteristic of framed moduli");
    std::string p1, p2, framing = "back";
    euler->add_option("--a", a)->required();
    euler->add_option("--b", b)->required();
    euler->add_option("--k", k)->required();
    euler->add_option("--p1", p1, "ordered partition, e.g. 3,0,0");
    euler->add_option("--p2", p2, "ordered partition");
    euler->add_option("--framing", framing)->check(CLI::IsMember({"back", "front"}));

    auto *gw = app.add_subcommand("gw", "relative Gromov-Witten invariant");
    gw->add_option("--a", a)->required();
    gw->add_option("--b", b)->required();
    gw->add_option("--k", k)->required();
    gw->add_option("--p1", p1, "ordered partition");
    gw->add_option("--p2", p2, "ordered partition");

    auto *verify = app.add_subcommand("verify", "cross-check every route and compare golden files");
    VerifyOptions vopt;
    vopt.golden_dir = RK2_GOLDEN_DIR;
    verify->add_option("--golden-dir", vopt.golden_dir);
    verify->add_flag("--regenerate", vopt.regenerate, "rewrite the golden files first");
    verify->add_option("--tight-order", vopt.tight_order);
    verify->add_option("--greedy-max", vopt.greedy_max);
    verify->add_option("--theta-max", vopt.theta_max);

    CLI11_PARSE(app, argc, argv);

    try {
        if (!spec_path.empty()) {
            std::ifstream f(spec_path);
            if (!f) throw std::runtime_error("cannot read " + spec_path);
            RunConfig from_file;
            from_file.load(Json::parse(f));
            // Explicit flags win over the file.
            if (!o_l1->count()) cfg.l1 = from_file.l1;
            if (!o_l2->count()) cfg.l2 = from_file.l2;
            if (!o_order->count()) cfg.order = from_file.order;
            if (!o_out->count()) cfg.out = from_file.out;
            if (!o_mode->count()) cfg.rational = from_file.rational;
            cfg.binomial = from_file.binomial;
            cfg.values = from_file.values;
        }
        if (o_mode->count()) cfg.rational = mode == "rational";
        cfg.validate();

        if (*scat) cmd_scat(cfg, max_x, max_y);
        if (*wall) cmd_wall(cfg, a, b, m, kmax, dvec);
        if (*grad) cmd_gradings(cfg, d1, d2, p, q, pred, list);
        if (*greedy) cmd_greedy(cfg, d1, d2);
        if (*th) cmd_theta(cfg, m0, qpt, lines);
        if (*euler) {
            Framing fr = parse_framing(framing);
            invariant_output<Int>(
                cfg, "chi", a, b, k, p1, p2, framing,
                [&](const OrderedPartition &x, const OrderedPartition &y) { return euler_char(a, b, k, x, y, fr); },
                [&] { return euler_table(a, b, k, cfg.l1, cfg.l2, fr); });
        }
        if (*gw) {
            invariant_output<Rat>(
                cfg, "N", a, b, k, p1, p2, "",
                [&](const OrderedPartition &x, const OrderedPartition &y) { return gw_invariant(a, b, k, x, y); },
                [&] { return gw_table(a, b, k, cfg.l1, cfg.l2); });
        }
        if (*verify) {
            auto results = run_verify(cfg, vopt);
            std::string report = format_report(results);
            if (cfg.out.empty()) {
                std::cout << report;
            } else {
                std::ofstream(cfg.out, std::ios::binary) << report;
            }
            for (const auto &r : results)
                if (!r.ok) {
                    std::cerr << "mismatch in " << r.name << ": " << r.detail << "\n";
                    return 1;
                }
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
