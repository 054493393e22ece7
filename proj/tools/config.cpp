#include "config.hpp"

#include <fstream>
#include <iostream>
#include <regex>
#include <stdexcept>

namespace rk2::cli {

std::pair<int, int> parse_variable(const std::string &name) {
    static const std::regex re("p([12])([1-8])");
    std::smatch m;
    if (!std::regex_match(name, m, re)) throw std::invalid_argument("bad coefficient variable: " + name);
    return {std::stoi(m[1]), std::stoi(m[2])};
}

Rat parse_rational(const std::string &s) {
    static const std::regex re("-?[0-9]+(/[0-9]+)?");
    if (!std::regex_match(s, re)) throw std::invalid_argument("bad rational: " + s);
    Rat r(s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

void RunConfig::load(const Json &j) {
    if (j.contains("l1")) l1 = j.at("l1").get<int>();
    if (j.contains("l2")) l2 = j.at("l2").get<int>();
    if (j.contains("order")) order = j.at("order").get<int>();
    if (j.contains("out")) out = j.at("out").get<std::string>();
    if (j.contains("mode")) {
        auto mode = j.at("mode").get<std::string>();
        if (mode != "integer" && mode != "rational") throw std::invalid_argument("mode must be integer or rational");
        rational = mode == "rational";
    }
    if (j.contains("specialize")) {
        const Json &s = j.at("specialize");
        if (s.is_string()) {
            if (s.get<std::string>() != "binomial") throw std::invalid_argument("unknown specialization");
            binomial = true;
        } else {
            for (const auto &[name, v] : s.items())
                values[parse_variable(name)] = v.is_string() ? parse_rational(v.get<std::string>()) : Rat(v.get<long>());
        }
    }
}

void RunConfig::validate() const {
    if (l1 < 1 || l2 < 1 || l1 > kMaxL || l2 > kMaxL) throw std::invalid_argument("l1, l2 must lie in 1..8");
    if (order < 1) throw std::invalid_argument("order must be at least 1");
    for (const auto &[var, v] : values) {
        if (var.second > (var.first == 1 ? l1 : l2))
            throw std::invalid_argument("specialized variable p" + std::to_string(var.first) + std::to_string(var.second) +
                                        " exceeds the declared l");
        if (!rational && v.get_den() != 1) throw std::invalid_argument("rational value needs --mode rational");
    }
}

Specialization<Int> RunConfig::integer_spec() const {
    auto s = binomial ? Specialization<Int>::binomial(l1, l2) : Specialization<Int>{};
    for (const auto &[var, v] : values) s.set(var.first, var.second, Int(v.get_num()));
    return s;
}

Specialization<Rat> RunConfig::rational_spec() const {
    auto s = binomial ? Specialization<Rat>::binomial(l1, l2) : Specialization<Rat>{};
    for (const auto &[var, v] : values) s.set(var.first, var.second, v);
    return s;
}

Json poly_json(const CoeffPoly &p, const RunConfig &cfg) {
    if (cfg.rational) return poly_to_json(to_rational(p).specialize(cfg.rational_spec()), cfg.l1, cfg.l2);
    if (cfg.specialized()) return poly_to_json(p.specialize(cfg.integer_spec()), cfg.l1, cfg.l2);
    return poly_to_json(p, cfg.l1, cfg.l2);
}

Json series_json(const Series2 &s, const RunConfig &cfg) {
    Json arr = Json::array();
    for (const auto &[e, c] : s.terms()) {
        Json coeff = poly_json(c, cfg);
        if (coeff.empty()) continue;
        Json t;
        t["exp"] = {e.first, e.second};
        t["coeff"] = std::move(coeff);
        arr.push_back(std::move(t));
    }
    return arr;
}

Json wall_json(const WallFn &f, Exponent dir, const RunConfig &cfg) {
    Series2 s(f.max_power() * (dir.first + dir.second) + 1, Filtration::Lattice);
    for (int k = 0; k <= f.max_power(); ++k) s.add_term({k * dir.first, k * dir.second}, f[k]);
    return series_json(s, cfg);
}

void emit(const Json &j, const RunConfig &cfg) {
    std::string text = j.dump(2) + "\n";
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + cfg.out);
    f << text;
}

}  // namespace rk2::cli
