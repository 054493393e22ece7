#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "rk2/json_io.hpp"
#include "rk2/poly.hpp"

namespace rk2::cli {

struct RunConfig {
    int l1 = 1, l2 = 1;
    int order = 6;
    bool rational = false;
    std::string out;
    bool binomial = false;
    std::map<std::pair<int, int>, Rat> values;  // (side, k) -> value

    bool specialized() const { return binomial || !values.empty(); }
    void load(const Json &j);
    void validate() const;

    Specialization<Int> integer_spec() const;
    Specialization<Rat> rational_spec() const;
};

// "p13" -> (1, 3)
std::pair<int, int> parse_variable(const std::string &name);
Rat parse_rational(const std::string &s);

// Coefficients after specialization, in the configured mode.
Json poly_json(const CoeffPoly &p, const RunConfig &cfg);
Json series_json(const Series2 &s, const RunConfig &cfg);
Json wall_json(const WallFn &f, Exponent dir, const RunConfig &cfg);

void emit(const Json &j, const RunConfig &cfg);

}  // namespace rk2::cli
