#pragma once

// Maximal Dyck paths and gradings on them.
//
// Edges are addressed two ways: by position along the path (0-based) and by
// label, u_1..u_{d1} for horizontal (east) edges and v_1..v_{d2} for vertical
// (north) edges.  Subpaths are cyclic: ->ef runs forward from e to f,
// wrapping past the end of the path when f precedes e.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rk2/poly.hpp"

namespace rk2 {

enum class Step : unsigned char { E, N };

struct Edge {
    Step kind;
    int index;  // 1-based: u_index or v_index
    friend bool operator==(const Edge &, const Edge &) = default;
    friend auto operator<=>(const Edge &, const Edge &) = default;
    std::string str() const { return (kind == Step::E ? "u" : "v") + std::to_string(index); }
};

inline Edge u_edge(int i) { return {Step::E, i}; }
inline Edge v_edge(int j) { return {Step::N, j}; }

class DyckPath {
public:
    DyckPath() = default;
    DyckPath(int d1, int d2, std::vector<Step> steps);

    int d1() const noexcept { return d1_; }
    int d2() const noexcept { return d2_; }
    int size() const noexcept { return static_cast<int>(steps_.size()); }
    const std::vector<Step> &steps() const noexcept { return steps_; }

    int position(Edge e) const;
    Edge edge_at(int pos) const;
    std::string str() const;

private:
    int d1_ = 0, d2_ = 0;
    std::vector<Step> steps_;
    std::vector<int> pos_e_, pos_n_;  // position of u_i / v_j (0-based label)
    std::vector<int> label_;          // 1-based label of the edge at each position
};

DyckPath maximal_dyck_path(int d1, int d2);

// Number of (E, N) edges on the cyclic subpath ->ef, inclusive.
std::pair<int, int> subpath_counts(const DyckPath &path, Edge e, Edge f);

struct DyckGrading {
    DyckPath path;
    std::vector<int> omega_e;  // omega(u_1..u_{d1})
    std::vector<int> omega_n;  // omega(v_1..v_{d2})

    DyckGrading() = default;
    DyckGrading(DyckPath p, std::vector<int> oe, std::vector<int> on);

    int value(Edge e) const { return e.kind == Step::E ? omega_e.at(e.index - 1) : omega_n.at(e.index - 1); }
    int p() const;  // omega(P_N)
    int q() const;  // omega(P_E)
};

nlohmann::ordered_json grading_to_json(const DyckGrading &g);
DyckGrading grading_from_json(const nlohmann::ordered_json &j);

std::vector<Edge> shadow(const DyckGrading &g, Edge e);
bool is_compatible(const DyckGrading &g);
bool is_shadowed(const DyckGrading &g);
bool is_shadowed_plus(const DyckGrading &g);   // compatible and omega(P_N \ sh(P_E)) = 0
bool is_shadowed_minus(const DyckGrading &g);  // compatible and omega(P_E \ sh(P_N)) = 0
bool is_tight(const DyckGrading &g);

enum class Predicate { Compatible, Shadowed, Tight, ShadowedPlus, ShadowedMinus };
bool satisfies(const DyckGrading &g, Predicate pred);
Predicate parse_predicate(const std::string &name);
std::string predicate_name(Predicate pred);

// Weight attached to each edge value.  north[k] weighs a vertical edge with
// value k, east[k] a horizontal edge; index 0 must be 1.  A zero entry bars
// that value.  The generic choice is north[k] = p_{1,k}, east[k] = p_{2,k}.
struct GradingWeights {
    std::vector<CoeffPoly> north;
    std::vector<CoeffPoly> east;

    static GradingWeights generic(int l1, int l2);
    int max_north() const { return static_cast<int>(north.size()) - 1; }
    int max_east() const { return static_cast<int>(east.size()) - 1; }
};

enum class EnumMode { Pruned, Naive };

// Calls visit(grading, weight) for every grading with omega(P_N) = p,
// omega(P_E) = q, nonzero weight, passing the predicate.
void for_each_grading(int d1, int d2, int p, int q, const GradingWeights &w, Predicate pred,
                      const std::function<void(const DyckGrading &, const CoeffPoly &)> &visit,
                      EnumMode mode = EnumMode::Pruned);

// Sum of weights over the same set.
CoeffPoly enumerate_weighted(int d1, int d2, int p, int q, const GradingWeights &w, Predicate pred,
                             EnumMode mode = EnumMode::Pruned);
CoeffPoly enumerate_weighted(int d1, int d2, int p, int q, int l1, int l2, Predicate pred,
                             EnumMode mode = EnumMode::Pruned);

}  // namespace rk2
