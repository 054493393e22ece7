#pragma once

// Rank-2 scattering diagrams Scat(P1, P2): two initial lines along the axes
// plus rays R_{<=0}(a,b), a,b > 0, each carrying a one-variable wall function
// in z = x^a y^b.
//
// Truncation is by lattice degree relative to the monomial being transported:
// a term x^{m0 + r} is kept while r_x + r_y <= order (and, when a box is
// given, r_x <= max_x, r_y <= max_y).  For generic coefficients this is the
// weighted coefficient degree.

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rk2/dyck.hpp"
#include "rk2/json_io.hpp"
#include "rk2/laurent.hpp"
#include "rk2/poly.hpp"
#include "rk2/series1.hpp"

namespace rk2 {

// Orders primitive third-quadrant directions by increasing slope b/a.
struct SlopeLess {
    bool operator()(const Exponent &u, const Exponent &v) const {
        return static_cast<long>(u.second) * v.first < static_cast<long>(v.second) * u.first;
    }
};

// Change-of-lattice index of a direction; nullptr means 1 everywhere.
using IndexFn = std::function<int(int, int)>;

struct InitialData {
    int l1 = 1, l2 = 1;
    WallFn P1, P2;  // P1 in x, P2 in y

    static InitialData generic(int l1, int l2);
    static InitialData from_json(const Json &j);
    Json to_json() const;
};

struct Ray {
    Exponent dir;
    WallFn fn;
};

class ScatteringDiagram2 {
public:
    InitialData init;
    int order = 0;
    int max_x = -1, max_y = -1;  // box truncation, -1 for none
    IndexFn index;
    std::map<Exponent, WallFn, SlopeLess> rays;

    int l1() const { return init.l1; }
    int l2() const { return init.l2; }
    int ind(int a, int b) const { return index ? index(a, b) : 1; }
    // True when x^{m0+r} survives truncation.
    bool keeps(int rx, int ry) const {
        return rx + ry <= order && (max_x < 0 || rx <= max_x) && (max_y < 0 || ry <= max_y);
    }
    // Wall function on R_{<=0}(a,b), or nullptr when trivial.
    const WallFn *ray(int a, int b) const;
    Json to_json() const;
};

struct KsOptions {
    int order = 6;
    int max_x = -1, max_y = -1;
    IndexFn index;
};

// Consistent completion by the order-by-order algorithm.
ScatteringDiagram2 ks_complete(const InitialData &init, const KsOptions &opt);
ScatteringDiagram2 ks_complete(int l1, int l2, int order);
// Same diagram, recomputing full loop products at every order.  Slow; kept
// as an independent check of the incremental engine.
ScatteringDiagram2 ks_complete_naive(const InitialData &init, int order, IndexFn index = nullptr);

// weight * x^mono transported across the wall through `point` carrying f(z),
// z = x^dir.  orientation +1 crosses counterclockwise.  Terms with relative
// lattice degree above `order` are dropped.
Series2 wall_cross(const WallFn &f, Exponent dir, Exponent point, Exponent mono, const CoeffPoly &weight,
                   int orientation, int order, int index = 1);

// Path-ordered product of a counterclockwise loop starting just above the
// positive x-axis, applied to weight * x^mono.
Series2 loop_product(const ScatteringDiagram2 &d, Exponent mono, const CoeffPoly &weight = CoeffPoly(1));
bool is_consistent(const ScatteringDiagram2 &d);

// A d-vector for the tight/shadowed formula at ray (a,b), power m, index k.
std::pair<int, int> choose_dvec(int a, int b, int k, int m);
// The first `count` admissible d-vectors in order of increasing d1 + d2.
std::vector<std::pair<int, int>> admissible_dvecs(int a, int b, int k, int m, int count);
bool is_admissible_dvec(int a, int b, int k, int m, int d1, int d2);

// (f_{R<=0(a,b)})^m through z^kmax by summing shadowed gradings (tight ones
// for m = 1).  `dvec` overrides choose_dvec.
WallFn wall_fn_tight(int a, int b, int m, const GradingWeights &w, int kmax,
                     const std::function<std::pair<int, int>(int)> &dvec = nullptr);
WallFn wall_fn_tight(int a, int b, int m, int l1, int l2, int kmax);

// d-vectors d_n, n in Z.
std::pair<int, int> dvector(int n, int l1, int l2);

struct ClusterWall {
    int n;
    Exponent dir;  // d_n, primitive
    WallFn fn;     // zeta_n in z = x^{d_n}
};
// zeta_n in z = x^{d_n} for any n outside {1,2}; throws when the W exponent
// is not integral.
WallFn zeta(int n, int l1, int l2);
// Cluster-complex rays for n in [nmin, nmax] \ {0,1,2,3}; n with d_n outside
// the open first quadrant are skipped.
std::vector<ClusterWall> cluster_walls(int l1, int l2, int nmin, int nmax);

// Badlands cone C_{l1,l2}.  Boundary generators are (2 l1, l1 l2 + sqrt(disc))
// and its mirror (l1 l2 + sqrt(disc), 2 l2).
struct Badlands {
    int l1, l2;
    long disc;  // l1^2 l2^2 - 4 l1 l2
    bool empty() const { return disc < 0; }
    bool degenerate() const { return disc == 0; }
    bool is_inside(int a, int b) const;
};
Badlands badlands(int l1, int l2);

// Mutation of a consistent diagram in direction `side`, returned in standard
// form over the new coefficient variables.  Side 1 uses p'_{1,k} =
// p_{1,l1-k} / p_{1,l1}; side 2 is the mirror image.
ScatteringDiagram2 mutate(const ScatteringDiagram2 &d, int side = 1);

// Primitive sublattice data for the non-standard commutator.
struct LatticeContext {
    Exponent m1, m2;
    LatticeContext(Exponent m1, Exponent m2);
    int ell() const;
    // Index of the direction p m1 + q m2.
    int ind(int p, int q) const;
};

// Rays of Scat(1 + sum p_{1,k} x^{k m1}, 1 + sum p_{2,k} x^{k m2}) in the
// coordinates of the basis (m1, m2), through coefficient degree `order`.
std::map<Exponent, WallFn, SlopeLess> nonstandard_commutator(const LatticeContext &ctx, int l1, int l2, int order);
// <dp,dq>_ell for d = 1..dmax, as a series in z.
WallFn scaled_coefficients(int p, int q, int ell, int l1, int l2, int dmax);

}  // namespace rk2
