#pragma once

// Broken lines in a rank-2 scattering diagram, theta functions, and the
// structure constants of their products.
//
// Enumeration runs backwards from the endpoint.  Each backward bend at a wall
// with direction v removes j*v from the exponent and multiplies the weight by
// the z^j coefficient of f^{|n.m|}; exponents therefore stay above m0 in the
// product order, which bounds the search together with the truncation order.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rk2/laurent.hpp"
#include "rk2/poly.hpp"
#include "rk2/scatter.hpp"

namespace rk2 {

using RPoint = std::pair<Rat, Rat>;

struct Bend {
    Exponent wall;    // (1,0): x-axis line, (0,1): y-axis line, else ray R<=0 wall
    bool line;        // true for the two initial lines
    int power;        // index j of the chosen term z^j
    RPoint at;        // bend point
    Exponent exponent;  // exponent after the bend
};

struct BrokenLine {
    Exponent m0;
    RPoint endpoint;
    std::vector<Bend> bends;  // in forward order
    Exponent final_exponent;
    CoeffPoly weight;  // c(beta)
};

struct ThetaFunction {
    Exponent m0;
    RPoint endpoint;
    int order = 0;
    Series2 terms;
};

struct BrokenOptions {
    bool positive_axis_bends = true;  // false drops bends on the positive axes
    std::optional<Exponent> final_exponent;  // restrict to one final exponent
};

// True if p lies on the support of a wall of d (including the origin).
bool on_wall(const ScatteringDiagram2 &d, const RPoint &p);
// near + (1/p, 1/p') / 1000 for the first pair of consecutive primes p, p' >= 10007
// that puts the result off every wall.
RPoint generic_point(const ScatteringDiagram2 &d, const RPoint &near);
// Default endpoint Q_+ in the open first quadrant.
RPoint first_quadrant_point();

std::vector<BrokenLine> enumerate_broken(const ScatteringDiagram2 &d, Exponent m0, const RPoint &q,
                                         const BrokenOptions &opt = {});
ThetaFunction theta(const ScatteringDiagram2 &d, Exponent m0, const RPoint &q);
ThetaFunction theta(const ScatteringDiagram2 &d, Exponent m0);

// alpha_z(p1, p2; q) with z a generic point near q.
CoeffPoly structure_constant(const ScatteringDiagram2 &d, Exponent p1, Exponent p2, Exponent q);

// Weighted count of broken lines from (-d1,-d2) to (ka-d1, kb-d2) with no
// bends on the positive axes, at an endpoint where exactly one bend type
// survives.  Throws unless the sufficient one-bending inequality holds.
CoeffPoly one_bending_broken_count(const ScatteringDiagram2 &d, int d1, int d2, int a, int b, int k);
bool satisfies_one_bending_bound(int d1, int d2, int a, int b, int k);

// Angular momentum (q_y, -q_x) . m of a segment through q with exponent m.
Rat angular_momentum(const RPoint &q, Exponent m);

}  // namespace rk2
