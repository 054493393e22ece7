#pragma once

// Euler characteristics of framed quiver moduli and relative Gromov-Witten
// invariants from shadowed-grading counts.  Coefficient variables are read as
// elementary symmetric polynomials: p_{1,j} = e_j(s_1..s_l1), p_{2,j} = e_j(t_1..t_l2).

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rk2/poly.hpp"
#include "rk2/series1.hpp"

namespace rk2 {

struct OrderedPartition {
    std::vector<int> parts;

    int length() const { return static_cast<int>(parts.size()); }
    int total() const;
    static OrderedPartition parse(const std::string &s);  // "3,0,0" or "3+0+0"
    std::string str() const;                              // "3+0+0"
    friend auto operator<=>(const OrderedPartition &, const OrderedPartition &) = default;
};

using PartitionPair = std::pair<OrderedPartition, OrderedPartition>;

// mu^{Q}_{P}: expansion of the monomial q in s^{P1} t^{P2}.
std::map<PartitionPair, Int> elementary_expand(const Mono &q, int l1, int l2);
// Same expansion for a whole polynomial, written back as a polynomial whose
// slot (1,i) holds the exponent of s_i and slot (2,j) that of t_j.
CoeffPoly expand_in_roots(const CoeffPoly &p, int l1, int l2);

// lambda^{(m)}_{a,b} at z^k: sum of shadowed (tight for m = 1) gradings.
CoeffPoly lambda_power(int a, int b, int m, int k, int l1, int l2);

enum class Framing { Back, Front };
Framing parse_framing(const std::string &s);

Int euler_char(int a, int b, int k, const OrderedPartition &P1, const OrderedPartition &P2,
                Framing framing = Framing::Back);
Rat gw_invariant(int a, int b, int k, const OrderedPartition &P1, const OrderedPartition &P2);

// Every nonzero value for one (a, b, k), computing each lambda^{(i)} once.
std::map<PartitionPair, Int> euler_table(int a, int b, int k, int l1, int l2, Framing framing = Framing::Back);
std::map<PartitionPair, Rat> gw_table(int a, int b, int k, int l1, int l2);

// Coefficient of s^{P1} t^{P2} in a polynomial produced by expand_in_roots.
template <class C>
C root_coeff(const Poly<C> &p, const OrderedPartition &P1, const OrderedPartition &P2) {
    return p.coeff(Mono::from_vectors(P1.parts, P2.parts));
}

}  // namespace rk2
