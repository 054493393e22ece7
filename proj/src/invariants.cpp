#include "rk2/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "rk2/dyck.hpp"
#include "rk2/scatter.hpp"

namespace rk2 {

namespace {

// e_j(x_1..x_l) with x_i stored in slot (side, i).
CoeffPoly elementary(int side, int l, int j) {
    std::vector<CoeffPoly::Term> terms;
    std::vector<int> pick(static_cast<std::size_t>(l), 0);
    for (int i = 0; i < j && i < l; ++i) pick[static_cast<std::size_t>(l - 1 - i)] = 1;
    if (j > l) return CoeffPoly();
    // Walk all 0/1 vectors with j ones in lexicographic order.
    do {
        Mono m;
        for (int i = 0; i < l; ++i)
            if (pick[static_cast<std::size_t>(i)]) m.set_exp(side, i + 1, 1);
        terms.emplace_back(m, Int(1));
    } while (std::next_permutation(pick.begin(), pick.end()));
    return CoeffPoly::from_terms(std::move(terms));
}

class RootExpander {
public:
    RootExpander(int l1, int l2) : l1_(l1), l2_(l2) {
        if (l1 < 1 || l2 < 1 || l1 > kMaxL || l2 > kMaxL) throw std::invalid_argument("bad ell");
    }

    CoeffPoly expand(const Mono &q) {
        CoeffPoly out(1);
        for (int side = 1; side <= 2; ++side) {
            int l = side == 1 ? l1_ : l2_;
            for (int j = 1; j <= kMaxL; ++j) {
                int e = q.exp(side, j);
                if (e == 0) continue;
                if (e < 0 || j > l) return CoeffPoly();
                out *= power(side, l, j, e);
            }
        }
        return out;
    }

private:
    const CoeffPoly &power(int side, int l, int j, int e) {
        auto key = std::make_tuple(side, j, e);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, elementary(side, l, j).pow(e)).first;
        return it->second;
    }

    int l1_, l2_;
    std::map<std::tuple<int, int, int>, CoeffPoly> cache_;
};

Mono root_mono(const OrderedPartition &P1, const OrderedPartition &P2) {
    for (int x : P1.parts)
        if (x < 0) throw std::invalid_argument("negative part");
    for (int x : P2.parts)
        if (x < 0) throw std::invalid_argument("negative part");
    return Mono::from_vectors(P1.parts, P2.parts);
}

// sum_Q lambda(Q) mu^Q_{P1} mu^Q_{P2}
Int pair_with_roots(const CoeffPoly &lambda, const OrderedPartition &P1, const OrderedPartition &P2) {
    RootExpander ex(P1.length(), P2.length());
    Mono target = root_mono(P1, P2);
    Int sum(0);
    for (const auto &[q, c] : lambda.terms()) {
        // The z^k slice is bihomogeneous, so mismatched weights contribute nothing.
        if (q.wdeg(1) != P1.total() || q.wdeg(2) != P2.total()) continue;
        Int mu = ex.expand(q).coeff(target);
        if (!(mu == Int(0))) sum += c * mu;
    }
    return sum;
}

template <class C>
std::map<PartitionPair, C> to_table(const Poly<C> &roots, int l1, int l2) {
    std::map<PartitionPair, C> out;
    for (const auto &[m, c] : roots.terms()) out.emplace(PartitionPair{{m.exps(1, l1)}, {m.exps(2, l2)}}, c);
    return out;
}

void check_dims(int a, int b, int k, int l1, int l2) {
    if (a < 1 || b < 1) throw std::invalid_argument("wall direction must be positive");
    if (std::gcd(a, b) != 1) throw std::invalid_argument("wall direction must be primitive");
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (l1 < 1 || l2 < 1 || l1 > kMaxL || l2 > kMaxL) throw std::invalid_argument("ell out of range");
}

void check_args(int a, int b, int k, const OrderedPartition &P1, const OrderedPartition &P2) {
    if (a < 1 || b < 1) throw std::invalid_argument("wall direction must be positive");
    if (std::gcd(a, b) != 1) throw std::invalid_argument("wall direction must be primitive");
    if (k < 0) throw std::invalid_argument("negative k");
    if (P1.length() < 1 || P2.length() < 1 || P1.length() > kMaxL || P2.length() > kMaxL)
        throw std::invalid_argument("partition length out of range");
    (void)root_mono(P1, P2);
    if (P1.total() != k * a || P2.total() != k * b) throw std::invalid_argument("partition totals must be ka and kb");
}

}  // namespace

int OrderedPartition::total() const {
    int s = 0;
    for (int x : parts) s += x;
    return s;
}

OrderedPartition OrderedPartition::parse(const std::string &s) {
    OrderedPartition p;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, s.find('+') != std::string::npos ? '+' : ',')) {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size() || v < 0) throw std::invalid_argument("bad partition: " + s);
        p.parts.push_back(v);
    }
    if (p.parts.empty()) throw std::invalid_argument("empty partition");
    return p;
}

std::string OrderedPartition::str() const {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += '+';
        out += std::to_string(parts[i]);
    }
    return out;
}

std::map<PartitionPair, Int> elementary_expand(const Mono &q, int l1, int l2) {
    return to_table(RootExpander(l1, l2).expand(q), l1, l2);
}

CoeffPoly expand_in_roots(const CoeffPoly &p, int l1, int l2) {
    RootExpander ex(l1, l2);
    PolyAccumulator<Int> acc;
    for (const auto &[q, c] : p.terms()) acc.add(ex.expand(q) * CoeffPoly(c));
    return acc.take();
}

CoeffPoly lambda_power(int a, int b, int m, int k, int l1, int l2) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    if (k == 0) return CoeffPoly(1);
    auto [d1, d2] = choose_dvec(a, b, k, m);
    return enumerate_weighted(d1, d2, k * a, k * b, l1, l2, m == 1 ? Predicate::Tight : Predicate::Shadowed);
}

Framing parse_framing(const std::string &s) {
    if (s == "back") return Framing::Back;
    if (s == "front") return Framing::Front;
    throw std::invalid_argument("framing must be back or front");
}

Int euler_char(int a, int b, int k, const OrderedPartition &P1, const OrderedPartition &P2, Framing framing) {
    check_args(a, b, k, P1, P2);
    int m = framing == Framing::Back ? b : a;
    return pair_with_roots(lambda_power(a, b, m, k, P1.length(), P2.length()), P1, P2);
}

std::map<PartitionPair, Int> euler_table(int a, int b, int k, int l1, int l2, Framing framing) {
    check_dims(a, b, k, l1, l2);
    int m = framing == Framing::Back ? b : a;
    return to_table(expand_in_roots(lambda_power(a, b, m, k, l1, l2), l1, l2), l1, l2);
}

std::map<PartitionPair, Rat> gw_table(int a, int b, int k, int l1, int l2) {
    check_dims(a, b, k, l1, l2);
    RationalPoly sum;
    for (int i = 1; i <= k; ++i) {
        Rat c = coeff::to_rat(binomial(k, i)) / (i * k);
        if (i % 2 == 0) c = -c;
        sum += to_rational(expand_in_roots(lambda_power(a, b, i, k, l1, l2), l1, l2)) * RationalPoly(c);
    }
    return to_table(sum, l1, l2);
}

Rat gw_invariant(int a, int b, int k, const OrderedPartition &P1, const OrderedPartition &P2) {
    check_args(a, b, k, P1, P2);
    if (k < 1) throw std::invalid_argument("k must be positive");
    Rat sum(0);
    for (int i = 1; i <= k; ++i) {
        Int inner = pair_with_roots(lambda_power(a, b, i, k, P1.length(), P2.length()), P1, P2);
        if (inner == Int(0)) continue;
        Rat term = coeff::to_rat(binomial(k, i)) * coeff::to_rat(inner) / i;
        if (i % 2 == 0) term = -term;
        sum += term;
    }
    sum /= k;
    sum.canonicalize();
    return sum;
}

}  // namespace rk2
