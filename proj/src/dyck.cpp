#include "rk2/dyck.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace rk2 {

DyckPath::DyckPath(int d1, int d2, std::vector<Step> steps) : d1_(d1), d2_(d2), steps_(std::move(steps)) {
    label_.resize(steps_.size());
    for (std::size_t pos = 0; pos < steps_.size(); ++pos) {
        if (steps_[pos] == Step::E) {
            pos_e_.push_back(static_cast<int>(pos));
            label_[pos] = static_cast<int>(pos_e_.size());
        } else {
            pos_n_.push_back(static_cast<int>(pos));
            label_[pos] = static_cast<int>(pos_n_.size());
        }
    }
    if (static_cast<int>(pos_e_.size()) != d1 || static_cast<int>(pos_n_.size()) != d2)
        throw std::invalid_argument("step counts do not match (d1, d2)");
}

int DyckPath::position(Edge e) const {
    const auto &v = e.kind == Step::E ? pos_e_ : pos_n_;
    if (e.index < 1 || e.index > static_cast<int>(v.size())) throw std::out_of_range("no edge " + e.str());
    return v[e.index - 1];
}

Edge DyckPath::edge_at(int pos) const { return {steps_.at(pos), label_.at(pos)}; }

std::string DyckPath::str() const {
    std::string s;
    for (Step st : steps_) s += st == Step::E ? 'E' : 'N';
    return s;
}

DyckPath maximal_dyck_path(int d1, int d2) {
    if (d1 < 0 || d2 < 0) throw std::invalid_argument("negative path dimensions");
    std::vector<Step> steps;
    steps.reserve(static_cast<std::size_t>(d1 + d2));
    int placed_e = 0;
    for (int j = 1; j <= d2; ++j) {
        // v_j follows the ceil(j*d1/d2)-th horizontal edge.
        long need = (static_cast<long>(j) * d1 + d2 - 1) / d2;
        while (placed_e < need) {
            steps.push_back(Step::E);
            ++placed_e;
        }
        steps.push_back(Step::N);
    }
    while (placed_e < d1) {
        steps.push_back(Step::E);
        ++placed_e;
    }
    return DyckPath(d1, d2, std::move(steps));
}

std::pair<int, int> subpath_counts(const DyckPath &path, Edge e, Edge f) {
    int n = path.size();
    int a = path.position(e), b = path.position(f);
    int len = (b - a + n) % n + 1;
    int ne = 0, nn = 0;
    for (int i = 0; i < len; ++i) (path.steps()[(a + i) % n] == Step::E ? ne : nn)++;
    return {ne, nn};
}

DyckGrading::DyckGrading(DyckPath p, std::vector<int> oe, std::vector<int> on)
    : path(std::move(p)), omega_e(std::move(oe)), omega_n(std::move(on)) {
    if (static_cast<int>(omega_e.size()) != path.d1() || static_cast<int>(omega_n.size()) != path.d2())
        throw std::invalid_argument("grading size does not match the path");
    for (int x : omega_e)
        if (x < 0) throw std::invalid_argument("negative grading value");
    for (int x : omega_n)
        if (x < 0) throw std::invalid_argument("negative grading value");
}

int DyckGrading::p() const { return std::accumulate(omega_n.begin(), omega_n.end(), 0); }
int DyckGrading::q() const { return std::accumulate(omega_e.begin(), omega_e.end(), 0); }

nlohmann::ordered_json grading_to_json(const DyckGrading &g) {
    nlohmann::ordered_json j;
    j["d"] = {g.path.d1(), g.path.d2()};
    j["omegaE"] = g.omega_e;
    j["omegaN"] = g.omega_n;
    return j;
}

DyckGrading grading_from_json(const nlohmann::ordered_json &j) {
    auto d = j.at("d").get<std::vector<int>>();
    return DyckGrading(maximal_dyck_path(d.at(0), d.at(1)), j.at("omegaE").get<std::vector<int>>(),
                       j.at("omegaN").get<std::vector<int>>());
}

namespace {

// Position-indexed view of a grading; all predicates work on this.
struct Flat {
    int n = 0, d1 = 0, d2 = 0;
    const Step *kind = nullptr;
    const int *val = nullptr;
};

std::vector<int> values_by_position(const DyckGrading &g) {
    std::vector<int> v(static_cast<std::size_t>(g.path.size()));
    for (int pos = 0; pos < g.path.size(); ++pos) v[pos] = g.value(g.path.edge_at(pos));
    return v;
}

// Whether the pair (u at pu, v at pv) meets the compatibility condition.
bool pair_ok(const Flat &f, int pu, int pv) {
    const int n = f.n;
    const int len = (pv - pu + n) % n + 1;
    int count_n = 0, sum_e = 0;
    for (int i = 0; i < len; ++i) {
        int pos = pu + i;
        if (pos >= n) pos -= n;
        if (f.kind[pos] == Step::E) {
            sum_e += f.val[pos];
        } else {
            ++count_n;
            if (pos != pv && count_n == sum_e) return true;
        }
    }
    int count_e = 0, sum_n = 0;
    for (int i = 0; i < len; ++i) {
        int pos = pv - i;
        if (pos < 0) pos += n;
        if (f.kind[pos] == Step::N) {
            sum_n += f.val[pos];
        } else {
            ++count_e;
            if (pos != pu && count_e == sum_n) return true;
        }
    }
    return false;
}

bool compatible(const Flat &f) {
    for (int pu = 0; pu < f.n; ++pu) {
        if (f.kind[pu] != Step::E || f.val[pu] == 0) continue;
        for (int pv = 0; pv < f.n; ++pv) {
            if (f.kind[pv] != Step::N || f.val[pv] == 0) continue;
            if (!pair_ok(f, pu, pv)) return false;
        }
    }
    return true;
}

// Marks the shadow of the edge at pos into `mark` (indexed by position).
void mark_shadow(const Flat &f, int pos, std::vector<char> &mark) {
    if (f.val[pos] == 0) return;
    const int n = f.n;
    if (f.kind[pos] == Step::E) {
        int sum_e = 0, count_n = 0;
        for (int i = 0; i < n; ++i) {
            int p = (pos + i) % n;
            if (f.kind[p] == Step::E) {
                sum_e += f.val[p];
            } else if (++count_n == sum_e) {
                for (int k = 0; k <= i; ++k) {
                    int r = (pos + k) % n;
                    if (f.kind[r] == Step::N) mark[r] = 1;
                }
                return;
            }
        }
        for (int p = 0; p < n; ++p)
            if (f.kind[p] == Step::N) mark[p] = 1;
    } else {
        int sum_n = 0, count_e = 0;
        for (int i = 0; i < n; ++i) {
            int p = ((pos - i) % n + n) % n;
            if (f.kind[p] == Step::N) {
                sum_n += f.val[p];
            } else if (++count_e == sum_n) {
                for (int k = 0; k <= i; ++k) {
                    int r = ((pos - k) % n + n) % n;
                    if (f.kind[r] == Step::E) mark[r] = 1;
                }
                return;
            }
        }
        for (int p = 0; p < n; ++p)
            if (f.kind[p] == Step::E) mark[p] = 1;
    }
}

// Total value on edges of kind `target` lying outside sh(P_from).
int value_outside_shadow(const Flat &f, Step from, Step target) {
    std::vector<char> mark(static_cast<std::size_t>(f.n), 0);
    for (int pos = 0; pos < f.n; ++pos)
        if (f.kind[pos] == from) mark_shadow(f, pos, mark);
    int s = 0;
    for (int pos = 0; pos < f.n; ++pos)
        if (f.kind[pos] == target && !mark[pos]) s += f.val[pos];
    return s;
}

bool plus_shadow(const Flat &f) { return value_outside_shadow(f, Step::E, Step::N) == 0; }
bool minus_shadow(const Flat &f) { return value_outside_shadow(f, Step::N, Step::E) == 0; }

bool tight_numbers(int d1, int d2, int p, int q) {
    if (p > d1 || q > d2) return false;
    long g = std::gcd(p, q);
    long lhs = static_cast<long>(p) * d2 - static_cast<long>(q) * d1;
    if (g == 0) return p == 0 && q == 0;
    return lhs == g || lhs == -g;
}

// Shadow-type condition once compatibility is known.
bool shadow_condition(const Flat &f, Predicate pred, int p, int q) {
    switch (pred) {
    case Predicate::Compatible:
        return true;
    case Predicate::ShadowedPlus:
        return plus_shadow(f);
    case Predicate::ShadowedMinus:
        return minus_shadow(f);
    case Predicate::Shadowed:
        return plus_shadow(f) || minus_shadow(f);
    case Predicate::Tight:
        return tight_numbers(f.d1, f.d2, p, q) && (plus_shadow(f) || minus_shadow(f));
    }
    return false;
}

bool satisfies_flat(const Flat &f, Predicate pred, int p, int q) {
    if (pred == Predicate::Tight && !tight_numbers(f.d1, f.d2, p, q)) return false;
    return compatible(f) && shadow_condition(f, pred, p, q);
}

Flat make_flat(const DyckGrading &g, const std::vector<int> &vals) {
    return Flat{g.path.size(), g.path.d1(), g.path.d2(), g.path.steps().data(), vals.data()};
}

}  // namespace

std::vector<Edge> shadow(const DyckGrading &g, Edge e) {
    auto vals = values_by_position(g);
    Flat f = make_flat(g, vals);
    std::vector<char> mark(static_cast<std::size_t>(f.n), 0);
    mark_shadow(f, g.path.position(e), mark);
    std::vector<Edge> out;
    for (int pos = 0; pos < f.n; ++pos)
        if (mark[pos]) out.push_back(g.path.edge_at(pos));
    std::sort(out.begin(), out.end());
    return out;
}

bool satisfies(const DyckGrading &g, Predicate pred) {
    auto vals = values_by_position(g);
    return satisfies_flat(make_flat(g, vals), pred, g.p(), g.q());
}

bool is_compatible(const DyckGrading &g) { return satisfies(g, Predicate::Compatible); }
bool is_shadowed(const DyckGrading &g) { return satisfies(g, Predicate::Shadowed); }
bool is_shadowed_plus(const DyckGrading &g) { return satisfies(g, Predicate::ShadowedPlus); }
bool is_shadowed_minus(const DyckGrading &g) { return satisfies(g, Predicate::ShadowedMinus); }
bool is_tight(const DyckGrading &g) { return satisfies(g, Predicate::Tight); }

Predicate parse_predicate(const std::string &name) {
    if (name == "compatible") return Predicate::Compatible;
    if (name == "shadowed") return Predicate::Shadowed;
    if (name == "tight") return Predicate::Tight;
    if (name == "shadowed_plus") return Predicate::ShadowedPlus;
    if (name == "shadowed_minus") return Predicate::ShadowedMinus;
    throw std::invalid_argument("unknown predicate: " + name);
}

std::string predicate_name(Predicate pred) {
    switch (pred) {
    case Predicate::Compatible: return "compatible";
    case Predicate::Shadowed: return "shadowed";
    case Predicate::Tight: return "tight";
    case Predicate::ShadowedPlus: return "shadowed_plus";
    case Predicate::ShadowedMinus: return "shadowed_minus";
    }
    return "?";
}

GradingWeights GradingWeights::generic(int l1, int l2) {
    GradingWeights w;
    w.north.push_back(CoeffPoly(1));
    w.east.push_back(CoeffPoly(1));
    for (int k = 1; k <= l1; ++k) w.north.push_back(CoeffPoly::var(1, k));
    for (int k = 1; k <= l2; ++k) w.east.push_back(CoeffPoly::var(2, k));
    return w;
}

namespace {

class Enumerator {
public:
    Enumerator(int d1, int d2, int p, int q, const GradingWeights &w, Predicate pred, EnumMode mode)
        : path_(maximal_dyck_path(d1, d2)), p_(p), q_(q), w_(w), pred_(pred), mode_(mode) {
        n_ = path_.size();
        kind_ = path_.steps();
        val_.assign(static_cast<std::size_t>(n_), 0);
        flat_ = Flat{n_, d1, d2, kind_.data(), val_.data()};
        if (w_.north.empty() || !w_.north[0].is_one() || w_.east.empty() || !w_.east[0].is_one())
            throw std::invalid_argument("grading weights must assign 1 to the value 0");
        for (int k = 0; k <= w_.max_north(); ++k)
            if (!w_.north[k].is_zero()) allowed_n_.push_back(k);
        for (int k = 0; k <= w_.max_east(); ++k)
            if (!w_.east[k].is_zero()) allowed_e_.push_back(k);
        int max_n = allowed_n_.back(), max_e = allowed_e_.back();
        cap_n_.assign(static_cast<std::size_t>(n_) + 1, 0);
        cap_e_.assign(static_cast<std::size_t>(n_) + 1, 0);
        for (int pos = n_ - 1; pos >= 0; --pos) {
            cap_n_[pos] = cap_n_[pos + 1] + (kind_[pos] == Step::N ? max_n : 0);
            cap_e_[pos] = cap_e_[pos + 1] + (kind_[pos] == Step::E ? max_e : 0);
        }
        hist_n_.assign(allowed_n_.back() + 1, 0);
        hist_e_.assign(allowed_e_.back() + 1, 0);
    }

    void run(const std::function<void()> &leaf) {
        leaf_ = &leaf;
        if (p_ < 0 || q_ < 0) return;
        if (pred_ == Predicate::Tight && !tight_numbers(path_.d1(), path_.d2(), p_, q_)) return;
        dfs(0, p_, q_);
    }

    const std::vector<int> &hist_n() const { return hist_n_; }
    const std::vector<int> &hist_e() const { return hist_e_; }
    const std::vector<int> &values() const { return val_; }
    const DyckPath &path() const { return path_; }

private:
    void dfs(int pos, int rem_p, int rem_q) {
        if (pos == n_) {
            if (rem_p == 0 && rem_q == 0 && accept()) (*leaf_)();
            return;
        }
        const bool north = kind_[pos] == Step::N;
        const auto &allowed = north ? allowed_n_ : allowed_e_;
        auto &hist = north ? hist_n_ : hist_e_;
        const int rem = north ? rem_p : rem_q;
        const int cap_after = north ? cap_n_[pos + 1] : cap_e_[pos + 1];
        for (int v : allowed) {
            if (v > rem) break;
            if (rem - v > cap_after) continue;
            val_[pos] = v;
            if (mode_ == EnumMode::Pruned && north && v > 0 && !forward_pairs_ok(pos)) continue;
            ++hist[v];
            if (north) dfs(pos + 1, rem_p - v, rem_q);
            else dfs(pos + 1, rem_p, rem_q - v);
            --hist[v];
        }
        val_[pos] = 0;
    }

    // Pairs (u, v) with u earlier on the path than the vertical edge at pv.
    bool forward_pairs_ok(int pv) const {
        for (int pu = 0; pu < pv; ++pu)
            if (kind_[pu] == Step::E && val_[pu] > 0 && !pair_ok(flat_, pu, pv)) return false;
        return true;
    }

    bool accept() const {
        if (mode_ == EnumMode::Naive) return satisfies_flat(flat_, pred_, p_, q_);
        // Forward pairs were checked on the way down; only wrapping pairs remain.
        for (int pu = 0; pu < n_; ++pu) {
            if (kind_[pu] != Step::E || val_[pu] == 0) continue;
            for (int pv = 0; pv < pu; ++pv)
                if (kind_[pv] == Step::N && val_[pv] > 0 && !pair_ok(flat_, pu, pv)) return false;
        }
        return shadow_condition(flat_, pred_, p_, q_);
    }

    DyckPath path_;
    int p_, q_;
    const GradingWeights &w_;
    Predicate pred_;
    EnumMode mode_;
    int n_ = 0;
    std::vector<Step> kind_;
    std::vector<int> val_;
    Flat flat_;
    std::vector<int> allowed_n_, allowed_e_;
    std::vector<int> cap_n_, cap_e_;
    std::vector<int> hist_n_, hist_e_;
    const std::function<void()> *leaf_ = nullptr;
};

CoeffPoly weight_of(const GradingWeights &w, const std::vector<int> &hist_n, const std::vector<int> &hist_e) {
    CoeffPoly r(1);
    for (std::size_t k = 1; k < hist_n.size(); ++k)
        if (hist_n[k]) r *= w.north[k].pow(hist_n[k]);
    for (std::size_t k = 1; k < hist_e.size(); ++k)
        if (hist_e[k]) r *= w.east[k].pow(hist_e[k]);
    return r;
}

}  // namespace

void for_each_grading(int d1, int d2, int p, int q, const GradingWeights &w, Predicate pred,
                      const std::function<void(const DyckGrading &, const CoeffPoly &)> &visit, EnumMode mode) {
    Enumerator en(d1, d2, p, q, w, pred, mode);
    std::function<void()> leaf = [&] {
        std::vector<int> oe, on;
        for (int pos = 0; pos < en.path().size(); ++pos)
            (en.path().steps()[pos] == Step::E ? oe : on).push_back(en.values()[pos]);
        visit(DyckGrading(en.path(), std::move(oe), std::move(on)), weight_of(w, en.hist_n(), en.hist_e()));
    };
    en.run(leaf);
}

CoeffPoly enumerate_weighted(int d1, int d2, int p, int q, const GradingWeights &w, Predicate pred, EnumMode mode) {
    Enumerator en(d1, d2, p, q, w, pred, mode);
    // Leaves are tallied by value histogram; the weight depends on nothing else.
    std::map<std::pair<std::vector<int>, std::vector<int>>, long> tally;
    std::function<void()> leaf = [&] { ++tally[{en.hist_n(), en.hist_e()}]; };
    en.run(leaf);
    PolyAccumulator<Int> acc;
    for (const auto &[h, count] : tally) acc.add_mul(weight_of(w, h.first, h.second), CoeffPoly(Int(count)));
    return acc.take();
}

CoeffPoly enumerate_weighted(int d1, int d2, int p, int q, int l1, int l2, Predicate pred, EnumMode mode) {
    return enumerate_weighted(d1, d2, p, q, GradingWeights::generic(l1, l2), pred, mode);
}

}  // namespace rk2
