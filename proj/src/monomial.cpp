#include "rk2/monomial.hpp"

#include <cstring>
#include <stdexcept>

namespace rk2 {

std::size_t Mono::slot(int side, int k) {
    if ((side != 1 && side != 2) || k < 1 || k > kMaxL) {
        throw std::out_of_range("coefficient variable p" + std::to_string(side) + "," + std::to_string(k) +
                                " outside supported range");
    }
    return static_cast<std::size_t>((side - 1) * kMaxL + (k - 1));
}

Mono Mono::var(int side, int k, int pow) {
    Mono m;
    m.e_[slot(side, k)] = static_cast<Exp>(pow);
    return m;
}

Mono Mono::from_vectors(const std::vector<int> &q1, const std::vector<int> &q2) {
    if (q1.size() > kMaxL || q2.size() > kMaxL) throw std::out_of_range("too many coefficient variables");
    Mono m;
    for (std::size_t i = 0; i < q1.size(); ++i) m.e_[i] = static_cast<Exp>(q1[i]);
    for (std::size_t i = 0; i < q2.size(); ++i) m.e_[kMaxL + i] = static_cast<Exp>(q2[i]);
    return m;
}

bool Mono::is_one() const noexcept {
    for (Exp x : e_)
        if (x != 0) return false;
    return true;
}

bool Mono::is_nonnegative() const noexcept {
    for (Exp x : e_)
        if (x < 0) return false;
    return true;
}

int Mono::wdeg(int side) const noexcept {
    int base = (side - 1) * kMaxL;
    int w = 0;
    for (int k = 0; k < kMaxL; ++k) w += (k + 1) * e_[base + k];
    return w;
}

int Mono::count(int side) const noexcept {
    int base = (side - 1) * kMaxL;
    int c = 0;
    for (int k = 0; k < kMaxL; ++k) c += e_[base + k];
    return c;
}

int Mono::max_index(int side) const noexcept {
    int base = (side - 1) * kMaxL;
    for (int k = kMaxL; k >= 1; --k)
        if (e_[base + k - 1] != 0) return k;
    return 0;
}

std::vector<int> Mono::exps(int side, int l) const {
    if (max_index(side) > l) throw std::out_of_range("monomial uses a variable beyond the declared l");
    std::vector<int> out(static_cast<std::size_t>(l));
    for (int k = 1; k <= l; ++k) out[k - 1] = exp(side, k);
    return out;
}

Mono Mono::pow(int n) const noexcept {
    Mono r;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = static_cast<Exp>(e_[i] * n);
    return r;
}

bool Mono::divides(const Mono &o) const noexcept {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

std::size_t Mono::hash() const noexcept {
    std::uint64_t w[4];
    std::memcpy(w, e_.data(), sizeof w);
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t x : w) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
}

std::string Mono::str() const {
    std::string s;
    for (int side = 1; side <= 2; ++side) {
        for (int k = 1; k <= kMaxL; ++k) {
            int x = exp(side, k);
            if (x == 0) continue;
            if (!s.empty()) s += '*';
            s += 'p' + std::to_string(side) + std::to_string(k);
            if (x != 1) s += '^' + std::to_string(x);
        }
    }
    return s.empty() ? "1" : s;
}

}  // namespace rk2
