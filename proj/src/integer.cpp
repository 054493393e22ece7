#include "rk2/integer.hpp"

#include <ostream>
#include <stdexcept>

namespace rk2 {

namespace {

bool mpz_fits_i64(const mpz_class &z) {
    // mpz_fits_slong_p is exact on LP64 targets.
    static_assert(sizeof(long) == sizeof(std::int64_t));
    return mpz_fits_slong_p(z.get_mpz_t()) != 0;
}

mpz_class from_i64(std::int64_t v) {
    return mpz_class(static_cast<long>(v));
}

}  // namespace

Int::Int(const mpz_class &z) {
    if (mpz_fits_i64(z)) {
        small_ = z.get_si();
    } else {
        big_ = std::make_unique<mpz_class>(z);
    }
}

Int::Int(std::string_view decimal) {
    mpz_class z;
    if (z.set_str(std::string(decimal), 10) != 0) {
        throw std::invalid_argument("not a decimal integer: " + std::string(decimal));
    }
    *this = Int(z);
}

Int &Int::operator=(const Int &o) {
    if (this != &o) {
        small_ = o.small_;
        big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
    }
    return *this;
}

int Int::sign() const noexcept {
    if (big_) return sgn(*big_);
    return (small_ > 0) - (small_ < 0);
}

mpz_class Int::to_mpz() const {
    return big_ ? *big_ : from_i64(small_);
}

std::string Int::str() const {
    return big_ ? big_->get_str() : std::to_string(small_);
}

void Int::promote() {
    if (!big_) big_ = std::make_unique<mpz_class>(from_i64(small_));
}

void Int::normalize() {
    if (big_ && mpz_fits_i64(*big_)) {
        small_ = big_->get_si();
        big_.reset();
    }
}

Int &Int::operator+=(const Int &o) {
    if (!big_ && !o.big_) {
        std::int64_t r;
        if (!__builtin_add_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    promote();
    *big_ += o.to_mpz();
    normalize();
    return *this;
}

Int &Int::operator-=(const Int &o) {
    if (!big_ && !o.big_) {
        std::int64_t r;
        if (!__builtin_sub_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    promote();
    *big_ -= o.to_mpz();
    normalize();
    return *this;
}

Int &Int::operator*=(const Int &o) {
    if (!big_ && !o.big_) {
        std::int64_t r;
        if (!__builtin_mul_overflow(small_, o.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    promote();
    *big_ *= o.to_mpz();
    normalize();
    return *this;
}

void Int::add_mul(const Int &a, const Int &b) {
    if (!big_ && !a.big_ && !b.big_) {
        std::int64_t prod;
        std::int64_t r;
        if (!__builtin_mul_overflow(a.small_, b.small_, &prod) &&
            !__builtin_add_overflow(small_, prod, &r)) {
            small_ = r;
            return;
        }
    }
    promote();
    mpz_class pa = a.to_mpz();
    mpz_class pb = b.to_mpz();
    mpz_addmul(big_->get_mpz_t(), pa.get_mpz_t(), pb.get_mpz_t());
    normalize();
}

void Int::negate() {
    if (!big_) {
        if (small_ != INT64_MIN) {
            small_ = -small_;
            return;
        }
        promote();
    }
    *big_ = -*big_;
    normalize();
}

bool Int::divisible_by(const Int &d) const {
    if (d.is_zero()) return is_zero();
    if (!big_ && !d.big_) {
        if (d.small_ == -1) return true;
        return small_ % d.small_ == 0;
    }
    mpz_class a = to_mpz();
    mpz_class b = d.to_mpz();
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

Int Int::divexact(const Int &d) const {
    if (!divisible_by(d) || d.is_zero()) {
        throw std::domain_error("inexact integer division: " + str() + " / " + d.str());
    }
    if (!big_ && !d.big_ && !(small_ == INT64_MIN && d.small_ == -1)) {
        return Int(small_ / d.small_);
    }
    mpz_class a = to_mpz();
    mpz_class b = d.to_mpz();
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return Int(q);
}

bool operator==(const Int &a, const Int &b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // normalized: a big value never fits in int64
}

std::strong_ordering operator<=>(const Int &a, const Int &b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    int c = cmp(a.to_mpz(), b.to_mpz());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream &operator<<(std::ostream &os, const Int &v) { return os << v.str(); }

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Int(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Int(r);
}

Int gcd(const Int &a, const Int &b) {
    mpz_class r;
    mpz_class x = a.to_mpz();
    mpz_class y = b.to_mpz();
    mpz_gcd(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return Int(r);
}

}  // namespace rk2
