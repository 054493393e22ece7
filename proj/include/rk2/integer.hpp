#pragma once

// Arbitrary precision integer with an inline 64-bit fast path.
// Values that fit in int64_t never touch the heap; anything larger is
// promoted to a GMP integer and demoted again when it shrinks.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rk2 {

class Int {
public:
    Int() noexcept = default;
    Int(std::int64_t v) noexcept : small_(v) {}  // NOLINT: implicit by design
    Int(int v) noexcept : small_(v) {}           // NOLINT
    explicit Int(const mpz_class &z);
    explicit Int(std::string_view decimal);

    Int(const Int &o) : small_(o.small_), big_(o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr) {}
    Int(Int &&) noexcept = default;
    Int &operator=(const Int &o);
    Int &operator=(Int &&) noexcept = default;
    ~Int() = default;

    bool is_small() const noexcept { return !big_; }
    bool is_zero() const noexcept { return !big_ && small_ == 0; }
    int sign() const noexcept;
    std::int64_t small_value() const noexcept { return small_; }
    bool fits_int64() const noexcept { return !big_; }

    mpz_class to_mpz() const;
    std::string str() const;

    Int &operator+=(const Int &o);
    Int &operator-=(const Int &o);
    Int &operator*=(const Int &o);
    void negate();
    // this += a * b, the hot operation in every polynomial product.
    void add_mul(const Int &a, const Int &b);

    // Exact division; throws std::domain_error if d does not divide *this.
    Int divexact(const Int &d) const;
    bool divisible_by(const Int &d) const;

    friend Int operator+(Int a, const Int &b) { a += b; return a; }
    friend Int operator-(Int a, const Int &b) { a -= b; return a; }
    friend Int operator*(Int a, const Int &b) { a *= b; return a; }
    friend Int operator-(Int a) { a.negate(); return a; }

    friend bool operator==(const Int &a, const Int &b) noexcept;
    friend std::strong_ordering operator<=>(const Int &a, const Int &b) noexcept;

    friend std::ostream &operator<<(std::ostream &os, const Int &v);

private:
    void normalize();
    void promote();

    std::int64_t small_ = 0;
    std::unique_ptr<mpz_class> big_;
};

Int binomial(long n, long k);
Int gcd(const Int &a, const Int &b);

}  // namespace rk2
