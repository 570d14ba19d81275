#pragma once

// Exact field scalars: arbitrary-precision rationals (the default field K)
// and prime fields F_p with a process-wide modulus.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace boxmod {

template <typename K>
concept Field = requires(K a, K b) {
  K();
  K(0L);
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
};

// Reduced fraction of arbitrary-precision integers, denominator > 0.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long x) : v_(x) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : v_(num) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    v_ /= mpq_class(den);
  }

  static Rational from_string(const std::string& s) {
    Rational r;
    r.v_ = mpq_class(s);
    r.v_.canonicalize();
    return r;
  }

  Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
  Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    return Rational(v_ / o.v_);
  }
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  std::string str() const { return v_.get_str(); }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// Residues mod a prime chosen once per run (betti numbers may depend on char K).
class Fp {
 public:
  static void set_modulus(std::int64_t p) {
    if (p < 2) throw std::invalid_argument("prime modulus must be >= 2");
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    modulus_ = p;
  }
  static std::int64_t modulus() {
    if (modulus_ == 0) throw std::logic_error("Fp used before set_modulus");
    return modulus_;
  }

  Fp() : v_(0) {}
  Fp(long x) {  // NOLINT(google-explicit-constructor)
    std::int64_t p = modulus();
    v_ = x % p;
    if (v_ < 0) v_ += p;
  }

  Fp operator+(const Fp& o) const { return raw((v_ + o.v_) % modulus()); }
  Fp operator-(const Fp& o) const { return raw((v_ - o.v_ + modulus()) % modulus()); }
  Fp operator*(const Fp& o) const { return raw((v_ * o.v_) % modulus()); }
  Fp operator/(const Fp& o) const { return *this * o.inverse(); }
  Fp operator-() const { return raw(v_ == 0 ? 0 : modulus() - v_); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  bool operator==(const Fp& o) const { return v_ == o.v_; }
  bool operator!=(const Fp& o) const { return v_ != o.v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  std::int64_t value() const { return v_; }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
    // extended euclid
    std::int64_t a = v_, b = modulus(), x = 1, y = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      a -= q * b; std::swap(a, b);
      x -= q * y; std::swap(x, y);
    }
    if (x < 0) x += modulus();
    return raw(x);
  }

  std::string str() const { return std::to_string(v_); }

 private:
  static Fp raw(std::int64_t v) {
    Fp f;
    f.v_ = v;
    return f;
  }
  static inline std::int64_t modulus_ = 0;
  std::int64_t v_;
};

inline std::ostream& operator<<(std::ostream& os, const Fp& x) { return os << x.str(); }

static_assert(Field<Rational>);
static_assert(Field<Fp>);

}  // namespace boxmod
