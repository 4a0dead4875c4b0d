#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <numeric>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sawtooth {

// Exact rational number in lowest terms with a positive denominator.
//
// Values whose numerator and denominator both fit in int64 are stored inline
// and handled with 128-bit intermediates; anything larger is promoted to a
// heap-allocated GMP rational. A value is always stored in the small form
// when it fits, so equality on representations is value equality.
class ExactRational {
 public:
  ExactRational() noexcept : num_(0), den_(1) {}

  template <std::integral I>
  ExactRational(I value) : num_(0), den_(1) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<I>) {
      assign_i128(static_cast<__int128>(value), 1);
    } else {
      assign_i128(static_cast<__int128>(static_cast<unsigned long long>(value)), 1);
    }
  }

  // Throws std::invalid_argument when den == 0.
  ExactRational(std::int64_t num, std::int64_t den);

  explicit ExactRational(const mpq_class& q);

  ExactRational(const ExactRational& other) : num_(other.num_), den_(other.den_) {
    if (other.is_big()) big_ = new mpq_class(*other.big_);
  }
  ExactRational(ExactRational&& other) noexcept : num_(other.num_), den_(other.den_) {
    other.den_ = 1;
    other.num_ = 0;
  }
  ExactRational& operator=(const ExactRational& other) {
    if (this != &other) {
      ExactRational tmp(other);
      swap(tmp);
    }
    return *this;
  }
  ExactRational& operator=(ExactRational&& other) noexcept {
    if (this != &other) {
      release();
      num_ = other.num_;
      den_ = other.den_;
      other.den_ = 1;
      other.num_ = 0;
    }
    return *this;
  }
  ~ExactRational() { release(); }

  void swap(ExactRational& other) noexcept {
    std::swap(num_, other.num_);
    std::swap(den_, other.den_);
  }

  // Accepts "p/q", "p", with optional leading sign. Throws std::invalid_argument.
  static ExactRational parse(std::string_view text);

  // 2^exponent for any integer exponent.
  static ExactRational pow2(int exponent);

  // Lowest-terms text: "p/q", or "p" for integers.
  [[nodiscard]] std::string str() const;
  // Decimal rendering with `significant` significant digits. Display only.
  [[nodiscard]] std::string to_decimal(int significant = 12) const;
  [[nodiscard]] double to_double() const;
  [[nodiscard]] mpq_class to_mpq() const;

  [[nodiscard]] int sign() const noexcept {
    if (is_big()) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
  }
  [[nodiscard]] bool is_zero() const noexcept { return !is_big() && num_ == 0; }
  [[nodiscard]] bool is_integer() const noexcept {
    return is_big() ? big_->get_den() == 1 : den_ == 1;
  }
  [[nodiscard]] bool is_small() const noexcept { return !is_big(); }

  // Largest integer <= *this.
  [[nodiscard]] ExactRational floor() const;
  [[nodiscard]] ExactRational abs() const { return sign() < 0 ? -*this : *this; }

  // Numerator and denominator as decimal text.
  [[nodiscard]] std::string numerator_str() const;
  [[nodiscard]] std::string denominator_str() const;

  ExactRational operator-() const {
    if (!is_big()) {
      ExactRational r;
      r.num_ = -num_;
      r.den_ = den_;
      return r;
    }
    return ExactRational(mpq_class(-*big_));
  }

  friend ExactRational operator+(const ExactRational& a, const ExactRational& b) {
    ExactRational r;
    if (!a.is_big() && !b.is_big()) {
      if (a.den_ == 1 && b.den_ == 1) {
        std::int64_t s;
        if (!__builtin_add_overflow(a.num_, b.num_, &s) && s != kMin) {
          r.num_ = s;
          return r;
        }
      }
      r.add_small(a, b, false);
      return r;
    }
    r.assign_mpq(a.to_mpq() + b.to_mpq());
    return r;
  }
  friend ExactRational operator-(const ExactRational& a, const ExactRational& b) {
    ExactRational r;
    if (!a.is_big() && !b.is_big()) {
      r.add_small(a, b, true);
      return r;
    }
    r.assign_mpq(a.to_mpq() - b.to_mpq());
    return r;
  }
  friend ExactRational operator*(const ExactRational& a, const ExactRational& b) {
    ExactRational r;
    if (!a.is_big() && !b.is_big()) {
      r.mul_small(a.num_, a.den_, b.num_, b.den_);
      return r;
    }
    r.assign_mpq(a.to_mpq() * b.to_mpq());
    return r;
  }
  // Throws std::domain_error on division by zero.
  friend ExactRational operator/(const ExactRational& a, const ExactRational& b);

  ExactRational& operator+=(const ExactRational& o) { return *this = *this + o; }
  ExactRational& operator-=(const ExactRational& o) { return *this = *this - o; }
  ExactRational& operator*=(const ExactRational& o) { return *this = *this * o; }
  ExactRational& operator/=(const ExactRational& o) { return *this = *this / o; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) noexcept {
    if (!a.is_big() && !b.is_big()) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.is_big() && b.is_big()) return *a.big_ == *b.big_;
    return false;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    if (!a.is_big() && !b.is_big()) {
      if (a.den_ == b.den_) return a.num_ <=> b.num_;
      const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
      const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
      return lhs <=> rhs;
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  static constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

  [[nodiscard]] bool is_big() const noexcept { return den_ == 0; }
  void release() noexcept {
    if (is_big()) {
      delete big_;
      den_ = 1;
      num_ = 0;
    }
  }

  // Sets *this to num/den (den != 0), reducing and promoting as needed.
  void assign_i128(__int128 num, __int128 den);
  void assign_mpq(mpq_class q);
  void add_small(const ExactRational& a, const ExactRational& b, bool subtract);
  void mul_small(std::int64_t n1, std::int64_t d1, std::int64_t n2, std::int64_t d2);

  union {
    std::int64_t num_;
    mpq_class* big_;
  };
  std::int64_t den_;  // > 0 for inline values; 0 marks big_ as active
};

std::ostream& operator<<(std::ostream& os, const ExactRational& q);

}  // namespace sawtooth
