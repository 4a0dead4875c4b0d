#include "sawtooth/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace sawtooth {
namespace {

using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

u128 abs128(__int128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    if ((a >> 64) == 0 && (b >> 64) == 0) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    const u128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::uint64_t abs64(std::int64_t v) {
  return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
}

void set_mpz_from_i128(mpz_class& out, __int128 v) {
  const u128 mag = abs128(v);
  const auto hi = static_cast<std::uint64_t>(mag >> 64);
  const auto lo = static_cast<std::uint64_t>(mag);
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &hi);
  out <<= 64;
  mpz_class low;
  mpz_import(low.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &lo);
  out += low;
  if (v < 0) out = -out;
}

bool fits_small(const mpq_class& q) {
  return mpz_fits_slong_p(q.get_num_mpz_t()) != 0 && mpz_fits_slong_p(q.get_den_mpz_t()) != 0 &&
         q.get_num() != mpz_class(static_cast<long>(kMin));
}

}  // namespace

ExactRational::ExactRational(std::int64_t num, std::int64_t den) : num_(0), den_(1) {
  if (den == 0) throw std::invalid_argument("ExactRational: zero denominator");
  assign_i128(num, den);
}

ExactRational::ExactRational(const mpq_class& q) : num_(0), den_(1) {
  mpq_class c(q);
  c.canonicalize();
  assign_mpq(std::move(c));
}

void ExactRational::assign_i128(__int128 num, __int128 den) {
  release();
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const u128 g = gcd128(abs128(num), static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
  }
  if (num > kMin && num <= kMax && den <= kMax) {
    num_ = static_cast<std::int64_t>(num);
    den_ = static_cast<std::int64_t>(den);
    return;
  }
  auto* q = new mpq_class;
  set_mpz_from_i128(q->get_num(), num);
  set_mpz_from_i128(q->get_den(), den);
  big_ = q;
  den_ = 0;
}

void ExactRational::assign_mpq(mpq_class q) {
  release();
  if (fits_small(q)) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
    return;
  }
  big_ = new mpq_class(std::move(q));
  den_ = 0;
}

void ExactRational::add_small(const ExactRational& a, const ExactRational& b, bool subtract) {
  const std::int64_t n1 = a.num_;
  const std::int64_t d1 = a.den_;
  const std::int64_t n2 = subtract ? -b.num_ : b.num_;
  const std::int64_t d2 = b.den_;
  if (d1 == d2) {
    assign_i128(static_cast<__int128>(n1) + n2, d1);
    return;
  }
  const auto g = static_cast<std::int64_t>(std::gcd(static_cast<std::uint64_t>(d1),
                                                    static_cast<std::uint64_t>(d2)));
  const std::int64_t d1g = d1 / g;
  const __int128 t = static_cast<__int128>(n1) * (d2 / g) + static_cast<__int128>(n2) * d1g;
  if (g == 1) {
    assign_i128(t, static_cast<__int128>(d1) * d2);
    return;
  }
  const auto g2 = static_cast<std::int64_t>(gcd128(abs128(t), static_cast<u128>(g)));
  assign_i128(t / g2, static_cast<__int128>(d1g) * (d2 / g2));
}

void ExactRational::mul_small(std::int64_t n1, std::int64_t d1, std::int64_t n2, std::int64_t d2) {
  if (n1 == 0 || n2 == 0) {
    release();
    num_ = 0;
    den_ = 1;
    return;
  }
  const auto g1 = static_cast<std::int64_t>(std::gcd(abs64(n1), static_cast<std::uint64_t>(d2)));
  const auto g2 = static_cast<std::int64_t>(std::gcd(abs64(n2), static_cast<std::uint64_t>(d1)));
  n1 /= g1;
  d2 /= g1;
  n2 /= g2;
  d1 /= g2;
  std::int64_t num;
  std::int64_t den;
  if (!__builtin_mul_overflow(n1, n2, &num) && num != kMin &&
      !__builtin_mul_overflow(d1, d2, &den)) {
    release();
    num_ = num;
    den_ = den;
    return;
  }
  assign_i128(static_cast<__int128>(n1) * n2, static_cast<__int128>(d1) * d2);
}

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
  if (b.is_zero()) throw std::domain_error("ExactRational: division by zero");
  ExactRational r;
  if (!a.is_big() && !b.is_big()) {
    const std::int64_t n2 = b.num_ < 0 ? -b.den_ : b.den_;
    const std::int64_t d2 = b.num_ < 0 ? -b.num_ : b.num_;
    r.mul_small(a.num_, a.den_, n2, d2);
    return r;
  }
  r.assign_mpq(a.to_mpq() / b.to_mpq());
  return r;
}

ExactRational ExactRational::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::size_t& p) {
    const std::size_t start = p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p])) != 0) ++p;
    return std::string(text.substr(start, p - start));
  };
  const std::string num = digits(pos);
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = digits(pos);
  }
  if (num.empty() || den.empty() || pos != text.size()) {
    throw std::invalid_argument("ExactRational: malformed rational '" + std::string(text) + "'");
  }
  mpq_class q;
  q.get_num().set_str(num, 10);
  q.get_den().set_str(den, 10);
  if (q.get_den() == 0) {
    throw std::invalid_argument("ExactRational: zero denominator in '" + std::string(text) + "'");
  }
  if (negative) q.get_num() = -q.get_num();
  q.canonicalize();
  return ExactRational(q);
}

ExactRational ExactRational::pow2(int exponent) {
  if (exponent >= 0 && exponent <= 62) return ExactRational(std::int64_t{1} << exponent, 1);
  if (exponent < 0 && exponent >= -62) return ExactRational(1, std::int64_t{1} << -exponent);
  mpq_class q(1);
  if (exponent > 0) {
    mpz_mul_2exp(q.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
  } else {
    mpz_mul_2exp(q.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-exponent));
  }
  return ExactRational(q);
}

mpq_class ExactRational::to_mpq() const {
  if (is_big()) return *big_;
  mpq_class q;
  q.get_num() = static_cast<long>(num_);
  q.get_den() = static_cast<long>(den_);
  return q;
}

std::string ExactRational::str() const {
  if (is_big()) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string ExactRational::numerator_str() const {
  return is_big() ? big_->get_num().get_str() : std::to_string(num_);
}

std::string ExactRational::denominator_str() const {
  return is_big() ? big_->get_den().get_str() : std::to_string(den_);
}

double ExactRational::to_double() const {
  if (is_big()) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string ExactRational::to_decimal(int significant) const {
  if (significant < 1) significant = 1;
  if (is_zero()) return "0";
  const auto bits = static_cast<mp_bitcnt_t>(64 + 4 * significant);
  mpf_class f(to_mpq(), bits);
  std::vector<char> buf(static_cast<std::size_t>(significant) + 64);
  const int len = gmp_snprintf(buf.data(), buf.size(), "%.*Fg", significant, f.get_mpf_t());
  return std::string(buf.data(), static_cast<std::size_t>(len));
}

ExactRational ExactRational::floor() const {
  if (!is_big()) {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return ExactRational(q);
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
  return ExactRational(mpq_class(q));
}

std::ostream& operator<<(std::ostream& os, const ExactRational& q) { return os << q.str(); }

}  // namespace sawtooth
