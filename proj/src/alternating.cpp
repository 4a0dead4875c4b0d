#include "sawtooth/alternating.hpp"

#include <algorithm>
#include <stdexcept>

#include "sawtooth/network.hpp"

namespace sawtooth {

LabeledDataset::LabeledDataset(std::vector<LabeledPoint> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].y > 1) throw std::invalid_argument("dataset: labels must be 0 or 1");
    if (i > 0 && !(points_[i - 1].x < points_[i].x)) {
      throw std::invalid_argument("dataset: x values must be strictly increasing");
    }
  }
}

LabeledDataset n_ap(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("n_ap: n must be >= 1");
  std::vector<LabeledPoint> pts;
  pts.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    pts.push_back({ExactRational(static_cast<std::int64_t>(i), static_cast<std::int64_t>(n)),
                   static_cast<std::uint8_t>(i % 2)});
  }
  return LabeledDataset(std::move(pts));
}

LabeledDataset n_ap_strict_paper(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("n_ap: n must be >= 1");
  if (n > 1'000'000) throw std::invalid_argument("n_ap: n too large for the literal variant");
  const ExactRational step = ExactRational::pow2(-static_cast<int>(n));
  std::vector<LabeledPoint> pts;
  pts.reserve(n);
  for (std::uint64_t i = 1; i <= n; ++i) {
    pts.push_back({ExactRational(i) * step, static_cast<std::uint8_t>(i % 2 == 0 ? 0 : 1)});
  }
  return LabeledDataset(std::move(pts));
}

ExactRational classification_error(const PwlFunction& f, const LabeledDataset& data) {
  if (data.empty()) throw std::invalid_argument("classification_error: empty dataset");
  const ExactRational half(1, 2);
  std::uint64_t wrong = 0;
  for (const auto& p : data.points()) {
    const std::uint8_t predicted = f(p.x) >= half ? 1 : 0;
    if (predicted != p.y) ++wrong;
  }
  return ExactRational(wrong) / ExactRational(static_cast<std::uint64_t>(data.size()));
}

ExactRational sawtooth_lower_bound(std::uint64_t n, const ExactRational& t) {
  if (n == 0) throw std::invalid_argument("sawtooth_lower_bound: n must be >= 1");
  const ExactRational nn(n);
  ExactRational b = (nn - ExactRational(4) * t) / (ExactRational(3) * nn);
  return b.sign() < 0 ? ExactRational(0) : b;
}

BoundReport network_lower_bound(std::uint64_t n, std::uint64_t t, std::uint64_t m,
                                std::uint64_t l) {
  if (n == 0 || t == 0 || m == 0 || l == 0) {
    throw std::invalid_argument("network_lower_bound: n, t, m, l must be >= 1");
  }
  if (l > 100'000) throw std::invalid_argument("network_lower_bound: l too large");
  BoundReport r{n, t, m, l, ExactRational(1), ExactRational(0)};
  mpz_class tm(static_cast<unsigned long>(t));
  tm *= static_cast<unsigned long>(m);
  mpz_class power;
  mpz_pow_ui(power.get_mpz_t(), tm.get_mpz_t(), static_cast<unsigned long>(l));
  r.pieces = ExactRational(mpq_class(power));
  r.bound = sawtooth_lower_bound(n, r.pieces);
  return r;
}

bool ap_image_check(std::uint32_t k) {
  if (k < 2) throw std::invalid_argument("ap_image_check: k must be >= 2");
  if (k > 24) throw std::invalid_argument("ap_image_check: k must be <= 24");
  const std::uint64_t n = std::uint64_t{1} << k;
  const PwlFunction fm = mirror_map();

  std::vector<LabeledPoint> image;
  image.reserve(n);
  const LabeledDataset full_ap = n_ap(n);
  for (const auto& p : full_ap.points()) image.push_back({fm(p.x), p.y});

  const LabeledDataset half_ap = n_ap(n / 2);
  std::vector<LabeledPoint> expected;
  expected.reserve(n);
  for (const auto& p : half_ap.points()) {
    expected.push_back(p);
    if (!p.x.is_zero()) expected.push_back(p);
  }
  // The extra point continues the (n/2)-ap one step past its end.
  expected.push_back({ExactRational(1), static_cast<std::uint8_t>((n / 2) % 2)});

  auto by_x_then_y = [](const LabeledPoint& a, const LabeledPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  };
  std::sort(image.begin(), image.end(), by_x_then_y);
  std::sort(expected.begin(), expected.end(), by_x_then_y);
  return image == expected;
}

}  // namespace sawtooth
