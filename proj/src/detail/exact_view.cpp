#include "detail/exact_view.hpp"

namespace troprank::detail {

std::optional<IntegerImage> integer_image(const TropMatrix& m, std::int64_t bound) {
  std::vector<Rational> all(m.entries().begin(), m.entries().end());
  mpz_class scale = common_denominator(all);
  IntegerImage img{{m.rows(), m.cols(), {}}, scale};
  img.view.a.reserve(all.size());
  const mpz_class limit(static_cast<long>(bound));
  for (const auto& q : all) {
    mpz_class v = q.get_num() * (scale / q.get_den());
    if (abs(v) >= limit) return std::nullopt;
    img.view.a.push_back(static_cast<std::int64_t>(v.get_si()));
  }
  return img;
}

DenseView<Rational> rational_view(const TropMatrix& m) {
  return {m.rows(), m.cols(), std::vector<Rational>(m.entries().begin(), m.entries().end())};
}

}  // namespace troprank::detail
