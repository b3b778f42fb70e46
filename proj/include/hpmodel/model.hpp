#pragma once

#include "algebra.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace hpmodel {

struct ModelTag {};
/// x̄_1^{(e_1)} ... x̄_k^{(e_k)}: divided powers on slots whose algebra
/// generator is exterior, exterior exponents on polynomial slots.
using ModelMonomial = ExponentVector<ModelTag>;
using ModelElement = LinearCombination<ModelMonomial>;

/// Degree of the model generator x̄_i is n_i + 1.
inline std::int64_t model_degree(const Presentation& p, const ModelMonomial& m)
{
  std::int64_t d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += std::int64_t(m[i]) * (p.degree(i) + 1);
  return d;
}

/// Model slot i is a divided power algebra when x_i is exterior.
inline bool divided_power_slot(const Presentation& p, std::size_t i) { return p.exterior(i); }

inline std::optional<std::pair<Integer, ModelMonomial>> model_multiply(const Presentation& p, const ModelMonomial& a,
                                                                        const ModelMonomial& b)
{
  ModelMonomial r(a.size());
  Integer c = 1;
  std::int64_t swaps = 0;
  std::int64_t odd_in_b_before = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (divided_power_slot(p, i)) {
      if (a[i] && b[i]) c *= binomial(a[i] + b[i], a[i]);
    } else {
      if (a[i] + b[i] > 1) return std::nullopt;
      swaps += std::int64_t(a[i]) * odd_in_b_before;
      odd_in_b_before += b[i];
    }
    r[i] = a[i] + b[i];
  }
  if (swaps % 2) c = -c;
  return std::make_pair(std::move(c), std::move(r));
}

inline ModelElement model_multiply(const Presentation& p, const ModelElement& a, const ModelElement& b)
{
  ModelElement r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b)
      if (auto prod = model_multiply(p, ma, mb)) r.add(prod->second, ca * cb * prod->first);
  return r;
}

inline ModelMonomial model_generator(const Presentation& p, std::size_t index, std::uint32_t power = 1)
{
  return ModelMonomial::single(p.size(), index - 1, power);
}

} // namespace hpmodel
