#pragma once

#include <hpmodel/hpmodel.hpp>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace testing_helpers {

using namespace hpmodel;

inline Presentation make(const std::vector<int>& degrees, const std::vector<std::string>& rho)
{
  Presentation base(degrees);
  std::vector<AlgebraElement> v;
  for (const auto& s : rho) v.push_back(s.empty() ? AlgebraElement() : parse_expression(s, base));
  v.resize(degrees.size());
  return Presentation(degrees, std::move(v));
}

inline Presentation example1()
{
  return make({1, 1, 1, 2, 2, 3, 4, 6}, {"", "", "", "x1-x2", "x2", "x1*x2", "x2*x4+x1*x5+x1*x2*x3", "x1*x2*x6"});
}
inline Presentation example2()
{
  return make({1, 2, 6, 10, 26}, {"", "-2*x1", "x1*x2^2", "3*x1*x2*x3", "8*x1*x2*x3^2*x4"});
}
inline Presentation example3()
{
  return make({1, 2, 4, 5, 7, 14}, {"", "-x1", "x1*x2", "", "2*x1*x4", "-x1*x4*x5"});
}

/// Monomial from (1-based index, exponent) pairs.
inline Monomial mono(const Presentation& p, std::initializer_list<std::pair<std::size_t, std::uint32_t>> f)
{
  Monomial m(p.size());
  for (auto [i, e] : f) m[i - 1] = e;
  return m;
}

inline ModelMonomial model_mono(const Presentation& p, std::initializer_list<std::pair<std::size_t, std::uint32_t>> f)
{
  ModelMonomial m(p.size());
  for (auto [i, e] : f) m[i - 1] = e;
  return m;
}

inline BarWord word(std::initializer_list<Monomial> letters) { return BarWord(letters); }

} // namespace testing_helpers
