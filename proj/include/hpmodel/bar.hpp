#pragma once

#include "algebra.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace hpmodel {

/// [m_1|...|m_n]; letters are non-unit monomials. The empty word is the unit.
using BarWord = std::vector<Monomial>;
using BarElement = LinearCombination<BarWord>;

/// Degree of a letter as a one-letter bar word: |a| + 1.
inline std::int64_t letter_degree(const Presentation& p, const Monomial& m) { return p.degree(m) + 1; }

inline std::int64_t tensor_degree(const Presentation& p, const BarWord& w)
{
  std::int64_t d = 0;
  for (const auto& m : w) d += p.degree(m);
  return d;
}

inline std::size_t simplicial_degree(const BarWord& w) { return w.size(); }

inline std::int64_t total_degree(const Presentation& p, const BarWord& w)
{
  return tensor_degree(p, w) + std::int64_t(w.size());
}

inline std::int64_t total_degree(const Presentation& p, BarWord::const_iterator first, BarWord::const_iterator last)
{
  std::int64_t d = 0;
  for (; first != last; ++first) d += letter_degree(p, *first);
  return d;
}

inline BarElement perturbation_delta(const Presentation& p, const BarElement& e)
{
  BarElement r;
  for (const auto& [w, c] : e) {
    std::int64_t prefix = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (const auto& [m, cm] : apply_derivation(p, w[i])) {
        if (m.is_unit()) continue;
        BarWord out = w;
        out[i] = m;
        r.add(out, c * cm, parity_sign(prefix));
      }
      prefix += letter_degree(p, w[i]);
    }
  }
  return r;
}

/// d_s[a_1|...|a_n] = -sum_i (-1)^{|[a_1|...|a_i]|} [...|a_i a_{i+1}|...]
inline BarElement simplicial_differential(const Presentation& p, const BarElement& e)
{
  BarElement r;
  for (const auto& [w, c] : e) {
    std::int64_t prefix = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      prefix += letter_degree(p, w[i]);
      auto prod = multiply(p, w[i], w[i + 1]);
      if (!prod) continue;
      BarWord out;
      out.reserve(w.size() - 1);
      out.insert(out.end(), w.begin(), w.begin() + i);
      out.push_back(prod->second);
      out.insert(out.end(), w.begin() + i + 2, w.end());
      r.add(out, c, -prod->first * parity_sign(prefix));
    }
  }
  return r;
}

/// Calls f(mask) for every (p,q)-shuffle; mask[t] is true when position t
/// takes the next letter of the second word.
template <class F>
void for_each_shuffle(std::size_t p, std::size_t q, F&& f)
{
  std::vector<bool> mask(p + q, false);
  std::fill(mask.begin() + p, mask.end(), true);
  do {
    f(static_cast<const std::vector<bool>&>(mask));
  } while (std::next_permutation(mask.begin(), mask.end()));
}

/// Interleaves u and v along mask; returns the Koszul sign of the interleaving
/// with bar degrees.
inline int interleave(const Presentation& p, const BarWord& u, const BarWord& v, const std::vector<bool>& mask, BarWord& out)
{
  out.clear();
  out.reserve(u.size() + v.size());
  std::int64_t u_left = total_degree(p, u);
  std::int64_t eps = 0;
  std::size_t iu = 0, iv = 0;
  for (bool from_v : mask) {
    if (from_v) {
      eps += letter_degree(p, v[iv]) * u_left;
      out.push_back(v[iv++]);
    } else {
      u_left -= letter_degree(p, u[iu]);
      out.push_back(u[iu++]);
    }
  }
  return parity_sign(eps);
}

template <class F>
void for_each_shuffle_word(const Presentation& p, const BarWord& u, const BarWord& v, F&& f)
{
  BarWord out;
  for_each_shuffle(u.size(), v.size(), [&](const std::vector<bool>& mask) {
    int s = interleave(p, u, v, mask, out);
    f(s, static_cast<const BarWord&>(out));
  });
}

inline BarElement shuffle_product(const Presentation& p, const BarElement& a, const BarElement& b)
{
  BarElement r;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) {
      Integer c = cu * cv;
      for_each_shuffle_word(p, u, v, [&](int s, const BarWord& w) { r.add(w, c, s); });
    }
  return r;
}

/// Generators with slot < boundary form the left block.
struct FactorSplit {
  std::size_t boundary = 0;
};

/// Left and right parts of a letter. Since every left generator precedes every
/// right generator, left * right == m with sign +1.
inline std::pair<Monomial, Monomial> split_letter(const Monomial& m, FactorSplit s)
{
  return {m.restricted(0, s.boundary), m.restricted(s.boundary, m.size())};
}

inline bool left_is_unit(const Monomial& m, FactorSplit s)
{
  for (std::size_t i = 0; i < s.boundary && i < m.size(); ++i)
    if (m[i]) return false;
  return true;
}

inline bool right_is_unit(const Monomial& m, FactorSplit s)
{
  for (std::size_t i = s.boundary; i < m.size(); ++i)
    if (m[i]) return false;
  return true;
}

/// Letters with unit left part followed somewhere later by a letter with a
/// non-unit left part.
inline std::size_t count_inversions(const BarWord& w, FactorSplit s)
{
  std::size_t n = 0;
  bool later_left = false;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (left_is_unit(*it, s)) {
      if (later_left) ++n;
    } else {
      later_left = true;
    }
  }
  return n;
}

} // namespace hpmodel
