#pragma once

#include "bar.hpp"
#include "model.hpp"

#include <cstdint>
#include <vector>

namespace hpmodel {

/// Full: the contraction formulas as stated. Reduced: only the summands that
/// survive the projection inside the perturbation series.
enum class ContractionMode { Full, Reduced };

/// One bar word per factor grouping.
using TensorWord = std::vector<BarWord>;
using TensorBarElement = LinearCombination<TensorWord>;

// ---------------------------------------------------------------------------
// index patterns, independent of the letters

/// Masks of the summands of g on an n-letter word tensor an m-letter word.
template <class F>
void for_each_g_summand(std::size_t n, std::size_t m, ContractionMode mode, F&& f)
{
  if (mode == ContractionMode::Full) {
    for_each_shuffle(n, m, f);
    return;
  }
  std::vector<bool> mask(n + m, false);
  std::fill(mask.begin() + n, mask.end(), true);
  f(static_cast<const std::vector<bool>&>(mask));
  if (n == 0 || m == 0) return;
  for (std::size_t i = n; i-- > 0;) {
    std::fill(mask.begin(), mask.end(), false);
    mask[i] = true;
    std::fill(mask.begin() + n + 1, mask.end(), true);
    f(static_cast<const std::vector<bool>&>(mask));
  }
}

/// (p, q, mask) for the summands of phi on an n-letter word: the block is
/// letters n-p-q .. n-q-1 (0-based), mask interleaves the block's left parts
/// with the right parts of the last q letters.
template <class F>
void for_each_phi_summand(std::size_t n, ContractionMode mode, F&& f)
{
  for (std::size_t q = 0; q < n; ++q)
    for (std::size_t p = 0; p + q < n; ++p) {
      if (mode == ContractionMode::Full) {
        for_each_shuffle(p + 1, q, [&](const std::vector<bool>& mask) { f(p, q, mask); });
      } else {
        std::vector<bool> mask(p + 1 + q, false);
        std::fill(mask.begin() + p + 1, mask.end(), true);
        f(p, q, static_cast<const std::vector<bool>&>(mask));
      }
    }
}

struct TermCounter {
  std::uint64_t emitted = 0;
};

namespace detail {

inline void emit(BarElement& out, const BarWord& w, const Integer& c, int sign, TermCounter* counter)
{
  if (counter) ++counter->emitted;
  out.add(w, c, sign);
}

} // namespace detail

// ---------------------------------------------------------------------------
// two-factor contraction between B(A (x) A') and B(A) (x) B(A')

inline TensorBarElement f_bar_tensor(const BarElement& e, FactorSplit s)
{
  TensorBarElement r;
  for (const auto& [w, c] : e) {
    std::size_t i = 0;
    while (i < w.size() && right_is_unit(w[i], s)) ++i;
    bool ok = true;
    for (std::size_t j = i; j < w.size(); ++j)
      if (!left_is_unit(w[j], s)) ok = false;
    if (!ok) continue;
    r.add(TensorWord{BarWord(w.begin(), w.begin() + i), BarWord(w.begin() + i, w.end())}, c);
  }
  return r;
}

template <class F>
void g_bar_tensor_words(const Presentation& p, const BarWord& u, const BarWord& v, ContractionMode mode, F&& f)
{
  BarWord out;
  for_each_g_summand(u.size(), v.size(), mode, [&](const std::vector<bool>& mask) {
    int s = interleave(p, u, v, mask, out);
    f(s, static_cast<const BarWord&>(out));
  });
}

inline BarElement g_bar_tensor(const Presentation& p, const TensorBarElement& t, ContractionMode mode)
{
  BarElement r;
  for (const auto& [tw, c] : t) {
    if (tw.size() != 2) throw std::invalid_argument("g_bar_tensor expects pairs of words");
    g_bar_tensor_words(p, tw[0], tw[1], mode, [&](int s, const BarWord& w) { r.add(w, c, s); });
  }
  return r;
}

inline void phi_bar_tensor_word(const Presentation& pr, const BarWord& w, FactorSplit s, ContractionMode mode,
                                const Integer& c, BarElement& out, TermCounter* counter = nullptr)
{
  const std::size_t n = w.size();
  BarWord lefts, rights, tail, word;
  for_each_phi_summand(n, mode, [&](std::size_t p, std::size_t q, const std::vector<bool>& mask) {
    const std::size_t first = n - p - q - 1;
    const std::size_t last = n - q; // block is [first, last)
    for (std::size_t j = last; j < n; ++j)
      if (!left_is_unit(w[j], s)) return;
    for (std::size_t j = first; j < last; ++j)
      if (left_is_unit(w[j], s)) return;
    Monomial prod = pr.unit();
    int sign = 1;
    for (std::size_t j = first; j < last; ++j) {
      auto m = multiply(pr, prod, split_letter(w[j], s).second);
      if (!m) return;
      sign *= m->first;
      prod = std::move(m->second);
    }
    if (prod.is_unit()) return;

    std::int64_t e = total_degree(pr, w.begin(), w.begin() + std::ptrdiff_t(first));
    std::int64_t running = 0;
    lefts.clear();
    rights.clear();
    for (std::size_t j = first; j < last; ++j) {
      auto [l, r] = split_letter(w[j], s);
      running += pr.degree(l) + 1;
      e += pr.degree(r) * running;
      lefts.push_back(std::move(l));
    }
    for (std::size_t j = last; j < n; ++j) rights.push_back(w[j]);
    sign *= parity_sign(e) * interleave(pr, lefts, rights, mask, tail);

    word.assign(w.begin(), w.begin() + std::ptrdiff_t(first));
    word.push_back(prod);
    word.insert(word.end(), tail.begin(), tail.end());
    detail::emit(out, word, c, sign, counter);
  });
}

inline BarElement phi_bar_tensor(const Presentation& p, const BarElement& e, FactorSplit s, ContractionMode mode)
{
  BarElement r;
  for (const auto& [w, c] : e) phi_bar_tensor_word(p, w, s, mode, c, r);
  return r;
}

// ---------------------------------------------------------------------------
// single-generator factors

/// E(u): [u|...|u] (m letters) <-> x̄^{(m)}, homotopy 0.
inline ModelElement exterior_factor_f(const Presentation& p, std::size_t slot, const BarElement& e)
{
  ModelElement r;
  for (const auto& [w, c] : e) {
    bool ok = true;
    for (const auto& m : w)
      if (m.pure_generator() != slot || m[slot] != 1) ok = false;
    if (ok) r.add(ModelMonomial::single(p.size(), slot, std::uint32_t(w.size())), c);
  }
  return r;
}

inline BarElement exterior_factor_g(const Presentation& p, std::size_t slot, const ModelElement& m)
{
  BarElement r;
  for (const auto& [mm, c] : m) r.add(BarWord(mm[slot], Monomial::single(p.size(), slot)), c);
  return r;
}

/// P(v): f[v] = x̄, f = 0 elsewhere; g(x̄) = [v]; phi[v^{r1}|...] = [v|v^{r1-1}|...].
inline ModelElement polynomial_factor_f(const Presentation& p, std::size_t slot, const BarElement& e)
{
  ModelElement r;
  for (const auto& [w, c] : e) {
    if (w.empty()) r.add(ModelMonomial(p.size()), c);
    else if (w.size() == 1 && w[0].pure_generator() == slot && w[0][slot] == 1)
      r.add(ModelMonomial::single(p.size(), slot), c);
  }
  return r;
}

inline BarElement polynomial_factor_g(const Presentation& p, std::size_t slot, const ModelElement& m)
{
  BarElement r;
  for (const auto& [mm, c] : m) r.add(BarWord(mm[slot], Monomial::single(p.size(), slot)), c);
  return r;
}

inline void polynomial_factor_phi_word(const Presentation& p, std::size_t slot, const BarWord& w, const Integer& c,
                                       BarElement& out, TermCounter* counter = nullptr)
{
  if (w.empty() || w[0][slot] <= 1) return;
  BarWord r;
  r.reserve(w.size() + 1);
  r.push_back(Monomial::single(p.size(), slot));
  Monomial lowered = w[0];
  lowered[slot] -= 1;
  r.push_back(std::move(lowered));
  r.insert(r.end(), w.begin() + 1, w.end());
  detail::emit(out, r, c, 1, counter);
}

inline BarElement polynomial_factor_phi(const Presentation& p, std::size_t slot, const BarElement& e)
{
  BarElement r;
  for (const auto& [w, c] : e) polynomial_factor_phi_word(p, slot, w, c, r);
  return r;
}

// ---------------------------------------------------------------------------
// composite over ((A_1 (x) A_2) (x) ...) (x) A_t

class CompositeContraction {
public:
  CompositeContraction(const Presentation& p, ContractionMode mode) : p_(p), mode_(mode) {}

  const Presentation& presentation() const { return p_; }
  ContractionMode mode() const { return mode_; }

  ModelElement f(const BarElement& e) const
  {
    ModelElement r;
    for (const auto& [w, c] : e) {
      ModelMonomial m(p_.size());
      if (f_word(w, m)) r.add(m, c);
    }
    return r;
  }

  BarElement g(const ModelElement& m) const
  {
    BarElement r;
    for (const auto& [mm, c] : m) {
      BarElement cur(BarWord{}, c);
      for (std::size_t slot = 0; slot < p_.size(); ++slot) {
        if (!mm[slot]) continue;
        BarWord leaf(mm[slot], Monomial::single(p_.size(), slot));
        BarElement next;
        for (const auto& [u, cu] : cur)
          g_bar_tensor_words(p_, u, leaf, mode_, [&](int s, const BarWord& w) { next.add(w, cu, s); });
        cur = std::move(next);
      }
      r += cur;
    }
    return r;
  }

  /// Homotopy of the composite over the first `factors` generators.
  BarElement phi(const BarElement& e, std::size_t factors, TermCounter* counter = nullptr) const
  {
    BarElement r;
    if (factors == 0) return r;
    for (const auto& [w, c] : e) phi_word(w, factors, c, r, counter);
    return r;
  }
  BarElement phi(const BarElement& e) const { return phi(e, p_.size()); }

private:
  bool f_word(const BarWord& w, ModelMonomial& m) const
  {
    std::size_t j = 0;
    std::optional<std::size_t> last;
    while (j < w.size()) {
      auto g = w[j].pure_generator();
      if (!g || (last && *g <= *last) || w[j][*g] != 1) return false;
      std::size_t len = 1;
      while (j + len < w.size() && w[j + len] == w[j]) ++len;
      if (!p_.exterior(*g) && len != 1) return false;
      m[*g] = std::uint32_t(len);
      last = g;
      j += len;
    }
    return true;
  }

  /// g f on a word of the single factor `slot` is either the word itself or 0.
  bool gf_fixes(const BarWord& v, std::size_t slot) const
  {
    if (v.empty()) return true;
    if (p_.exterior(slot)) {
      for (const auto& m : v)
        if (m[slot] != 1) return false;
      return true;
    }
    return v.size() == 1 && v[0][slot] == 1;
  }

  void phi_word(const BarWord& w, std::size_t t, const Integer& c, BarElement& out, TermCounter* counter) const
  {
    const std::size_t top = t - 1;
    if (t == 1) {
      if (!p_.exterior(0)) polynomial_factor_phi_word(p_, 0, w, c, out, counter);
      return;
    }
    const FactorSplit split{top};
    phi_bar_tensor_word(p_, w, split, mode_, c, out, counter);

    std::size_t cut = w.size();
    while (cut > 0 && left_is_unit(w[cut - 1], split)) --cut;
    BarWord u(w.begin(), w.begin() + std::ptrdiff_t(cut));
    BarWord v(w.begin() + std::ptrdiff_t(cut), w.end());
    for (const auto& m : u)
      if (!right_is_unit(m, split)) return;

    if (!u.empty() && gf_fixes(v, top)) {
      BarElement inner;
      phi_word(u, t - 1, Integer(1), inner, counter);
      for (const auto& [uu, cu] : inner)
        g_bar_tensor_words(p_, uu, v, mode_,
                           [&](int s, const BarWord& ww) { detail::emit(out, ww, c * cu, s, counter); });
    }
    if (!v.empty() && !p_.exterior(top)) {
      BarElement leaf;
      polynomial_factor_phi_word(p_, top, v, Integer(1), leaf, counter);
      const int koszul = parity_sign(total_degree(p_, u));
      for (const auto& [vv, cv] : leaf)
        g_bar_tensor_words(p_, u, vv, mode_,
                           [&](int s, const BarWord& ww) { detail::emit(out, ww, c * cv, s * koszul, counter); });
    }
  }

  const Presentation& p_;
  ContractionMode mode_;
};

inline ModelElement composite_f(const Presentation& p, const BarElement& e)
{
  return CompositeContraction(p, ContractionMode::Full).f(e);
}

inline BarElement composite_g(const Presentation& p, const ModelElement& m, ContractionMode mode)
{
  return CompositeContraction(p, mode).g(m);
}

inline BarElement composite_phi(const Presentation& p, const BarElement& e, ContractionMode mode)
{
  return CompositeContraction(p, mode).phi(e);
}

} // namespace hpmodel
