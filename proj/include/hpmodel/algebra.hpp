#pragma once

#include "integer.hpp"
#include "linear_combination.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hpmodel {

enum class GeneratorKind { Exterior, Polynomial };

struct GeneratorSpec {
  std::size_t index = 1; ///< 1-based, x1..xk
  int degree = 1;

  GeneratorKind kind() const { return degree % 2 != 0 ? GeneratorKind::Exterior : GeneratorKind::Polynomial; }
  bool exterior() const { return kind() == GeneratorKind::Exterior; }
};

/// Exponent vector with one slot per generator, ascending generator order.
/// The tag keeps algebra monomials and model monomials apart.
template <class Tag>
class ExponentVector {
public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t k) : e_(k, 0) {}
  explicit ExponentVector(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

  static ExponentVector single(std::size_t k, std::size_t slot, std::uint32_t power = 1)
  {
    ExponentVector m(k);
    m.e_.at(slot) = power;
    return m;
  }

  std::size_t size() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t& operator[](std::size_t i) { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return e_; }

  bool is_unit() const
  {
    for (auto x : e_)
      if (x) return false;
    return true;
  }

  /// Slot of the only generator present, if the monomial is a pure power.
  std::optional<std::size_t> pure_generator() const
  {
    std::optional<std::size_t> g;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (!e_[i]) continue;
      if (g) return std::nullopt;
      g = i;
    }
    return g;
  }

  /// Slots [from, to) kept, the rest zeroed.
  ExponentVector restricted(std::size_t from, std::size_t to) const
  {
    ExponentVector r(e_.size());
    for (std::size_t i = from; i < to && i < e_.size(); ++i) r.e_[i] = e_[i];
    return r;
  }

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

private:
  std::vector<std::uint32_t> e_;
};

struct AlgebraTag {};
using Monomial = ExponentVector<AlgebraTag>;
using AlgebraElement = LinearCombination<Monomial>;

/// Generators with their degrees plus the derivation rho on generators.
class Presentation {
public:
  Presentation() = default;
  Presentation(const std::vector<int>& degrees, std::vector<AlgebraElement> rho = {})
  {
    for (std::size_t i = 0; i < degrees.size(); ++i) gens_.push_back({i + 1, degrees[i]});
    if (rho.empty()) rho.resize(degrees.size());
    if (rho.size() != degrees.size()) throw std::invalid_argument("rho must have one entry per generator");
    for (const auto& v : rho)
      for (const auto& [m, c] : v)
        if (m.size() != degrees.size()) throw std::invalid_argument("rho monomial has wrong number of slots");
    rho_ = std::move(rho);
  }

  std::size_t size() const { return gens_.size(); }
  const std::vector<GeneratorSpec>& generators() const { return gens_; }
  int degree(std::size_t slot) const { return gens_[slot].degree; }
  bool exterior(std::size_t slot) const { return gens_[slot].exterior(); }
  const AlgebraElement& rho(std::size_t slot) const { return rho_[slot]; }
  const std::vector<AlgebraElement>& rho() const { return rho_; }

  std::vector<int> degrees() const
  {
    std::vector<int> d;
    for (const auto& g : gens_) d.push_back(g.degree);
    return d;
  }

  Monomial unit() const { return Monomial(size()); }
  /// x_index, 1-based.
  Monomial generator(std::size_t index, std::uint32_t power = 1) const
  {
    return Monomial::single(size(), index - 1, power);
  }

  std::int64_t degree(const Monomial& m) const
  {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += std::int64_t(m[i]) * gens_[i].degree;
    return d;
  }

  int min_degree() const
  {
    int d = 0;
    for (const auto& g : gens_)
      if (d == 0 || g.degree < d) d = g.degree;
    return d;
  }

  /// Same generators with rho = 0.
  Presentation unperturbed() const { return Presentation(degrees()); }

private:
  std::vector<GeneratorSpec> gens_;
  std::vector<AlgebraElement> rho_;
};

/// Product of monomials: returns the sign and the product, or nothing when an
/// exterior generator would be squared.
inline std::optional<std::pair<int, Monomial>> multiply(const Presentation& p, const Monomial& a, const Monomial& b)
{
  Monomial r(a.size());
  std::int64_t swaps = 0;
  std::int64_t odd_in_b_before = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool odd = p.degree(i) % 2 != 0;
    if (odd) {
      if (a[i] + b[i] > 1) return std::nullopt;
      swaps += std::int64_t(a[i]) * odd_in_b_before;
      odd_in_b_before += b[i];
    }
    r[i] = a[i] + b[i];
  }
  return std::make_pair(parity_sign(swaps), std::move(r));
}

inline AlgebraElement multiply(const Presentation& p, const AlgebraElement& a, const AlgebraElement& b)
{
  AlgebraElement r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b)
      if (auto prod = multiply(p, ma, mb)) r.add(prod->second, ca * cb, prod->first);
  return r;
}

inline Integer augmentation(const AlgebraElement& a)
{
  for (const auto& [m, c] : a)
    if (m.is_unit()) return c;
  return 0;
}

/// Homogeneous degree of an element; nullopt for 0 or mixed degrees.
inline std::optional<std::int64_t> degree(const Presentation& p, const AlgebraElement& a)
{
  std::optional<std::int64_t> d;
  for (const auto& [m, c] : a) {
    auto dm = p.degree(m);
    if (d && *d != dm) return std::nullopt;
    d = dm;
  }
  return d;
}

inline AlgebraElement apply_derivation(const Presentation& p, const Monomial& m)
{
  AlgebraElement r;
  const std::size_t k = m.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (!m[i] || p.rho(i).empty()) continue;
    Monomial prefix = m.restricted(0, i);
    Monomial suffix = m.restricted(i + 1, k);
    Monomial rest = Monomial::single(k, i, m[i] - 1);
    Integer mult = p.exterior(i) ? Integer(1) : Integer(m[i]);
    AlgebraElement left(prefix, parity_sign(p.degree(prefix)) * mult);
    AlgebraElement t = multiply(p, left, AlgebraElement(rest));
    t = multiply(p, t, p.rho(i));
    t = multiply(p, t, AlgebraElement(suffix));
    r += t;
  }
  return r;
}

inline AlgebraElement apply_derivation(const Presentation& p, const AlgebraElement& a)
{
  AlgebraElement r;
  for (const auto& [m, c] : a) r += apply_derivation(p, m) * c;
  return r;
}

struct Violation {
  enum class Kind { NonPositiveDegree, UnsortedDegrees, WrongDegree, NonTriangular, MinimalDegreeNonZero, RhoSquaredNonZero };
  Kind kind;
  std::size_t generator; ///< 1-based, 0 when not tied to a generator
  std::string message;
};

inline std::vector<Violation> validate_presentation(const Presentation& p)
{
  std::vector<Violation> out;
  using K = Violation::Kind;
  const auto& gens = p.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string name = "x" + std::to_string(i + 1);
    if (gens[i].degree <= 0)
      out.push_back({K::NonPositiveDegree, i + 1, "degree of " + name + " must be positive"});
    if (i > 0 && gens[i].degree < gens[i - 1].degree)
      out.push_back({K::UnsortedDegrees, i + 1, "degrees must be ascending at " + name});
  }
  const int k0 = p.min_degree();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string name = "x" + std::to_string(i + 1);
    const auto& v = p.rho(i);
    if (v.empty()) continue;
    if (gens[i].degree == k0)
      out.push_back({K::MinimalDegreeNonZero, i + 1, "rho(" + name + ") must be 0 for a generator of minimal degree"});
    bool bad_degree = false, bad_tri = false;
    for (const auto& [m, c] : v) {
      if (p.degree(m) != gens[i].degree - 1) bad_degree = true;
      for (std::size_t j = i; j < m.size(); ++j)
        if (m[j]) bad_tri = true;
    }
    if (bad_degree)
      out.push_back({K::WrongDegree, i + 1, "degree(v" + std::to_string(i + 1) + ") != n" + std::to_string(i + 1) + " - 1"});
    if (bad_tri)
      out.push_back({K::NonTriangular, i + 1, "rho(" + name + ") is non-triangular (uses x_j with j >= " + std::to_string(i + 1) + ")"});
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!apply_derivation(p, p.rho(i)).empty())
      out.push_back({K::RhoSquaredNonZero, i + 1, "rho(rho(x" + std::to_string(i + 1) + ")) != 0"});
  }
  return out;
}

} // namespace hpmodel
