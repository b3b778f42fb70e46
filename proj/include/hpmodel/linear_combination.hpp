#pragma once

#include "integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <map>
#include <utility>

namespace hpmodel {

/// Finite formal sum of basis keys with nonzero integer coefficients.
/// Keys are kept ordered, so iteration and equality are canonical.
template <class Key>
class LinearCombination {
public:
  using map_type = std::map<Key, Integer>;
  using const_iterator = typename map_type::const_iterator;

  LinearCombination() = default;
  explicit LinearCombination(const Key& k, Integer c = 1) { add(k, std::move(c)); }
  LinearCombination(std::initializer_list<std::pair<Key, Integer>> init)
  {
    for (const auto& [k, c] : init) add(k, c);
  }

  void add(const Key& k, const Integer& c)
  {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add(const Key& k, const Integer& c, int sign)
  {
    if (sign > 0) add(k, c);
    else add(k, Integer(-c));
  }

  Integer coefficient(const Key& k) const
  {
    auto it = terms_.find(k);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  LinearCombination& operator+=(const LinearCombination& o)
  {
    for (const auto& [k, c] : o) add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o)
  {
    for (const auto& [k, c] : o) add(k, Integer(-c));
    return *this;
  }
  LinearCombination& operator*=(const Integer& s)
  {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(LinearCombination a, const Integer& s) { return a *= s; }
  friend LinearCombination operator*(const Integer& s, LinearCombination a) { return a *= s; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Integer(-1); }
  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

private:
  map_type terms_;
};

} // namespace hpmodel
