#pragma once

#include "io.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace hpmodel {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

struct RandomPresentationOptions {
  std::size_t min_gens = 2;
  std::size_t max_gens = 4;
  int max_degree = 6;
  int max_rho_terms = 2;
  int max_coeff = 3;
  bool require_nonzero_rho = true;
};

/// Monomials of the given degree in the first `slots` generators.
inline std::vector<Monomial> monomials_of_degree(const Presentation& p, std::int64_t degree, std::size_t slots)
{
  std::vector<Monomial> out;
  Monomial m(p.size());
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i == slots) {
      if (left == 0 && !m.is_unit()) out.push_back(m);
      return;
    }
    std::uint32_t top = p.exterior(i) ? 1 : std::uint32_t(left / p.degree(i));
    for (std::uint32_t e = 0; e <= top && std::int64_t(e) * p.degree(i) <= left; ++e) {
      m[i] = e;
      rec(i + 1, left - std::int64_t(e) * p.degree(i));
    }
    m[i] = 0;
  };
  rec(0, degree);
  return out;
}

/// Rejection sampling until the presentation validates.
inline Presentation random_presentation(Rng& rng, const RandomPresentationOptions& o = {})
{
  for (;;) {
    const std::size_t k = std::size_t(uniform(rng, int(o.min_gens), int(o.max_gens)));
    std::vector<int> degrees(k);
    for (auto& d : degrees) d = uniform(rng, 1, o.max_degree);
    std::sort(degrees.begin(), degrees.end());
    Presentation base(degrees);
    std::vector<AlgebraElement> rho(k);
    bool any = false;
    for (std::size_t i = 0; i < k; ++i) {
      if (degrees[i] == degrees[0]) continue;
      auto cand = monomials_of_degree(base, degrees[i] - 1, i);
      if (cand.empty()) continue;
      int terms = uniform(rng, 0, o.max_rho_terms);
      for (int t = 0; t < terms; ++t) {
        int c = uniform(rng, 1, o.max_coeff) * (uniform(rng, 0, 1) ? 1 : -1);
        rho[i].add(cand[std::size_t(uniform(rng, 0, int(cand.size()) - 1))], c);
      }
      any = any || !rho[i].empty();
    }
    if (o.require_nonzero_rho && !any) continue;
    Presentation p(degrees, std::move(rho));
    if (validate_presentation(p).empty()) return p;
  }
}

inline Monomial random_letter(Rng& rng, const Presentation& p, std::int64_t max_degree)
{
  for (;;) {
    Monomial m(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) m[i] = std::uint32_t(uniform(rng, 0, p.exterior(i) ? 1 : 2));
    if (!m.is_unit() && p.degree(m) <= max_degree) return m;
  }
}

/// Random word with total bar degree <= max_total.
inline BarWord random_word(Rng& rng, const Presentation& p, std::int64_t max_total, std::size_t max_letters = 4)
{
  for (;;) {
    std::size_t n = std::size_t(uniform(rng, 1, int(max_letters)));
    BarWord w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(random_letter(rng, p, max_total - 1));
    if (total_degree(p, w) <= max_total) return w;
  }
}

inline ModelMonomial random_model_monomial(Rng& rng, const Presentation& p, std::int64_t max_degree)
{
  for (;;) {
    ModelMonomial m(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) m[i] = std::uint32_t(uniform(rng, 0, divided_power_slot(p, i) ? 3 : 1));
    if (model_degree(p, m) <= max_degree) return m;
  }
}

struct PropertyReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
  void record(bool ok, const std::function<std::string()>& why)
  {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = why();
  }
  void merge(const PropertyReport& o)
  {
    cases += o.cases;
    if (o.failures && failures == 0) first_failure = o.first_failure;
    failures += o.failures;
  }
};

using PropertyReports = std::vector<PropertyReport>;

inline void merge_reports(PropertyReports& into, const PropertyReports& from)
{
  for (const auto& r : from) {
    auto it = std::find_if(into.begin(), into.end(), [&](const PropertyReport& x) { return x.name == r.name; });
    if (it == into.end()) into.push_back(r);
    else it->merge(r);
  }
}

/// fg = 1, f phi = 0, phi g = 0, phi phi = 0, phi d + d phi + g f = 1 for the
/// full composite with d = simplicial differential (rho is ignored).
inline PropertyReports check_contraction_axioms(const Presentation& pres, Rng& rng, std::size_t samples,
                                                std::int64_t max_total = 8)
{
  const Presentation p = pres.unperturbed();
  const CompositeContraction c(p, ContractionMode::Full);
  PropertyReport fg{"contraction fg = 1"}, fphi{"contraction f phi = 0"}, phig{"contraction phi g = 0"},
      phiphi{"contraction phi phi = 0"}, htpy{"contraction phi d + d phi + g f = 1"};
  for (std::size_t s = 0; s < samples; ++s) {
    BarElement e(random_word(rng, p, max_total));
    auto show = [&] { return render(p, e); };
    BarElement phie = c.phi(e);
    fphi.record(c.f(phie).empty(), show);
    phiphi.record(c.phi(phie).empty(), show);
    BarElement lhs = c.phi(simplicial_differential(p, e)) + simplicial_differential(p, phie) + c.g(c.f(e));
    htpy.record(lhs == e, show);

    ModelElement m(random_model_monomial(rng, p, max_total));
    BarElement gm = c.g(m);
    fg.record(c.f(gm) == m, [&] { return render(p, m); });
    phig.record(c.phi(gm).empty(), [&] { return render(p, m); });
  }
  return {fg, fphi, phig, phiphi, htpy};
}

/// f(x*y) = 0 and phi(x*y) = 0 for x, y in {phi(a), g(m)} with at least one phi.
inline PropertyReports check_quasi_algebra(const Presentation& pres, Rng& rng, std::size_t samples,
                                           std::int64_t max_total = 6)
{
  const Presentation p = pres.unperturbed();
  const CompositeContraction c(p, ContractionMode::Full);
  PropertyReport r[6] = {{"quasi-algebra f(phi*phi) = 0"}, {"quasi-algebra f(phi*g) = 0"}, {"quasi-algebra f(g*phi) = 0"},
                         {"quasi-algebra phi(phi*phi) = 0"}, {"quasi-algebra phi(phi*g) = 0"},
                         {"quasi-algebra phi(g*phi) = 0"}};
  for (std::size_t s = 0; s < samples; ++s) {
    BarElement a(random_word(rng, p, max_total, 2)), b(random_word(rng, p, max_total, 2));
    ModelElement m(random_model_monomial(rng, p, max_total));
    BarElement pa = c.phi(a), pb = c.phi(b), gm = c.g(m);
    BarElement prods[3] = {shuffle_product(p, pa, pb), shuffle_product(p, pa, gm), shuffle_product(p, gm, pa)};
    auto show = [&] { return render(p, a) + " , " + render(p, b) + " , " + render(p, m); };
    for (int i = 0; i < 3; ++i) {
      r[i].record(c.f(prods[i]).empty(), show);
      r[i + 3].record(c.phi(prods[i]).empty(), show);
    }
  }
  return PropertyReports(std::begin(r), std::end(r));
}

/// Terms of delta(t) keep at least (inversions of t) - 1 inversions.
inline PropertyReport check_lemma1(const Presentation& p, Rng& rng, std::size_t samples, std::int64_t max_total = 10)
{
  PropertyReport r{"inversion bound under delta"};
  if (p.size() < 2) return r;
  for (std::size_t s = 0; s < samples; ++s) {
    FactorSplit split{std::size_t(uniform(rng, 1, int(p.size()) - 1))};
    BarWord w = random_word(rng, p, max_total, 5);
    std::size_t k = count_inversions(w, split);
    bool ok = true;
    for (const auto& [dw, c] : perturbation_delta(p, BarElement(w)))
      if (count_inversions(dw, split) + 1 < k) ok = false;
    r.record(ok, [&] { return render(p, w) + " split " + std::to_string(split.boundary); });
  }
  return r;
}

inline PropertyReport check_algorithms_agree(const Presentation& p, const ModelResult& a1, const ModelResult& a2)
{
  PropertyReport r{"Alg1 = Alg2"};
  for (std::size_t i = 0; i < p.size(); ++i)
    r.record(a1.differentials[i] == a2.differentials[i], [&] {
      return "x" + std::to_string(i + 1) + ": " + render(p, a1.differentials[i]) + " vs " + render(p, a2.differentials[i]);
    });
  return r;
}

/// Per-iteration emitted terms of Alg2 never exceed those of Alg1.
inline PropertyReport check_pruning_telemetry(const Presentation& p, const ModelResult& a1, const ModelResult& a2)
{
  PropertyReport r{"Alg2 term counts <= Alg1"};
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& t1 = a1.telemetry[i].per_iteration;
    const auto& t2 = a2.telemetry[i].per_iteration;
    bool ok = t2.size() <= t1.size();
    for (std::size_t j = 0; ok && j < t2.size(); ++j)
      ok = t2[j].emitted <= t1[j].emitted && t2[j].after_prune <= t1[j].after_delta;
    r.record(ok, [&] { return "x" + std::to_string(i + 1); });
  }
  return r;
}

inline PropertyReports check_model(const Presentation& p, const ModelResult& r, Rng& rng, std::size_t samples)
{
  PropertyReport d2{"model d d = 0"}, deg{"model degree of w_i = n_i"}, first{"model w_1 = 0"};
  first.record(r.differentials.empty() || r.differentials[0].empty(), [] { return std::string("w_1 != 0"); });
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& w = r.differentials[i];
    bool ok = true;
    for (const auto& [m, c] : w)
      if (model_degree(p, m) != p.degree(i)) ok = false;
    deg.record(ok, [&] { return "w" + std::to_string(i + 1); });
    d2.record(d_model_apply(p, r, w).empty(), [&] { return "d(w" + std::to_string(i + 1) + ")"; });
  }
  std::int64_t top = 0;
  for (int d : r.degrees) top += d;
  for (std::size_t s = 0; s < samples; ++s) {
    ModelElement m(random_model_monomial(rng, p, std::min<std::int64_t>(top, 24)));
    d2.record(d_model_apply(p, r, d_model_apply(p, r, m)).empty(), [&] { return render(p, m); });
  }
  return {d2, deg, first};
}

/// Everything that applies to one presentation.
inline PropertyReports check_presentation(const Presentation& p, Rng& rng, std::size_t samples)
{
  PropertyReports out;
  PropertyReport valid{"presentation valid"};
  auto v = validate_presentation(p);
  valid.record(v.empty(), [&] { return v.front().message; });
  out.push_back(valid);
  if (!v.empty()) return out;
  ModelResult a1 = compute_model(p, Algorithm::Alg1);
  ModelResult a2 = compute_model(p, Algorithm::Alg2);
  out.push_back(check_algorithms_agree(p, a1, a2));
  out.push_back(check_pruning_telemetry(p, a1, a2));
  merge_reports(out, check_model(p, a1, rng, samples));
  out.push_back(check_lemma1(p, rng, samples));
  merge_reports(out, check_contraction_axioms(p, rng, samples));
  merge_reports(out, check_quasi_algebra(p, rng, samples));
  return out;
}

/// Symbolic summand counts of the two-factor formulas for n, m <= bound.
inline PropertyReports check_term_counts(std::size_t bound = 6)
{
  PropertyReport phi_full{"phi full count 2^(n+1)-n-2"}, phi_red{"phi reduced count (n^2+n)/2"},
      g_full{"g full count C(n+m,n)"}, g_red{"g reduced count n+1"};
  for (std::size_t n = 1; n <= bound; ++n) {
    std::uint64_t cf = 0, cr = 0;
    for_each_phi_summand(n, ContractionMode::Full, [&](std::size_t, std::size_t, const std::vector<bool>&) { ++cf; });
    for_each_phi_summand(n, ContractionMode::Reduced, [&](std::size_t, std::size_t, const std::vector<bool>&) { ++cr; });
    phi_full.record(cf == (std::uint64_t(1) << (n + 1)) - n - 2, [&] { return "n=" + std::to_string(n); });
    phi_red.record(cr == (n * n + n) / 2, [&] { return "n=" + std::to_string(n); });
    for (std::size_t m = 1; m <= bound; ++m) {
      std::uint64_t gf = 0, gr = 0;
      for_each_g_summand(n, m, ContractionMode::Full, [&](const std::vector<bool>&) { ++gf; });
      for_each_g_summand(n, m, ContractionMode::Reduced, [&](const std::vector<bool>&) { ++gr; });
      g_full.record(Integer(gf) == binomial(n + m, n), [&] { return "n=" + std::to_string(n) + " m=" + std::to_string(m); });
      g_red.record(gr == n + 1, [&] { return "n=" + std::to_string(n) + " m=" + std::to_string(m); });
    }
  }
  return {phi_full, phi_red, g_full, g_red};
}

} // namespace hpmodel
