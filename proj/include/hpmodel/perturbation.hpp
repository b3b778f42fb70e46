#pragma once

#include "contraction.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <future>
#include <stdexcept>
#include <string>
#include <vector>

namespace hpmodel {

/// Alg1: full contraction formulas. Alg2: inversion-pruned series.
enum class Algorithm { Alg1, Alg2 };

inline ContractionMode contraction_mode(Algorithm a)
{
  return a == Algorithm::Alg1 ? ContractionMode::Full : ContractionMode::Reduced;
}

struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct IterationCounts {
  std::size_t after_delta = 0;  ///< distinct terms of delta(v_j)
  std::size_t after_prune = 0;  ///< ... that survive pruning
  std::size_t after_phi = 0;    ///< distinct terms of v_{j+1}
  std::uint64_t emitted = 0;    ///< terms produced by phi before collection
};

struct SeriesTelemetry {
  std::size_t iterations = 0;
  std::size_t peak_terms = 0;
  std::uint64_t emitted_terms = 0;
  double seconds = 0;
  std::vector<IterationCounts> per_iteration;
};

struct GeneratorResult {
  ModelElement differential;
  SeriesTelemetry telemetry;
};

struct ModelResult {
  std::vector<int> degrees; ///< n_i + 1
  std::vector<ModelElement> differentials;
  std::vector<SeriesTelemetry> telemetry;
};

/// d_delta(x̄_index), index 1-based.
inline GeneratorResult d_delta_generator(const Presentation& p, std::size_t index, Algorithm alg)
{
  if (index == 0 || index > p.size()) throw std::out_of_range("generator index out of range");
  const auto start = std::chrono::steady_clock::now();
  const ContractionMode mode = contraction_mode(alg);
  const CompositeContraction contraction(p, mode);
  const std::size_t slot = index - 1;
  const FactorSplit top{slot};
  const std::size_t cap = std::size_t(p.degree(slot) / p.min_degree()) + 1;

  GeneratorResult res;
  BarElement cur(BarWord{p.generator(index)});
  int sign = 1;
  while (!cur.empty()) {
    if (res.telemetry.iterations >= cap)
      throw InvariantViolation("perturbation series for x" + std::to_string(index) + " exceeded " +
                               std::to_string(cap) + " iterations");
    IterationCounts counts;
    BarElement d = perturbation_delta(p, cur);
    counts.after_delta = d.size();
    if (alg == Algorithm::Alg2 && slot > 0) {
      BarElement kept;
      for (const auto& [w, c] : d)
        if (count_inversions(w, top) == 0) kept.add(w, c);
      d = std::move(kept);
    }
    counts.after_prune = d.size();
    ModelElement fd = contraction.f(d);
    res.differential += sign == 1 ? fd : -fd;
    TermCounter counter;
    cur = contraction.phi(d, index, &counter);
    counts.after_phi = cur.size();
    counts.emitted = counter.emitted;
    res.telemetry.emitted_terms += counter.emitted;
    res.telemetry.peak_terms = std::max({res.telemetry.peak_terms, counts.after_prune, counts.after_phi});
    res.telemetry.per_iteration.push_back(counts);
    ++res.telemetry.iterations;
    sign = -sign;
  }
  res.telemetry.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

/// Generators are independent; with threads > 1 they are evaluated concurrently.
inline ModelResult compute_model(const Presentation& p, Algorithm alg, unsigned threads = 1)
{
  ModelResult r;
  for (int d : p.degrees()) r.degrees.push_back(d + 1);
  std::vector<GeneratorResult> parts(p.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < p.size(); ++i) parts[i] = d_delta_generator(p, i + 1, alg);
  } else {
    std::vector<std::future<GeneratorResult>> jobs;
    for (std::size_t i = 0; i < p.size(); ++i)
      jobs.push_back(std::async(std::launch::async, [&p, i, alg] { return d_delta_generator(p, i + 1, alg); }));
    for (std::size_t i = 0; i < p.size(); ++i) parts[i] = jobs[i].get();
  }
  for (auto& g : parts) {
    r.differentials.push_back(std::move(g.differential));
    r.telemetry.push_back(std::move(g.telemetry));
  }
  return r;
}

/// Extends the w_i to the model as a derivation:
/// d(x̄^{(e)}) = w * x̄^{(e-1)}, Koszul sign by the prefix degree.
inline ModelElement d_model_apply(const Presentation& p, const ModelResult& r, const ModelElement& m)
{
  ModelElement out;
  for (const auto& [mm, c] : m) {
    for (std::size_t i = 0; i < mm.size(); ++i) {
      if (!mm[i] || r.differentials[i].empty()) continue;
      ModelMonomial prefix = mm.restricted(0, i);
      ModelMonomial rest = ModelMonomial::single(mm.size(), i, mm[i] - 1);
      ModelMonomial suffix = mm.restricted(i + 1, mm.size());
      ModelElement t(prefix, model_degree(p, prefix) % 2 ? Integer(-c) : c);
      t = model_multiply(p, t, r.differentials[i]);
      t = model_multiply(p, t, ModelElement(rest));
      t = model_multiply(p, t, ModelElement(suffix));
      out += t;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// cost model

struct CostEstimate {
  Integer elementary_ops;
  Rational seconds() const { return Rational(elementary_ops, 1000000); }
};

inline CostEstimate cost_estimate(Algorithm alg, unsigned s, unsigned r)
{
  Integer total = 0;
  Integer prod = 1;
  Integer rp = 1; // r^i
  for (unsigned i = 0; i <= s; ++i) {
    if (i > 0) {
      if (alg == Algorithm::Alg1) prod *= (Integer(1) << (i + 1)) - i - 2;
      else prod *= Integer(i) * (i + 1) / 2;
    }
    Integer term;
    if (alg == Algorithm::Alg1) term = factorial(i) * rp + (factorial(i + 1) + factorial(i + 2)) * rp * r;
    else term = rp + Integer(i + 3) * rp * r;
    total += term * prod;
    rp *= r;
  }
  return {total};
}

/// s = floor(k / k0 + 1)
inline unsigned series_length(unsigned k, unsigned k0) { return k / k0 + 1; }

} // namespace hpmodel
