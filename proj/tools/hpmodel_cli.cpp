#include <hpmodel/hpmodel.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>

using namespace hpmodel;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_check_failed = 2;

std::optional<Presentation> load_valid(const std::string& path)
{
  std::vector<std::string> warnings;
  Presentation p;
  try {
    p = load_presentation(path, &warnings);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return std::nullopt;
  }
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  auto v = validate_presentation(p);
  if (!v.empty()) {
    for (const auto& x : v) std::cerr << "invalid: " << x.message << "\n";
    return std::nullopt;
  }
  return p;
}

int print_reports(const PropertyReports& reports)
{
  bool ok = true;
  for (const auto& r : reports) {
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases";
    if (!r.passed()) std::cout << ", " << r.failures << " failed; first: " << r.first_failure;
    std::cout << ")\n";
    ok = ok && r.passed();
  }
  return ok ? exit_ok : exit_check_failed;
}

std::string ratio(double a, double b)
{
  if (b <= 0) return a <= 0 ? "n/a" : "inf";
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << a / b;
  return os.str();
}

void print_estimate(unsigned s, unsigned r)
{
  for (auto alg : {Algorithm::Alg1, Algorithm::Alg2}) {
    auto c = cost_estimate(alg, s, r);
    auto d = format_duration(c.seconds());
    std::cout << std::left << std::setw(6) << (alg == Algorithm::Alg1 ? "Alg1" : "Alg2") << " s=" << s << " r=" << r
              << "  ops=" << c.elementary_ops << "  time=" << d.value << " " << d.unit << "\n";
  }
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"1-homological models of twisted tensor products of exterior and polynomial algebras"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "compute the model differential on every generator");
  std::string input;
  std::string alg_name = "alg2";
  std::string format = "text";
  unsigned threads = 1;
  compute->add_option("input", input, "presentation JSON")->required();
  compute->add_option("--alg", alg_name, "alg1 or alg2")->check(CLI::IsMember({"alg1", "alg2"}));
  compute->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  compute->add_option("--threads", threads, "generators evaluated concurrently");

  auto* check = app.add_subcommand("check", "run the property suites");
  std::string check_input;
  std::size_t random_count = 0, max_gens = 4, samples = 40;
  std::uint64_t seed = 1;
  check->add_option("input", check_input, "presentation JSON");
  check->add_option("--random", random_count, "number of random presentations");
  check->add_option("--max-gens", max_gens, "generators per random presentation");
  check->add_option("--seed", seed, "random seed");
  check->add_option("--samples", samples, "random elements per property and presentation");

  auto* bench = app.add_subcommand("bench", "time Alg1 against Alg2 per generator");
  std::string bench_input;
  unsigned repeat = 3;
  bench->add_option("input", bench_input, "presentation JSON")->required();
  bench->add_option("--repeat", repeat, "runs per generator (best time kept)");

  auto* estimate = app.add_subcommand("estimate", "elementary-operation counts at 10^6 ops/s");
  std::optional<unsigned> est_s, est_r, est_k, est_k0;
  estimate->add_option("--s", est_s, "series length");
  estimate->add_option("--r", est_r, "maximum number of summands of rho(x_i)");
  estimate->add_option("--k", est_k, "generator degree");
  estimate->add_option("--k0", est_k0, "minimal generator degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_invalid;
  }

  try {
    if (*compute) {
      auto p = load_valid(input);
      if (!p) return exit_invalid;
      auto r = compute_model(*p, alg_name == "alg1" ? Algorithm::Alg1 : Algorithm::Alg2, threads);
      std::cout << render_model(*p, r, format == "json" ? OutputFormat::Json : OutputFormat::Text) << "\n";
      return exit_ok;
    }

    if (*check) {
      Rng rng(seed);
      PropertyReports reports = check_term_counts();
      if (!check_input.empty()) {
        auto p = load_valid(check_input);
        if (!p) return exit_invalid;
        merge_reports(reports, check_presentation(*p, rng, samples));
      }
      RandomPresentationOptions opts;
      opts.max_gens = std::max<std::size_t>(max_gens, 2);
      for (std::size_t i = 0; i < random_count; ++i)
        merge_reports(reports, check_presentation(random_presentation(rng, opts), rng, samples));
      return print_reports(reports);
    }

    if (*bench) {
      auto p = load_valid(bench_input);
      if (!p) return exit_invalid;
      std::cout << "gen   alg1_s      alg2_s      time_ratio  alg1_peak  alg2_peak  peak_ratio  alg1_emitted  alg2_emitted\n";
      for (std::size_t i = 1; i <= p->size(); ++i) {
        GeneratorResult best[2];
        double secs[2] = {std::numeric_limits<double>::max(), std::numeric_limits<double>::max()};
        for (int a = 0; a < 2; ++a)
          for (unsigned k = 0; k < std::max(repeat, 1u); ++k) {
            auto g = d_delta_generator(*p, i, a == 0 ? Algorithm::Alg1 : Algorithm::Alg2);
            if (g.telemetry.seconds < secs[a]) {
              secs[a] = g.telemetry.seconds;
              best[a] = std::move(g);
            }
          }
        if (best[0].differential != best[1].differential) {
          std::cerr << "error: algorithms disagree on x" << i << "\n";
          return exit_check_failed;
        }
        std::cout << std::left << std::setw(6) << ("x" + std::to_string(i)) << std::setw(12) << secs[0] << std::setw(12)
                  << secs[1] << std::setw(12) << ratio(secs[1], secs[0]) << std::setw(11)
                  << best[0].telemetry.peak_terms << std::setw(11) << best[1].telemetry.peak_terms << std::setw(12)
                  << ratio(double(best[1].telemetry.peak_terms), double(best[0].telemetry.peak_terms))
                  << std::setw(14) << best[0].telemetry.emitted_terms << best[1].telemetry.emitted_terms << "\n";
      }
      std::cout << "ratios are alg2/alg1\n";
      return exit_ok;
    }

    if (*estimate) {
      if (est_k || est_k0) {
        if (!est_k || !est_k0 || !est_r || *est_k0 == 0) {
          std::cerr << "error: --k, --k0 and --r are required together (k0 > 0)\n";
          return exit_invalid;
        }
        est_s = series_length(*est_k, *est_k0);
      }
      if (est_s || est_r) {
        if (!est_s || !est_r || *est_r == 0) {
          std::cerr << "error: --s and --r are required together (r > 0)\n";
          return exit_invalid;
        }
        print_estimate(*est_s, *est_r);
        return exit_ok;
      }
      for (auto [s, r] : {std::pair{3u, 2u}, {3u, 3u}, {4u, 2u}, {5u, 3u}, {6u, 2u}, {6u, 3u}}) print_estimate(s, r);
      return exit_ok;
    }
  } catch (const InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_check_failed;
  }
  return exit_ok;
}
