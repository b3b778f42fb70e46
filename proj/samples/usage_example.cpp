// Computes the model of a small twisted tensor product and prints it.
#include <hpmodel/hpmodel.hpp>

#include <iostream>

int main()
{
  using namespace hpmodel;
  Presentation base({1, 2, 6});
  Presentation p({1, 2, 6}, {AlgebraElement(), parse_expression("-2*x1", base), parse_expression("x1*x2^2", base)});

  ModelResult r = compute_model(p, Algorithm::Alg2);
  std::cout << render_model(p, r, OutputFormat::Text) << "\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    std::cout << "x" << i + 1 << ": " << r.telemetry[i].iterations << " iterations, peak " << r.telemetry[i].peak_terms
              << " terms\n";
}
