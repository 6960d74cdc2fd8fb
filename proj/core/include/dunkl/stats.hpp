#pragma once

#include <functional>
#include <vector>

namespace dunkl {

struct KsResult {
  double statistic;
  double p_value;
  std::size_t n;
};

/// Kolmogorov limiting survival function Q(x) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 x^2).
double kolmogorov_survival(double x);

/// One-sample Kolmogorov-Smirnov test against a continuous CDF.
/// The p-value uses the Kolmogorov limit with the (sqrt(n) + 0.12 + 0.11/sqrt(n)) correction.
KsResult ks_test(std::vector<double> sample, const std::function<double(double)>& cdf);

}  // namespace dunkl
