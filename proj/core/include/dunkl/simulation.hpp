#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "dunkl/dunkl_core.hpp"

namespace dunkl {

struct PathSample {
  std::vector<double> times;
  std::vector<Point> states;
  std::uint64_t seed;
};

enum class ProcessKind { Gaussian, Cauchy };

using Rng = std::mt19937_64;

/// Stream seed for path `index`, from a splitmix64 mix of (seed, index).
std::uint64_t path_seed(std::uint64_t seed, std::uint64_t index);

/// Exact draw from Gamma_k(s, x, y) w_k(y) dy, coordinate by coordinate:
/// |y_i|^2 / 4s ~ Gamma(k_i + 1/2 + P), P ~ Poisson(x_i^2 / 4s), and
/// sign(y_i) = sign(x_i) with probability (1 + I_{k_i+1/2}(u) / I_{k_i-1/2}(u)) / 2, u = |x_i y_i| / 2s.
Point sample_heat_transition(const MultiplicityVector& k, const Point& x, double s, Rng& rng);

/// Draw from the 1/2-stable law at time t (Laplace transform exp(-t sqrt(u))).
double sample_stable_half(double t, Rng& rng);

/// Worker count: DUNKL_KIT_THREADS if set and positive, else hardware concurrency.
unsigned worker_count();

/// Paths of the Dunkl-type Brownian motion (or its 1/2-stable subordinate) on the time grid.
/// A leading 0 is added to t_grid when missing. Results do not depend on the worker count.
std::vector<PathSample> simulate_paths(const MultiplicityVector& k, ProcessKind kind,
                                       std::vector<double> t_grid, std::size_t n_paths,
                                       std::uint64_t seed, Point start = {}, unsigned threads = 0);

/// |X_t| at grid index `time_index` over all paths.
std::vector<double> radial_marginal(const std::vector<PathSample>& paths, std::size_t time_index);

/// CSV with columns path_id,time,x1..xN.
void write_paths_csv(std::ostream& out, const std::vector<PathSample>& paths);

}  // namespace dunkl
