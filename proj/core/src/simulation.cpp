#include "dunkl/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <string>
#include <thread>

#include "dunkl/error.hpp"
#include "dunkl/special_fn.hpp"

namespace dunkl {

std::uint64_t path_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Point sample_heat_transition(const MultiplicityVector& k, const Point& x, double s, Rng& rng) {
  if (x.size() != k.dim()) throw DomainError("sample_heat_transition: dimension mismatch");
  if (!(s > 0.0)) throw DomainError("sample_heat_transition: time step must be positive");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Point y(k.dim());
  for (std::size_t i = 0; i < k.dim(); ++i) {
    const double mean = x[i] * x[i] / (4.0 * s);
    double shape = k[i] + 0.5;
    if (mean > 0.0) shape += static_cast<double>(std::poisson_distribution<long long>(mean)(rng));
    const double g = std::gamma_distribution<double>(shape, 1.0)(rng);
    const double r = std::sqrt(4.0 * s * g);
    const double u = std::abs(x[i]) * r / (2.0 * s);
    const double keep = 0.5 * (1.0 + bessel_i_ratio(k[i] - 0.5, u));
    const double toward = x[i] < 0.0 ? -1.0 : 1.0;
    y[i] = unit(rng) < keep ? toward * r : -toward * r;
  }
  return y;
}

double sample_stable_half(double t, Rng& rng) {
  if (!(t > 0.0)) throw DomainError("sample_stable_half: t must be positive");
  // t^2 / 4S ~ Gamma(1/2, 1).
  double v = 0.0;
  while (!(v > 0.0)) v = std::gamma_distribution<double>(0.5, 1.0)(rng);
  return t * t / (4.0 * v);
}

unsigned worker_count() {
  if (const char* env = std::getenv("DUNKL_KIT_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
    throw DomainError("DUNKL_KIT_THREADS must be a positive integer");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<PathSample> simulate_paths(const MultiplicityVector& k, ProcessKind kind,
                                       std::vector<double> t_grid, std::size_t n_paths,
                                       std::uint64_t seed, Point start, unsigned threads) {
  if (t_grid.empty()) throw DomainError("simulate_paths: empty time grid");
  if (t_grid.front() < 0.0) throw DomainError("simulate_paths: times must be nonnegative");
  if (t_grid.front() > 0.0) t_grid.insert(t_grid.begin(), 0.0);
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    if (!(t_grid[i] > t_grid[i - 1])) throw DomainError("simulate_paths: time grid must increase");
  if (start.empty()) start.assign(k.dim(), 0.0);
  if (start.size() != k.dim()) throw DomainError("simulate_paths: start point dimension mismatch");

  std::vector<PathSample> paths(n_paths);
  auto run = [&](std::size_t first, std::size_t last) {
    for (std::size_t p = first; p < last; ++p) {
      PathSample& path = paths[p];
      path.seed = path_seed(seed, p);
      path.times = t_grid;
      path.states.reserve(t_grid.size());
      path.states.push_back(start);
      Rng rng(path.seed);
      for (std::size_t i = 1; i < t_grid.size(); ++i) {
        const double dt = t_grid[i] - t_grid[i - 1];
        const double s = kind == ProcessKind::Gaussian ? dt : sample_stable_half(dt, rng);
        path.states.push_back(sample_heat_transition(k, path.states.back(), s, rng));
      }
    }
  };
  const std::size_t workers =
      std::min<std::size_t>(threads ? threads : worker_count(), std::max<std::size_t>(n_paths, 1));
  if (workers <= 1) {
    run(0, n_paths);
    return paths;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (n_paths + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        run(std::min(n_paths, w * chunk), std::min(n_paths, (w + 1) * chunk));
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return paths;
}

std::vector<double> radial_marginal(const std::vector<PathSample>& paths, std::size_t time_index) {
  std::vector<double> r;
  r.reserve(paths.size());
  for (const PathSample& p : paths) {
    if (time_index >= p.states.size()) throw DomainError("radial_marginal: time index out of range");
    double s = 0.0;
    for (double v : p.states[time_index]) s += v * v;
    r.push_back(std::sqrt(s));
  }
  return r;
}

void write_paths_csv(std::ostream& out, const std::vector<PathSample>& paths) {
  const std::size_t dim = paths.empty() || paths[0].states.empty() ? 0 : paths[0].states[0].size();
  out << "path_id,time";
  for (std::size_t d = 0; d < dim; ++d) out << ",x" << d + 1;
  out << '\n';
  out.precision(17);
  for (std::size_t p = 0; p < paths.size(); ++p)
    for (std::size_t i = 0; i < paths[p].times.size(); ++i) {
      out << p << ',' << paths[p].times[i];
      for (double v : paths[p].states[i]) out << ',' << v;
      out << '\n';
    }
}

}  // namespace dunkl
