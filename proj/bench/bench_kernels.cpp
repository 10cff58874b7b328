// Serial reference vs OpenMP kernels. Each pair is also checked for
// bitwise-identical output; a mismatch makes the run fail.
#include <chrono>
#include <cstring>
#include <functional>
#include <string>

#include <fmt/format.h>
#include <omp.h>

#include "su11/kernels.hpp"
#include "su11/reweight.hpp"
#include "su11/sampling.hpp"
#include "su11/spectral.hpp"
#include "su11/table.hpp"

using namespace su11;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

bool row(const std::string& name, int reps, const std::function<void()>& serial, const std::function<void()>& parallel,
         const std::function<bool()>& identical) {
  const double ts = best_of(reps, serial);
  const double tp = best_of(reps, parallel);
  const bool same = identical();
  fmt::print("{:<24} serial {:9.4f} s  parallel {:9.4f} s  speedup {:5.2f}  identical {}\n", name, ts, tp, ts / tp,
             same ? "yes" : "NO");
  return same;
}

std::vector<double> log_points(double lo, double hi, std::size_t n) { return GridSpec{lo, hi, n, true}.values(); }

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  const std::size_t samples = quick ? 100'000 : 2'000'000;
  const std::size_t grid = quick ? 64 : 1000;
  const int reps = quick ? 1 : 3;
  fmt::print("threads {}  samples {}  grid {}\n", omp_get_max_threads(), samples, grid);

  bool ok = true;
  const WeightSpec exp_w = WeightSpec::exp_distance();
  const StreamLayout layout{42, StreamLayout::kDefaultStreams, samples};
  SampleBatch a, b;
  ok &= row("mc_sample (exp weight)", reps, [&] { a = kernels::mc_sample_serial(layout, exp_w); },
            [&] { b = kernels::mc_sample_parallel(layout, exp_w); },
            [&] { return a.omega == b.omega && a.weight == b.weight; });

  const std::vector<double> xs = log_points(1e-3, 1e3, grid);
  std::vector<double> ms, mp;
  auto cdf = [](double x) { return cdf_quadrature(x).value; };
  ok &= row("map cdf_quadrature", reps, [&] { ms = kernels::map_serial(xs, cdf); },
            [&] { mp = kernels::map_parallel(xs, cdf); }, [&] { return ms == mp; });

  SpectralTable ts, tp;
  const std::vector<double> table_xs = log_points(1e-3, 1e2, grid);
  ok &= row("spectral table", reps, [&] { ts = build_spectral_table(table_xs, 1e-10, false); },
            [&] { tp = build_spectral_table(table_xs, 1e-10, true); }, [&] {
              bool same = ts.rows.size() == tp.rows.size();
              for (std::size_t i = 0; same && i < ts.rows.size(); ++i) {
                same = std::memcmp(&ts.rows[i], &tp.rows[i], sizeof(SpectralRow)) == 0;
              }
              return same;
            });

  const ReweightedDistribution dist(exp_w);
  std::vector<double> cs, cp;
  ok &= row("cdf_at_sorted (exp)", reps, [&] { cs = dist.cdf_at_sorted(xs, false); },
            [&] { cp = dist.cdf_at_sorted(xs, true); }, [&] { return cs == cp; });

  fmt::print("outputs {}\n", ok ? "bitwise identical" : "DIFFER");
  return ok ? 0 : 1;
}
