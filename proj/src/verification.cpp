#include "su11/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "su11/empirical.hpp"
#include "su11/moment_map.hpp"
#include "su11/moments.hpp"
#include "su11/reweight.hpp"
#include "su11/sampling.hpp"
#include "su11/spectral.hpp"

namespace su11 {

namespace {

// Substream tags; one per randomised check.
enum Stream : std::size_t {
  kBform = 2001,
  kClassify,
  kAdjoint,
  kJacobi,
  kSp2,
  kIsometry,
  kGroupLaw,
  kFiberDisk,
  kOmega,
  kSlice,
  kCone,
  kEquivariance,
  kCoisotropy,
  kSurjectivity,
  kPotential,
};

using Engine = std::mt19937_64;

double uniform(Engine& e, double lo, double hi) { return lo + (hi - lo) * uniform01(e); }

complex random_disk(Engine& e, double rmax) {
  const double r = rmax * std::sqrt(uniform01(e));
  return std::polar(r, 2.0 * std::numbers::pi * uniform01(e));
}

LieVector random_lie(Engine& e, double scale = 2.0) {
  const double a = uniform(e, -scale, scale);
  const double b = uniform(e, -scale, scale);
  const double c = uniform(e, -scale, scale);
  return {a, b, c};
}

MobiusTransform random_group(Engine& e, double rmax) {
  const complex zeta = random_disk(e, rmax);
  const double angle = uniform(e, -std::numbers::pi, std::numbers::pi);
  return MobiusTransform::rotation(angle) * MobiusTransform::translation(zeta);
}

BidiskPoint random_bidisk(Engine& e, double rmax) { return {DiskPoint(random_disk(e, rmax)), DiskPoint(random_disk(e, rmax))}; }

double diff_norm(const LieVector& x, const LieVector& y) { return (x - y).norm_inf(); }

CheckResult make(std::string name, bool ok, double value, double tol) {
  return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, value, tol};
}

// KS tolerances are set for 10^6 samples; smaller runs scale them by the
// 1/sqrt(n) width of the null distribution.
constexpr double kReferenceSamples = 1e6;

double ks_tolerance(double base, std::size_t n) {
  const double nd = static_cast<double>(n);
  return nd >= kReferenceSamples ? base : base * std::sqrt(kReferenceSamples / nd);
}

void merge_step_failure(CheckResult& r, double residual, double tol) {
  r.status = CheckStatus::fail;
  r.details["error_class"] = "step_size";
  r.details["worst_residual"] = residual;
  r.details["fd_tol"] = tol;
}

}  // namespace

CheckResult bform_signature_check(const VerificationConfig& cfg) {
  Engine e = stream_engine(cfg.seed, kBform);
  const std::size_t n = 10 * cfg.random_trials;
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const LieVector x = random_lie(e);
    const Matrix2c m = x.matrix();
    const double trace_form = 0.5 * (m * m).trace().real();
    worst = std::max(worst, std::abs(bform(x, x) - trace_form));
    worst = std::max(worst, std::abs(bform(x, x) - (-x.a * x.a + x.b * x.b + x.c * x.c)));
  }
  const double tol = 1e-14;
  CheckResult r = make("lie.bform_signature", worst <= tol, worst, tol);
  r.details["trials"] = n;
  r.details["sampling"] = "coefficients uniform in [-2, 2]";
  return r;
}

CheckResult classify_eigensolver_check(const VerificationConfig& cfg) {
  Engine e = stream_engine(cfg.seed, kClassify);
  const std::size_t n = 10 * cfg.random_trials;
  double worst_omega = 0.0;
  std::size_t mismatches = 0;
  std::size_t elliptic = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const LieVector x = random_lie(e);
    const Matrix2c m = x.matrix();
    // Trace-free: eigenvalues are +-sqrt(-det).
    const complex lambda = std::sqrt(-m.determinant());
    const bool imaginary = std::abs(lambda.real()) <= 1e-12 * std::abs(lambda);
    const SpectralClass cls = classify(x);
    if (std::abs(bform(x, x)) < 1e-9) continue;
    if (cls.is_elliptic() != imaginary) {
      ++mismatches;
      continue;
    }
    if (imaginary) {
      ++elliptic;
      worst_omega = std::max(worst_omega, std::abs(cls.omega - std::abs(lambda.imag())));
      const bool positive = cls.tag == SpectralTag::elliptic_positive;
      if (positive != (x.a > 0.0)) ++mismatches;
    }
  }
  const double tol = 1e-10;
  CheckResult r = make("lie.classify_vs_eigensolver", mismatches == 0 && worst_omega <= tol, worst_omega, tol);
  r.details["trials"] = n;
  r.details["elliptic_count"] = elliptic;
  r.details["tag_mismatches"] = mismatches;
  return r;
}

CheckResult adjoint_invariance_check(const VerificationConfig& cfg) {
  Engine e = stream_engine(cfg.seed, kAdjoint);
  double worst = 0.0;
  std::size_t tag_changes = 0;
  for (std::size_t i = 0; i < cfg.random_trials; ++i) {
    const MobiusTransform g = random_group(e, 0.7);
    const LieVector x = random_lie(e);
    const LieVector y = random_lie(e);
    const LieVector gx = adjoint(g, x);
    const LieVector gy = adjoint(g, y);
    worst = std::max(worst, std::abs(bform(gx, gy) - bform(x, y)) / std::max(1.0, gx.norm_inf() * gy.norm_inf()));
    const SpectralClass before = classify(x);
    const SpectralClass after = classify(gx);
    if (before.tag != after.tag) ++tag_changes;
    if (before.is_elliptic()) {
      worst = std::max(worst, std::abs(before.omega - after.omega) / std::max(1.0, gx.norm_inf()));
    }
  }
  const double tol = 1e-12;
  CheckResult r = make("lie.adjoint_invariance", tag_changes == 0 && worst <= tol, worst, tol);
  r.details["trials"] = cfg.random_trials;
  r.details["tag_changes"] = tag_changes;
  r.details["measure"] = "bform and omega differences relative to the conjugated norms";
  return r;
}

CheckResult jacobi_check(const VerificationConfig& cfg) {
  Engine e = stream_engine(cfg.seed, kJacobi);
  double worst = 0.0;
  for (std::size_t i = 0; i < cfg.random_trials; ++i) {
    const LieVector x = random_lie(e), y = random_lie(e), z = random_lie(e);
    const LieVector j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
    worst = std::max(worst, j.norm_inf());
  }
  const double tol = 1e-12;
  CheckResult r = make("lie.jacobi", worst <= tol, worst, tol);
  r.details["trials"] = cfg.random_trials;
  return r;
}

CheckResult sp2_roundtrip_check(const VerificationConfig& cfg) {
  Engine e = stream_engine(cfg.seed, kSp2);
  double worst = 0.0;
  for (std::size_t i = 0; i < cfg.random_trials; ++i) {
    const LieVector x = random_lie(e);
    worst = std::max(worst, diff_norm(from_sp2(to_sp2(x)), x));
    // Determinant is conjugation invariant.
    const SymplecticGenerator s = to_sp2(x);
    const double det_real = s.m00() * s.m11() - s.m01() * s.m10();
    worst = std::max(worst, std::abs(det_real - x.matrix().determinant().real()));
  }
  const SymplecticGenerator xi = to_sp2(LieVector::xi());
  const SymplecticGenerator eta = to_sp2(LieVector::eta());
  const SymplecticGenerator zeta = to_sp2(LieVector::zeta());
  const bool basis_ok = xi.m00() == 0.0 && xi.m01() == 1.0 && xi.m10() == -1.0 && eta.m00() == -1.0 && eta.m01() == 0.0 &&
                        eta.m10() == 0.0 && zeta.m00() == 0.0 && zeta.m01() == 1.0 && zeta.m10() == 1.0;
  const double tol = 1e-12;
  CheckResult r = make("lie.sp2_roundtrip", basis_ok && worst <= tol, worst, tol);
  r.details["trials"] = cfg.random_trials;
  r.details["basis_images_exact"] = basis_ok;
  return r;
}

CheckResult isometry_check(const VerificationConfig& cfg) {
  Engine e = stream_engine(cfg.seed, kIsometry);
  double worst = 0.0;
  for (std::size_t i = 0; i < cfg.random_trials; ++i) {
    const MobiusTransform g = random_group(e, 0.7);
    const complex z = random_disk(e, 0.7);
    const complex w = random_disk(e, 0.7);
    worst = std::max(worst, std::abs(poincare_distance(g(z), g(w)) - poincare_distance(z, w)));
  }
  const double tol = 1e-11;
  CheckResult r = make("disk.isometry", worst <= tol, worst, tol);
  r.details["trials"] = cfg.random_trials;
  r.details["sampling"] = "points and translation parameters with modulus <= 0.7, uniform rotation";
  return r;
}

CheckResult group_law_check(const VerificationConfig& cfg) {
  Engine e = stream_engine(cfg.seed, kGroupLaw);
  double worst = 0.0;
  for (std::size_t i = 0; i < cfg.random_trials; ++i) {
    const MobiusTransform g1 = random_group(e, 0.7);
    const MobiusTransform g2 = random_group(e, 0.7);
    const complex z = random_disk(e, 0.7);
    worst = std::max(worst, std::abs((g1 * g2)(z) - g1(g2(z))));
    worst = std::max(worst, std::abs(g1.inverse()(g1(z)) - z));
  }
  const double tol = 1e-12;
  CheckResult r = make("disk.group_law", worst <= tol, worst, tol);
  r.details["trials"] = cfg.random_trials;
  return r;
}

CheckResult fiber_disk_lemma_check(const VerificationConfig& cfg) {
  Engine e = stream_engine(cfg.seed, kFiberDisk);
  double worst = 0.0;
  const int pairs = 10;
  for (int k = 0; k < pairs; ++k) {
    const double s = uniform(e, 0.0, 0.95);
    const double u = uniform(e, 0.01, 0.95);
    const EuclideanDisk d = hyperbolic_disk_euclidean(s, u);
    for (std::size_t i = 0; i < cfg.random_trials; ++i) {
      const complex w = d.center + std::polar(d.radius, 2.0 * std::numbers::pi * uniform01(e));
      worst = std::max(worst, std::abs(schwarz_distance(complex(s, 0.0), w) - u));
    }
  }
  const double tol = 1e-9;
  CheckResult r = make("disk.fiber_disk_lemma", worst <= tol, worst, tol);
  r.details["pairs"] = pairs;
  r.details["boundary_points_per_pair"] = cfg.random_trials;
  return r;
}

CheckResult omega_formula_check(const VerificationConfig& cfg) {
  Engine e = stream_engine(cfg.seed, kOmega);
  double worst = 0.0;
  for (std::size_t i = 0; i < cfg.random_trials; ++i) {
    const BidiskPoint p = random_bidisk(e, 0.9);
    const double q = schwarz_distance(p.first, p.second);
    const double omega = omega_of_pair(p);
    const double naive = 4.0 * q / std::sqrt(1.0 - q * q);
    const double via_slice = mu_slice(slice_reduce(p).t);
    const double via_class = classify(moment_vector(p)).omega;
    const double scale = std::max(1.0, omega);
    worst = std::max({worst, std::abs(omega - naive) / scale, std::abs(omega - via_slice) / scale,
                      std::abs(omega - via_class) / scale});
  }
  const double tol = 1e-9;
  CheckResult r = make("moment.omega_formula", worst <= tol, worst, tol);
  r.details["trials"] = cfg.random_trials;
  r.details["compared"] = "omega_of_pair, 4q/sqrt(1-q^2), mu_slice(t), classify(moment_vector).omega";
  return r;
}

CheckResult slice_reduce_check(const VerificationConfig& cfg) {
  Engine e = stream_engine(cfg.seed, kSlice);
  double worst = 0.0;
  for (std::size_t i = 0; i < cfg.random_trials; ++i) {
    const BidiskPoint p = random_bidisk(e, 0.9);
    const SliceReduction s = slice_reduce(p);
    const BidiskPoint back = act_bidisk(s.g, slice_point(s.t));
    worst = std::max({worst, std::abs(back.first.value() - p.first.value()),
                      std::abs(back.second.value() - p.second.value())});
  }
  const double tol = 1e-10;
  CheckResult r = make("moment.slice_reduce_roundtrip", worst <= tol, worst, tol);
  r.details["trials"] = cfg.random_trials;
  return r;
}

CheckResult cone_containment_check(const VerificationConfig& cfg) {
  Engine e = stream_engine(cfg.seed, kCone);
  std::size_t outside = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < cfg.cone_samples; ++i) {
    const BidiskPoint p{DiskPoint(random_disk(e, 0.999)), DiskPoint(random_disk(e, 0.999))};
    if (p.is_diagonal()) continue;
    const LieVector m = moment_vector(p);
    if (classify(m).tag != SpectralTag::elliptic_positive) ++outside;
    min_margin = std::min(min_margin, m.a - std::hypot(m.b, m.c));
  }
  double worst_diag = 0.0;
  const std::size_t diag = 100;
  for (std::size_t i = 0; i < diag; ++i) {
    const DiskPoint z(random_disk(e, 0.999));
    const LieVector m = moment_vector({z, z});
    worst_diag = std::max(worst_diag, m.norm_inf());
    if (classify(m).tag != SpectralTag::zero) ++outside;
  }
  const double tol = 1e-12;
  CheckResult r = make("moment.cone_containment", outside == 0 && worst_diag < tol, static_cast<double>(outside), 0.0);
  r.details["off_diagonal_samples"] = cfg.cone_samples;
  r.details["diagonal_samples"] = diag;
  r.details["not_in_expected_class"] = outside;
  r.details["max_diagonal_norm"] = worst_diag;
  r.details["diagonal_tolerance"] = tol;
  r.details["min_cone_margin"] = min_margin;
  return r;
}

CheckResult equivariance_check(const VerificationConfig& cfg) {
  Engine e = stream_engine(cfg.seed, kEquivariance);
  double worst = 0.0;
  double worst_rel = 0.0;
  for (std::size_t i = 0; i < cfg.random_trials; ++i) {
    const MobiusTransform g = random_group(e, 0.6);
    const BidiskPoint p = random_bidisk(e, 0.6);
    const LieVector lhs = moment_vector(act_bidisk(g, p));
    const LieVector rhs = adjoint(g, moment_vector(p));
    const double d = diff_norm(lhs, rhs);
    worst = std::max(worst, d);
    worst_rel = std::max(worst_rel, d / std::max(1.0, rhs.norm_inf()));
  }
  const double tol = 1e-9;
  CheckResult r = make("moment.equivariance", worst < tol, worst, tol);
  r.details["trials"] = cfg.random_trials;
  r.details["max_relative"] = worst_rel;
  r.details["sampling"] = "points and translation parameters with modulus <= 0.6, uniform rotation";
  return r;
}

CheckResult coisotropy_check(const VerificationConfig& cfg) {
  Engine e = stream_engine(cfg.seed, kCoisotropy);
  // mu_slice strictly increasing.
  bool injective = true;
  double prev = -1.0;
  for (int k = 0; k < 10000; ++k) {
    const double v = mu_slice(k / 10000.0);
    injective = injective && v > prev;
    prev = v;
  }
  // The orbit invariant is a function of the moment value, and a Lipschitz
  // one: nearby moment values have nearby invariants.
  double worst_invariant = 0.0;
  double worst_ratio = 0.0;
  for (std::size_t i = 0; i < cfg.random_trials; ++i) {
    const BidiskPoint p = random_bidisk(e, 0.9);
    const LieVector mp = moment_vector(p);
    const double tp = slice_reduce(p).t;
    worst_invariant = std::max(worst_invariant, std::abs(tp - mu_slice_invert(classify(mp).omega)));
    const double eps = 1e-6 * std::max(1.0, mp.norm_inf());
    const LieVector perturbed = mp + LieVector{eps * uniform(e, -1, 1), eps * uniform(e, -1, 1), eps * uniform(e, -1, 1)};
    if (classify(perturbed).tag != SpectralTag::elliptic_positive) continue;
    const BidiskPoint q = moment_preimage(perturbed);
    const double dmu = diff_norm(moment_vector(q), mp);
    if (dmu == 0.0) continue;
    worst_ratio = std::max(worst_ratio, std::abs(slice_reduce(q).t - tp) / dmu);
  }
  // dt/domega <= 1/8 and domega <= 3 |dmu|_inf / margin; C = 10 covers the
  // sampled region with room.
  const double lipschitz = 10.0;
  const double tol = 1e-10;
  const bool ok = injective && worst_invariant <= tol && worst_ratio <= lipschitz;
  CheckResult r = make("moment.coisotropy", ok, worst_ratio, lipschitz);
  r.details["mu_slice_strictly_increasing"] = injective;
  r.details["max_invariant_mismatch"] = worst_invariant;
  r.details["invariant_tolerance"] = tol;
  r.details["max_dt_over_dmu"] = worst_ratio;
  r.details["trials"] = cfg.random_trials;
  return r;
}

CheckResult surjectivity_check(const VerificationConfig& cfg) {
  Engine e = stream_engine(cfg.seed, kSurjectivity);
  double worst = 0.0;
  for (std::size_t i = 0; i < cfg.random_trials; ++i) {
    const double b = uniform(e, -5.0, 5.0);
    const double c = uniform(e, -5.0, 5.0);
    const double a = std::hypot(b, c) + uniform(e, 0.05, 10.0);
    const LieVector y{a, b, c};
    const LieVector image = moment_vector(moment_preimage(y));
    worst = std::max(worst, diff_norm(image, y) / std::max(1.0, y.norm_inf()));
  }
  const LieVector zero_image = moment_vector(moment_preimage(LieVector{}));
  const double tol = 1e-9;
  CheckResult r = make("moment.surjectivity", worst <= tol && zero_image.norm_inf() == 0.0, worst, tol);
  r.details["trials"] = cfg.random_trials;
  r.details["sampling"] = "b, c uniform in [-5, 5], a = hypot(b, c) + uniform [0.05, 10]";
  r.details["zero_preimage_maps_to_zero"] = zero_image.norm_inf() == 0.0;
  return r;
}

CheckResult slice_formula_fd_check(const VerificationConfig& cfg) {
  double worst = 0.0;
  double worst_residual = 0.0;
  bool step_ok = true;
  nlohmann::json rows = nlohmann::json::array();
  for (int k = 1; k <= 9; ++k) {
    const double t = 0.1 * k;
    auto rho_s = [t](double s) {
      const double r = std::exp(-2.0 * s) * t;
      return poincare_distance(complex(r, 0.0), complex(-r, 0.0));
    };
    FdEstimate d = richardson_first(rho_s, 0.0, cfg.fd_step);
    d.value = -d.value;
    const double target = mu_slice(t);
    const double general = potential_moment_component(slice_point(t), LieVector::xi(), cfg.fd_step).value;
    worst = std::max({worst, std::abs(d.value - target), std::abs(general - target)});
    worst_residual = std::max(worst_residual, d.residual);
    step_ok = step_ok && within_step_tolerance(d, cfg.fd_tol);
    rows.push_back({{"t", t}, {"fd", d.value}, {"fd_vector_field", general}, {"mu_slice", target}, {"residual", d.residual}});
  }
  const double tol = 1e-6;
  CheckResult r = make("moment.slice_formula_fd", worst <= tol, worst, tol);
  r.details["points"] = rows;
  r.details["step"] = cfg.fd_step;
  if (!step_ok) merge_step_failure(r, worst_residual, cfg.fd_tol);
  return r;
}

CheckResult slice_axis_check(const VerificationConfig& cfg) {
  double worst = 0.0;
  double worst_residual = 0.0;
  bool step_ok = true;
  for (int k = 1; k <= 9; ++k) {
    const BidiskPoint p = slice_point(0.1 * k);
    for (const LieVector& x : {LieVector::eta(), LieVector::zeta()}) {
      const FdEstimate d = potential_moment_component(p, x, cfg.fd_step);
      worst = std::max(worst, std::abs(d.value));
      worst_residual = std::max(worst_residual, d.residual);
      step_ok = step_ok && within_step_tolerance(d, cfg.fd_tol);
    }
  }
  const double tol = 1e-6;
  CheckResult r = make("moment.slice_axis_components", worst <= tol, worst, tol);
  r.details["t"] = "0.1, 0.2, ..., 0.9";
  r.details["components"] = "eta, zeta";
  if (!step_ok) merge_step_failure(r, worst_residual, cfg.fd_tol);
  return r;
}

CheckResult potential_moment_check(const VerificationConfig& cfg) {
  Engine e = stream_engine(cfg.seed, kPotential);
  double worst = 0.0;
  double worst_residual = 0.0;
  bool step_ok = true;
  const std::size_t n = std::max<std::size_t>(1, cfg.random_trials / 5);
  for (std::size_t i = 0; i < n; ++i) {
    const BidiskPoint p = random_bidisk(e, 0.8);
    if (std::abs(p.first.value() - p.second.value()) < 1e-2) continue;
    const PotentialMoment fd = potential_moment_vector(p, cfg.fd_step);
    const LieVector exact = moment_vector(p);
    const double scale = std::max(1.0, exact.norm_inf());
    worst = std::max(worst, diff_norm(fd.value, exact) / scale);
    worst_residual = std::max(worst_residual, fd.residual / scale);
    step_ok = step_ok && within_step_tolerance({scale, fd.residual}, cfg.fd_tol);
  }
  const double tol = 1e-6;
  CheckResult r = make("moment.potential_vs_equivariant", worst <= tol, worst, tol);
  r.details["trials"] = n;
  r.details["measure"] = "sup-norm difference relative to max(1, |mu|)";
  if (!step_ok) merge_step_failure(r, worst_residual, cfg.fd_tol);
  return r;
}

CheckResult curve_positivity_sweep(const VerificationConfig& cfg) {
  CheckResult r = make("lemma.curve_positivity", true, std::numeric_limits<double>::infinity(), 0.0);
  nlohmann::json rows = nlohmann::json::array();
  for (int k = 1; k <= 9; ++k) {
    const CheckResult c = curve_positivity_check(0.1 * k, 1e-2, 8, cfg);
    r.value = std::min(r.value, c.value);
    if (c.status == CheckStatus::fail) {
      r.status = CheckStatus::fail;
      if (c.is_step_size_failure()) r.details["error_class"] = "step_size";
    }
    rows.push_back({{"t", 0.1 * k},
                    {"min_delta", c.value},
                    {"min_inequality_margin", c.details["min_inequality_margin"]},
                    {"real_second_difference", c.details["real_second_difference"]},
                    {"residual", c.details["residual"]}});
  }
  r.details["radius"] = 1e-2;
  r.details["directions"] = 8;
  r.details["sweep"] = rows;
  if (r.details.contains("error_class")) r.details["fd_tol"] = cfg.fd_tol;
  return r;
}

CheckResult psh_grid_check(const VerificationConfig& cfg) {
  CheckResult r = make("lemma.psh_hessian_grid", true, std::numeric_limits<double>::infinity(), 0.0);
  const complex dz = std::polar(1.0, 0.3);
  const complex dw = std::polar(1.0, -0.7);
  double worst_residual = 0.0;
  double min_gap = std::numeric_limits<double>::infinity();
  bool step_fail = false;
  std::size_t evaluated = 0;
  std::size_t non_positive = 0;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const complex z = 0.85 * (-1.0 + 2.0 * i / 19.0) * dz;
      const complex w = 0.85 * (-1.0 + 2.0 * j / 19.0) * dw;
      min_gap = std::min(min_gap, std::abs(z - w));
      const CheckResult c = psh_hessian_check({DiskPoint(z), DiskPoint(w)}, cfg.fd_step, cfg);
      ++evaluated;
      r.value = std::min(r.value, c.value);
      if (!(c.value > 0.0)) ++non_positive;
      worst_residual = std::max(worst_residual, c.details["residual"].get<double>());
      step_fail = step_fail || c.is_step_size_failure();
    }
  }
  r.status = non_positive == 0 ? CheckStatus::pass : CheckStatus::fail;
  r.details["grid"] = "z_i = 0.85(-1 + 2i/19)e^{0.3i}, w_j = 0.85(-1 + 2j/19)e^{-0.7i}, i, j = 0..19";
  r.details["points"] = evaluated;
  r.details["non_positive_points"] = non_positive;
  r.details["min_distance_to_diagonal"] = min_gap;
  r.details["step"] = cfg.fd_step;
  r.details["worst_residual"] = worst_residual;
  if (step_fail) merge_step_failure(r, worst_residual, cfg.fd_tol);
  return r;
}

CheckResult psh_mixed_along_l_check(const VerificationConfig& cfg) {
  double worst = 0.0;
  double worst_residual = 0.0;
  double min_eig = std::numeric_limits<double>::infinity();
  bool step_ok = true;
  nlohmann::json rows = nlohmann::json::array();
  for (double radius : {0.1, 0.4, 0.8}) {
    for (int k = 0; k < 6; ++k) {
      const complex z = std::polar(radius, std::numbers::pi * k / 6.0);
      const BidiskPoint p{DiskPoint(z), DiskPoint(-z)};
      const ComplexHessian h = complex_hessian(p, cfg.fd_step);
      worst = std::max(worst, std::abs(h.uv));
      worst_residual = std::max(worst_residual, h.residual);
      min_eig = std::min(min_eig, h.min_eigenvalue);
      step_ok = step_ok && within_step_tolerance({h.max_eigenvalue, h.residual}, cfg.fd_tol);
    }
  }
  const ComplexHessian ref = complex_hessian({DiskPoint(0.4, 0.0), DiskPoint(-0.4, 0.0)}, cfg.fd_step);
  const double tol = 1e-5;
  CheckResult r = make("lemma.psh_mixed_along_L", worst < tol && min_eig > 0.0, worst, tol);
  r.details["points"] = "(z, -z), |z| in {0.1, 0.4, 0.8}, arg z = k pi / 6, k = 0..5";
  r.details["mixed_at_0.4"] = std::abs(ref.uv);
  r.details["min_eigenvalue_on_L"] = min_eig;
  r.details["step"] = cfg.fd_step;
  if (!step_ok) merge_step_failure(r, worst_residual, cfg.fd_tol);
  return r;
}

std::vector<CheckResult> monte_carlo_checks(const VerificationConfig& cfg) {
  std::vector<CheckResult> out;
  const SampleBatch batch = mc_sample(cfg.mc_samples, cfg.seed, WeightSpec::uniform());
  const EmpiricalCdf ecdf(batch);
  const std::vector<double> model =
      kernels::map_parallel(ecdf.points(), [](double x) { return cdf_quadrature(x).value; });
  const double ks = ks_distance(ecdf, model);
  const double n = static_cast<double>(batch.size());
  const double band99 = 1.628 / std::sqrt(n);
  {
    const double tol = ks_tolerance(2e-3, batch.size());
    CheckResult r = make("spectral.mc_ks_uniform", ks < tol, ks, tol);
    r.details["tolerance_at_1e6_samples"] = 2e-3;
    r.details["samples"] = batch.size();
    r.details["seed"] = cfg.seed;
    r.details["streams"] = batch.stream_count;
    r.details["ks_99_band"] = band99;
    out.push_back(std::move(r));
  }
  {
    const double self = ks_distance(ecdf, ecdf.cumulative());
    const std::size_t half = batch.size() / 2;
    std::span<const double> om(batch.omega), wt(batch.weight);
    const EmpiricalCdf a(om.first(half), wt.first(half)), b(om.subspan(half), wt.subspan(half));
    const double split = ks_distance(a, b);
    const double na = static_cast<double>(half), nb = n - na;
    const double split_band = 1.628 * std::sqrt((na + nb) / (na * nb));
    const bool ok = self <= 1.0 / n + 1e-15 && split < split_band;
    CheckResult r = make("spectral.mc_consistency", ok, split, split_band);
    r.details["self_distance"] = self;
    r.details["self_distance_bound"] = 1.0 / n;
    r.details["split_half_distance"] = split;
    r.details["importance_weights_all_one"] =
        std::all_of(batch.weight.begin(), batch.weight.end(), [](double w) { return w == 1.0; });
    out.push_back(std::move(r));
  }
  {
    const MomentEstimate mc = mean_mc(batch);
    const MeanQuadrature q = mean_quadrature();
    const double z = std::abs(mc.value - q.value) / mc.error;
    CheckResult r = make("spectral.mc_mean_vs_quadrature", z <= 3.0, z, 3.0);
    r.details["mc_mean"] = mc.value;
    r.details["mc_standard_error"] = mc.error;
    r.details["quadrature_mean"] = q.value;
    r.details["note"] = "the second moment diverges, so the standard error is itself a noisy estimate";
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckResult> reweight_checks(const VerificationConfig& cfg) {
  std::vector<CheckResult> out;
  {
    const WeightSpec w = WeightSpec::exp_distance();
    const SampleBatch batch = mc_sample(cfg.mc_samples, cfg.seed + 1, w);
    const EmpiricalCdf ecdf(batch);
    const ReweightedDistribution dist(w);
    const std::vector<double> model = dist.cdf_at_sorted(ecdf.points());
    const double ks = ks_distance(ecdf, model);
    const double tol = ks_tolerance(3e-3, batch.size());
    CheckResult r = make("spectral.reweight_exp_ks", ks < tol, ks, tol);
    r.details["tolerance_at_1e6_samples"] = 3e-3;
    r.details["samples"] = batch.size();
    r.details["seed"] = cfg.seed + 1;
    r.details["effective_sample_size"] = ecdf.effective_sample_size();
    r.details["normalization"] = dist.normalization();
    out.push_back(std::move(r));
  }
  {
    const ReweightedDistribution uni(WeightSpec::uniform());
    std::size_t mismatches = 0;
    const std::vector<double> xs = [] {
      std::vector<double> v;
      for (int i = 0; i < 60; ++i) v.push_back(1e-3 * std::pow(10.0, i / 10.0));
      return v;
    }();
    for (double x : xs) {
      if (reweight_density(WeightSpec::uniform(), x) != pdf_quadrature(x)) ++mismatches;
      if (uni.cdf(x) != cdf_quadrature(x).value) ++mismatches;
    }
    CheckResult r = make("spectral.reweight_uniform_identity", mismatches == 0 && uni.normalization() == 1.0,
                         static_cast<double>(mismatches), 0.0);
    r.details["grid"] = "60 log-spaced x in [1e-3, 1e3)";
    r.details["comparison"] = "bitwise density and CDF";
    out.push_back(std::move(r));
  }
  return out;
}

VerificationReport run_all(const VerificationConfig& cfg) {
  VerificationReport report;
  auto guarded = [&](const char* name, auto&& fn) {
    try {
      report.add(fn());
    } catch (const std::exception& ex) {
      CheckResult r{name, CheckStatus::fail, std::numeric_limits<double>::quiet_NaN(), 0.0};
      r.details["exception"] = ex.what();
      report.add(std::move(r));
    }
  };
  guarded("lie.bform_signature", [&] { return bform_signature_check(cfg); });
  guarded("lie.classify_vs_eigensolver", [&] { return classify_eigensolver_check(cfg); });
  guarded("lie.adjoint_invariance", [&] { return adjoint_invariance_check(cfg); });
  guarded("lie.jacobi", [&] { return jacobi_check(cfg); });
  guarded("lie.sp2_roundtrip", [&] { return sp2_roundtrip_check(cfg); });
  guarded("disk.isometry", [&] { return isometry_check(cfg); });
  guarded("disk.group_law", [&] { return group_law_check(cfg); });
  guarded("disk.fiber_disk_lemma", [&] { return fiber_disk_lemma_check(cfg); });
  guarded("moment.omega_formula", [&] { return omega_formula_check(cfg); });
  guarded("moment.slice_reduce_roundtrip", [&] { return slice_reduce_check(cfg); });
  guarded("moment.cone_containment", [&] { return cone_containment_check(cfg); });
  guarded("moment.equivariance", [&] { return equivariance_check(cfg); });
  guarded("moment.coisotropy", [&] { return coisotropy_check(cfg); });
  guarded("moment.surjectivity", [&] { return surjectivity_check(cfg); });
  guarded("moment.slice_formula_fd", [&] { return slice_formula_fd_check(cfg); });
  guarded("moment.slice_axis_components", [&] { return slice_axis_check(cfg); });
  guarded("moment.potential_vs_equivariant", [&] { return potential_moment_check(cfg); });
  guarded("lemma.radial_convexity", [&] {
    std::vector<double> grid;
    for (int k = 1; k <= 30; ++k) grid.push_back(-0.1 * k);
    return radial_convexity_check(grid, cfg);
  });
  guarded("lemma.radial_convexity_schwarz_only", [&] { return schwarz_only_convexity_check(cfg); });
  guarded("lemma.curve_positivity", [&] { return curve_positivity_sweep(cfg); });
  guarded("lemma.psh_hessian_grid", [&] { return psh_grid_check(cfg); });
  guarded("lemma.psh_mixed_along_L", [&] { return psh_mixed_along_l_check(cfg); });
  guarded("lemma.psh_hessian", [&] {
    return psh_hessian_check({DiskPoint(0.3, 0.0), DiskPoint(-0.3, 0.0)}, cfg.fd_step, cfg);
  });
  auto add_all = [&](const char* name, auto&& fn) {
    try {
      for (CheckResult& c : fn()) report.add(std::move(c));
    } catch (const std::exception& ex) {
      CheckResult r{name, CheckStatus::fail, std::numeric_limits<double>::quiet_NaN(), 0.0};
      r.details["exception"] = ex.what();
      report.add(std::move(r));
    }
  };
  add_all("spectral.monte_carlo", [&] { return monte_carlo_checks(cfg); });
  add_all("spectral.reweight", [&] { return reweight_checks(cfg); });
  add_all("ledger", [&] { return discrepancy_ledger(cfg); });
  return report;
}

}  // namespace su11
