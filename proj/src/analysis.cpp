#include "quadspin/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "quadspin/linalg.hpp"
#include "quadspin/thermal.hpp"
#include "quadspin/version.hpp"

namespace quadspin {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kGridTieEps = 1e-9;      // grid maxima closer than this tie toward small angles
constexpr double kRefineWidth = 1e-4;     // golden-section bracket target, radians
constexpr std::size_t kCoarseGridPoints = 181;

void check_parameter_value(SweepParameter p, double value) {
  switch (p) {
    case SweepParameter::alpha:
    case SweepParameter::beta:
      if (!(value >= 0.0) || !std::isfinite(value)) {
        throw OutOfRange(std::string(to_string(p)) + " must be non-negative, got " +
                         std::to_string(value));
      }
      return;
    case SweepParameter::eta:
      if (!(value >= 0.0 && value <= 1.0)) {
        throw OutOfRange("eta must lie in [0, 1], got " + std::to_string(value));
      }
      return;
    case SweepParameter::theta:
      if (!(value >= 0.0 && value <= std::numbers::pi)) {
        throw OutOfRange("theta must lie in [0, pi], got " + std::to_string(value));
      }
      return;
    case SweepParameter::phi:
      if (!(value >= 0.0 && value < kTwoPi)) {
        throw OutOfRange("phi must lie in [0, 2*pi), got " + std::to_string(value));
      }
      return;
  }
  throw OutOfRange("unknown sweep parameter");
}

double axis_value(const SweepAxis& axis, std::size_t index) {
  if (axis.count == 1) {
    return axis.start;
  }
  if (index == axis.count - 1) {
    return axis.stop;  // exact endpoint, no roundoff drift
  }
  const double step = (axis.stop - axis.start) / static_cast<double>(axis.count - 1);
  return axis.start + static_cast<double>(index) * step;
}

struct PointEvaluation {
  double concurrence;
  double magnetization;
  std::array<double, 4> levels;
};

PointEvaluation evaluate_point(const SweepGrid::Point& pt, const SpinSystem& s,
                               const QuadrupoleTensor& qt) {
  const HamiltonianParams params(pt.alpha, pt.beta, pt.eta,
                                 Orientation(pt.theta, pt.phi));
  const ComplexMatrix h = build_hamiltonian(params, s, qt);
  const auto eig = eig_hermitian(h);

  const DensityMatrix rho = thermal_state(h);
  PointEvaluation out{};
  out.concurrence = concurrence(rho).concurrence;
  out.magnetization = magnetization(rho, s);
  for (std::size_t k = 0; k < 4; ++k) {
    out.levels[k] = eig.eigenvalues[k];
  }
  return out;
}

std::size_t sweep_thread_count(std::size_t points) {
  long requested = 0;  // 0 = auto
  if (const char* env = std::getenv("QUADSPIN_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed >= 0) {
      requested = parsed;
    }
  }
  std::size_t threads = requested > 0 ? static_cast<std::size_t>(requested)
                                      : std::max(1u, std::thread::hardware_concurrency());
  return std::min<std::size_t>(std::max<std::size_t>(threads, 1), std::max<std::size_t>(points, 1));
}

// Runs fn(i) for i in [0, n) across worker threads; any exception aborts
// the loop and is rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const std::size_t threads = sweep_thread_count(n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      fn(i);
    }
    return;
  }
  std::mutex error_mutex;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      const std::size_t chunk = (n + threads - 1) / threads;
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(n, begin + chunk);
      for (std::size_t i = begin; i < end; ++i) {
        {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (first_error) return;
        }
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  }
  for (std::thread& worker : pool) {
    worker.join();
  }
  if (first_error) {
    std::rethrow_exception(first_error);
  }
}

double wrap_phi(double phi) {
  double wrapped = std::fmod(phi, kTwoPi);
  if (wrapped < 0.0) {
    wrapped += kTwoPi;
  }
  return wrapped < kTwoPi ? wrapped : 0.0;
}

double concurrence_at(double alpha, double beta, double eta, double theta, double phi,
                      const SpinSystem& s, const QuadrupoleTensor& qt) {
  const HamiltonianParams params(alpha, beta, eta, Orientation(theta, wrap_phi(phi)));
  return concurrence(thermal_state(build_hamiltonian(params, s, qt))).concurrence;
}

// Golden-section maximization on [lo, hi]; returns the bracket midpoint
// once the bracket is narrower than kRefineWidth.
template <typename Fn>
double golden_maximize(Fn&& f, double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > kRefineWidth) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::string_view to_string(SweepParameter p) {
  switch (p) {
    case SweepParameter::alpha: return "alpha";
    case SweepParameter::beta: return "beta";
    case SweepParameter::eta: return "eta";
    case SweepParameter::theta: return "theta";
    case SweepParameter::phi: return "phi";
  }
  return "?";
}

std::optional<SweepParameter> sweep_parameter_from_string(std::string_view name) {
  if (name == "alpha") return SweepParameter::alpha;
  if (name == "beta") return SweepParameter::beta;
  if (name == "eta") return SweepParameter::eta;
  if (name == "theta") return SweepParameter::theta;
  if (name == "phi") return SweepParameter::phi;
  return std::nullopt;
}

SweepGrid::SweepGrid(std::vector<SweepAxis> axes, std::map<SweepParameter, double> fixed,
                     std::optional<double> alpha_beta_ratio)
    : axes_(std::move(axes)), fixed_(std::move(fixed)), ratio_(alpha_beta_ratio) {
  std::map<SweepParameter, int> seen;
  for (const SweepAxis& axis : axes_) {
    if (axis.count < 1) {
      throw OutOfRange("axis " + std::string(to_string(axis.param)) +
                       " needs at least one point");
    }
    check_parameter_value(axis.param, axis.start);
    check_parameter_value(axis.param, axis.stop);
    ++seen[axis.param];
  }
  for (const auto& [param, value] : fixed_) {
    check_parameter_value(param, value);
    ++seen[param];
  }
  if (ratio_) {
    if (!(*ratio_ > 0.0) || !std::isfinite(*ratio_)) {
      throw OutOfRange("alpha/beta ratio must be positive");
    }
    ++seen[SweepParameter::alpha];
  }
  for (SweepParameter p : {SweepParameter::alpha, SweepParameter::beta, SweepParameter::eta,
                           SweepParameter::theta, SweepParameter::phi}) {
    const int uses = seen.count(p) ? seen.at(p) : 0;
    if (uses == 0) {
      throw OutOfRange("parameter " + std::string(to_string(p)) +
                       " is neither an axis nor fixed");
    }
    if (uses > 1) {
      throw OutOfRange("parameter " + std::string(to_string(p)) +
                       " is specified more than once");
    }
  }
}

std::size_t SweepGrid::total_points() const {
  std::size_t total = 1;
  for (const SweepAxis& axis : axes_) {
    total *= axis.count;
  }
  return total;
}

SweepGrid::Point SweepGrid::point(std::size_t flat_index) const {
  if (flat_index >= total_points()) {
    throw OutOfRange("grid index " + std::to_string(flat_index) + " beyond " +
                     std::to_string(total_points()) + " points");
  }
  std::map<SweepParameter, double> values = fixed_;
  // Row-major decode: the last axis varies fastest.
  std::size_t rest = flat_index;
  for (std::size_t k = axes_.size(); k-- > 0;) {
    const SweepAxis& axis = axes_[k];
    values[axis.param] = axis_value(axis, rest % axis.count);
    rest /= axis.count;
  }
  if (ratio_) {
    values[SweepParameter::alpha] = *ratio_ * values.at(SweepParameter::beta);
  }
  return Point{values.at(SweepParameter::alpha), values.at(SweepParameter::beta),
               values.at(SweepParameter::eta), values.at(SweepParameter::theta),
               values.at(SweepParameter::phi)};
}

std::string SweepGrid::describe() const {
  std::ostringstream out;
  out << "axes=";
  for (std::size_t k = 0; k < axes_.size(); ++k) {
    if (k > 0) out << ",";
    out << to_string(axes_[k].param) << ":" << axes_[k].start << ":" << axes_[k].stop << ":"
        << axes_[k].count;
  }
  out << " fixed=";
  bool first = true;
  for (const auto& [param, value] : fixed_) {
    if (!first) out << ",";
    first = false;
    out << to_string(param) << "=" << value;
  }
  if (ratio_) {
    out << " alpha/beta=" << *ratio_;
  }
  return out.str();
}

SweepResult run_sweep(const SweepGrid& grid, double spin) {
  const SpinSystem system(spin);
  const QuadrupoleTensor tensor = build_quadrupole_tensor(system);
  const std::size_t total = grid.total_points();

  SweepResult result;
  result.records.resize(total);
  result.metadata =
      SweepMetadata{grid.describe(),
                    "basis descending m; h = alpha*Iz + beta*sum((-1)^m V(-m) Q(m)); "
                    "rho ~ exp(-h); M = Tr(rho Iz)",
                    spin, std::string(kVersion)};

  parallel_for(total, [&](std::size_t index) {
    const SweepGrid::Point pt = grid.point(index);
    try {
      const PointEvaluation eval = evaluate_point(pt, system, tensor);
      result.records[index] = SweepRecord{pt.alpha, pt.beta,          pt.eta,
                                          pt.theta, pt.phi,           eval.concurrence,
                                          eval.magnetization, eval.levels};
    } catch (const std::exception& e) {
      std::ostringstream msg;
      msg << "sweep failed at alpha=" << pt.alpha << " beta=" << pt.beta << " eta=" << pt.eta
          << " theta=" << pt.theta << " phi=" << pt.phi << ": " << e.what();
      throw Error(msg.str());
    }
  });
  return result;
}

AngleMaximum maximize_concurrence_over_angles(double alpha, double beta, double eta) {
  const SpinSystem system(1.5);
  const QuadrupoleTensor tensor = build_quadrupole_tensor(system);
  // Validates alpha, beta, eta up front.
  (void)HamiltonianParams(alpha, beta, eta, Orientation(0.0, 0.0));

  const double theta_step = std::numbers::pi / static_cast<double>(kCoarseGridPoints - 1);
  const double phi_step = kTwoPi / static_cast<double>(kCoarseGridPoints);

  struct Cell {
    double c, theta, phi;
  };
  std::vector<Cell> rows(kCoarseGridPoints);
  parallel_for(kCoarseGridPoints, [&](std::size_t i) {
    const double theta = (i == kCoarseGridPoints - 1) ? std::numbers::pi
                                                      : static_cast<double>(i) * theta_step;
    Cell best{-1.0, theta, 0.0};
    for (std::size_t j = 0; j < kCoarseGridPoints; ++j) {
      const double phi = static_cast<double>(j) * phi_step;
      const double c = concurrence_at(alpha, beta, eta, theta, phi, system, tensor);
      if (c > best.c + kGridTieEps) {
        best = Cell{c, theta, phi};
      }
    }
    rows[i] = best;
  });
  Cell best{-1.0, 0.0, 0.0};
  for (const Cell& cell : rows) {
    if (cell.c > best.c + kGridTieEps) {
      best = cell;
    }
  }

  // Coordinate-wise refinement. A refined coordinate is kept only when it
  // genuinely improves the value; on flat directions (eta = 0 leaves phi
  // free) the grid tie-break survives.
  double theta = best.theta;
  double phi = best.phi;
  double value = best.c;
  for (int round = 0; round < 2; ++round) {
    const double theta_refined = golden_maximize(
        [&](double t) { return concurrence_at(alpha, beta, eta, t, phi, system, tensor); },
        std::max(0.0, theta - theta_step), std::min(std::numbers::pi, theta + theta_step));
    const double c_theta = concurrence_at(alpha, beta, eta, theta_refined, phi, system, tensor);
    if (c_theta > value + kGridTieEps * 1e-3) {
      theta = theta_refined;
      value = c_theta;
    }
    const double phi_refined = golden_maximize(
        [&](double p) { return concurrence_at(alpha, beta, eta, theta, p, system, tensor); },
        phi - phi_step, phi + phi_step);
    const double c_phi =
        concurrence_at(alpha, beta, eta, theta, phi_refined, system, tensor);
    if (c_phi > value + kGridTieEps * 1e-3) {
      phi = phi_refined;
      value = c_phi;
    }
  }
  phi = wrap_phi(phi);
  return AngleMaximum{theta, phi, value};
}

double critical_beta(double ratio, double eta, double theta, double phi, double threshold) {
  if (!(ratio > 0.0) || !std::isfinite(ratio)) {
    throw OutOfRange("ratio must be positive, got " + std::to_string(ratio));
  }
  if (!(threshold >= 0.0)) {
    throw OutOfRange("threshold must be non-negative, got " + std::to_string(threshold));
  }
  const SpinSystem system(1.5);
  const QuadrupoleTensor tensor = build_quadrupole_tensor(system);
  const Orientation orientation(theta, phi);  // validates the angles

  const auto c_at = [&](double beta) {
    return concurrence_at(ratio * beta, beta, eta, orientation.theta(), orientation.phi(),
                          system, tensor);
  };

  double lo = 1e-3;
  double hi = 1e3;
  if (c_at(hi) <= threshold) {
    throw NoOnsetFound("concurrence stays at or below threshold up to beta = 1e3");
  }
  if (c_at(lo) > threshold) {
    return lo;
  }
  while (hi - lo > 1e-4 * 0.5 * (hi + lo)) {
    const double mid = 0.5 * (lo + hi);
    if (c_at(mid) > threshold) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

WitnessFit fit_witness(const SweepResult& sweep, double alpha_max) {
  if (!(alpha_max > 0.0)) {
    throw OutOfRange("alpha_max must be positive, got " + std::to_string(alpha_max));
  }
  const double spin = sweep.metadata.spin;
  std::vector<double> xs;  // reduced magnetization
  std::vector<double> ys;  // concurrence
  for (const SweepRecord& record : sweep.records) {
    if (record.alpha > 0.0 && record.alpha <= alpha_max) {
      xs.push_back(record.magnetization / spin);
      ys.push_back(record.concurrence);
    }
  }
  if (xs.size() < 10) {
    throw InsufficientPoints("witness fit needs at least 10 points with alpha in (0, " +
                             std::to_string(alpha_max) + "], got " + std::to_string(xs.size()));
  }

  const double n = static_cast<double>(xs.size());
  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    mean_x += xs[k];
    mean_y += ys[k];
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sxx += (xs[k] - mean_x) * (xs[k] - mean_x);
    sxy += (xs[k] - mean_x) * (ys[k] - mean_y);
  }
  const double slope = sxx > 0.0 ? sxy / sxx : 0.0;
  const double intercept = mean_y - slope * mean_x;

  double max_residual = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    max_residual = std::max(max_residual, std::abs(ys[k] - (slope * xs[k] + intercept)));
  }
  return WitnessFit{slope, intercept, max_residual, alpha_max, xs.size()};
}

}  // namespace quadspin
