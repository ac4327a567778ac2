#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadspin/hamiltonian.hpp"

namespace quadspin {

enum class SweepParameter { alpha, beta, eta, theta, phi };

std::string_view to_string(SweepParameter p);
std::optional<SweepParameter> sweep_parameter_from_string(std::string_view name);

struct SweepAxis {
  SweepParameter param;
  double start;
  double stop;
  std::size_t count;  // >= 1; a one-point axis sits at start
};

/// Cartesian parameter grid. Every parameter must be covered exactly once:
/// as an axis, as a fixed value, or (alpha only) derived from beta through
/// alpha_beta_ratio. Values outside the parameter ranges are rejected.
class SweepGrid {
 public:
  SweepGrid(std::vector<SweepAxis> axes, std::map<SweepParameter, double> fixed,
            std::optional<double> alpha_beta_ratio = std::nullopt);

  const std::vector<SweepAxis>& axes() const { return axes_; }
  const std::map<SweepParameter, double>& fixed() const { return fixed_; }
  std::optional<double> alpha_beta_ratio() const { return ratio_; }

  std::size_t total_points() const;

  /// Parameter values at a flat index, row-major over the axes as listed
  /// (the last axis varies fastest).
  struct Point {
    double alpha, beta, eta, theta, phi;
  };
  Point point(std::size_t flat_index) const;

  std::string describe() const;

 private:
  std::vector<SweepAxis> axes_;
  std::map<SweepParameter, double> fixed_;
  std::optional<double> ratio_;
};

struct SweepRecord {
  double alpha, beta, eta, theta, phi;
  double concurrence;
  double magnetization;                // Tr(rho Iz)
  std::array<double, 4> levels;        // eigenvalues of h, ascending
};

struct SweepMetadata {
  std::string grid;         // grid description
  std::string conventions;  // basis ordering and sign conventions in force
  double spin;
  std::string version;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  SweepMetadata metadata;
};

/// Evaluate concurrence, magnetization and energy levels on every grid
/// point, in deterministic row-major order. Points may be evaluated on
/// several threads (QUADSPIN_THREADS caps the count, 0 or unset = auto);
/// record order does not depend on the thread count. A failing point
/// aborts the sweep with the offending parameters in the error message.
SweepResult run_sweep(const SweepGrid& grid, double spin = 1.5);

struct AngleMaximum {
  double theta;
  double phi;
  double cmax;
};

/// Maximum of the concurrence over the orientation (theta, phi) at fixed
/// couplings: a 181 x 181 coarse grid followed by coordinate-wise
/// golden-section refinement to 1e-4 rad. Grid ties are broken toward
/// the smallest theta, then the smallest phi.
AngleMaximum maximize_concurrence_over_angles(double alpha, double beta, double eta);

/// Smallest beta in [1e-3, 1e3] with C(alpha = ratio * beta, beta) above
/// threshold, located by bisection to relative width 1e-4. Throws
/// NoOnsetFound if the concurrence never exceeds the threshold.
double critical_beta(double ratio, double eta, double theta, double phi,
                     double threshold = 1e-6);

struct WitnessFit {
  double slope;              // dC / d(reduced magnetization)
  double intercept;
  double max_abs_residual;
  double alpha_max;          // filter bound: records with alpha in (0, alpha_max]
  std::size_t points_used;
};

/// Least-squares line C = slope * m + intercept over the records with
/// alpha in (0, alpha_max], where m = Tr(rho Iz) / I is the reduced
/// magnetization. Requires at least 10 qualifying records, else throws
/// InsufficientPoints.
WitnessFit fit_witness(const SweepResult& sweep, double alpha_max);

}  // namespace quadspin
