#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "core/grid.hpp"
#include "core/integrate.hpp"

namespace opswe {

struct PodBasis;  // pod.hpp

struct SnapshotMeta {
  std::string experiment;  // "geostrophic", "shear", ...
  Grid2D grid;
  std::uint64_t config_hash = 0;
};

/// Full-state trajectory for one parameter value: column k of data is the
/// stacked state w(t_k; mu), times[k] = k * dt.
struct SnapshotSet {
  double parameter = 0.0;
  std::vector<double> times;
  Eigen::MatrixXd data;  // N x K
  SnapshotMeta meta;

  Eigen::Index state_dim() const { return data.rows(); }
  Eigen::Index samples() const { return data.cols(); }
};

/// Column-concatenation of per-parameter snapshot matrices.
struct GlobalSnapshots {
  Eigen::MatrixXd data;                    // N x (sum of K_i)
  std::vector<double> parameters;          // one per constituent set
  std::vector<Eigen::Index> boundaries;    // start column of each set; back() = total
};

/// Requires identical grids and time axes across sets.
GlobalSnapshots concat(const std::vector<const SnapshotSet*>& sets);

struct ReducedSnapshotSet {
  double parameter = 0.0;
  std::vector<double> times;
  Eigen::MatrixXd data;   // r x K  (V^T S)
  Eigen::MatrixXd ddata;  // r x K  (reduced time derivatives)
  SnapshotMeta meta;

  Eigen::Index reduced_dim() const { return data.rows(); }
  Eigen::Index samples() const { return data.cols(); }
};

struct ProjectOptions {
  DerivativeMode mode = DerivativeMode::ExactRhs;
  RhsFn full_rhs;  // required for ExactRhs: the full-order rhs at set.parameter
  int stride = 1;  // keep every stride-th sample
};

/// V^T * set.data with reduced derivative data filled per opts.mode.
ReducedSnapshotSet project(const SnapshotSet& set, const PodBasis& basis,
                           const ProjectOptions& opts);

// .opsw persistence (bit-exact round trip) and CSV export.
void save_snapshots(const std::string& path, const SnapshotSet& set);
SnapshotSet load_snapshots(const std::string& path);
void save_reduced(const std::string& path, const ReducedSnapshotSet& set);
ReducedSnapshotSet load_reduced(const std::string& path);

/// One row per sample time; header names the state components.
void export_csv(const std::string& path, const SnapshotSet& set);
void export_csv(const std::string& path, const ReducedSnapshotSet& set);

}  // namespace opswe
