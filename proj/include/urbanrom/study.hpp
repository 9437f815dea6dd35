#pragma once

// Comparison harness: error and speed-up versus basis size, data-hungriness
// and extrapolation studies for the intrusive and non-intrusive models.

#include "urbanrom/ins.hpp"
#include "urbanrom/mesh.hpp"
#include "urbanrom/podg.hpp"
#include "urbanrom/podi.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace urbanrom {

// n points lo..hi including both ends.
std::vector<double> equidistant(double lo, double hi, int n);
// Midpoints of n equal cells of [lo, hi].
std::vector<double> cell_midpoints(double lo, double hi, int n);
// Smallest m >= n whose cell midpoints avoid every point of every grid
// (relative tolerance 1e-9 of the interval length).
int disjoint_midpoint_count(double lo, double hi, int n, const std::vector<std::vector<double>>& grids);

// ||u_ref - u||_M / ||u_ref||_M (Euclidean when metric is null).
double relative_l2_error(const Vec& u_ref, const Vec& u, const SpMat* metric = nullptr);
// Largest nodal velocity-vector difference.
double max_abs_velocity_error(const TaylorHoodSpace& space, const Vec& u_ref, const Vec& u);

struct Timing {
  double median = 0.0;  // seconds per call
  int batch = 1;        // calls per timed repetition
};
// Median over reps timed repetitions after one discarded warm-up. Calls
// faster than 10x the clock granularity are batched.
Timing time_action(const std::function<void()>& action, int reps);
double measure_speedup(const std::function<void()>& fom, const std::function<void()>& rom, int reps);

enum class Method { Podg, Podi };
std::string_view to_string(Method m);

struct StudyConfig {
  MeshSpec mesh;
  double nu = 112.0;
  ParameterDomain domain{0.5, 20.0, std::nullopt, std::nullopt};
  int n_snapshots = 50;      // w_i training values
  int n_test = 20;           // w_i test values (cell midpoints)
  int n_directions = 0;      // w_d training values, direction domains only
  int n_test_directions = 0;
  std::vector<int> rb_sizes;  // empty means 1..20
  int n_deim = 20;
  std::vector<Method> methods{Method::Podg, Method::Podi};
  int timing_reps = 5;
  bool timing = true;
  PodiOptions podi;
  NewtonOptions newton;
  ReducedNewtonOptions rom_newton;
  Execution execution = Execution::Parallel;
  std::uint64_t seed = 0;  // recorded; the studies are deterministic
  std::vector<int> snapshot_counts{25, 50, 75, 100};
  double extrapolation_train_max = 10.15;
  // Directory of cached full-order solutions; empty disables caching.
  std::string snapshot_cache;

  void validate() const;
  std::vector<int> sizes() const;
  bool has(Method m) const;
};

struct PointRecord {
  Method method = Method::Podi;
  int n_s = 0;
  int n_rb_requested = 0;
  int n_rb = 0;
  ParameterPoint mu;
  double rel_error = 0.0;
  double max_abs_error = 0.0;
  double speedup = 0.0;  // 0 when timing is off
  bool converged = true;
  int iterations = 0;
  bool extrapolated = false;
};

struct StatRow {
  Method method = Method::Podi;
  int n_s = 0;
  int n_rb_requested = 0;
  int n_rb = 0;
  double err_min = 0.0, err_mean = 0.0, err_max = 0.0;
  double speedup_min = 0.0, speedup_mean = 0.0, speedup_max = 0.0;
  int evaluated = 0;
  int failures = 0;
};

struct StudyReport {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<PointRecord> points;
  std::vector<StatRow> rows;
  std::vector<std::string> log;  // nonconvergence and other non-fatal events

  // Recomputes rows from points.
  void summarize();
  const StatRow* row(Method m, int n_s, int n_rb_requested) const;
  std::vector<const PointRecord*> select(Method m, int n_s, int n_rb_requested) const;
};

// Training plan of the config (direction-major) and the domain a model
// trained on it declares (full_circle set for periodic directions).
std::vector<ParameterPoint> training_grid(const StudyConfig& config);
ParameterDomain training_domain(const StudyConfig& config);

// Snapshot generation across a worker pool. Failure aborts with the
// offending parameter in the message.
std::vector<FlowSolution> generate_snapshots(const InsProblem& problem, const std::vector<ParameterPoint>& params,
                                             const NewtonOptions& opts, Execution exec);

// Full-order solutions at params on the config's mesh, read from and written
// to the snapshot cache when one is configured.
std::vector<FlowSolution> cached_solutions(const StudyConfig& config, const std::vector<ParameterPoint>& params);

StudyReport run_comparison(const StudyConfig& config);
StudyReport run_data_study(const StudyConfig& config, const std::vector<int>& snapshot_counts);
// Trains on [domain.w_i_min, train_max] and evaluates over the full domain at
// the largest configured basis size.
StudyReport run_extrapolation_study(const StudyConfig& config, double train_max);

// log10 of the max-abs error at the first test point above train_max over the
// one at the last test point inside. NaN if either point is missing or failed.
double extrapolation_jump(const StudyReport& report, Method m, double train_max);

void write_report(const StudyReport& report, const std::string& path);
std::string format_report(const StudyReport& report);
// Line plot (log scale) of min/mean/max error and speed-up per method.
void write_report_svg(const StudyReport& report, const std::string& path);

}  // namespace urbanrom
