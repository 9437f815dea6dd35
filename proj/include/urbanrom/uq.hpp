#pragma once

// Monte Carlo propagation of inflow uncertainty through the non-intrusive
// wind model and the full-order advection-diffusion solver.

#include "urbanrom/ad.hpp"
#include "urbanrom/podi.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace urbanrom {

struct UniformParameter {
  double mean = 0.0;
  double half_width = 0.0;  // absolute, >= 0
};

enum class OutsidePolicy { Flag, Redraw };

struct UncertaintySpec {
  UniformParameter w_i{4.0, 0.2};
  std::optional<UniformParameter> w_d = UniformParameter{97.0, 10.0};
  int n_mc = 5000;
  std::uint64_t seed = 1;
  // Samples outside the model's training box: evaluate and flag, or redraw.
  OutsidePolicy outside = OutsidePolicy::Flag;
  int max_redraws = 1000;

  void validate() const;
};

// Deterministic for a given seed on every platform (splitmix64 stream, 53-bit
// uniforms). Outside-box redraws need the model, hence the optional domain.
std::vector<ParameterPoint> draw_parameters(const UncertaintySpec& spec, const PodiArtifact* rom = nullptr);

enum class SampleStatus : std::uint8_t { Ok, Outside, Failed };

struct SampleRecord {
  ParameterPoint mu;
  SampleStatus status = SampleStatus::Ok;
  std::string error;  // failures only
};

// Per-node statistics at one time. Variance is the unbiased sample variance
// (zero for a single sample).
struct NodalStats {
  Vec min, mean, max, variance;
};

struct UqOptions {
  std::vector<double> times{100.0};
  Execution execution = Execution::Parallel;
  int wave = 64;              // samples solved concurrently before accumulation
  bool keep_samples = false;  // retain every sample field (small runs only)
  bool histogram = true;      // second pass recording the x_hv values
};

struct UqResult {
  std::vector<double> times;
  std::vector<NodalStats> stats;
  std::vector<SampleRecord> samples;
  int accepted = 0;  // samples in the statistics
  int failed = 0;
  int outside = 0;
  std::vector<int> x_hv;                        // per time
  std::vector<bool> degenerate;                 // per time: variance zero everywhere
  std::vector<std::vector<double>> x_hv_values;  // per time, one per accepted sample
  std::vector<std::vector<Vec>> stored;         // [sample][time] when keep_samples
  std::uint64_t seed = 0;

  int time_index(double t) const;
};

UqResult run_monte_carlo(const PodiArtifact& rom, const AdProblem& ad_template, const UncertaintySpec& spec,
                         const UqOptions& opts = {});

// Argmax of the nodal variance, lowest id on ties. DomainError if t was not stored.
int highest_variance_node(const UqResult& result, double t, bool* degenerate = nullptr);

struct Histogram {
  double lo = 0.0, hi = 0.0;
  std::vector<int> counts;
};
// Equal-width bins over [min, max]; a single bin when all values agree.
Histogram make_histogram(const std::vector<double>& values, int bins);

}  // namespace urbanrom
