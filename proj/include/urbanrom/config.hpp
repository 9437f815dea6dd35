#pragma once

// Pipeline configuration: one JSON document shared by the CLI and the
// service. Schema in docs/config.md.

#include "urbanrom/ad.hpp"
#include "urbanrom/study.hpp"
#include "urbanrom/uq.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace urbanrom {

// Validation failure at a config field; `path` is dotted, e.g. "rom.n_rb".
class ConfigError : public ValidationError {
 public:
  ConfigError(const std::string& path, const std::string& why) : ValidationError(path + ": " + why), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct AdSettings {
  double kappa = 1.0;
  double T = 100.0;
  double dt = 1.0;
  bool supg = true;
  AdSource source{{100.0, 60.0}, 25.0, 1.0};
};

enum class RomMethod { Podi, Podg };

struct RomSettings {
  RomMethod method = RomMethod::Podi;
  int n_rb = 20;
  int n_rb_p = 20;
  int n_deim = 20;
  PodiOptions podi;
};

struct UqSettings {
  UncertaintySpec spec;
  std::vector<double> times{100.0};
  int histogram_bins = 20;
};

struct ServiceSettings {
  std::string host = "127.0.0.1";
  int port = 8080;
  int cache_size = 64;
  double quant_w_i = 0.05;  // m/s; 0 disables quantization
  double quant_w_d = 0.5;   // degrees
  int workers = 2;          // concurrent transport solves
  int max_queue = 8;        // waiting solves before 503
  int max_n_mc = 1000;
};

struct PipelineConfig {
  StudyConfig study;  // mesh, viscosity, parameter box, snapshot and test plans
  RomSettings rom;
  AdSettings ad;
  UqSettings uq;
  ServiceSettings service;
  std::string output = "out";
  std::uint64_t seed = 1;
  int jobs = 0;  // 0 = runtime default, 1 = serial

  void validate() const;
};

PipelineConfig parse_config(const nlohmann::json& j);
PipelineConfig load_config(const std::string& path);
nlohmann::json to_json(const PipelineConfig& c);

AdProblem make_ad_problem(const AdSettings& s, std::shared_ptr<const TaylorHoodSpace> space);

std::string_view to_string(RomMethod m);

}  // namespace urbanrom
