#pragma once

// Evaluation engine behind the HTTP service and the CLI `evaluate`/`uq`
// commands. Both produce their JSON documents through this class, so the
// outputs agree byte for byte. Payload layout in docs/formats.md.

#include "urbanrom/config.hpp"
#include "urbanrom/podg.hpp"
#include "urbanrom/podi.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <list>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

namespace httplib {
class Server;
}

namespace urbanrom {

// Carries the HTTP status the failure maps to (400, 422, 503).
class RequestError : public Error {
 public:
  RequestError(int status, const std::string& what) : Error(what), status_(status) {}
  int status() const { return status_; }

 private:
  int status_;
};

// Base64 of the values as little-endian IEEE-754 doubles.
std::string encode_f64le(const std::vector<double>& values);
std::vector<double> decode_f64le(const std::string& text);

// Snaps v to the grid k*step (step 0 leaves v alone). When 1/step is an
// integer the grid point is computed as k/(1/step) so that e.g. 4 and 97 map
// to themselves exactly.
double quantize(double v, double step);

struct EngineModels {
  std::shared_ptr<const TaylorHoodSpace> space;
  std::shared_ptr<const PodiArtifact> podi;
  std::shared_ptr<const PodgArtifact> podg;  // optional
  AdSettings ad;
};

class Engine {
 public:
  Engine(EngineModels models, ServiceSettings settings);

  nlohmann::json health() const;
  const std::string& mesh_payload() const { return mesh_payload_; }
  // Throw RequestError on bad input; the returned text is the response body.
  std::string evaluate(const nlohmann::json& body);
  std::string uq(const nlohmann::json& body);

  int cache_entries() const;
  ParameterPoint snap(const ParameterPoint& mu) const;

  // One slot of the bounded transport-solver pool; empty when saturated.
  class Slot {
   public:
    Slot() = default;
    explicit Slot(Engine* e) : e_(e) {}
    Slot(Slot&& o) noexcept : e_(std::exchange(o.e_, nullptr)) {}
    Slot& operator=(Slot&&) = delete;
    ~Slot();
    explicit operator bool() const { return e_ != nullptr; }

   private:
    Engine* e_ = nullptr;
  };
  Slot acquire_slot();

  const EngineModels& models() const { return m_; }
  const ServiceSettings& settings() const { return s_; }

 private:
  std::string compute_evaluate(const nlohmann::json& req);
  std::optional<std::string> cache_get(const std::string& key);
  void cache_put(const std::string& key, const std::string& value);

  EngineModels m_;
  ServiceSettings s_;
  std::string mesh_hash_, podi_hash_, podg_hash_;
  std::string mesh_payload_;
  std::chrono::steady_clock::time_point start_;

  mutable std::mutex cache_mu_;
  std::list<std::pair<std::string, std::string>> lru_;
  std::unordered_map<std::string, std::list<std::pair<std::string, std::string>>::iterator> index_;

  std::mutex gate_mu_;
  std::condition_variable gate_cv_;
  int active_ = 0;
  int waiting_ = 0;
};

// UQ document shared by the CLI manifest and POST /uq.
nlohmann::json uq_document(const UqResult& r, const UncertaintySpec& spec, int bins, const TaylorHoodSpace& space,
                           const std::string& mesh_hash, const std::string& artifact_hash);
// Parses a UQ request body (the same fields as the config's "uq" section).
UncertaintySpec parse_uq_spec(const nlohmann::json& body, std::vector<double>* times, int* bins);

// Loads the artifacts named on the command line; throws on any failure so
// the service never starts half-configured.
EngineModels load_models(const PipelineConfig& config, const std::string& podi_path, const std::string& podg_path);

// Routes: GET /health, GET /mesh, POST /evaluate, POST /uq.
void install_routes(httplib::Server& server, Engine& engine);

std::string artifact_hash(const PodiArtifact& a);
std::string artifact_hash(const PodgArtifact& a);

}  // namespace urbanrom
