#pragma once

// Obstacle -> mesh -> model -> resonances, with a model cache and
// deterministic JSON/CSV artifacts.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "rough/config.hpp"

namespace rough {

std::uint64_t fnv1a(const std::string& bytes);
std::string hex64(std::uint64_t v);

struct PipelineOptions {
  std::string out_dir = "out";
  std::string cache_dir;  // empty: $ROUGH_RESONANCE_CACHE, else <out>/cache
  bool cache = true;
  int threads = 1;
  std::string base_dir = ".";  // for relative bitmap paths
  std::function<void(const std::string&)> log;
};

PipelineOptions options_from(const RunConfig& c);

// One obstacle at one mesh size: mesh, N, J and models at any anchor.
class ModelSource {
 public:
  ModelSource(const RunConfig& cfg, const ObstacleConfig& obstacle, double h, std::optional<int> N,
              const PipelineOptions& opt);
  const TriMesh& mesh();
  int N();
  int J();
  int dofs();
  SpectralModel at(cplx k0);
  std::string key() const { return key_; }
  double h() const { return h_; }
  cplx k0() const { return cfg_.discretization.k0; }

 private:
  ModelFactory& factory();

  RunConfig cfg_;
  ObstacleConfig obstacle_;
  double h_;
  std::optional<int> N_;
  int J_ = -1, dofs_ = -1;
  PipelineOptions opt_;
  std::string key_;
  std::unique_ptr<TriMesh> mesh_;
  std::unique_ptr<ModelFactory> factory_;
  std::mutex lock_;
};

struct FoundResonance {
  cplx seed;
  cplx anchor;
  ResonanceResult result;
};

// Each seed is refined on a model anchored at the seed and then re-anchored
// at the first estimate (when reanchor is set). Results come back in seed
// order with near-duplicates removed. With `keep`, results that end
// outside the rectangle are dropped.
std::vector<FoundResonance> refine_seeds(ModelSource& src, const std::vector<cplx>& seeds, const FindConfig& f,
                                         int threads, const std::optional<Rect>& keep = std::nullopt);

std::vector<cplx> grid_seeds(const ContourGrid& g, double percentile);

struct Artifact {
  std::string name;
  std::string contents;
};

std::vector<Artifact> run_command(const std::string& command, const RunConfig& cfg, const PipelineOptions& opt);

// Writes the artifacts of run_command into opt.out_dir.
void write_artifacts(const std::vector<Artifact>& a, const std::string& out_dir);

int exit_code(ErrorKind kind);

}  // namespace rough
