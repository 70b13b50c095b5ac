#pragma once

// Repeated-measurement sampler: each step draws t uniformly on [0, T], runs
// the quantum walk from the current vertex for time t, and measures. T' such
// steps give one sample whose law is row `start` of (P_T averaged)^T'.
//
// RNG streams: trial k of seed s uses std::mt19937_64 seeded through
// std::seed_seq{lo(s), hi(s), lo(k), hi(k)} (32-bit halves), so every trial is
// reproducible on its own and independent of scheduling.

#include <cstdint>
#include <random>
#include <vector>

#include "qwalk/group.hpp"

namespace qwalk {

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream);

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

struct SamplerConfig {
  int n = 7;
  int start = 0;          // 0-based vertex index
  double T = 1.0;
  long long T_prime = 1;  // measured steps per trial
  long long trials = 1;
  std::uint64_t seed = 0;

  // Throws ParameterError / DomainError on an invalid configuration.
  void validate() const;
};

// Inverse-CDF draw from a probability vector. The vector must sum to 1
// within 1e-9; throws ConvergenceError otherwise.
int sample_index(const std::vector<double>& probabilities, double u);

// Draw t ~ U[0, T], measure the walk started at `current` after time t.
VertexIndex single_measured_step(int n, const VertexIndex& current, double T, Rng& rng);

// Same law with t integrated out: samples directly from the row of the
// averaged matrix. Used as a cross-check, not by algorithm1.
VertexIndex averaged_step(int n, const VertexIndex& current, double T, Rng& rng);

// Exactly T' measured steps from config.start; returns the final vertex.
VertexIndex algorithm1(const SamplerConfig& config, Rng& rng);
VertexIndex algorithm1(const SamplerConfig& config, std::uint64_t trial = 0);

// Every visited vertex, starting vertex first (length T' + 1).
std::vector<VertexIndex> walk_sequence(const SamplerConfig& config, std::uint64_t trial = 0);

struct SampleHistogram {
  std::vector<long long> counts;
  long long total = 0;
  double tv_to_uniform = 0.0;
  double stderr_envelope = 0.0;  // sqrt(2n / trials)

  std::vector<double> probabilities() const;
};

// Histogram of algorithm1 outputs over config.trials independent trials.
SampleHistogram empirical_check(const SamplerConfig& config);

// Histogram of one measured step from config.start over `draws` draws
// (config.T_prime and config.trials are ignored).
SampleHistogram empirical_kernel(const SamplerConfig& config, long long draws);

// Total variation distance between two probability vectors of equal length.
double tv_distance(const std::vector<double>& p, const std::vector<double>& q);

}  // namespace qwalk
