#include "qwalk/sampler.hpp"

#include <cmath>
#include <string>

#include "qwalk/ctqw.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/parallel.hpp"

namespace qwalk {

namespace {

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

SampleHistogram make_histogram(int n, std::vector<long long> counts, long long total) {
  SampleHistogram h;
  h.counts = std::move(counts);
  h.total = total;
  const double u = 1.0 / (2.0 * n);
  double tv = 0.0;
  for (long long c : h.counts) tv += std::abs(static_cast<double>(c) / total - u);
  h.tv_to_uniform = 0.5 * tv;
  h.stderr_envelope = std::sqrt(2.0 * n / static_cast<double>(total));
  return h;
}

// Runs draw(k) for k in [0, total), each on its own stream, and counts the
// returned vertices. Chunks keep per-thread tallies independent of order.
template <class Draw>
SampleHistogram tally(int n, long long total, Draw draw) {
  const std::size_t chunks = 256;
  std::vector<std::vector<long long>> partial(chunks, std::vector<long long>(2 * n, 0));
  parallel_for(chunks, [&](std::size_t c) {
    for (long long k = static_cast<long long>(c); k < total; k += chunks) {
      ++partial[c][draw(static_cast<std::uint64_t>(k)).value()];
    }
  });
  std::vector<long long> counts(2 * n, 0);
  for (const auto& p : partial) {
    for (int j = 0; j < 2 * n; ++j) counts[j] += p[j];
  }
  return make_histogram(n, std::move(counts), total);
}

}  // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : engine_(seeded_engine(seed, stream)) {}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }

void SamplerConfig::validate() const {
  require_odd_order(n);
  if (start < 0 || start >= 2 * n) {
    throw ParameterError("start vertex " + std::to_string(start) + " outside [0, 2n)");
  }
  if (!(T > 0.0) || !std::isfinite(T)) throw ParameterError("T must be positive and finite");
  if (T_prime < 1) throw ParameterError("T' must be at least 1");
  if (trials < 1) throw ParameterError("trials must be at least 1");
}

int sample_index(const std::vector<double>& probabilities, double u) {
  const double total = compensated_total(probabilities);
  if (std::abs(total - 1.0) > 1e-9) {
    throw ConvergenceError("outcome distribution sums to " + std::to_string(total));
  }
  double acc = 0.0;
  const int last = static_cast<int>(probabilities.size()) - 1;
  for (int j = 0; j < last; ++j) {
    acc += probabilities[j];
    if (u < acc) return j;
  }
  return last;
}

VertexIndex single_measured_step(int n, const VertexIndex& current, double T, Rng& rng) {
  const double t = T * rng.uniform();
  const std::vector<double> row = transition_row(n, current, t);
  return VertexIndex(n, sample_index(row, rng.uniform()));
}

VertexIndex averaged_step(int n, const VertexIndex& current, double T, Rng& rng) {
  const AveragedWalkMatrix avg = averaged_matrix(n, T);
  std::vector<double> row(2 * n);
  for (int j = 0; j < 2 * n; ++j) row[j] = avg.entry(current.value(), j);
  return VertexIndex(n, sample_index(row, rng.uniform()));
}

VertexIndex algorithm1(const SamplerConfig& config, Rng& rng) {
  config.validate();
  VertexIndex v(config.n, config.start);
  for (long long r = 0; r < config.T_prime; ++r) {
    v = single_measured_step(config.n, v, config.T, rng);
  }
  return v;
}

VertexIndex algorithm1(const SamplerConfig& config, std::uint64_t trial) {
  Rng rng(config.seed, trial);
  return algorithm1(config, rng);
}

std::vector<VertexIndex> walk_sequence(const SamplerConfig& config, std::uint64_t trial) {
  config.validate();
  Rng rng(config.seed, trial);
  std::vector<VertexIndex> seq{VertexIndex(config.n, config.start)};
  for (long long r = 0; r < config.T_prime; ++r) {
    seq.push_back(single_measured_step(config.n, seq.back(), config.T, rng));
  }
  return seq;
}

std::vector<double> SampleHistogram::probabilities() const {
  std::vector<double> p(counts.size());
  for (std::size_t j = 0; j < counts.size(); ++j) {
    p[j] = static_cast<double>(counts[j]) / static_cast<double>(total);
  }
  return p;
}

SampleHistogram empirical_check(const SamplerConfig& config) {
  config.validate();
  return tally(config.n, config.trials,
               [&](std::uint64_t k) { return algorithm1(config, k); });
}

SampleHistogram empirical_kernel(const SamplerConfig& config, long long draws) {
  config.validate();
  if (draws < 1) throw ParameterError("draws must be at least 1");
  const VertexIndex start(config.n, config.start);
  return tally(config.n, draws, [&](std::uint64_t k) {
    Rng rng(config.seed, k);
    return single_measured_step(config.n, start, config.T, rng);
  });
}

double tv_distance(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) throw ParameterError("distributions differ in length");
  CompensatedSum s;
  for (std::size_t j = 0; j < p.size(); ++j) s.add(std::abs(p[j] - q[j]));
  return 0.5 * s.value();
}

}  // namespace qwalk
