#pragma once

// Cost model for MECDSA against t-ECDSA: algorithm-step operation counts
// compared with the closed-form predictions, signature lengths, and
// wall-clock timings (informational only).

#include <string>
#include <vector>

#include "mecdsa/multi_curve.hpp"

namespace mecdsa {

enum class Phase { sign, verify };

std::string to_string(Phase p);

/// Closed-form counts (field add, mul, inv, EC add, EC mul):
///   t-ECDSA sign    (t,      2t, t, 0, t)
///   t-ECDSA verify  (0,      2t, t, t, 2t)
///   MECDSA sign     (2t - 1, 2t, t, 0, t)
///   MECDSA verify   (t - 1,  2t, t, t, 2t)
/// DomainError for t = 0.
OpCounts predicted_counts(Scheme scheme, Phase phase, std::size_t t);

struct CountMeasurement {
  OpCounts counted;
  OpCounts predicted;
  unsigned retries = 0;
  bool verified = false;  // verdict of the verify run (sign runs verify their own output)

  bool matches() const { return counted == predicted; }
};

/// Signs `m` with the given nonces (and, for the verify phase, verifies the
/// result) while counting. A run that needed retries is reported as such;
/// its counts will exceed the prediction.
CountMeasurement measure_counts(Scheme scheme, Phase phase, const MultiCurveKeypair& kp, ByteView m,
                                std::vector<BigInt> nonces);

struct LengthReport {
  std::size_t t = 0;
  std::size_t mecdsa_formula_bits = 0;  // max l(n_i) + t - 1 + sum l(n_i)
  std::size_t mecdsa_tight_bits = 0;    // max l(n_i) + ceil(log2 t) + sum l(n_i)
  std::size_t t_ecdsa_formula_bits = 0;  // 2 sum l(n_i)
  std::size_t samples = 0;
  double mecdsa_measured_mean = 0;
  std::size_t mecdsa_measured_max = 0;
  double t_ecdsa_measured_mean = 0;
  std::size_t t_ecdsa_measured_max = 0;
  std::size_t mecdsa_encoded_bytes_max = 0;
  bool within_bounds = true;  // every sample respected its formula bound

  double formula_ratio() const {
    return static_cast<double>(mecdsa_formula_bits) / static_cast<double>(t_ecdsa_formula_bits);
  }
};

/// Formula lengths from the orders alone.
LengthReport length_formulas(const MultiCurveConfig& config);

/// Formulas plus measured minimal-encoding payloads of `samples` random
/// signatures of each scheme.
LengthReport signature_length_report(const MultiCurveConfig& config, std::size_t samples, NonceSource& rng);

struct TimingStats {
  std::size_t iterations = 0;
  double median_us = 0;
  double mean_us = 0;
};

struct CostReport {
  Scheme scheme;
  Phase phase;
  std::size_t t;
  OpCounts counted;
  OpCounts predicted;
  bool retried = false;
  bool counts_stable = true;  // every iteration counted the same
  std::size_t sig_bits_measured = 0;
  std::size_t sig_bits_formula = 0;
  std::size_t sig_bits_tight = 0;
  TimingStats wall_time;

  bool counts_match() const { return counted == predicted; }
};

struct BenchReport {
  std::vector<std::string> curves;
  std::vector<CostReport> rows;  // MECDSA sign, MECDSA verify, t-ECDSA sign, t-ECDSA verify
  LengthReport lengths;

  /// Every retry-free row counted exactly its prediction.
  bool counts_match() const;
  /// Table laid out like the efficiency comparison: counts, lengths, times.
  std::string table() const;
  /// Machine-readable "key = value" form.
  std::string key_values() const;
};

/// Runs `iterations` sign and verify rounds of both schemes over `config`.
/// Keys, messages and nonces all come from one SeededNonceSource built
/// from `seed`, so operation counts are reproducible; times are not.
BenchReport timing_bench(const MultiCurveConfig& config, std::size_t iterations, Bytes seed);

}  // namespace mecdsa
