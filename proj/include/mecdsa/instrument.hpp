#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mecdsa/curve.hpp"

namespace mecdsa {

/// Operation tallies at signature-algorithm step granularity: one
/// "compute kP" is one ec_mul however many doublings it takes, and only
/// the additions, multiplications and inversions written out in the
/// signing and verification steps are counted.
struct OpCounts {
  std::uint64_t field_add = 0;
  std::uint64_t field_mul = 0;
  std::uint64_t field_inv = 0;
  std::uint64_t ec_add = 0;
  std::uint64_t ec_mul = 0;

  bool operator==(const OpCounts&) const = default;
  OpCounts& operator+=(const OpCounts& other);
  std::uint64_t total() const { return field_add + field_mul + field_inv + ec_add + ec_mul; }
  /// "(add, mul, inv, ec_add, ec_mul)"
  std::string to_string() const;
};

/// Per-curve signing state that survived to the emitted signature.
struct SignStep {
  BigInt nonce;       // k_i
  Point nonce_point;  // k_i * P_i
  BigInt r;           // r_i = x(k_i * P_i) mod n_i
};

/// Per-curve verification intermediates.
struct VerifyStep {
  BigInt w;
  BigInt u;
  BigInt v;
  Point R;
  BigInt r_prime;  // x(R_i) mod n_i; meaningless when R is O
};

/// Optional observer threaded through sign and verify. Counts accumulate
/// across calls; the step vectors are overwritten by each call.
struct Probe {
  OpCounts counts;
  /// Number of times signing went back to choose a nonce again.
  unsigned retries = 0;
  std::vector<SignStep> signing;
  std::vector<VerifyStep> verifying;

  void reset() { *this = Probe{}; }
};

}  // namespace mecdsa
