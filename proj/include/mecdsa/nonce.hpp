#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mecdsa/bigint.hpp"

namespace mecdsa {

/// SHA-256 digest of m.
std::array<std::uint8_t, 32> sha256(ByteView m);

/// e = H(m): the SHA-256 digest read as a big-endian integer. Callers
/// reduce it modulo the relevant group order.
BigInt hash_to_int(ByteView m);

/// Source of secret scalars (private keys and signing nonces). A source is
/// single-consumer: draws happen in a fixed order and must not be
/// interleaved across threads.
class NonceSource {
 public:
  virtual ~NonceSource() = default;

  /// A scalar k with 1 <= k <= n - 1.
  virtual BigInt next(const BigInt& n) = 0;
};

/// Rejection sampling over a byte stream: draw bit_length(n - 1) bits,
/// keep the value if it lands in [1, n - 1].
class StreamNonceSource : public NonceSource {
 public:
  BigInt next(const BigInt& n) override;

 protected:
  virtual void fill(std::span<std::uint8_t> out) = 0;
};

/// Operating-system randomness (OpenSSL RAND_bytes).
class SystemNonceSource final : public StreamNonceSource {
 protected:
  void fill(std::span<std::uint8_t> out) override;
};

/// Deterministic stream SHA-256(seed || counter) for reproducible runs.
/// Not a substitute for SystemNonceSource outside of tests and benches.
class SeededNonceSource final : public StreamNonceSource {
 public:
  explicit SeededNonceSource(Bytes seed);
  explicit SeededNonceSource(std::uint64_t seed);

 protected:
  void fill(std::span<std::uint8_t> out) override;

 private:
  Bytes seed_;
  std::uint64_t counter_ = 0;
  std::array<std::uint8_t, 32> block_{};
  std::size_t used_ = 32;
};

/// Test mode: an explicit list consumed in order. Running out throws
/// NonceExhaustedError; a listed value outside [1, n - 1] for the order it
/// is drawn against throws DomainError.
class FixedNonceSource final : public NonceSource {
 public:
  explicit FixedNonceSource(std::vector<BigInt> nonces) : nonces_(std::move(nonces)) {}

  BigInt next(const BigInt& n) override;

  std::size_t consumed() const noexcept { return next_; }
  std::size_t remaining() const noexcept { return nonces_.size() - next_; }

 private:
  std::vector<BigInt> nonces_;
  std::size_t next_ = 0;
};

}  // namespace mecdsa
