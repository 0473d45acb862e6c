#pragma once

// Multi-curve signatures. MECDSA signs one message on t curves with a
// shared r = r_1 + ... + r_t (a plain integer sum, never reduced) and one
// s_i per curve; t-ECDSA is the baseline of t independent ECDSA
// signatures.

#include <span>
#include <string>
#include <vector>

#include "mecdsa/ecdsa.hpp"

namespace mecdsa {

enum class Scheme { mecdsa, t_ecdsa };

/// "mecdsa" or "t-ecdsa"
std::string to_string(Scheme s);

/// An ordered list of t >= 1 curves. The same curve may appear more than
/// once; each index gets its own key and nonces.
class MultiCurveConfig {
 public:
  /// Runs relaxed validation on every curve (ValidationError on failure);
  /// DomainError when the list is empty.
  explicit MultiCurveConfig(std::vector<CurveParams> curves);

  std::size_t size() const noexcept { return curves_.size(); }
  const CurveParams& operator[](std::size_t i) const { return curves_[i]; }
  const std::vector<CurveParams>& curves() const noexcept { return curves_; }

  /// n_1 + ... + n_t
  const BigInt& order_sum() const noexcept { return order_sum_; }
  std::vector<std::string> names() const;

 private:
  std::vector<CurveParams> curves_;
  BigInt order_sum_;
};

struct MultiCurveKeypair {
  MultiCurveConfig config;
  std::vector<BigInt> d;
  std::vector<Point> Q;
};

struct MultiSignature {
  BigInt r;
  std::vector<BigInt> s;

  bool operator==(const MultiSignature&) const = default;
};

struct TEcdsaSignature {
  std::vector<EcdsaSignature> pairs;

  bool operator==(const TEcdsaSignature&) const = default;

  /// "r1:s1,r2:s2,..."
  std::string to_text() const;
  static TEcdsaSignature from_text(std::string_view text);
};

/// One d_i per curve, drawn in index order.
MultiCurveKeypair mkeygen(const MultiCurveConfig& config, NonceSource& rng);
MultiCurveKeypair mkeypair_from_private(const MultiCurveConfig& config, std::vector<BigInt> d);

/// MECDSA signing.
///  - e = H(m), reduced modulo each n_i where it is used.
///  - Per curve, in index order: k_i, k_i P_i, r_i = x mod n_i; a zero
///    r_i redraws k_i alone.
///  - r = sum of r_i. If r = 0 mod n_i for any i, every k_i is redrawn.
///  - s_i = k_i^-1 (e + d_i r) mod n_i. A zero s_i redraws k_i, after
///    which r and every s_j are recomputed.
MultiSignature msign(ByteView m, const MultiCurveKeypair& kp, NonceSource& nonce, Probe* probe = nullptr);

/// MECDSA verification. The range checks t <= r <= sum(n_i) - t and
/// 1 <= s_i <= n_i - 1 run before any curve arithmetic. Refuses when any
/// R_i = u_i P_i + v_i Q_i is O; accepts iff r equals the sum of
/// x(R_i) mod n_i.
bool mverify(ByteView m, const MultiSignature& sig, std::span<const Point> Q, const MultiCurveConfig& config,
             Probe* probe = nullptr);

TEcdsaSignature t_ecdsa_sign(ByteView m, const MultiCurveKeypair& kp, NonceSource& nonce, Probe* probe = nullptr);
/// Accepts iff every per-curve ECDSA signature verifies.
bool t_ecdsa_verify(ByteView m, const TEcdsaSignature& sig, std::span<const Point> Q, const MultiCurveConfig& config,
                    Probe* probe = nullptr);

inline constexpr std::uint8_t kMultisigVersion = 0x01;

/// Wire format: version 0x01, count byte t, then r and each s_i as a
/// 2-byte big-endian length followed by the minimal big-endian bytes
/// (zero is the empty string). Throws DomainError for t = 0, t > 255, or
/// an integer longer than 65535 bytes.
Bytes encode_multisig(const MultiSignature& sig);

/// Strict inverse of encode_multisig: wrong version, t = 0, truncation,
/// leading zero bytes and trailing data are FormatErrors carrying the
/// byte offset.
MultiSignature decode_multisig(ByteView bytes);

/// Bits of r and all s_i at their minimal lengths.
std::size_t scalar_payload_bits(const MultiSignature& sig);
std::size_t scalar_payload_bits(const TEcdsaSignature& sig);
/// Bytes of framing added by encode_multisig on top of the scalar bytes.
std::size_t multisig_header_bytes(std::size_t t);

}  // namespace mecdsa
