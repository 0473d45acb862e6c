#pragma once

// On-disk key and signature documents ("key = value" lines).
//
// Secret key files hold the private scalars in clear text. They are NOT
// suitable for production key storage.

#include <optional>
#include <string>
#include <vector>

#include "mecdsa/multi_curve.hpp"
#include "mecdsa/registry.hpp"

namespace mecdsa {

inline constexpr int kKeyFileVersion = 1;
inline constexpr int kSignatureFileVersion = 1;

struct KeyFile {
  std::vector<std::string> curves;
  std::optional<std::vector<BigInt>> private_scalars;  // secret files only
  std::vector<Point> public_points;

  bool is_secret() const { return private_scalars.has_value(); }

  /// version, kind, curves, [private], public
  std::string serialize(const CurveRegistry& registry) const;

  /// Resolves curve names against `registry`, checks list lengths, that
  /// each public point lies on its curve and, for secret files, that the
  /// public points re-derive from the scalars. FormatError / NotFoundError
  /// / InvalidPointError / DomainError on failure.
  static KeyFile parse(std::string_view text, const CurveRegistry& registry);

  static KeyFile secret_of(const MultiCurveKeypair& kp);
  KeyFile public_part() const;
};

struct SignatureFile {
  Scheme scheme;
  std::vector<std::string> curves;
  std::optional<MultiSignature> mecdsa;   // scheme == mecdsa
  std::optional<TEcdsaSignature> t_ecdsa;  // scheme == t_ecdsa

  std::string serialize() const;
  /// The signature is hex-armored encode_multisig output for MECDSA and
  /// "r:s" pairs for t-ECDSA; structural problems are FormatErrors.
  static SignatureFile parse(std::string_view text);
};

}  // namespace mecdsa
