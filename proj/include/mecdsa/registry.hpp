#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mecdsa/curve.hpp"

namespace mecdsa {

/// Constants of a built-in curve as published by its standard. The
/// compressed base point is kept alongside the uncompressed one so the two
/// forms can be checked against each other.
struct BuiltinCurve {
  std::string_view name;
  std::string_view source;
  std::string_view p;
  std::string_view a;
  std::string_view b;
  std::string_view base_compressed;
  std::string_view base_uncompressed;
  std::string_view n;
  std::string_view h;
};

std::span<const BuiltinCurve> builtin_curves();

/// A user-supplied curve as read from a config document. Integers are kept
/// as the hex text they were written in; `base` is a prefix-tagged point.
struct CurveDefinition {
  std::string name;
  std::string p;
  std::string a;
  std::string b;
  std::string base;
  std::string n;
  std::string h;
  bool strict = true;
};

/// Parses "key = value" lines with keys name, p, a, b, base, n, h, strict.
/// All keys are required; unknown keys are rejected.
CurveDefinition parse_curve_config(std::string_view text);
std::string serialize_curve_config(const CurveParams& c, bool strict);
CurveDefinition definition_of(const CurveParams& c, bool strict);

/// Decodes the definition into parameters without validating the group.
/// Throws FormatError, DomainError or InvalidPointError.
CurveParams build_curve(const CurveDefinition& def);

/// Decoding plus validate_curve_params in one report. Never throws: a
/// definition that cannot even be decoded yields a failed
/// "parameters well-formed" entry.
ValidationReport check_definition(const CurveDefinition& def, unsigned rounds = kDefaultPrimalityRounds);

namespace check {
inline constexpr const char* kBaseEncodingsAgree = "compressed and uncompressed base agree";
}  // namespace check

/// Everything the registry checks before accepting a built-in: the
/// definition report (strict) plus agreement of the two base encodings,
/// placed right after "parameters well-formed". Never throws.
ValidationReport check_builtin(const BuiltinCurve& bc, unsigned rounds = kDefaultPrimalityRounds);

struct CurveListing {
  std::string name;
  std::size_t order_bits;
  std::string source;
};

/// Named curve parameter sets. The built-ins are validated in strict mode
/// at construction. After that the registry only grows: load_custom is
/// the single mutation point and needs exclusive access; everything else
/// is safe to call concurrently. References returned by get() stay valid
/// for the registry's lifetime.
class CurveRegistry {
 public:
  CurveRegistry();

  /// Case-insensitive lookup; NotFoundError lists the known names.
  const CurveParams& get(std::string_view name) const;
  bool contains(std::string_view name) const;

  /// Alphabetical by lowercase name.
  std::vector<CurveListing> list() const;

  /// Validates (strict or relaxed per the definition) and registers.
  /// Throws ValidationError carrying the full report, DuplicateNameError,
  /// or the decoding errors of build_curve.
  const CurveParams& load_custom(const CurveDefinition& def);
  const CurveParams& load_custom(std::string_view config_text);

  bool is_strict(std::string_view name) const;

 private:
  struct Entry {
    CurveParams params;
    std::string source;
    bool strict;
  };
  const Entry& entry(std::string_view name) const;

  std::map<std::string, Entry> entries_;
};

}  // namespace mecdsa
