#pragma once

// Short-Weierstrass curves y^2 = x^3 + ax + b over F_p, in affine
// coordinates. Scalar multiplication is variable-time double-and-add.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mecdsa/errors.hpp"
#include "mecdsa/field.hpp"

namespace mecdsa {

/// An affine point or the point at infinity O.
class Point {
 public:
  static Point infinity() { return Point(); }
  static Point affine(FieldElement x, FieldElement y);

  bool is_infinity() const noexcept { return !coords_.has_value(); }

  /// Coordinates of an affine point; DomainError for O.
  const FieldElement& x() const;
  const FieldElement& y() const;

  bool operator==(const Point& other) const;

 private:
  Point() = default;

  struct Coords {
    FieldElement x;
    FieldElement y;
  };
  std::optional<Coords> coords_;
};

struct CurveParams {
  std::string name;
  FieldRef field;
  FieldElement a;
  FieldElement b;
  Point base;
  BigInt order;
  BigInt cofactor;

  /// Builds a parameter set without validating it. Coefficients and base
  /// coordinates must already be reduced (0 <= v < p); DomainError
  /// otherwise. Use validate_curve_params() before trusting the result.
  static CurveParams make(std::string name, const BigInt& p, const BigInt& a, const BigInt& b, const BigInt& base_x,
                          const BigInt& base_y, const BigInt& order, const BigInt& cofactor);

  const BigInt& p() const { return field->modulus(); }
  std::size_t coord_bytes() const { return field->byte_length(); }

  /// Affine point with the given coordinates (reduced into the field,
  /// not checked against the curve equation).
  Point point(const BigInt& x, const BigInt& y) const;

  /// Same field, coefficients, base point, order and cofactor. The name
  /// is not compared.
  bool same_parameters(const CurveParams& other) const;
};

bool is_on_curve(const Point& pt, const CurveParams& c);
Point point_neg(const Point& pt, const CurveParams& c);
Point point_add(const Point& pq, const Point& q, const CurveParams& c);
Point scalar_mul(const BigInt& k, const Point& pt, const CurveParams& c);

/// Recovers y from a 02/03-prefixed x coordinate: 02 selects the even
/// root, 03 the odd one.
Point decompress_point(std::uint8_t prefix, ByteView x_bytes, const CurveParams& c);

/// "inf" for O, otherwise "02"/"03" + x or "04" + x + y, each coordinate
/// fixed to the byte length of p, lowercase hex.
std::string encode_point(const Point& pt, const CurveParams& c, bool compressed = false);
Point decode_point(std::string_view text, const CurveParams& c);

struct ValidationCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool ok() const;
  const ValidationCheck* find(std::string_view name) const;
  std::string to_string() const;
};

namespace check {
inline constexpr const char* kWellFormed = "parameters well-formed";
inline constexpr const char* kPrimeModulus = "p prime";
inline constexpr const char* kDiscriminant = "discriminant nonzero";
inline constexpr const char* kBaseOnCurve = "base on curve";
inline constexpr const char* kPrimeOrder = "n prime";
inline constexpr const char* kOrderAnnihilatesBase = "n*P = O";
inline constexpr const char* kCofactorPositive = "h >= 1";
inline constexpr const char* kCofactorHasse = "h*n within Hasse interval";
inline constexpr const char* kOrderAbove2to160 = "n > 2^160";
inline constexpr const char* kOrderAbove4SqrtP = "n > 4*sqrt(p)";
}  // namespace check

/// Runs every check in a fixed order and records each outcome. Strict mode
/// adds the two size bounds on n; relaxed mode only drops those.
ValidationReport validate_curve_params(const CurveParams& c, bool strict, unsigned rounds = kDefaultPrimalityRounds);

class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report)
      : Error("curve validation failed:\n" + report.to_string()), report_(std::move(report)) {}
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Raw group-operation tallies for the calling thread, counted inside the
/// group law itself (every chord addition, every doubling, every scalar
/// multiplication entry). Independent of the algorithm-level counts kept
/// by Probe.
struct GroupOpStats {
  std::uint64_t additions = 0;
  std::uint64_t doublings = 0;
  std::uint64_t scalar_multiplications = 0;

  std::uint64_t total() const { return additions + doublings + scalar_multiplications; }
};

GroupOpStats& group_op_stats();
void reset_group_op_stats();

}  // namespace mecdsa
