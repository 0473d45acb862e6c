#include "mecdsa/curve.hpp"

#include <sstream>

namespace mecdsa {

namespace {

thread_local GroupOpStats t_stats;

void require_on_curve(const Point& pt, const CurveParams& c, const char* op) {
  if (!is_on_curve(pt, c)) throw DomainError(std::string(op) + ": point is not on curve " + c.name);
}

// Group law for points already known to lie on c.
Point add_unchecked(const Point& p1, const Point& p2, const CurveParams& c) {
  if (p1.is_infinity()) return p2;
  if (p2.is_infinity()) return p1;
  const FieldElement& x1 = p1.x();
  const FieldElement& y1 = p1.y();
  const FieldElement& x2 = p2.x();
  const FieldElement& y2 = p2.y();

  FieldElement slope = x1;
  if (x1 == x2) {
    // Inverse pair, including the doubling of a point with y = 0.
    if (fe_add(y1, y2).is_zero()) return Point::infinity();
    ++t_stats.doublings;
    const FieldElement three_x2 = fe_mul(FieldElement(c.field, 3), fe_mul(x1, x1));
    slope = fe_mul(fe_add(three_x2, c.a), fe_inv(fe_add(y1, y1)));
  } else {
    ++t_stats.additions;
    slope = fe_mul(fe_sub(y2, y1), fe_inv(fe_sub(x2, x1)));
  }
  FieldElement x3 = fe_sub(fe_sub(fe_mul(slope, slope), x1), x2);
  FieldElement y3 = fe_sub(fe_mul(slope, fe_sub(x1, x3)), y1);
  return Point::affine(std::move(x3), std::move(y3));
}

FieldElement curve_rhs(const FieldElement& x, const CurveParams& c) {
  return fe_add(fe_add(fe_mul(fe_mul(x, x), x), fe_mul(c.a, x)), c.b);
}

}  // namespace

Point Point::affine(FieldElement x, FieldElement y) {
  if (!same_field(x, y)) throw DomainError("Point::affine: coordinates belong to different fields");
  Point pt;
  pt.coords_.emplace(Coords{std::move(x), std::move(y)});
  return pt;
}

const FieldElement& Point::x() const {
  if (!coords_) throw DomainError("the point at infinity has no x coordinate");
  return coords_->x;
}

const FieldElement& Point::y() const {
  if (!coords_) throw DomainError("the point at infinity has no y coordinate");
  return coords_->y;
}

bool Point::operator==(const Point& other) const {
  if (is_infinity() || other.is_infinity()) return is_infinity() == other.is_infinity();
  return coords_->x == other.coords_->x && coords_->y == other.coords_->y;
}

CurveParams CurveParams::make(std::string name, const BigInt& p, const BigInt& a, const BigInt& b,
                              const BigInt& base_x, const BigInt& base_y, const BigInt& order,
                              const BigInt& cofactor) {
  FieldRef field = PrimeField::create(p);
  for (const BigInt* v : {&a, &b, &base_x, &base_y})
    if (*v < 0 || *v >= p) throw DomainError("curve " + name + ": coefficient or coordinate not reduced modulo p");
  if (order < 1) throw DomainError("curve " + name + ": order must be positive");
  if (cofactor < 0) throw DomainError("curve " + name + ": cofactor must be non-negative");
  Point base = Point::affine(FieldElement(field, base_x), FieldElement(field, base_y));
  return CurveParams{std::move(name), field,   FieldElement(field, a), FieldElement(field, b),
                     std::move(base), order, cofactor};
}

Point CurveParams::point(const BigInt& x, const BigInt& y) const {
  return Point::affine(FieldElement(field, x), FieldElement(field, y));
}

bool CurveParams::same_parameters(const CurveParams& other) const {
  return *field == *other.field && a == other.a && b == other.b && base == other.base && order == other.order &&
         cofactor == other.cofactor;
}

bool is_on_curve(const Point& pt, const CurveParams& c) {
  if (pt.is_infinity()) return true;
  if (*pt.x().field() != *c.field)
    throw DomainError("is_on_curve: point coordinates are not in the field of curve " + c.name);
  return fe_mul(pt.y(), pt.y()) == curve_rhs(pt.x(), c);
}

Point point_neg(const Point& pt, const CurveParams& c) {
  require_on_curve(pt, c, "point_neg");
  if (pt.is_infinity()) return pt;
  return Point::affine(pt.x(), fe_neg(pt.y()));
}

Point point_add(const Point& pq, const Point& q, const CurveParams& c) {
  require_on_curve(pq, c, "point_add");
  require_on_curve(q, c, "point_add");
  return add_unchecked(pq, q, c);
}

Point scalar_mul(const BigInt& k, const Point& pt, const CurveParams& c) {
  if (k < 0) throw DomainError("scalar_mul: negative scalar");
  require_on_curve(pt, c, "scalar_mul");
  ++t_stats.scalar_multiplications;
  Point acc = Point::infinity();
  for (std::size_t i = bit_length(k); i-- > 0;) {
    acc = add_unchecked(acc, acc, c);
    if (mpz_tstbit(k.get_mpz_t(), i)) acc = add_unchecked(acc, pt, c);
  }
  return acc;
}

Point decompress_point(std::uint8_t prefix, ByteView x_bytes, const CurveParams& c) {
  if (prefix != 0x02 && prefix != 0x03) throw FormatError("compressed point prefix must be 02 or 03", 0);
  const BigInt x_value = from_bytes(x_bytes);
  if (x_value >= c.p()) throw InvalidPointError("decompress_point: x is not below p");
  const FieldElement x(c.field, x_value);
  auto root = mod_sqrt(curve_rhs(x, c));
  if (!root) throw InvalidPointError("decompress_point: x is not the abscissa of a point on " + c.name);
  const bool want_odd = prefix == 0x03;
  FieldElement y = *root;
  if (mpz_odd_p(y.value().get_mpz_t()) != static_cast<int>(want_odd)) y = fe_neg(y);
  // y = 0 has a single root, whose parity is even.
  if (mpz_odd_p(y.value().get_mpz_t()) != static_cast<int>(want_odd))
    throw InvalidPointError("decompress_point: no root with the requested parity");
  return Point::affine(x, std::move(y));
}

std::string encode_point(const Point& pt, const CurveParams& c, bool compressed) {
  if (pt.is_infinity()) return "inf";
  const std::size_t w = c.coord_bytes();
  if (compressed) {
    const bool odd = mpz_odd_p(pt.y().value().get_mpz_t());
    return (odd ? "03" : "02") + to_hex_fixed(pt.x().value(), w);
  }
  return "04" + to_hex_fixed(pt.x().value(), w) + to_hex_fixed(pt.y().value(), w);
}

Point decode_point(std::string_view text, const CurveParams& c) {
  if (text == "inf") return Point::infinity();
  const std::size_t w = c.coord_bytes();
  const Bytes raw = bytes_of_hex(text);
  if (raw.empty()) throw FormatError("empty point encoding", 0);
  const std::uint8_t prefix = raw[0];
  ByteView body(raw.data() + 1, raw.size() - 1);
  if (prefix == 0x02 || prefix == 0x03) {
    if (body.size() != w) throw FormatError("compressed point must carry " + std::to_string(w) + " bytes of x", 1);
    return decompress_point(prefix, body, c);
  }
  if (prefix == 0x04) {
    if (body.size() != 2 * w)
      throw FormatError("uncompressed point must carry " + std::to_string(2 * w) + " coordinate bytes", 1);
    const BigInt x = from_bytes(body.first(w));
    const BigInt y = from_bytes(body.last(w));
    if (x >= c.p() || y >= c.p()) throw InvalidPointError("decode_point: coordinate not below p");
    Point pt = c.point(x, y);
    if (!is_on_curve(pt, c)) throw InvalidPointError("decode_point: point is not on curve " + c.name);
    return pt;
  }
  throw FormatError("unknown point prefix " + hex_of_bytes(ByteView(raw.data(), 1)), 0);
}

bool ValidationReport::ok() const {
  if (checks.empty()) return false;
  for (const auto& ch : checks)
    if (!ch.passed) return false;
  return true;
}

const ValidationCheck* ValidationReport::find(std::string_view name) const {
  for (const auto& ch : checks)
    if (ch.name == name) return &ch;
  return nullptr;
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const auto& ch : checks) {
    out << (ch.passed ? "  pass  " : "  FAIL  ") << ch.name;
    if (!ch.detail.empty()) out << "  (" << ch.detail << ")";
    out << '\n';
  }
  return out.str();
}

ValidationReport validate_curve_params(const CurveParams& c, bool strict, unsigned rounds) {
  ValidationReport report;
  auto record = [&](const char* name, bool passed, std::string detail = {}) {
    report.checks.push_back({name, passed, std::move(detail)});
    return passed;
  };
  const BigInt& p = c.p();
  const BigInt& n = c.order;
  const BigInt& h = c.cofactor;

  record(check::kPrimeModulus, is_probable_prime(p, rounds));

  const bool coeffs_in_field = *c.a.field() == *c.field && *c.b.field() == *c.field;
  if (coeffs_in_field) {
    const FieldElement a3 = fe_mul(fe_mul(c.a, c.a), c.a);
    const FieldElement disc =
        fe_add(fe_mul(FieldElement(c.field, 4), a3), fe_mul(FieldElement(c.field, 27), fe_mul(c.b, c.b)));
    record(check::kDiscriminant, !disc.is_zero(), disc.is_zero() ? "4a^3 + 27b^2 = 0 mod p" : "");
  } else {
    record(check::kDiscriminant, false, "coefficients are not in F_p");
  }

  bool base_ok = false;
  try {
    base_ok = coeffs_in_field && !c.base.is_infinity() && is_on_curve(c.base, c);
  } catch (const DomainError&) {
    base_ok = false;
  }
  record(check::kBaseOnCurve, base_ok, c.base.is_infinity() ? "base is the point at infinity" : "");

  record(check::kPrimeOrder, is_probable_prime(n, rounds));

  if (base_ok && n > 0) {
    record(check::kOrderAnnihilatesBase, scalar_mul(n, c.base, c).is_infinity());
  } else {
    record(check::kOrderAnnihilatesBase, false, "skipped: base point not on curve");
  }

  record(check::kCofactorPositive, h >= 1);

  // |h*n - (p + 1)| <= 2*sqrt(p)  <=>  (h*n - p - 1)^2 <= 4p
  const BigInt trace = h * n - p - 1;
  record(check::kCofactorHasse, trace * trace <= 4 * p);

  if (strict) {
    BigInt two_160;
    mpz_ui_pow_ui(two_160.get_mpz_t(), 2, 160);
    record(check::kOrderAbove2to160, n > two_160, "n has " + std::to_string(bit_length(n)) + " bits");
    // n > 4*sqrt(p)  <=>  n^2 > 16p for positive n
    record(check::kOrderAbove4SqrtP, n > 0 && n * n > 16 * p);
  }
  return report;
}

GroupOpStats& group_op_stats() { return t_stats; }

void reset_group_op_stats() { t_stats = GroupOpStats{}; }

}  // namespace mecdsa
