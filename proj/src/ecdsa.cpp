#include "mecdsa/ecdsa.hpp"

#include "mecdsa/errors.hpp"

namespace mecdsa {

OpCounts& OpCounts::operator+=(const OpCounts& other) {
  field_add += other.field_add;
  field_mul += other.field_mul;
  field_inv += other.field_inv;
  ec_add += other.ec_add;
  ec_mul += other.ec_mul;
  return *this;
}

std::string OpCounts::to_string() const {
  return "(" + std::to_string(field_add) + ", " + std::to_string(field_mul) + ", " + std::to_string(field_inv) +
         ", " + std::to_string(ec_add) + ", " + std::to_string(ec_mul) + ")";
}

std::string EcdsaSignature::to_text() const { return to_hex(r) + ":" + to_hex(s); }

EcdsaSignature EcdsaSignature::from_text(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos || text.find(':', colon + 1) != std::string_view::npos)
    throw FormatError("ECDSA signature must have the form r:s");
  return EcdsaSignature{from_hex(text.substr(0, colon)), from_hex(text.substr(colon + 1))};
}

namespace detail {

SignStep draw_nonce_step(const CurveParams& curve, NonceSource& nonce, OpCounts* counts, unsigned* retries) {
  while (true) {
    BigInt k = nonce.next(curve.order);
    Point K = scalar_mul(k, curve.base, curve);
    if (counts) ++counts->ec_mul;
    if (!K.is_infinity()) {
      BigInt r = mod(K.x().value(), curve.order);
      if (r != 0) return SignStep{std::move(k), std::move(K), std::move(r)};
    }
    if (retries) ++*retries;
  }
}

BigInt signature_scalar(const BigInt& k, const BigInt& e, const BigInt& d, const BigInt& r, const BigInt& n,
                        OpCounts* counts) {
  const BigInt k_inv = inv_mod(k, n);
  const BigInt dr = mod(d * r, n);
  const BigInt sum = mod(e + dr, n);
  const BigInt s = mod(k_inv * sum, n);
  if (counts) {
    counts->field_inv += 1;
    counts->field_mul += 2;
    counts->field_add += 1;
  }
  return s;
}

VerifyStep verify_step(const BigInt& e, const BigInt& r, const BigInt& s, const Point& Q, const CurveParams& curve,
                       OpCounts* counts) {
  const BigInt& n = curve.order;
  VerifyStep step{inv_mod(s, n), 0, 0, Point::infinity(), 0};
  step.u = mod(e * step.w, n);
  step.v = mod(r * step.w, n);
  const Point uP = scalar_mul(step.u, curve.base, curve);
  const Point vQ = scalar_mul(step.v, Q, curve);
  step.R = point_add(uP, vQ, curve);
  if (counts) {
    counts->field_inv += 1;
    counts->field_mul += 2;
    counts->ec_mul += 2;
    counts->ec_add += 1;
  }
  if (!step.R.is_infinity()) step.r_prime = mod(step.R.x().value(), n);
  return step;
}

bool public_key_usable(const Point& Q, const CurveParams& curve) {
  if (Q.is_infinity()) return false;
  try {
    return is_on_curve(Q, curve);
  } catch (const DomainError&) {
    return false;
  }
}

}  // namespace detail

Keypair keygen(const CurveParams& curve, NonceSource& rng) {
  BigInt d = rng.next(curve.order);
  Point Q = scalar_mul(d, curve.base, curve);
  return Keypair{curve, std::move(d), std::move(Q)};
}

Keypair keypair_from_private(const CurveParams& curve, const BigInt& d) {
  if (d < 1 || d >= curve.order) throw DomainError("private scalar outside [1, n - 1] for curve " + curve.name);
  return Keypair{curve, d, scalar_mul(d, curve.base, curve)};
}

EcdsaSignature sign(ByteView m, const Keypair& kp, NonceSource& nonce, Probe* probe) {
  const CurveParams& c = kp.curve;
  const BigInt e = mod(hash_to_int(m), c.order);
  OpCounts* counts = probe ? &probe->counts : nullptr;
  unsigned* retries = probe ? &probe->retries : nullptr;
  while (true) {
    SignStep step = detail::draw_nonce_step(c, nonce, counts, retries);
    BigInt s = detail::signature_scalar(step.nonce, e, kp.d, step.r, c.order, counts);
    if (s == 0) {
      if (retries) ++*retries;
      continue;
    }
    EcdsaSignature sig{step.r, std::move(s)};
    if (probe) probe->signing = {std::move(step)};
    return sig;
  }
}

bool verify(ByteView m, const EcdsaSignature& sig, const Point& Q, const CurveParams& curve, Probe* probe) {
  if (probe) probe->verifying.clear();
  const BigInt& n = curve.order;
  if (sig.r < 1 || sig.r >= n || sig.s < 1 || sig.s >= n) return false;
  if (!detail::public_key_usable(Q, curve)) return false;
  const BigInt e = mod(hash_to_int(m), n);
  VerifyStep step = detail::verify_step(e, sig.r, sig.s, Q, curve, probe ? &probe->counts : nullptr);
  const bool ok = !step.R.is_infinity() && step.r_prime == sig.r;
  if (probe) probe->verifying = {std::move(step)};
  return ok;
}

}  // namespace mecdsa
