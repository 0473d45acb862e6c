#pragma once

#include <string>

#include "mecdsa/curve.hpp"
#include "mecdsa/instrument.hpp"
#include "mecdsa/nonce.hpp"

namespace mecdsa {

struct Keypair {
  CurveParams curve;
  BigInt d;
  Point Q;
};

struct EcdsaSignature {
  BigInt r;
  BigInt s;

  bool operator==(const EcdsaSignature&) const = default;

  /// "r:s" in lowercase hex.
  std::string to_text() const;
  static EcdsaSignature from_text(std::string_view text);
};

/// d drawn from `rng` in [1, n - 1], Q = dP.
Keypair keygen(const CurveParams& curve, NonceSource& rng);

/// Rebuilds a keypair from a stored private scalar; DomainError unless
/// 1 <= d <= n - 1.
Keypair keypair_from_private(const CurveParams& curve, const BigInt& d);

/// ECDSA signing: k from `nonce`, r = x(kP) mod n, s = k^-1 (e + d r)
/// mod n, drawing a fresh k whenever r or s comes out zero. e = H(m) is
/// reduced modulo n.
EcdsaSignature sign(ByteView m, const Keypair& kp, NonceSource& nonce, Probe* probe = nullptr);

/// Returns false for r or s outside [1, n - 1] (before any curve
/// arithmetic), for a public key that is O or off the curve, for R = O,
/// and when x(R) mod n != r.
bool verify(ByteView m, const EcdsaSignature& sig, const Point& Q, const CurveParams& curve,
            Probe* probe = nullptr);

namespace detail {

// Building blocks shared with the multi-curve schemes. Each one tallies
// the operations it performs into `counts` when non-null.

/// k from `nonce`, K = kP, r = x(K) mod n; redraws while r = 0.
SignStep draw_nonce_step(const CurveParams& curve, NonceSource& nonce, OpCounts* counts, unsigned* retries);

/// s = k^-1 (e + d r) mod n with e already reduced mod n.
BigInt signature_scalar(const BigInt& k, const BigInt& e, const BigInt& d, const BigInt& r, const BigInt& n,
                        OpCounts* counts);

/// w = s^-1, u = e w, v = r w (mod n), R = uP + vQ and x(R) mod n.
/// Requires 1 <= s <= n - 1.
VerifyStep verify_step(const BigInt& e, const BigInt& r, const BigInt& s, const Point& Q, const CurveParams& curve,
                       OpCounts* counts);

bool public_key_usable(const Point& Q, const CurveParams& curve);

}  // namespace detail

}  // namespace mecdsa
