#pragma once

// Prime-field arithmetic over arbitrary-precision residues.
//
// NOT constant time. Nothing here is hardened against timing or other
// side channels; this library is a reference implementation, not a
// production signer.

#include <memory>
#include <optional>

#include "mecdsa/bigint.hpp"

namespace mecdsa {

class PrimeField;
using FieldRef = std::shared_ptr<const PrimeField>;

class PrimeField {
 public:
  /// Requires an odd modulus >= 3. With `check_prime` the modulus must
  /// also pass is_probable_prime at the default round count.
  static FieldRef create(BigInt modulus, bool check_prime = false);

  const BigInt& modulus() const noexcept { return modulus_; }
  std::size_t byte_length() const noexcept { return byte_length_; }
  bool operator==(const PrimeField& other) const { return modulus_ == other.modulus_; }

 private:
  explicit PrimeField(BigInt modulus);

  BigInt modulus_;
  std::size_t byte_length_;
};

/// A residue held in canonical form 0 <= value < p.
class FieldElement {
 public:
  FieldElement(FieldRef field, const BigInt& value);

  const BigInt& value() const noexcept { return value_; }
  const FieldRef& field() const noexcept { return field_; }
  const BigInt& modulus() const noexcept { return field_->modulus(); }
  bool is_zero() const { return value_ == 0; }

  /// Same field and same residue.
  bool operator==(const FieldElement& other) const;

 private:
  FieldRef field_;
  BigInt value_;
};

bool same_field(const FieldElement& x, const FieldElement& y);

FieldElement fe_add(const FieldElement& x, const FieldElement& y);
FieldElement fe_sub(const FieldElement& x, const FieldElement& y);
FieldElement fe_neg(const FieldElement& x);
FieldElement fe_mul(const FieldElement& x, const FieldElement& y);
FieldElement fe_pow(const FieldElement& x, const BigInt& exponent);
FieldElement fe_inv(const FieldElement& x);

/// Some square root of x, or nullopt for a quadratic non-residue.
/// Uses x^((p+1)/4) when p = 3 (mod 4) and Tonelli-Shanks otherwise.
std::optional<FieldElement> mod_sqrt(const FieldElement& x);

inline FieldElement operator+(const FieldElement& x, const FieldElement& y) { return fe_add(x, y); }
inline FieldElement operator-(const FieldElement& x, const FieldElement& y) { return fe_sub(x, y); }
inline FieldElement operator-(const FieldElement& x) { return fe_neg(x); }
inline FieldElement operator*(const FieldElement& x, const FieldElement& y) { return fe_mul(x, y); }

/// a^-1 mod m for plain integers (scalar arithmetic mod n).
BigInt inv_mod(const BigInt& a, const BigInt& m);

inline constexpr unsigned kDefaultPrimalityRounds = 64;

/// Miller-Rabin after trial division by the primes below 100. Witnesses
/// come from a generator seeded by m itself, so verdicts are reproducible.
bool is_probable_prime(const BigInt& m, unsigned rounds = kDefaultPrimalityRounds);

}  // namespace mecdsa
