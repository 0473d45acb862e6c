#include "mecdsa/field.hpp"

#include "mecdsa/errors.hpp"

#include <array>

namespace mecdsa {

PrimeField::PrimeField(BigInt modulus)
    : modulus_(std::move(modulus)), byte_length_(mecdsa::byte_length(modulus_)) {}

FieldRef PrimeField::create(BigInt modulus, bool check_prime) {
  if (modulus < 3 || mpz_even_p(modulus.get_mpz_t()))
    throw DomainError("field modulus must be an odd integer >= 3");
  if (check_prime && !is_probable_prime(modulus))
    throw DomainError("field modulus " + to_hex(modulus) + " is not prime");
  return FieldRef(new PrimeField(std::move(modulus)));
}

FieldElement::FieldElement(FieldRef field, const BigInt& value)
    : field_(std::move(field)), value_(mod(value, field_->modulus())) {}

bool FieldElement::operator==(const FieldElement& other) const {
  return same_field(*this, other) && value_ == other.value_;
}

bool same_field(const FieldElement& x, const FieldElement& y) {
  return x.field() == y.field() || *x.field() == *y.field();
}

namespace {

void require_same_field(const FieldElement& x, const FieldElement& y, const char* op) {
  if (!same_field(x, y)) throw DomainError(std::string(op) + ": operands belong to different fields");
}

}  // namespace

FieldElement fe_add(const FieldElement& x, const FieldElement& y) {
  require_same_field(x, y, "fe_add");
  BigInt sum = x.value() + y.value();
  if (sum >= x.modulus()) sum -= x.modulus();
  return FieldElement(x.field(), sum);
}

FieldElement fe_sub(const FieldElement& x, const FieldElement& y) {
  require_same_field(x, y, "fe_sub");
  BigInt diff = x.value() - y.value();
  if (diff < 0) diff += x.modulus();
  return FieldElement(x.field(), diff);
}

FieldElement fe_neg(const FieldElement& x) {
  if (x.is_zero()) return x;
  return FieldElement(x.field(), x.modulus() - x.value());
}

FieldElement fe_mul(const FieldElement& x, const FieldElement& y) {
  require_same_field(x, y, "fe_mul");
  return FieldElement(x.field(), x.value() * y.value());
}

FieldElement fe_pow(const FieldElement& x, const BigInt& exponent) {
  if (exponent < 0) return fe_pow(fe_inv(x), -exponent);
  BigInt r;
  mpz_powm(r.get_mpz_t(), x.value().get_mpz_t(), exponent.get_mpz_t(), x.modulus().get_mpz_t());
  return FieldElement(x.field(), r);
}

FieldElement fe_inv(const FieldElement& x) {
  if (x.is_zero()) throw NotInvertibleError("fe_inv: zero has no inverse");
  return FieldElement(x.field(), inv_mod(x.value(), x.modulus()));
}

BigInt inv_mod(const BigInt& a, const BigInt& m) {
  // mpz_invert runs the extended Euclidean algorithm.
  BigInt r;
  if (m <= 1 || mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw NotInvertibleError("inv_mod: " + to_hex(mod(a, m > 0 ? m : BigInt(1))) + " is not invertible modulo " +
                             (m > 0 ? to_hex(m) : std::string("non-positive modulus")));
  return r;
}

std::optional<FieldElement> mod_sqrt(const FieldElement& x) {
  if (x.is_zero()) return x;
  const BigInt& p = x.modulus();
  const FieldElement one(x.field(), 1);

  // Euler's criterion.
  if (fe_pow(x, (p - 1) / 2) != one) return std::nullopt;

  if (mod(p, 4) == 3) return fe_pow(x, (p + 1) / 4);

  // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
  BigInt q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q >>= 1;
    ++s;
  }
  BigInt z = 2;
  const BigInt minus_one = p - 1;
  while (fe_pow(FieldElement(x.field(), z), (p - 1) / 2).value() != minus_one) ++z;

  unsigned long m = s;
  FieldElement c = fe_pow(FieldElement(x.field(), z), q);
  FieldElement t = fe_pow(x, q);
  FieldElement r = fe_pow(x, (q + 1) / 2);
  while (t != one) {
    // Least i with t^(2^i) = 1; 0 < i < m.
    unsigned long i = 0;
    FieldElement t2 = t;
    while (t2 != one) {
      t2 = t2 * t2;
      ++i;
    }
    FieldElement b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b;
    m = i;
    c = b * b;
    t = t * c;
    r = r * b;
  }
  return r;
}

bool is_probable_prime(const BigInt& m, unsigned rounds) {
  static constexpr std::array<unsigned, 25> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                            43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  if (m < 2) return false;
  for (unsigned sp : kSmallPrimes) {
    if (m == sp) return true;
    if (mpz_divisible_ui_p(m.get_mpz_t(), sp)) return false;
  }
  if (rounds == 0) rounds = 1;

  // m - 1 = d * 2^s with d odd.
  const BigInt m_minus_1 = m - 1;
  BigInt d = m_minus_1;
  unsigned long s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(m);
  const BigInt base_span = m - 3;  // witnesses drawn from [2, m - 2]
  BigInt x;
  for (unsigned round = 0; round < rounds; ++round) {
    BigInt a = rng.get_z_range(base_span) + 2;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
    if (x == 1 || x == m_minus_1) continue;
    bool composite = true;
    for (unsigned long r = 1; r < s; ++r) {
      mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, m.get_mpz_t());
      if (x == m_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace mecdsa
