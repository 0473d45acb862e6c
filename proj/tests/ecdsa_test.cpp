#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "mecdsa/ecdsa.hpp"

using namespace mecdsa;

namespace {

const oracle::Domain& toy() {
  static const oracle::Domain D = fixtures::domain_of(fixtures::kTest17);
  return D;
}

const CurveParams& toy_curve() { return fixtures::curve("TEST-17"); }

std::vector<BigInt> big(const std::vector<oracle::i64>& ks) {
  std::vector<BigInt> out;
  for (auto k : ks) out.emplace_back(static_cast<long>(k));
  return out;
}

std::vector<std::uint8_t> msg(const std::string& s) { return std::vector<std::uint8_t>(s.begin(), s.end()); }

}  // namespace

TEST(Hash, FrozenDigests) {
  EXPECT_EQ(to_hex_fixed(hash_to_int({}), 32), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(to_hex_fixed(hash_to_int(msg("abc")), 32),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Hash, DeterministicAndSensitive) {
  const Bytes a = fixtures::message("transfer 10 to alice");
  Bytes b = a;
  b[3] ^= 0x01;
  EXPECT_EQ(hash_to_int(a), hash_to_int(a));
  EXPECT_NE(hash_to_int(a), hash_to_int(b));
}

TEST(Keygen, Examples) {
  const CurveParams& k1 = fixtures::curve("secp256k1");
  EXPECT_EQ(keypair_from_private(k1, 1).Q, k1.base);
  const Keypair toy_kp = keypair_from_private(toy_curve(), 7);
  EXPECT_EQ(toy_kp.Q, fixtures::to_point(oracle::repeated_add(7, toy().G, toy().E), toy_curve()));
  EXPECT_THROW(keypair_from_private(k1, 0), DomainError);
  EXPECT_THROW(keypair_from_private(k1, k1.order), DomainError);
}

TEST(Keygen, RandomKeysAreValid) {
  const CurveParams& k1 = fixtures::curve("secp256k1");
  SeededNonceSource rng(11);
  std::set<std::string> seen;
  for (int i = 0; i < 100; ++i) {
    const Keypair kp = keygen(k1, rng);
    ASSERT_GE(kp.d, 1);
    ASSERT_LT(kp.d, k1.order);
    ASSERT_TRUE(is_on_curve(kp.Q, k1));
    ASSERT_FALSE(kp.Q.is_infinity());
    seen.insert(to_hex(kp.d));
  }
  EXPECT_EQ(seen.size(), 100u);
}

TEST(Sign, MatchesOracleOnToyCurve) {
  const auto& D = toy();
  for (oracle::i64 d = 1; d < D.n; ++d) {
    const Keypair kp = keypair_from_private(toy_curve(), static_cast<long>(d));
    for (const char* text : {"", "abc", "transfer 10 to alice"}) {
      const auto m = msg(text);
      // Plenty of candidate nonces so both sides can retry.
      std::vector<oracle::i64> ks;
      for (oracle::i64 k = 1; k < D.n; ++k) ks.push_back((k * 7 + d) % (D.n - 1) + 1);
      oracle::Nonces oracle_ks(ks);
      const oracle::Sig want = oracle::ecdsa_sign(D, d, m, oracle_ks);
      FixedNonceSource lib_ks(big(ks));
      const EcdsaSignature got = sign(m, kp, lib_ks);
      EXPECT_EQ(got.r, static_cast<long>(want.r));
      EXPECT_EQ(got.s, static_cast<long>(want.s));
      EXPECT_EQ(lib_ks.consumed(), oracle_ks.consumed());
      EXPECT_TRUE(verify(m, got, kp.Q, toy_curve()));
      EXPECT_TRUE(oracle::ecdsa_verify(D, oracle::repeated_add(d, D.G, D.E), m, want));
    }
  }
}

TEST(Sign, RetriesWhenRIsZero) {
  const auto& D = toy();
  oracle::i64 k_zero = 0;
  for (oracle::i64 k = 1; k < D.n && !k_zero; ++k)
    if (oracle::md(oracle::repeated_add(k, D.G, D.E).x, D.n) == 0) k_zero = k;
  ASSERT_NE(k_zero, 0) << "TEST-17 has points with x = 0";
  const auto m = msg("r zero");
  const Keypair kp = keypair_from_private(toy_curve(), 3);
  FixedNonceSource ks(big({k_zero, 5}));
  Probe probe;
  const EcdsaSignature sig = sign(m, kp, ks, &probe);
  EXPECT_EQ(ks.consumed(), 2u);
  EXPECT_EQ(probe.retries, 1u);
  EXPECT_EQ(probe.signing.at(0).nonce, 5);
  oracle::Nonces oks({k_zero, 5});
  EXPECT_EQ(sig.r, static_cast<long>(oracle::ecdsa_sign(D, 3, m, oks).r));
  EXPECT_TRUE(verify(m, sig, kp.Q, toy_curve()));
}

TEST(Sign, RetriesWhenSIsZero) {
  const auto& D = toy();
  auto m = msg("s zero");
  oracle::i64 e = oracle::hash_mod(m, D.n);
  for (int i = 0; e == 0; ++i) {
    m.push_back('!');
    e = oracle::hash_mod(m, D.n);
  }
  const oracle::i64 k = 4;
  const oracle::i64 r = oracle::md(oracle::repeated_add(k, D.G, D.E).x, D.n);
  ASSERT_NE(r, 0);
  const oracle::i64 d = oracle::md(-e * oracle::inverse_by_search(r, D.n), D.n);
  ASSERT_NE(d, 0);
  const Keypair kp = keypair_from_private(toy_curve(), static_cast<long>(d));
  FixedNonceSource ks(big({k, 9}));
  Probe probe;
  const EcdsaSignature sig = sign(m, kp, ks, &probe);
  EXPECT_EQ(ks.consumed(), 2u);
  EXPECT_EQ(probe.retries, 1u);
  EXPECT_NE(sig.s, 0);
  EXPECT_TRUE(verify(m, sig, kp.Q, toy_curve()));
}

TEST(Sign, ExhaustedNonceListThrows) {
  const Keypair kp = keypair_from_private(toy_curve(), 3);
  FixedNonceSource none({});
  EXPECT_THROW(sign(msg("x"), kp, none), NonceExhaustedError);
  FixedNonceSource out_of_range(big({19}));
  EXPECT_THROW(sign(msg("x"), kp, out_of_range), DomainError);
}

TEST(Verify, RoundTripOnEveryBuiltin) {
  SeededNonceSource rng(2024);
  for (const auto& name : fixtures::builtin_names()) {
    const CurveParams& c = fixtures::curve(name);
    for (int i = 0; i < 100; ++i) {
      const Keypair kp = keygen(c, rng);
      const Bytes m = fixtures::message(name + " message " + std::to_string(i));
      const EcdsaSignature sig = sign(m, kp, rng);
      ASSERT_TRUE(verify(m, sig, kp.Q, c)) << name << " #" << i;
    }
  }
}

TEST(Verify, TamperingIsDetected) {
  SeededNonceSource rng(5);
  for (const auto& name : fixtures::builtin_names()) {
    const CurveParams& c = fixtures::curve(name);
    const Keypair kp = keygen(c, rng);
    const Keypair other = keygen(c, rng);
    const Bytes m = fixtures::message("pay 5");
    const EcdsaSignature sig = sign(m, kp, rng);
    Bytes m2 = m;
    m2[4] ^= 0x20;
    EXPECT_FALSE(verify(m2, sig, kp.Q, c));
    EXPECT_FALSE(verify(m, EcdsaSignature{sig.r + 1, sig.s}, kp.Q, c));
    EXPECT_FALSE(verify(m, EcdsaSignature{sig.r, sig.s + 1}, kp.Q, c));
    EXPECT_FALSE(verify(m, sig, other.Q, c));
    EXPECT_FALSE(verify(m, sig, Point::infinity(), c));
    EXPECT_FALSE(verify(m, sig, c.point(1, 1), c));
  }
}

TEST(Verify, OutOfRangeComponentsAreRejectedWithoutCurveArithmetic) {
  const CurveParams& c = fixtures::curve("p256");
  const Keypair kp = keypair_from_private(c, 12345);
  const Bytes m = fixtures::message("m");
  for (const EcdsaSignature& sig : {EcdsaSignature{0, 1}, EcdsaSignature{1, 0}, EcdsaSignature{c.order, 1},
                                    EcdsaSignature{1, c.order}, EcdsaSignature{-1, 1}}) {
    Probe probe;
    reset_group_op_stats();
    EXPECT_FALSE(verify(m, sig, kp.Q, c, &probe));
    EXPECT_EQ(probe.counts, OpCounts{});
    EXPECT_EQ(group_op_stats().total(), 0u);
  }
}

TEST(Verify, DeterministicWithFixedNonces) {
  const CurveParams& c = fixtures::curve("secp256k1");
  const Keypair kp = keypair_from_private(c, from_hex("c0ffee"));
  const Bytes m = fixtures::message("same");
  FixedNonceSource a({from_hex("1234567890abcdef")});
  FixedNonceSource b({from_hex("1234567890abcdef")});
  EXPECT_EQ(sign(m, kp, a), sign(m, kp, b));
}

TEST(Verify, RecoveredPointEqualsNoncePoint) {
  SeededNonceSource rng(77);
  for (const auto& name : fixtures::builtin_names()) {
    const CurveParams& c = fixtures::curve(name);
    const Keypair kp = keygen(c, rng);
    const Bytes m = fixtures::message("R = kP");
    Probe sp;
    const EcdsaSignature sig = sign(m, kp, rng, &sp);
    ASSERT_EQ(sp.signing.size(), 1u);
    EXPECT_EQ(sp.signing[0].nonce_point, scalar_mul(sp.signing[0].nonce, c.base, c));
    Probe vp;
    ASSERT_TRUE(verify(m, sig, kp.Q, c, &vp));
    ASSERT_EQ(vp.verifying.size(), 1u);
    EXPECT_EQ(vp.verifying[0].R, sp.signing[0].nonce_point);
  }
}

TEST(Verify, NegatedSAgreesWithOracle) {
  const auto& D = toy();
  const CurveParams& c = toy_curve();
  for (oracle::i64 d = 1; d < D.n; d += 3) {
    const Keypair kp = keypair_from_private(c, static_cast<long>(d));
    const oracle::Pt Q = oracle::repeated_add(d, D.G, D.E);
    for (oracle::i64 k = 1; k < D.n; k += 2) {
      const auto m = msg("malleable " + std::to_string(k));
      FixedNonceSource ks(big({k, 1, 2, 3, 4, 5}));
      const EcdsaSignature sig = sign(m, kp, ks);
      const EcdsaSignature flipped{sig.r, c.order - sig.s};
      const oracle::Sig oflipped{sig.r.get_si(), flipped.s.get_si()};
      EXPECT_EQ(verify(m, flipped, kp.Q, c), oracle::ecdsa_verify(D, Q, m, oflipped));
    }
  }
}

TEST(Verify, ExhaustiveToyAgreement) {
  // Every (r, s) pair for one key and message: library and oracle agree.
  const auto& D = toy();
  const CurveParams& c = toy_curve();
  const oracle::i64 d = 11;
  const Keypair kp = keypair_from_private(c, static_cast<long>(d));
  const oracle::Pt Q = oracle::repeated_add(d, D.G, D.E);
  const auto m = msg("exhaustive");
  int valid = 0;
  for (oracle::i64 r = 0; r <= D.n; ++r)
    for (oracle::i64 s = 0; s <= D.n; ++s) {
      const bool want = oracle::ecdsa_verify(D, Q, m, {r, s});
      ASSERT_EQ(verify(m, EcdsaSignature{static_cast<long>(r), static_cast<long>(s)}, kp.Q, c), want)
          << r << "," << s;
      valid += want;
    }
  EXPECT_GT(valid, 0);
}

TEST(SignatureText, RoundTrip) {
  const EcdsaSignature sig{from_hex("abc"), from_hex("1")};
  EXPECT_EQ(sig.to_text(), "abc:1");
  EXPECT_EQ(EcdsaSignature::from_text("abc:1"), sig);
  EXPECT_THROW(EcdsaSignature::from_text("abc"), FormatError);
  EXPECT_THROW(EcdsaSignature::from_text("a:b:c"), FormatError);
  EXPECT_THROW(EcdsaSignature::from_text("xyz:1"), FormatError);
}

TEST(NonceSources, Behaviour) {
  const BigInt n = 19;
  SeededNonceSource a(std::uint64_t{42});
  SeededNonceSource b(std::uint64_t{42});
  SeededNonceSource c(std::uint64_t{43});
  bool differs = false;
  std::set<long> seen;
  for (int i = 0; i < 200; ++i) {
    const BigInt x = a.next(n);
    ASSERT_EQ(x, b.next(n));
    differs = differs || x != c.next(n);
    ASSERT_GE(x, 1);
    ASSERT_LT(x, n);
    seen.insert(x.get_si());
  }
  EXPECT_TRUE(differs);
  EXPECT_EQ(seen.size(), 18u);

  SystemNonceSource sys;
  const BigInt big_n = fixtures::curve("p256").order;
  const BigInt x = sys.next(big_n);
  EXPECT_GE(x, 1);
  EXPECT_LT(x, big_n);
  EXPECT_NE(x, sys.next(big_n));
  EXPECT_THROW(sys.next(1), DomainError);

  FixedNonceSource fixed({3, 4});
  EXPECT_EQ(fixed.remaining(), 2u);
  EXPECT_EQ(fixed.next(n), 3);
  EXPECT_EQ(fixed.next(n), 4);
  EXPECT_EQ(fixed.consumed(), 2u);
  EXPECT_THROW(fixed.next(n), NonceExhaustedError);
}
