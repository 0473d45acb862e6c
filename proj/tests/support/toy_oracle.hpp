#pragma once

// Brute-force reference arithmetic for tiny curves, written with plain
// 64-bit integers so it shares no code with the library: points are
// enumerated by trying every (x, y), inverses are found by exhaustive
// search, scalar multiplication is repeated addition, and the signing
// procedures are straight-line transcriptions of the algorithm steps.

#include <openssl/sha.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

struct Curve {
  i64 p, a, b;
};

struct Pt {
  bool inf = true;
  i64 x = 0, y = 0;
  bool operator==(const Pt&) const = default;
};

inline Pt O() { return Pt{}; }
inline Pt pt(i64 x, i64 y) { return Pt{false, x, y}; }

inline i64 md(i64 v, i64 m) { return ((v % m) + m) % m; }

inline i64 inverse_by_search(i64 v, i64 m) {
  v = md(v, m);
  for (i64 c = 1; c < m; ++c)
    if (md(v * c, m) == 1) return c;
  throw std::logic_error("no inverse");
}

inline bool on_curve(const Pt& P, const Curve& E) {
  return P.inf || md(P.y * P.y - (P.x * P.x * P.x + E.a * P.x + E.b), E.p) == 0;
}

/// O first, then affine points ordered by (x, y).
inline std::vector<Pt> enumerate_points(const Curve& E) {
  std::vector<Pt> pts{O()};
  for (i64 x = 0; x < E.p; ++x)
    for (i64 y = 0; y < E.p; ++y)
      if (on_curve(pt(x, y), E)) pts.push_back(pt(x, y));
  return pts;
}

inline Pt add(const Pt& P, const Pt& Q, const Curve& E) {
  if (P.inf) return Q;
  if (Q.inf) return P;
  const i64 p = E.p;
  i64 lambda;
  if (P.x == Q.x) {
    if (md(P.y + Q.y, p) == 0) return O();
    lambda = md((3 * P.x * P.x + E.a) * inverse_by_search(2 * P.y, p), p);
  } else {
    lambda = md((Q.y - P.y) * inverse_by_search(Q.x - P.x, p), p);
  }
  const i64 x3 = md(lambda * lambda - P.x - Q.x, p);
  const i64 y3 = md(lambda * (P.x - x3) - P.y, p);
  return pt(x3, y3);
}

inline Pt repeated_add(i64 k, const Pt& P, const Curve& E) {
  Pt acc = O();
  for (i64 i = 0; i < k; ++i) acc = add(acc, P, E);
  return acc;
}

inline i64 order_of(const Pt& P, const Curve& E) {
  Pt acc = P;
  i64 k = 1;
  while (!acc.inf) {
    acc = add(acc, P, E);
    ++k;
  }
  return k;
}

inline std::vector<std::uint8_t> digest(const std::vector<std::uint8_t>& m) {
  std::vector<std::uint8_t> out(SHA256_DIGEST_LENGTH);
  SHA256(m.data(), m.size(), out.data());
  return out;
}

/// H(m) mod n by Horner's rule over the digest bytes.
inline i64 hash_mod(const std::vector<std::uint8_t>& m, i64 n) {
  i64 e = 0;
  for (auto byte : digest(m)) e = (e * 256 + byte) % n;
  return e;
}

struct Domain {
  Curve E;
  Pt G;
  i64 n;
};

struct Sig {
  i64 r, s;
  bool operator==(const Sig&) const = default;
};

class Nonces {
 public:
  explicit Nonces(std::vector<i64> ks) : ks_(std::move(ks)) {}
  i64 next() {
    if (at_ >= ks_.size()) throw std::out_of_range("oracle nonce list exhausted");
    return ks_[at_++];
  }
  std::size_t consumed() const { return at_; }

 private:
  std::vector<i64> ks_;
  std::size_t at_ = 0;
};

/// Signature generation, one step per line:
///   1. e = H(m)          2. k, kP = (x, y)
///   3. r = x mod n, r = 0 -> step 2
///   4. s = k^-1 (e + d r) mod n, s = 0 -> step 2
inline Sig ecdsa_sign(const Domain& D, i64 d, const std::vector<std::uint8_t>& m, Nonces& ks) {
  const i64 e = hash_mod(m, D.n);
  while (true) {
    const i64 k = ks.next();
    const Pt kP = repeated_add(k, D.G, D.E);
    if (kP.inf) continue;
    const i64 r = md(kP.x, D.n);
    if (r == 0) continue;
    const i64 s = md(inverse_by_search(k, D.n) * md(e + d * r, D.n), D.n);
    if (s == 0) continue;
    return Sig{r, s};
  }
}

/// Verification: range check, w = s^-1, u = e w, v = r w, R = uP + vQ,
/// valid iff R != O and x(R) mod n = r.
inline bool ecdsa_verify(const Domain& D, const Pt& Q, const std::vector<std::uint8_t>& m, const Sig& sig) {
  if (sig.r < 1 || sig.r > D.n - 1 || sig.s < 1 || sig.s > D.n - 1) return false;
  const i64 e = hash_mod(m, D.n);
  const i64 w = inverse_by_search(sig.s, D.n);
  const i64 u = md(e * w, D.n);
  const i64 v = md(sig.r * w, D.n);
  const Pt R = add(repeated_add(u, D.G, D.E), repeated_add(v, Q, D.E), D.E);
  return !R.inf && md(R.x, D.n) == sig.r;
}

struct MultiSig {
  i64 r;
  std::vector<i64> s;
  bool operator==(const MultiSig&) const = default;
};

/// Multi-curve generation:
///   1. e = H(m)
///   2. k_i, k_i P_i = (x_i, y_i) for each i (index order)
///   3. r_i = x_i mod n_i; r_i = 0 -> reselect k_i
///   4. r = r_1 + ... + r_t; r = 0 mod n_i for some i -> reselect every k
///   5. s_i = k_i^-1 (e + d_i r) mod n_i; s_i = 0 -> reselect k_i, redo 4-5
inline MultiSig mecdsa_sign(const std::vector<Domain>& Ds, const std::vector<i64>& d,
                            const std::vector<std::uint8_t>& m, Nonces& ks) {
  const std::size_t t = Ds.size();
  std::vector<i64> k(t), r(t);
  auto select = [&](std::size_t i) {
    while (true) {
      k[i] = ks.next();
      const Pt K = repeated_add(k[i], Ds[i].G, Ds[i].E);
      if (K.inf) continue;
      r[i] = md(K.x, Ds[i].n);
      if (r[i] != 0) return;
    }
  };
  for (std::size_t i = 0; i < t; ++i) select(i);
  while (true) {
    i64 R = 0;
    for (std::size_t i = 0; i < t; ++i) R += r[i];
    bool vanishes = false;
    for (std::size_t i = 0; i < t; ++i) vanishes = vanishes || R % Ds[i].n == 0;
    if (vanishes) {
      for (std::size_t i = 0; i < t; ++i) select(i);
      continue;
    }
    MultiSig out{R, {}};
    bool again = false;
    for (std::size_t i = 0; i < t; ++i) {
      const i64 n = Ds[i].n;
      const i64 s = md(inverse_by_search(k[i], n) * md(hash_mod(m, n) + d[i] * R, n), n);
      if (s == 0) {
        select(i);
        again = true;
        break;
      }
      out.s.push_back(s);
    }
    if (!again) return out;
  }
}

inline std::string config_text(const std::string& name, i64 p, i64 a, i64 b, const Pt& G, i64 n) {
  auto hx = [](i64 v, int width) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (int i = width * 2 - 1; i >= 0; --i) s.push_back(digits[(v >> (4 * i)) & 0xf]);
    return s;
  };
  auto plain = [&](i64 v) {
    std::string s = hx(v, 8);
    const auto nz = s.find_first_not_of('0');
    return nz == std::string::npos ? std::string("0") : s.substr(nz);
  };
  int width = 0;
  for (i64 q = p; q > 0; q >>= 8) ++width;
  return "name = " + name + "\np = " + plain(p) + "\na = " + plain(a) + "\nb = " + plain(b) + "\nbase = 04" +
         hx(G.x, width) + hx(G.y, width) + "\nn = " + plain(n) + "\nh = 1\nstrict = false\n";
}

}  // namespace oracle
