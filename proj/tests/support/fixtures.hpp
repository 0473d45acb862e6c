#pragma once

#include <string>
#include <vector>

#include "mecdsa/multi_curve.hpp"
#include "mecdsa/registry.hpp"
#include "toy_oracle.hpp"

namespace fixtures {

/// Toy curves of prime group order. Only (p, a, b, G) are fixed here; the
/// order is counted by the oracle's point enumeration.
struct ToyCurve {
  const char* name;
  oracle::i64 p, a, b, gx, gy;
};

inline constexpr ToyCurve kTest17{"TEST-17", 17, 2, 2, 5, 1};
inline constexpr ToyCurve kTest31{"TEST-31", 31, 1, 3, 1, 6};
inline constexpr ToyCurve kTest97{"TEST-97", 97, 3, 2, 0, 14};

inline oracle::Domain domain_of(const ToyCurve& toy) {
  const oracle::Curve E{toy.p, toy.a, toy.b};
  const oracle::Pt G = oracle::pt(toy.gx, toy.gy);
  return oracle::Domain{E, G, oracle::order_of(G, E)};
}

inline std::string config_of(const ToyCurve& toy) {
  const oracle::Domain D = domain_of(toy);
  return oracle::config_text(toy.name, toy.p, toy.a, toy.b, D.G, D.n);
}

/// Built-in registry plus the three toy curves (relaxed).
inline const mecdsa::CurveRegistry& registry() {
  static const mecdsa::CurveRegistry reg = [] {
    mecdsa::CurveRegistry r;
    for (const ToyCurve* toy : {&kTest17, &kTest31, &kTest97}) r.load_custom(config_of(*toy));
    return r;
  }();
  return reg;
}

inline const mecdsa::CurveParams& curve(const std::string& name) { return registry().get(name); }

inline mecdsa::MultiCurveConfig config(const std::vector<std::string>& names) {
  std::vector<mecdsa::CurveParams> curves;
  for (const auto& n : names) curves.push_back(curve(n));
  return mecdsa::MultiCurveConfig(std::move(curves));
}

inline mecdsa::Point to_point(const oracle::Pt& P, const mecdsa::CurveParams& c) {
  if (P.inf) return mecdsa::Point::infinity();
  return c.point(P.x, P.y);
}

inline mecdsa::Bytes message(const std::string& s) { return mecdsa::Bytes(s.begin(), s.end()); }

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"p256", "secp256k1", "secp256r1", "sm2"};
  return names;
}

}  // namespace fixtures
