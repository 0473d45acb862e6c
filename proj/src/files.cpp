#include "mecdsa/files.hpp"

#include "mecdsa/kvdoc.hpp"

namespace mecdsa {

namespace {

void require_version(const KvDocument& doc, int expected) {
  const std::string& v = doc.require("version");
  if (v != std::to_string(expected)) throw FormatError("unsupported format version '" + v + "'");
}

}  // namespace

KeyFile KeyFile::secret_of(const MultiCurveKeypair& kp) {
  return KeyFile{kp.config.names(), kp.d, kp.Q};
}

KeyFile KeyFile::public_part() const { return KeyFile{curves, std::nullopt, public_points}; }

std::string KeyFile::serialize(const CurveRegistry& registry) const {
  KvDocument doc;
  doc.set("version", std::to_string(kKeyFileVersion));
  doc.set("kind", is_secret() ? "secret" : "public");
  doc.set("curves", join_list(curves));
  if (private_scalars) {
    std::vector<std::string> hex;
    for (const auto& d : *private_scalars) hex.push_back(to_hex(d));
    doc.set("private", join_list(hex));
  }
  std::vector<std::string> pts;
  for (std::size_t i = 0; i < public_points.size(); ++i)
    pts.push_back(encode_point(public_points[i], registry.get(curves.at(i))));
  doc.set("public", join_list(pts));
  return doc.serialize(is_secret() ? "MECDSA secret key: private scalars in clear text, not production key storage"
                                   : "MECDSA public key");
}

KeyFile KeyFile::parse(std::string_view text, const CurveRegistry& registry) {
  const KvDocument doc = KvDocument::parse(text);
  require_version(doc, kKeyFileVersion);
  const std::string& kind = doc.require("kind");
  if (kind != "secret" && kind != "public") throw FormatError("key kind must be secret or public, got '" + kind + "'");

  KeyFile kf;
  kf.curves = split_list(doc.require("curves"));
  if (kf.curves.empty()) throw FormatError("key file lists no curves");
  std::vector<const CurveParams*> params;
  for (const auto& name : kf.curves) params.push_back(&registry.get(name));

  const auto pts = split_list(doc.require("public"));
  if (pts.size() != kf.curves.size()) throw FormatError("public point count does not match curve count");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Point q = decode_point(pts[i], *params[i]);
    if (q.is_infinity()) throw InvalidPointError("public point " + std::to_string(i) + " is the point at infinity");
    kf.public_points.push_back(std::move(q));
  }

  if (kind == "secret") {
    const auto hex = split_list(doc.require("private"));
    if (hex.size() != kf.curves.size()) throw FormatError("private scalar count does not match curve count");
    std::vector<BigInt> d;
    for (std::size_t i = 0; i < hex.size(); ++i) {
      BigInt di = from_hex(hex[i]);
      if (di < 1 || di >= params[i]->order)
        throw DomainError("private scalar " + std::to_string(i) + " outside [1, n - 1]");
      if (scalar_mul(di, params[i]->base, *params[i]) != kf.public_points[i])
        throw DomainError("public point " + std::to_string(i) + " does not match its private scalar");
      d.push_back(std::move(di));
    }
    kf.private_scalars = std::move(d);
  } else if (doc.contains("private")) {
    throw FormatError("public key file carries private scalars");
  }
  return kf;
}

std::string SignatureFile::serialize() const {
  KvDocument doc;
  doc.set("version", std::to_string(kSignatureFileVersion));
  doc.set("scheme", to_string(scheme));
  doc.set("curves", join_list(curves));
  if (scheme == Scheme::mecdsa) {
    doc.set("signature", hex_of_bytes(encode_multisig(mecdsa.value())));
  } else {
    doc.set("signature", t_ecdsa.value().to_text());
  }
  return doc.serialize();
}

SignatureFile SignatureFile::parse(std::string_view text) {
  const KvDocument doc = KvDocument::parse(text);
  require_version(doc, kSignatureFileVersion);
  SignatureFile sf{Scheme::mecdsa, split_list(doc.require("curves")), std::nullopt, std::nullopt};
  if (sf.curves.empty()) throw FormatError("signature file lists no curves");
  const std::string& scheme = doc.require("scheme");
  const std::string& body = doc.require("signature");
  if (scheme == "mecdsa") {
    sf.mecdsa = decode_multisig(bytes_of_hex(body));
    if (sf.mecdsa->s.size() != sf.curves.size()) throw FormatError("signature component count does not match curves");
  } else if (scheme == "t-ecdsa") {
    sf.scheme = Scheme::t_ecdsa;
    sf.t_ecdsa = TEcdsaSignature::from_text(body);
    if (sf.t_ecdsa->pairs.size() != sf.curves.size())
      throw FormatError("signature component count does not match curves");
  } else {
    throw FormatError("unknown signature scheme '" + scheme + "'");
  }
  return sf;
}

}  // namespace mecdsa
