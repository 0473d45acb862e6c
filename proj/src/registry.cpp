#include "mecdsa/registry.hpp"

#include "mecdsa/kvdoc.hpp"

#include <array>
#include <cctype>
#include <stdexcept>

namespace mecdsa {

namespace {

// Values follow the cited standards: FIPS 186-4 (P-256), GM/T 0003-2012
// (SM2), SEC 2 v2 (secp256r1, secp256k1).
constexpr std::array<BuiltinCurve, 4> kBuiltins = {{
    {"p256", "FIPS 186-4, curve P-256",
     "ffffffff00000001000000000000000000000000ffffffffffffffffffffffff",
     "ffffffff00000001000000000000000000000000fffffffffffffffffffffffc",
     "5ac635d8aa3a93e7b3ebbd55769886bc651d06b0cc53b0f63bce3c3e27d2604b",
     "036b17d1f2e12c4247f8bce6e563a440f277037d812deb33a0f4a13945d898c296",
     "046b17d1f2e12c4247f8bce6e563a440f277037d812deb33a0f4a13945d898c296"
     "4fe342e2fe1a7f9b8ee7eb4a7c0f9e162bce33576b315ececbb6406837bf51f5",
     "ffffffff00000000ffffffffffffffffbce6faada7179e84f3b9cac2fc632551", "1"},
    {"secp256k1", "SEC 2 v2, secp256k1",
     "fffffffffffffffffffffffffffffffffffffffffffffffffffffffefffffc2f", "0", "7",
     "0279be667ef9dcbbac55a06295ce870b07029bfcdb2dce28d959f2815b16f81798",
     "0479be667ef9dcbbac55a06295ce870b07029bfcdb2dce28d959f2815b16f81798"
     "483ada7726a3c4655da4fbfc0e1108a8fd17b448a68554199c47d08ffb10d4b8",
     "fffffffffffffffffffffffffffffffebaaedce6af48a03bbfd25e8cd0364141", "1"},
    {"secp256r1", "SEC 2 v2, secp256r1",
     "ffffffff00000001000000000000000000000000ffffffffffffffffffffffff",
     "ffffffff00000001000000000000000000000000fffffffffffffffffffffffc",
     "5ac635d8aa3a93e7b3ebbd55769886bc651d06b0cc53b0f63bce3c3e27d2604b",
     "036b17d1f2e12c4247f8bce6e563a440f277037d812deb33a0f4a13945d898c296",
     "046b17d1f2e12c4247f8bce6e563a440f277037d812deb33a0f4a13945d898c296"
     "4fe342e2fe1a7f9b8ee7eb4a7c0f9e162bce33576b315ececbb6406837bf51f5",
     "ffffffff00000000ffffffffffffffffbce6faada7179e84f3b9cac2fc632551", "1"},
    {"sm2", "GM/T 0003-2012, SM2",
     "fffffffeffffffffffffffffffffffffffffffff00000000ffffffffffffffff",
     "fffffffeffffffffffffffffffffffffffffffff00000000fffffffffffffffc",
     "28e9fa9e9d9f5e344d5a9e4bcf6509a7f39789f515ab8f92ddbcbd414d940e93",
     "0232c4ae2c1f1981195f9904466a39c9948fe30bbff2660be1715a4589334c74c7",
     "0432c4ae2c1f1981195f9904466a39c9948fe30bbff2660be1715a4589334c74c7"
     "bc3736a2f4f6779c59bdcee36b692153d0a9877cc62a474002df32e52139f0a0",
     "fffffffeffffffffffffffffffffffff7203df6b21c6052b53bbf40939d54123", "1"},
}};

constexpr std::array<std::string_view, 8> kConfigKeys = {"name", "p", "a", "b", "base", "n", "h", "strict"};

bool parse_flag(const std::string& value) {
  const std::string v = to_lower(value);
  if (v == "true" || v == "yes" || v == "1" || v == "strict") return true;
  if (v == "false" || v == "no" || v == "0" || v == "relaxed") return false;
  throw FormatError("strict must be true or false, got '" + value + "'");
}

void require_valid_name(const std::string& name) {
  if (name.empty()) throw FormatError("curve name is empty");
  for (unsigned char ch : name)
    if (!std::isalnum(ch) && ch != '-' && ch != '_' && ch != '.')
      throw FormatError("curve name '" + name + "' may only contain letters, digits, '-', '_' and '.'");
}

}  // namespace

std::span<const BuiltinCurve> builtin_curves() { return kBuiltins; }

CurveDefinition parse_curve_config(std::string_view text) {
  const KvDocument doc = KvDocument::parse(text);
  for (const auto& [key, value] : doc.entries()) {
    bool known = false;
    for (auto k : kConfigKeys) known = known || key == k;
    if (!known) throw FormatError("unknown curve config key '" + key + "'");
  }
  CurveDefinition def;
  def.name = doc.require("name");
  require_valid_name(def.name);
  def.p = doc.require("p");
  def.a = doc.require("a");
  def.b = doc.require("b");
  def.base = doc.require("base");
  def.n = doc.require("n");
  def.h = doc.require("h");
  def.strict = parse_flag(doc.require("strict"));
  return def;
}

CurveDefinition definition_of(const CurveParams& c, bool strict) {
  return CurveDefinition{c.name,
                         to_hex(c.p()),
                         to_hex(c.a.value()),
                         to_hex(c.b.value()),
                         encode_point(c.base, c, false),
                         to_hex(c.order),
                         to_hex(c.cofactor),
                         strict};
}

std::string serialize_curve_config(const CurveParams& c, bool strict) {
  const CurveDefinition def = definition_of(c, strict);
  KvDocument doc;
  doc.set("name", def.name);
  doc.set("p", def.p);
  doc.set("a", def.a);
  doc.set("b", def.b);
  doc.set("base", def.base);
  doc.set("n", def.n);
  doc.set("h", def.h);
  doc.set("strict", def.strict ? "true" : "false");
  return doc.serialize("curve parameters; integers are big-endian hex");
}

CurveParams build_curve(const CurveDefinition& def) {
  require_valid_name(def.name);
  const BigInt p = from_hex(def.p);
  // Provisional base so that a compressed base can be decompressed on the
  // curve it belongs to.
  CurveParams c = CurveParams::make(def.name, p, from_hex(def.a), from_hex(def.b), 0, 0, from_hex(def.n),
                                    from_hex(def.h));
  std::string base;
  for (char ch : def.base)
    if (!std::isspace(static_cast<unsigned char>(ch))) base.push_back(ch);
  c.base = decode_point(base, c);
  return c;
}

ValidationReport check_definition(const CurveDefinition& def, unsigned rounds) {
  try {
    const CurveParams c = build_curve(def);
    ValidationReport report = validate_curve_params(c, def.strict, rounds);
    report.checks.insert(report.checks.begin(), ValidationCheck{check::kWellFormed, true, ""});
    return report;
  } catch (const Error& e) {
    ValidationReport report;
    report.checks.push_back(ValidationCheck{check::kWellFormed, false, e.what()});
    return report;
  }
}

namespace {

CurveDefinition definition_of_builtin(const BuiltinCurve& bc) {
  return CurveDefinition{std::string(bc.name), std::string(bc.p), std::string(bc.a), std::string(bc.b),
                         std::string(bc.base_uncompressed), std::string(bc.n), std::string(bc.h), true};
}

}  // namespace

ValidationReport check_builtin(const BuiltinCurve& bc, unsigned rounds) {
  const CurveDefinition def = definition_of_builtin(bc);
  ValidationReport report = check_definition(def, rounds);
  ValidationCheck agree{check::kBaseEncodingsAgree, false, ""};
  try {
    const CurveParams c = build_curve(def);
    std::string compressed;
    for (char ch : bc.base_compressed)
      if (!std::isspace(static_cast<unsigned char>(ch))) compressed.push_back(ch);
    agree.passed = decode_point(compressed, c) == c.base;
    if (!agree.passed) agree.detail = "compressed base decodes to a different point";
  } catch (const Error& e) {
    agree.detail = e.what();
  }
  report.checks.insert(report.checks.begin() + 1, std::move(agree));
  return report;
}

CurveRegistry::CurveRegistry() {
  for (const BuiltinCurve& bc : kBuiltins) {
    const ValidationReport report = check_builtin(bc);
    if (!report.ok())
      throw std::logic_error("built-in curve " + std::string(bc.name) + " failed validation:\n" + report.to_string());
    entries_.emplace(to_lower(bc.name), Entry{build_curve(definition_of_builtin(bc)), std::string(bc.source), true});
  }
}

const CurveRegistry::Entry& CurveRegistry::entry(std::string_view name) const {
  auto it = entries_.find(to_lower(name));
  if (it == entries_.end()) {
    std::vector<std::string> names;
    for (const auto& [key, e] : entries_) names.push_back(e.params.name);
    throw NotFoundError("unknown curve '" + std::string(name) + "'; available: " + join_list(names, ' '));
  }
  return it->second;
}

const CurveParams& CurveRegistry::get(std::string_view name) const { return entry(name).params; }

bool CurveRegistry::contains(std::string_view name) const { return entries_.count(to_lower(name)) != 0; }

bool CurveRegistry::is_strict(std::string_view name) const { return entry(name).strict; }

std::vector<CurveListing> CurveRegistry::list() const {
  std::vector<CurveListing> out;
  for (const auto& [key, e] : entries_) out.push_back({e.params.name, bit_length(e.params.order), e.source});
  return out;
}

const CurveParams& CurveRegistry::load_custom(const CurveDefinition& def) {
  if (contains(def.name)) throw DuplicateNameError("curve '" + def.name + "' is already registered");
  CurveParams c = build_curve(def);
  ValidationReport report = validate_curve_params(c, def.strict);
  if (!report.ok()) throw ValidationError(std::move(report));
  auto [it, inserted] = entries_.emplace(to_lower(def.name), Entry{std::move(c), "user-defined", def.strict});
  return it->second.params;
}

const CurveParams& CurveRegistry::load_custom(std::string_view config_text) {
  return load_custom(parse_curve_config(config_text));
}

}  // namespace mecdsa
