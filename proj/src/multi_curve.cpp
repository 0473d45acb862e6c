#include "mecdsa/multi_curve.hpp"

#include "mecdsa/errors.hpp"
#include "mecdsa/kvdoc.hpp"

namespace mecdsa {

std::string to_string(Scheme s) { return s == Scheme::mecdsa ? "mecdsa" : "t-ecdsa"; }

MultiCurveConfig::MultiCurveConfig(std::vector<CurveParams> curves) : curves_(std::move(curves)) {
  if (curves_.empty()) throw DomainError("a multi-curve configuration needs at least one curve");
  for (const CurveParams& c : curves_) {
    ValidationReport report = validate_curve_params(c, false);
    if (!report.ok()) throw ValidationError(std::move(report));
    order_sum_ += c.order;
  }
}

std::vector<std::string> MultiCurveConfig::names() const {
  std::vector<std::string> out;
  for (const auto& c : curves_) out.push_back(c.name);
  return out;
}

std::string TEcdsaSignature::to_text() const {
  std::vector<std::string> parts;
  for (const auto& p : pairs) parts.push_back(p.to_text());
  return join_list(parts);
}

TEcdsaSignature TEcdsaSignature::from_text(std::string_view text) {
  TEcdsaSignature sig;
  for (const auto& part : split_list(text)) sig.pairs.push_back(EcdsaSignature::from_text(part));
  if (sig.pairs.empty()) throw FormatError("t-ECDSA signature has no components");
  return sig;
}

MultiCurveKeypair mkeygen(const MultiCurveConfig& config, NonceSource& rng) {
  MultiCurveKeypair kp{config, {}, {}};
  for (const CurveParams& c : config.curves()) {
    Keypair single = keygen(c, rng);
    kp.d.push_back(std::move(single.d));
    kp.Q.push_back(std::move(single.Q));
  }
  return kp;
}

MultiCurveKeypair mkeypair_from_private(const MultiCurveConfig& config, std::vector<BigInt> d) {
  if (d.size() != config.size())
    throw DomainError("expected " + std::to_string(config.size()) + " private scalars, got " + std::to_string(d.size()));
  MultiCurveKeypair kp{config, {}, {}};
  for (std::size_t i = 0; i < d.size(); ++i) {
    Keypair single = keypair_from_private(config[i], d[i]);
    kp.d.push_back(std::move(single.d));
    kp.Q.push_back(std::move(single.Q));
  }
  return kp;
}

MultiSignature msign(ByteView m, const MultiCurveKeypair& kp, NonceSource& nonce, Probe* probe) {
  const MultiCurveConfig& cfg = kp.config;
  const std::size_t t = cfg.size();
  OpCounts* counts = probe ? &probe->counts : nullptr;
  unsigned local_retries = 0;
  unsigned* retries = probe ? &probe->retries : &local_retries;

  const BigInt digest = hash_to_int(m);
  std::vector<BigInt> e(t);
  for (std::size_t i = 0; i < t; ++i) e[i] = mod(digest, cfg[i].order);

  std::vector<SignStep> steps;
  auto draw_all = [&] {
    steps.clear();
    for (std::size_t i = 0; i < t; ++i) steps.push_back(detail::draw_nonce_step(cfg[i], nonce, counts, retries));
  };
  draw_all();

  while (true) {
    BigInt r = steps[0].r;
    for (std::size_t i = 1; i < t; ++i) r += steps[i].r;
    if (counts) counts->field_add += t - 1;

    bool r_vanishes = false;
    for (std::size_t i = 0; i < t && !r_vanishes; ++i) r_vanishes = mod(r, cfg[i].order) == 0;
    if (r_vanishes) {
      ++*retries;
      draw_all();
      continue;
    }

    MultiSignature sig{r, {}};
    bool restarted = false;
    for (std::size_t i = 0; i < t; ++i) {
      BigInt s = detail::signature_scalar(steps[i].nonce, e[i], kp.d[i], r, cfg[i].order, counts);
      if (s == 0) {
        ++*retries;
        steps[i] = detail::draw_nonce_step(cfg[i], nonce, counts, retries);
        restarted = true;
        break;
      }
      sig.s.push_back(std::move(s));
    }
    if (restarted) continue;

    if (probe) probe->signing = std::move(steps);
    return sig;
  }
}

bool mverify(ByteView m, const MultiSignature& sig, std::span<const Point> Q, const MultiCurveConfig& config,
             Probe* probe) {
  if (probe) probe->verifying.clear();
  const std::size_t t = config.size();
  if (sig.s.size() != t || Q.size() != t) return false;

  const BigInt t_big = static_cast<unsigned long>(t);
  if (sig.r < t_big || sig.r > config.order_sum() - t_big) return false;
  for (std::size_t i = 0; i < t; ++i)
    if (sig.s[i] < 1 || sig.s[i] >= config[i].order) return false;
  for (std::size_t i = 0; i < t; ++i)
    if (!detail::public_key_usable(Q[i], config[i])) return false;

  OpCounts* counts = probe ? &probe->counts : nullptr;
  const BigInt digest = hash_to_int(m);
  BigInt r_sum;
  for (std::size_t i = 0; i < t; ++i) {
    const BigInt e = mod(digest, config[i].order);
    VerifyStep step = detail::verify_step(e, sig.r, sig.s[i], Q[i], config[i], counts);
    const bool at_infinity = step.R.is_infinity();
    if (i == 0) {
      r_sum = step.r_prime;
    } else {
      r_sum += step.r_prime;
      if (counts) ++counts->field_add;
    }
    if (probe) probe->verifying.push_back(std::move(step));
    if (at_infinity) return false;
  }
  return r_sum == sig.r;
}

TEcdsaSignature t_ecdsa_sign(ByteView m, const MultiCurveKeypair& kp, NonceSource& nonce, Probe* probe) {
  TEcdsaSignature out;
  std::vector<SignStep> steps;
  for (std::size_t i = 0; i < kp.config.size(); ++i) {
    const Keypair single{kp.config[i], kp.d[i], kp.Q[i]};
    out.pairs.push_back(sign(m, single, nonce, probe));
    if (probe) steps.push_back(probe->signing.front());
  }
  if (probe) probe->signing = std::move(steps);
  return out;
}

bool t_ecdsa_verify(ByteView m, const TEcdsaSignature& sig, std::span<const Point> Q, const MultiCurveConfig& config,
                    Probe* probe) {
  const std::size_t t = config.size();
  if (sig.pairs.size() != t || Q.size() != t) {
    if (probe) probe->verifying.clear();
    return false;
  }
  std::vector<VerifyStep> steps;
  bool ok = true;
  for (std::size_t i = 0; i < t && ok; ++i) {
    ok = verify(m, sig.pairs[i], Q[i], config[i], probe);
    if (probe && !probe->verifying.empty()) steps.push_back(probe->verifying.front());
  }
  if (probe) probe->verifying = std::move(steps);
  return ok;
}

namespace {

void put_scalar(Bytes& out, const BigInt& v) {
  const Bytes raw = to_bytes(v);
  if (raw.size() > 0xffff) throw DomainError("encode_multisig: integer longer than 65535 bytes");
  out.push_back(static_cast<std::uint8_t>(raw.size() >> 8));
  out.push_back(static_cast<std::uint8_t>(raw.size() & 0xff));
  out.insert(out.end(), raw.begin(), raw.end());
}

BigInt take_scalar(ByteView bytes, std::size_t& pos) {
  if (bytes.size() - pos < 2) throw FormatError("truncated length field", pos);
  const std::size_t len = std::size_t{bytes[pos]} << 8 | bytes[pos + 1];
  pos += 2;
  if (bytes.size() - pos < len) throw FormatError("truncated integer of " + std::to_string(len) + " bytes", pos);
  if (len > 0 && bytes[pos] == 0) throw FormatError("non-minimal integer encoding (leading zero byte)", pos);
  BigInt v = from_bytes(bytes.subspan(pos, len));
  pos += len;
  return v;
}

}  // namespace

Bytes encode_multisig(const MultiSignature& sig) {
  if (sig.s.empty()) throw DomainError("encode_multisig: signature has no s components");
  if (sig.s.size() > 255) throw DomainError("encode_multisig: more than 255 curves");
  if (sig.r < 0) throw DomainError("encode_multisig: negative r");
  Bytes out{kMultisigVersion, static_cast<std::uint8_t>(sig.s.size())};
  put_scalar(out, sig.r);
  for (const BigInt& s : sig.s) {
    if (s < 0) throw DomainError("encode_multisig: negative s");
    put_scalar(out, s);
  }
  return out;
}

MultiSignature decode_multisig(ByteView bytes) {
  if (bytes.empty()) throw FormatError("empty signature", 0);
  if (bytes[0] != kMultisigVersion)
    throw FormatError("unsupported signature version " + std::to_string(bytes[0]), 0);
  if (bytes.size() < 2) throw FormatError("missing curve count", 1);
  const std::size_t t = bytes[1];
  if (t == 0) throw FormatError("curve count is zero", 1);
  std::size_t pos = 2;
  MultiSignature sig;
  sig.r = take_scalar(bytes, pos);
  for (std::size_t i = 0; i < t; ++i) sig.s.push_back(take_scalar(bytes, pos));
  if (pos != bytes.size()) throw FormatError("trailing bytes after signature", pos);
  return sig;
}

std::size_t scalar_payload_bits(const MultiSignature& sig) {
  std::size_t bits = bit_length(sig.r);
  for (const auto& s : sig.s) bits += bit_length(s);
  return bits;
}

std::size_t scalar_payload_bits(const TEcdsaSignature& sig) {
  std::size_t bits = 0;
  for (const auto& p : sig.pairs) bits += bit_length(p.r) + bit_length(p.s);
  return bits;
}

std::size_t multisig_header_bytes(std::size_t t) { return 2 + 2 * (t + 1); }

}  // namespace mecdsa
