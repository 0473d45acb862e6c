#include "mecdsa/cli.hpp"

#include "mecdsa/bench.hpp"
#include "mecdsa/files.hpp"
#include "mecdsa/kvdoc.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>

namespace mecdsa::cli {

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

constexpr const char* kDefaultCurves = "secp256k1,p256";

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for reading");
  std::string data((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  if (f.bad()) throw IoError("error while reading '" + path + "'");
  return data;
}

void write_file(const std::string& path, const std::string& data) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << data;
  f.flush();
  if (!f) throw IoError("error while writing '" + path + "'");
}

Bytes read_message(const std::string& path, std::istream& in) {
  std::string data;
  if (path == "-") {
    data.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    data = read_file(path);
  }
  return Bytes(data.begin(), data.end());
}

Bytes seed_bytes(const std::string& hex) {
  if (hex.empty()) throw FormatError("empty seed");
  return bytes_of_hex(hex.size() % 2 ? "0" + hex : hex);
}

struct Context {
  CurveRegistry registry;
  std::vector<std::string> curve_files;

  void load_curve_files() {
    for (const auto& path : curve_files) registry.load_custom(read_file(path));
  }

  MultiCurveConfig config_of(const std::vector<std::string>& names) const {
    std::vector<CurveParams> curves;
    for (const auto& name : names) curves.push_back(registry.get(name));
    return MultiCurveConfig(std::move(curves));
  }
};

std::unique_ptr<NonceSource> make_rng(const std::string& seed) {
  if (seed.empty()) return std::make_unique<SystemNonceSource>();
  return std::make_unique<SeededNonceSource>(seed_bytes(seed));
}

void print_curve(const CurveParams& c, const CurveRegistry& reg, std::ostream& out) {
  out << serialize_curve_config(c, reg.is_strict(c.name));
  out << "# base (compressed) = " << encode_point(c.base, c, true) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"MECDSA: multi-curve ECDSA signatures (reference implementation, not constant time)"};
  app.name(args.empty() ? "mecdsa" : args.front());
  app.require_subcommand(1);

  Context ctx;
  app.add_option("--curve-file", ctx.curve_files, "Curve config file to register (repeatable)")
      ->check(CLI::ExistingFile);

  // keygen
  std::string kg_curves = kDefaultCurves;
  std::string kg_secret;
  std::string kg_public;
  std::string kg_seed;
  auto* keygen = app.add_subcommand("keygen", "Generate a multi-curve key pair");
  keygen->add_option("--curves", kg_curves, "Comma-separated curve names")->capture_default_str();
  keygen->add_option("--secret", kg_secret, "Secret key output path")->required();
  keygen->add_option("--public", kg_public, "Public key output path")->required();
  keygen->add_option("--seed", kg_seed, "Hex seed for deterministic keys (testing only)");

  // sign
  std::string sg_key;
  std::string sg_message;
  std::string sg_out;
  std::string sg_scheme = "mecdsa";
  std::string sg_nonces;
  std::string sg_seed;
  auto* sign_cmd = app.add_subcommand("sign", "Sign a message");
  sign_cmd->add_option("--key", sg_key, "Secret key file")->required();
  sign_cmd->add_option("--message", sg_message, "Message file, or - for standard input")->required();
  sign_cmd->add_option("--out", sg_out, "Signature output path")->required();
  sign_cmd->add_option("--scheme", sg_scheme, "mecdsa or t-ecdsa")
      ->check(CLI::IsMember({"mecdsa", "t-ecdsa"}))
      ->capture_default_str();
  sign_cmd->add_option("--nonces", sg_nonces, "Comma-separated hex nonces consumed in order (testing only)");
  sign_cmd->add_option("--seed", sg_seed, "Hex seed for deterministic nonces (testing only)");

  // verify
  std::string vf_public;
  std::string vf_message;
  std::string vf_signature;
  auto* verify_cmd = app.add_subcommand("verify", "Verify a signature");
  verify_cmd->add_option("--public", vf_public, "Public key file")->required();
  verify_cmd->add_option("--message", vf_message, "Message file, or - for standard input")->required();
  verify_cmd->add_option("--signature", vf_signature, "Signature file")->required();

  // curves
  auto* curves_cmd = app.add_subcommand("curves", "Inspect and validate curve parameters");
  curves_cmd->require_subcommand(1);
  auto* curves_list = curves_cmd->add_subcommand("list", "List registered curves");
  std::string show_name;
  auto* curves_show = curves_cmd->add_subcommand("show", "Print one curve's parameters");
  curves_show->add_option("name", show_name)->required();
  std::string validate_path;
  auto* curves_validate = curves_cmd->add_subcommand("validate", "Validate a curve config file");
  curves_validate->add_option("file", validate_path)->required();

  // bench
  std::string bn_curves = kDefaultCurves;
  std::size_t bn_t = 0;
  std::size_t bn_iters = 20;
  std::string bn_seed = "00";
  bool bn_kv = false;
  auto* bench_cmd = app.add_subcommand("bench", "Operation counts, signature lengths and timings");
  bench_cmd->add_option("--curves", bn_curves, "Comma-separated curve names")->capture_default_str();
  bench_cmd->add_option("--t", bn_t, "Number of curves (cycles through --curves; default: its length)")
      ->check(CLI::Range(1, 255));
  bench_cmd->add_option("--iters", bn_iters, "Iterations per cell")->check(CLI::PositiveNumber)->capture_default_str();
  bench_cmd->add_option("--seed", bn_seed, "Hex seed for keys, messages and nonces")->capture_default_str();
  bench_cmd->add_flag("--kv", bn_kv, "Also print the key-value report");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("mecdsa");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    ctx.load_curve_files();

    if (*keygen) {
      const MultiCurveConfig config = ctx.config_of(split_list(kg_curves));
      auto rng = make_rng(kg_seed);
      const MultiCurveKeypair kp = mkeygen(config, *rng);
      const KeyFile secret = KeyFile::secret_of(kp);
      write_file(kg_secret, secret.serialize(ctx.registry));
      write_file(kg_public, secret.public_part().serialize(ctx.registry));
      out << "generated t = " << config.size() << " key pair over " << join_list(config.names(), ' ') << "\n";
      return kOk;
    }

    if (*sign_cmd) {
      const KeyFile key = KeyFile::parse(read_file(sg_key), ctx.registry);
      if (!key.is_secret()) throw FormatError("'" + sg_key + "' is not a secret key file");
      const Bytes m = read_message(sg_message, in);
      const MultiCurveConfig config = ctx.config_of(key.curves);
      const MultiCurveKeypair kp{config, *key.private_scalars, key.public_points};
      std::unique_ptr<NonceSource> nonce;
      if (!sg_nonces.empty()) {
        std::vector<BigInt> list;
        for (const auto& h : split_list(sg_nonces)) list.push_back(from_hex(h));
        nonce = std::make_unique<FixedNonceSource>(std::move(list));
      } else {
        nonce = make_rng(sg_seed);
      }
      SignatureFile sf{Scheme::mecdsa, key.curves, std::nullopt, std::nullopt};
      if (sg_scheme == "t-ecdsa") {
        sf.scheme = Scheme::t_ecdsa;
        sf.t_ecdsa = t_ecdsa_sign(m, kp, *nonce);
      } else {
        sf.mecdsa = msign(m, kp, *nonce);
      }
      write_file(sg_out, sf.serialize());
      return kOk;
    }

    if (*verify_cmd) {
      const KeyFile key = KeyFile::parse(read_file(vf_public), ctx.registry);
      const SignatureFile sf = SignatureFile::parse(read_file(vf_signature));
      const Bytes m = read_message(vf_message, in);
      if (to_lower(join_list(sf.curves)) != to_lower(join_list(key.curves)))
        throw FormatError("signature curves (" + join_list(sf.curves) + ") do not match key curves (" +
                          join_list(key.curves) + ")");
      const MultiCurveConfig config = ctx.config_of(key.curves);
      const bool ok = sf.scheme == Scheme::mecdsa ? mverify(m, *sf.mecdsa, key.public_points, config)
                                                  : t_ecdsa_verify(m, *sf.t_ecdsa, key.public_points, config);
      out << (ok ? "VALID" : "INVALID") << "\n";
      return ok ? kOk : kInvalid;
    }

    if (*curves_list) {
      for (const auto& entry : ctx.registry.list())
        out << entry.name << "\t" << entry.order_bits << "-bit order\t" << entry.source << "\n";
      return kOk;
    }
    if (*curves_show) {
      print_curve(ctx.registry.get(show_name), ctx.registry, out);
      return kOk;
    }
    if (*curves_validate) {
      const CurveDefinition def = parse_curve_config(read_file(validate_path));
      const ValidationReport report = check_definition(def);
      out << def.name << " (" << (def.strict ? "strict" : "relaxed") << ")\n" << report.to_string();
      out << (report.ok() ? "VALID" : "INVALID") << "\n";
      return report.ok() ? kOk : kInvalid;
    }

    if (*bench_cmd) {
      const auto names = split_list(bn_curves);
      if (names.empty()) throw FormatError("--curves is empty");
      const std::size_t t = bn_t ? bn_t : names.size();
      std::vector<std::string> chosen;
      for (std::size_t i = 0; i < t; ++i) chosen.push_back(names[i % names.size()]);
      const MultiCurveConfig config = ctx.config_of(chosen);
      const BenchReport report = timing_bench(config, bn_iters, seed_bytes(bn_seed));
      out << report.table();
      if (bn_kv) out << report.key_values();
      const bool match = report.counts_match();
      if (!match) err << "operation counts differ from the predicted formulas\n";
      return match ? kOk : kInvalid;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kMalformed;
  }
  return kMalformed;
}

}  // namespace mecdsa::cli
