#include "mecdsa/bench.hpp"

#include "mecdsa/errors.hpp"
#include "mecdsa/kvdoc.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace mecdsa {

std::string to_string(Phase p) { return p == Phase::sign ? "sign" : "verify"; }

OpCounts predicted_counts(Scheme scheme, Phase phase, std::size_t t) {
  if (t == 0) throw DomainError("predicted_counts: t must be at least 1");
  const std::uint64_t n = t;
  if (scheme == Scheme::t_ecdsa) {
    if (phase == Phase::sign) return OpCounts{n, 2 * n, n, 0, n};
    return OpCounts{0, 2 * n, n, n, 2 * n};
  }
  if (phase == Phase::sign) return OpCounts{2 * n - 1, 2 * n, n, 0, n};
  return OpCounts{n - 1, 2 * n, n, n, 2 * n};
}

CountMeasurement measure_counts(Scheme scheme, Phase phase, const MultiCurveKeypair& kp, ByteView m,
                                std::vector<BigInt> nonces) {
  const std::size_t t = kp.config.size();
  CountMeasurement out;
  out.predicted = predicted_counts(scheme, phase, t);
  FixedNonceSource source(std::move(nonces));
  Probe sign_probe;
  Probe verify_probe;
  if (scheme == Scheme::mecdsa) {
    const MultiSignature sig = msign(m, kp, source, &sign_probe);
    out.verified = mverify(m, sig, kp.Q, kp.config, &verify_probe);
  } else {
    const TEcdsaSignature sig = t_ecdsa_sign(m, kp, source, &sign_probe);
    out.verified = t_ecdsa_verify(m, sig, kp.Q, kp.config, &verify_probe);
  }
  out.retries = sign_probe.retries;
  out.counted = phase == Phase::sign ? sign_probe.counts : verify_probe.counts;
  return out;
}

LengthReport length_formulas(const MultiCurveConfig& config) {
  LengthReport rep;
  rep.t = config.size();
  std::size_t max_l = 0;
  std::size_t sum_l = 0;
  for (const auto& c : config.curves()) {
    const std::size_t l = bit_length(c.order);
    max_l = std::max(max_l, l);
    sum_l += l;
  }
  std::size_t ceil_log2_t = 0;
  while ((std::size_t{1} << ceil_log2_t) < rep.t) ++ceil_log2_t;
  rep.mecdsa_formula_bits = max_l + rep.t - 1 + sum_l;
  rep.mecdsa_tight_bits = max_l + ceil_log2_t + sum_l;
  rep.t_ecdsa_formula_bits = 2 * sum_l;
  return rep;
}

namespace {

Bytes random_message(NonceSource& rng) {
  BigInt bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 2, 256);
  return to_bytes_fixed(rng.next(bound), 32);
}

class LengthAccumulator {
 public:
  explicit LengthAccumulator(const MultiCurveConfig& config) : rep_(length_formulas(config)) {}

  void add(const MultiSignature& ms, const TEcdsaSignature& ts) {
    const std::size_t mbits = scalar_payload_bits(ms);
    const std::size_t tbits = scalar_payload_bits(ts);
    const std::size_t encoded = encode_multisig(ms).size();
    // Framing bytes plus at most 7 bits of byte-alignment per scalar.
    const std::size_t encoded_bound =
        rep_.mecdsa_formula_bits + 8 * multisig_header_bytes(rep_.t) + 7 * (rep_.t + 1);
    rep_.within_bounds = rep_.within_bounds && mbits <= rep_.mecdsa_formula_bits &&
                         tbits <= rep_.t_ecdsa_formula_bits && 8 * encoded <= encoded_bound;
    mecdsa_total_ += mbits;
    t_ecdsa_total_ += tbits;
    rep_.mecdsa_measured_max = std::max(rep_.mecdsa_measured_max, mbits);
    rep_.t_ecdsa_measured_max = std::max(rep_.t_ecdsa_measured_max, tbits);
    rep_.mecdsa_encoded_bytes_max = std::max(rep_.mecdsa_encoded_bytes_max, encoded);
    ++rep_.samples;
  }

  LengthReport finish() const {
    LengthReport rep = rep_;
    if (rep.samples) {
      rep.mecdsa_measured_mean = static_cast<double>(mecdsa_total_) / static_cast<double>(rep.samples);
      rep.t_ecdsa_measured_mean = static_cast<double>(t_ecdsa_total_) / static_cast<double>(rep.samples);
    }
    return rep;
  }

 private:
  LengthReport rep_;
  std::size_t mecdsa_total_ = 0;
  std::size_t t_ecdsa_total_ = 0;
};

TimingStats summarize(std::vector<double> samples_us) {
  TimingStats st;
  st.iterations = samples_us.size();
  if (samples_us.empty()) return st;
  st.mean_us = std::accumulate(samples_us.begin(), samples_us.end(), 0.0) / static_cast<double>(samples_us.size());
  std::sort(samples_us.begin(), samples_us.end());
  const std::size_t mid = samples_us.size() / 2;
  st.median_us = samples_us.size() % 2 ? samples_us[mid] : (samples_us[mid - 1] + samples_us[mid]) / 2;
  return st;
}

template <typename F>
double time_us(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::micro>(stop - start).count();
}

std::string row_label(Scheme s) { return s == Scheme::mecdsa ? "MECDSA" : "t-ECDSA"; }
std::string phase_label(Phase p) { return p == Phase::sign ? "Sig. Gen." : "Sig. Ver."; }

}  // namespace

LengthReport signature_length_report(const MultiCurveConfig& config, std::size_t samples, NonceSource& rng) {
  LengthAccumulator acc(config);
  const MultiCurveKeypair kp = mkeygen(config, rng);
  for (std::size_t i = 0; i < samples; ++i) {
    const Bytes m = random_message(rng);
    acc.add(msign(m, kp, rng), t_ecdsa_sign(m, kp, rng));
  }
  return acc.finish();
}

BenchReport timing_bench(const MultiCurveConfig& config, std::size_t iterations, Bytes seed) {
  if (iterations == 0) throw DomainError("timing_bench: iterations must be at least 1");
  SeededNonceSource rng(std::move(seed));
  const MultiCurveKeypair kp = mkeygen(config, rng);
  const std::size_t t = config.size();

  struct Cell {
    Scheme scheme;
    Phase phase;
    std::vector<double> times;
    OpCounts first;
    bool stable = true;
    bool retried = false;
    bool seen = false;
    void record(const Probe& probe, double us) {
      times.push_back(us);
      if (!seen) first = probe.counts;
      stable = stable && probe.counts == first;
      retried = retried || probe.retries > 0;
      seen = true;
    }
  };
  Cell cells[4] = {{Scheme::mecdsa, Phase::sign, {}, {}},
                   {Scheme::mecdsa, Phase::verify, {}, {}},
                   {Scheme::t_ecdsa, Phase::sign, {}, {}},
                   {Scheme::t_ecdsa, Phase::verify, {}, {}}};

  LengthAccumulator lengths(config);
  bool all_verified = true;
  for (std::size_t it = 0; it < iterations; ++it) {
    const Bytes m = random_message(rng);
    Probe p;
    MultiSignature ms;
    cells[0].record(p, time_us([&] { ms = msign(m, kp, rng, &p); }));
    cells[0].retried = cells[0].retried || p.retries > 0;
    Probe pv;
    bool ok = false;
    cells[1].record(pv, time_us([&] { ok = mverify(m, ms, kp.Q, kp.config, &pv); }));
    all_verified = all_verified && ok;

    Probe q;
    TEcdsaSignature ts;
    cells[2].record(q, time_us([&] { ts = t_ecdsa_sign(m, kp, rng, &q); }));
    Probe qv;
    cells[3].record(qv, time_us([&] { ok = t_ecdsa_verify(m, ts, kp.Q, kp.config, &qv); }));
    all_verified = all_verified && ok;

    lengths.add(ms, ts);
  }
  if (!all_verified) throw Error("timing_bench: a freshly produced signature failed to verify");

  BenchReport report;
  report.curves = config.names();
  report.lengths = lengths.finish();
  for (Cell& cell : cells) {
    CostReport row{};
    row.scheme = cell.scheme;
    row.phase = cell.phase;
    row.t = t;
    row.counted = cell.first;
    row.predicted = predicted_counts(cell.scheme, cell.phase, t);
    row.retried = cell.retried;
    row.counts_stable = cell.stable;
    if (cell.scheme == Scheme::mecdsa) {
      row.sig_bits_measured = report.lengths.mecdsa_measured_max;
      row.sig_bits_formula = report.lengths.mecdsa_formula_bits;
      row.sig_bits_tight = report.lengths.mecdsa_tight_bits;
    } else {
      row.sig_bits_measured = report.lengths.t_ecdsa_measured_max;
      row.sig_bits_formula = report.lengths.t_ecdsa_formula_bits;
      row.sig_bits_tight = report.lengths.t_ecdsa_formula_bits;
    }
    row.wall_time = summarize(std::move(cell.times));
    report.rows.push_back(row);
  }
  return report;
}

bool BenchReport::counts_match() const {
  for (const auto& row : rows)
    if (!row.retried && (!row.counts_match() || !row.counts_stable)) return false;
  return !rows.empty();
}

std::string BenchReport::table() const {
  std::ostringstream out;
  const std::size_t t = rows.empty() ? 0 : rows.front().t;
  out << "Efficiency comparison, t = " << t << " (curves: " << join_list(curves, ' ') << ")\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-8s %-10s %6s %6s %6s %6s %6s  %-8s %10s %10s %12s %12s\n", "Method",
                "Process", "FqAdd", "FqMul", "FqInv", "ECAdd", "ECMul", "match", "sig bits", "formula",
                "median us", "mean us");
  out << line;
  for (const auto& row : rows) {
    const OpCounts& c = row.counted;
    const char* match = row.retried ? "retry" : row.counts_match() && row.counts_stable ? "yes" : "NO";
    std::snprintf(line, sizeof line, "%-8s %-10s %6llu %6llu %6llu %6llu %6llu  %-8s %10zu %10zu %12.1f %12.1f\n",
                  row_label(row.scheme).c_str(), phase_label(row.phase).c_str(),
                  static_cast<unsigned long long>(c.field_add), static_cast<unsigned long long>(c.field_mul),
                  static_cast<unsigned long long>(c.field_inv), static_cast<unsigned long long>(c.ec_add),
                  static_cast<unsigned long long>(c.ec_mul), match, row.sig_bits_measured, row.sig_bits_formula,
                  row.wall_time.median_us, row.wall_time.mean_us);
    out << line;
  }
  std::snprintf(line, sizeof line,
                "Signature length: MECDSA formula %zu bits (tight %zu), t-ECDSA %zu bits, ratio %.4f; "
                "measured max %zu vs %zu over %zu samples\n",
                lengths.mecdsa_formula_bits, lengths.mecdsa_tight_bits, lengths.t_ecdsa_formula_bits,
                lengths.t_ecdsa_formula_bits ? lengths.formula_ratio() : 0.0, lengths.mecdsa_measured_max,
                lengths.t_ecdsa_measured_max, lengths.samples);
  out << line;
  return out.str();
}

std::string BenchReport::key_values() const {
  KvDocument doc;
  doc.set("curves", join_list(curves));
  doc.set("t", std::to_string(rows.empty() ? 0 : rows.front().t));
  for (const auto& row : rows) {
    const std::string prefix = to_string(row.scheme) + "." + to_string(row.phase) + ".";
    doc.set(prefix + "counted", row.counted.to_string());
    doc.set(prefix + "predicted", row.predicted.to_string());
    doc.set(prefix + "match", row.counts_match() && row.counts_stable ? "true" : "false");
    doc.set(prefix + "retried", row.retried ? "true" : "false");
    doc.set(prefix + "median_us", std::to_string(row.wall_time.median_us));
    doc.set(prefix + "mean_us", std::to_string(row.wall_time.mean_us));
  }
  doc.set("length.mecdsa.formula_bits", std::to_string(lengths.mecdsa_formula_bits));
  doc.set("length.mecdsa.tight_bits", std::to_string(lengths.mecdsa_tight_bits));
  doc.set("length.mecdsa.measured_max_bits", std::to_string(lengths.mecdsa_measured_max));
  doc.set("length.mecdsa.measured_mean_bits", std::to_string(lengths.mecdsa_measured_mean));
  doc.set("length.t-ecdsa.formula_bits", std::to_string(lengths.t_ecdsa_formula_bits));
  doc.set("length.t-ecdsa.measured_max_bits", std::to_string(lengths.t_ecdsa_measured_max));
  doc.set("length.t-ecdsa.measured_mean_bits", std::to_string(lengths.t_ecdsa_measured_mean));
  doc.set("length.samples", std::to_string(lengths.samples));
  doc.set("length.within_bounds", lengths.within_bounds ? "true" : "false");
  doc.set("counts_match", counts_match() ? "true" : "false");
  return doc.serialize();
}

}  // namespace mecdsa
