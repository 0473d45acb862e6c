#include "mecdsa/bigint.hpp"

#include "mecdsa/errors.hpp"

#include <cctype>

namespace mecdsa {

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string to_hex(const BigInt& v) {
  if (v < 0) throw DomainError("to_hex: negative value");
  return v.get_str(16);
}

std::string to_hex_fixed(const BigInt& v, std::size_t width) {
  std::string h = to_hex(v);
  if (v == 0) h.clear();
  if (h.size() > 2 * width) throw DomainError("to_hex_fixed: value wider than " + std::to_string(width) + " bytes");
  return std::string(2 * width - h.size(), '0') + h;
}

BigInt from_hex(std::string_view hex) {
  std::string digits;
  digits.reserve(hex.size());
  for (std::size_t i = 0; i < hex.size(); ++i) {
    char c = hex[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (hex_digit(c) < 0) throw FormatError(std::string("invalid hex character '") + c + "'", i);
    digits.push_back(c);
  }
  if (digits.empty()) throw FormatError("empty hex integer");
  return BigInt(digits, 16);
}

BigInt parse_decimal(std::string_view dec) {
  if (dec.empty()) throw FormatError("empty decimal integer");
  for (std::size_t i = 0; i < dec.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(dec[i])))
      throw FormatError("invalid decimal character", i);
  return BigInt(std::string(dec), 10);
}

Bytes to_bytes(const BigInt& v) {
  if (v < 0) throw DomainError("to_bytes: negative value");
  Bytes out(byte_length(v));
  if (!out.empty()) {
    std::size_t written = 0;
    mpz_export(out.data(), &written, 1, 1, 1, 0, v.get_mpz_t());
  }
  return out;
}

Bytes to_bytes_fixed(const BigInt& v, std::size_t width) {
  Bytes minimal = to_bytes(v);
  if (minimal.size() > width) throw DomainError("to_bytes_fixed: value wider than " + std::to_string(width) + " bytes");
  Bytes out(width - minimal.size(), 0);
  out.insert(out.end(), minimal.begin(), minimal.end());
  return out;
}

BigInt from_bytes(ByteView bytes) {
  BigInt v;
  if (!bytes.empty()) mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  return v;
}

std::string hex_of_bytes(ByteView bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

Bytes bytes_of_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw FormatError("odd-length hex string", hex.size());
  Bytes out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    int hi = hex_digit(hex[i]);
    int lo = hex_digit(hex[i + 1]);
    if (hi < 0 || lo < 0) throw FormatError("invalid hex character", hi < 0 ? i : i + 1);
    out.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
  }
  return out;
}

std::size_t bit_length(const BigInt& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

std::size_t byte_length(const BigInt& v) { return (bit_length(v) + 7) / 8; }

BigInt mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace mecdsa
