#include "mecdsa/nonce.hpp"

#include "mecdsa/errors.hpp"

#include <openssl/evp.h>
#include <openssl/rand.h>

#include <memory>

namespace mecdsa {

std::array<std::uint8_t, 32> sha256(ByteView m) {
  std::array<std::uint8_t, 32> digest{};
  unsigned int len = 0;
  if (EVP_Digest(m.data(), m.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1 || len != digest.size())
    throw Error("SHA-256 computation failed");
  return digest;
}

BigInt hash_to_int(ByteView m) {
  const auto digest = sha256(m);
  return from_bytes(digest);
}

BigInt StreamNonceSource::next(const BigInt& n) {
  if (n < 2) throw DomainError("nonce range [1, n - 1] is empty");
  const std::size_t bits = bit_length(BigInt(n - 1));
  const std::size_t bytes = (bits + 7) / 8;
  const unsigned excess = static_cast<unsigned>(bytes * 8 - bits);
  Bytes buf(bytes);
  while (true) {
    fill(buf);
    buf[0] &= static_cast<std::uint8_t>(0xff >> excess);
    BigInt k = from_bytes(buf);
    if (k >= 1 && k < n) return k;
  }
}

void SystemNonceSource::fill(std::span<std::uint8_t> out) {
  if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) throw Error("RAND_bytes failed");
}

SeededNonceSource::SeededNonceSource(Bytes seed) : seed_(std::move(seed)) {}

SeededNonceSource::SeededNonceSource(std::uint64_t seed) {
  for (int i = 7; i >= 0; --i) seed_.push_back(static_cast<std::uint8_t>(seed >> (8 * i)));
}

void SeededNonceSource::fill(std::span<std::uint8_t> out) {
  for (auto& byte : out) {
    if (used_ == block_.size()) {
      Bytes input = seed_;
      for (int i = 7; i >= 0; --i) input.push_back(static_cast<std::uint8_t>(counter_ >> (8 * i)));
      ++counter_;
      block_ = sha256(input);
      used_ = 0;
    }
    byte = block_[used_++];
  }
}

BigInt FixedNonceSource::next(const BigInt& n) {
  if (next_ >= nonces_.size())
    throw NonceExhaustedError("test nonce list exhausted after " + std::to_string(nonces_.size()) + " draws");
  const BigInt& k = nonces_[next_];
  if (k < 1 || k >= n)
    throw DomainError("test nonce #" + std::to_string(next_) + " = " + to_hex(k) + " is outside [1, n - 1]");
  ++next_;
  return k;
}

}  // namespace mecdsa
