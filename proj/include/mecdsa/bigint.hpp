#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace mecdsa {

using BigInt = mpz_class;
using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

/// Lowercase big-endian hex without a radix prefix; zero is "0".
std::string to_hex(const BigInt& v);

/// Lowercase hex left-padded with zeros to exactly 2 * width characters.
/// Throws DomainError if the value does not fit.
std::string to_hex_fixed(const BigInt& v, std::size_t width);

/// Parses big-endian hex. Either case is accepted, as is embedded
/// whitespace (so grouped constants can be pasted verbatim); a "0x"
/// prefix or any other character is a FormatError.
BigInt from_hex(std::string_view hex);

BigInt parse_decimal(std::string_view dec);

/// Minimal big-endian bytes; zero encodes as the empty string.
Bytes to_bytes(const BigInt& v);
Bytes to_bytes_fixed(const BigInt& v, std::size_t width);
BigInt from_bytes(ByteView bytes);

std::string hex_of_bytes(ByteView bytes);
Bytes bytes_of_hex(std::string_view hex);

/// Number of significant bits; 0 for zero.
std::size_t bit_length(const BigInt& v);
std::size_t byte_length(const BigInt& v);

/// Least non-negative residue of a modulo m (m > 0).
BigInt mod(const BigInt& a, const BigInt& m);

}  // namespace mecdsa
