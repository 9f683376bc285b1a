#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eah {

/// Immutable-by-convention sequence of bits, packed most-significant-bit
/// first. Bits past size() in the last byte are always zero, so two
/// BitStrings compare equal iff they hold the same digits.
class BitString {
 public:
  BitString() = default;

  /// Parses a string of '0'/'1' characters. Throws Error(argument) otherwise.
  static BitString from_string(std::string_view digits);
  static BitString from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_count);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  bool operator[](std::size_t pos) const noexcept {
    return (bytes_[pos >> 3] >> (7 - (pos & 7))) & 1u;
  }

  void push_back(bool bit);
  /// Appends the low `width` bits of value, most significant first (width <= 64).
  void append_value(std::uint64_t value, unsigned width);
  void append_zeros(std::size_t count);
  void append(const BitString& other);
  void set(std::size_t pos, bool bit = true);

  BitString slice(std::size_t pos, std::size_t count) const;
  std::size_t count_ones() const noexcept;

  /// Packed representation; the final partial byte is zero padded.
  std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }
  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t size_ = 0;
};

BitString operator+(BitString lhs, const BitString& rhs);

/// Sequential reader over packed MSB-first bits. Does not own the storage.
class BitReader {
 public:
  explicit BitReader(const BitString& bits) : BitReader(bits.bytes(), bits.size()) {}
  BitReader(std::span<const std::uint8_t> bytes, std::size_t bit_count);

  bool read_bit();
  std::uint64_t read_value(unsigned width);
  BitString read_bits(std::size_t count);
  void skip(std::size_t count);

  std::size_t position() const noexcept { return pos_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t remaining() const noexcept { return size_ - pos_; }
  bool at_end() const noexcept { return pos_ == size_; }

 private:
  void require(std::size_t count) const;

  std::span<const std::uint8_t> bytes_;
  std::size_t size_;
  std::size_t pos_ = 0;
};

/// Accumulates bits and hands out the zero-padded byte image on flush().
class BitWriter {
 public:
  void write(const BitString& bits) { bits_.append(bits); }
  void write_value(std::uint64_t value, unsigned width) { bits_.append_value(value, width); }
  void write_bit(bool bit) { bits_.push_back(bit); }

  std::size_t size() const noexcept { return bits_.size(); }
  const BitString& bits() const noexcept { return bits_; }
  std::vector<std::uint8_t> flush() const;

 private:
  BitString bits_;
};

/// Fixed-width base-m digit tuple, most significant digit first.
struct DigitTuple {
  std::vector<std::uint32_t> digits;
  std::uint32_t base = 2;

  std::size_t width() const noexcept { return digits.size(); }
  friend bool operator==(const DigitTuple&, const DigitTuple&) = default;
};

/// Minimal binary form of value; 0 maps to the single bit "0".
BitString b10b2(std::uint64_t value);

/// Base-m expansion of value on exactly `width` digits. Throws Error(range)
/// when value >= base^width.
DigitTuple b10(std::uint64_t value, std::uint32_t base, std::size_t width);

/// b10b2(value) left-padded to max_width bits. Throws Error(width) if it
/// does not fit.
BitString mb10b2(std::uint64_t value, unsigned max_width);

/// Inverse of b10b2 (also accepts leading zeros). At most 64 digits.
std::uint64_t parse_binary(const BitString& bits);

/// Number of bits in b10b2(value).
unsigned binary_width(std::uint64_t value) noexcept;

/// ceil(log2(x)) for x >= 1; 0 for x <= 1.
unsigned ceil_log2(std::uint64_t x) noexcept;

}  // namespace eah
