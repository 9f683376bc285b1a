#include "eah/bitstream.hpp"

#include <algorithm>
#include <bit>

#include "eah/error.hpp"

namespace eah {

BitString BitString::from_string(std::string_view digits) {
  BitString out;
  out.bytes_.reserve((digits.size() + 7) / 8);
  for (char c : digits) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::argument, "bit string may only contain '0' and '1'");
    }
    out.push_back(c == '1');
  }
  return out;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_count) {
  if (bit_count > bytes.size() * 8) {
    throw Error(ErrorCode::truncation, "bit count exceeds the supplied bytes");
  }
  BitString out;
  out.bytes_.assign(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>((bit_count + 7) / 8));
  out.size_ = bit_count;
  if (bit_count % 8 != 0) {
    out.bytes_.back() &= static_cast<std::uint8_t>(0xFFu << (8 - bit_count % 8));
  }
  return out;
}

void BitString::push_back(bool bit) {
  if (size_ % 8 == 0) bytes_.push_back(0);
  if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (size_ % 8));
  ++size_;
}

void BitString::append_value(std::uint64_t value, unsigned width) {
  while (width > 0) {
    const unsigned used = size_ % 8;
    if (used == 0) bytes_.push_back(0);
    const unsigned room = 8 - used;
    const unsigned take = std::min(room, width);
    const auto chunk = static_cast<std::uint8_t>((value >> (width - take)) & ((1u << take) - 1));
    bytes_.back() |= static_cast<std::uint8_t>(chunk << (room - take));
    size_ += take;
    width -= take;
  }
}

void BitString::append_zeros(std::size_t count) {
  size_ += count;
  bytes_.resize((size_ + 7) / 8, 0);
}

void BitString::append(const BitString& other) {
  if (other.empty()) return;
  const unsigned shift = size_ % 8;
  if (shift == 0) {
    bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
    size_ += other.size_;
    return;
  }
  // Misaligned: split every source byte across the current tail and a new byte.
  const std::size_t new_size = size_ + other.size_;
  bytes_.reserve((new_size + 7) / 8);
  for (std::uint8_t b : other.bytes_) {
    bytes_.back() |= static_cast<std::uint8_t>(b >> shift);
    bytes_.push_back(static_cast<std::uint8_t>(b << (8 - shift)));
  }
  size_ = new_size;
  bytes_.resize((size_ + 7) / 8);
}

void BitString::set(std::size_t pos, bool bit) {
  if (pos >= size_) throw Error(ErrorCode::range, "bit position out of range");
  const auto mask = static_cast<std::uint8_t>(0x80u >> (pos & 7));
  if (bit) {
    bytes_[pos >> 3] |= mask;
  } else {
    bytes_[pos >> 3] &= static_cast<std::uint8_t>(~mask);
  }
}

BitString BitString::slice(std::size_t pos, std::size_t count) const {
  if (pos > size_ || count > size_ - pos) {
    throw Error(ErrorCode::range, "slice out of range");
  }
  BitReader reader(*this);
  reader.skip(pos);
  return reader.read_bits(count);
}

std::size_t BitString::count_ones() const noexcept {
  std::size_t total = 0;
  for (std::uint8_t b : bytes_) total += static_cast<std::size_t>(std::popcount(b));
  return total;
}

std::string BitString::to_string() const {
  std::string out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back((*this)[i] ? '1' : '0');
  return out;
}

BitString operator+(BitString lhs, const BitString& rhs) {
  lhs.append(rhs);
  return lhs;
}

BitReader::BitReader(std::span<const std::uint8_t> bytes, std::size_t bit_count)
    : bytes_(bytes), size_(bit_count) {
  if (bit_count > bytes.size() * 8) {
    throw Error(ErrorCode::truncation, "bit count exceeds the supplied bytes");
  }
}

void BitReader::require(std::size_t count) const {
  if (count > remaining()) {
    throw Error(ErrorCode::truncation, "read past end of bit stream");
  }
}

bool BitReader::read_bit() {
  require(1);
  const bool bit = (bytes_[pos_ >> 3] >> (7 - (pos_ & 7))) & 1u;
  ++pos_;
  return bit;
}

std::uint64_t BitReader::read_value(unsigned width) {
  if (width > 64) throw Error(ErrorCode::argument, "field wider than 64 bits");
  require(width);
  std::uint64_t value = 0;
  while (width > 0) {
    const unsigned used = pos_ % 8;
    const unsigned avail = 8 - used;
    const unsigned take = std::min(avail, width);
    const unsigned byte = bytes_[pos_ >> 3];
    const unsigned chunk = (byte >> (avail - take)) & ((1u << take) - 1);
    value = (value << take) | chunk;
    pos_ += take;
    width -= take;
  }
  return value;
}

BitString BitReader::read_bits(std::size_t count) {
  require(count);
  BitString out;
  if (pos_ % 8 == 0) {
    out = BitString::from_bytes(bytes_.subspan(pos_ / 8), count);
    pos_ += count;
    return out;
  }
  while (count >= 8) {
    out.append_value(read_value(8), 8);
    count -= 8;
  }
  out.append_value(read_value(static_cast<unsigned>(count)), static_cast<unsigned>(count));
  return out;
}

void BitReader::skip(std::size_t count) {
  require(count);
  pos_ += count;
}

std::vector<std::uint8_t> BitWriter::flush() const {
  auto bytes = bits_.bytes();
  return {bytes.begin(), bytes.end()};
}

unsigned binary_width(std::uint64_t value) noexcept {
  return value == 0 ? 1u : static_cast<unsigned>(std::bit_width(value));
}

unsigned ceil_log2(std::uint64_t x) noexcept {
  return x <= 1 ? 0u : static_cast<unsigned>(std::bit_width(x - 1));
}

BitString b10b2(std::uint64_t value) {
  BitString out;
  out.append_value(value, binary_width(value));
  return out;
}

DigitTuple b10(std::uint64_t value, std::uint32_t base, std::size_t width) {
  if (base < 1) throw Error(ErrorCode::argument, "base must be at least 1");
  DigitTuple out{std::vector<std::uint32_t>(width, 0), base};
  for (std::size_t i = width; i-- > 0;) {
    if (base == 1) break;
    out.digits[i] = static_cast<std::uint32_t>(value % base);
    value /= base;
  }
  if (value != 0) {
    throw Error(ErrorCode::range, "value does not fit in the requested number of digits");
  }
  return out;
}

BitString mb10b2(std::uint64_t value, unsigned max_width) {
  const unsigned width = binary_width(value);
  if (width > max_width) {
    throw Error(ErrorCode::width, "value needs " + std::to_string(width) + " bits, field has " +
                                      std::to_string(max_width));
  }
  BitString out;
  out.append_zeros(max_width - width);
  out.append_value(value, width);
  return out;
}

std::uint64_t parse_binary(const BitString& bits) {
  if (bits.size() > 64) throw Error(ErrorCode::range, "binary field wider than 64 bits");
  BitReader reader(bits);
  return reader.read_value(static_cast<unsigned>(bits.size()));
}

}  // namespace eah
