#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace eah {

/// Ordered set of distinct byte symbols. Position in the set is the symbol's
/// index; index order is what every encoder/decoder scan iterates over.
class Alphabet {
 public:
  /// Throws Error(argument) on an empty list or a repeated symbol.
  explicit Alphabet(std::vector<std::uint8_t> symbols);

  /// Distinct bytes of text in ascending value order.
  static Alphabet of(std::string_view text);

  std::size_t size() const noexcept { return symbols_.size(); }
  std::uint8_t symbol(std::size_t index) const { return symbols_.at(index); }
  std::span<const std::uint8_t> symbols() const noexcept { return symbols_; }

  bool contains(std::uint8_t symbol) const noexcept { return index_[symbol] >= 0; }
  /// Throws Error(lookup) for symbols outside the alphabet.
  std::size_t index(std::uint8_t symbol) const;

  /// ceil(log2 m): bits per verbatim symbol index.
  unsigned index_width() const noexcept;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

 private:
  std::vector<std::uint8_t> symbols_;
  std::array<std::int16_t, 256> index_{};
};

}  // namespace eah
