#include "eah/alphabet.hpp"

#include "eah/bitstream.hpp"
#include "eah/error.hpp"

namespace eah {

Alphabet::Alphabet(std::vector<std::uint8_t> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw Error(ErrorCode::argument, "alphabet must not be empty");
  index_.fill(-1);
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    auto& slot = index_[symbols_[i]];
    if (slot >= 0) throw Error(ErrorCode::argument, "alphabet symbols must be distinct");
    slot = static_cast<std::int16_t>(i);
  }
}

Alphabet Alphabet::of(std::string_view text) {
  std::array<bool, 256> seen{};
  for (char c : text) seen[static_cast<std::uint8_t>(c)] = true;
  std::vector<std::uint8_t> symbols;
  for (unsigned b = 0; b < 256; ++b) {
    if (seen[b]) symbols.push_back(static_cast<std::uint8_t>(b));
  }
  return Alphabet(std::move(symbols));
}

std::size_t Alphabet::index(std::uint8_t symbol) const {
  const auto idx = index_[symbol];
  if (idx < 0) throw Error(ErrorCode::lookup, "symbol " + std::to_string(symbol) + " not in alphabet");
  return static_cast<std::size_t>(idx);
}

unsigned Alphabet::index_width() const noexcept { return ceil_log2(symbols_.size()); }

}  // namespace eah
