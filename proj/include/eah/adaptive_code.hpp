#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eah/alphabet.hpp"
#include "eah/bitstream.hpp"

namespace eah {

/// Binary decoding trie for one context's code. Building it fails with
/// Error(argument) when the codewords do not form a prefix code.
class PrefixTrie {
 public:
  PrefixTrie() = default;
  explicit PrefixTrie(std::span<const std::pair<std::uint8_t, BitString>> code);

  /// Reads one codeword. Throws Error(corrupt_stream) on a path that leads
  /// nowhere and Error(truncation) if the input ends mid-codeword.
  std::uint8_t decode(BitReader& reader) const;

  bool empty() const noexcept { return nodes_.empty(); }

 private:
  struct Node {
    std::int32_t child[2] = {-1, -1};
    std::int16_t symbol = -1;
  };
  std::vector<Node> nodes_;
};

bool is_prefix_code(std::span<const BitString> codewords);

/// Explicit adaptive code of some order: one symbol -> codeword map per
/// context string of length 0..order. The empty context is "".
class CodeTable {
 public:
  using ContextCode = std::map<std::uint8_t, BitString>;

  CodeTable(Alphabet alphabet, std::size_t order);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t order() const noexcept { return order_; }

  /// Throws Error(argument) for contexts longer than the order or symbols
  /// outside the alphabet.
  void set(std::string_view context, std::uint8_t symbol, BitString codeword);

  /// Throws Error(table_incomplete) if the entry is missing.
  const BitString& codeword(std::uint8_t symbol, std::string_view context) const;
  const ContextCode* context(std::string_view context) const;
  const std::map<std::string, ContextCode, std::less<>>& contexts() const noexcept { return contexts_; }

  /// True when every context holds exactly one codeword per alphabet symbol
  /// and every context string of length <= order is present.
  bool is_complete() const;

 private:
  Alphabet alphabet_;
  std::size_t order_;
  std::map<std::string, ContextCode, std::less<>> contexts_;
};

/// Homomorphic extension: the codeword of each symbol in the context of the
/// previous min(t, order) symbols, concatenated.
BitString extend(const CodeTable& table, std::string_view text);

/// Called with (position, context) for each symbol as extend() encodes it.
using ContextTrace = std::vector<std::pair<std::size_t, std::string>>;
BitString extend(const CodeTable& table, std::string_view text, ContextTrace* trace);

/// Sufficient condition for the extension to be injective: every context's
/// codeword set is a prefix code.
bool validate_prefix_condition(const CodeTable& table);

/// Inverse of extend() for `count` symbols. Throws Error(corrupt_stream) for
/// an undecodable codeword, Error(table_incomplete) for a missing context,
/// Error(truncation) if bits run out and Error(trailing_garbage) if bits
/// are left over.
std::string decode_with_table(const CodeTable& table, const BitString& bits, std::size_t count);

}  // namespace eah
