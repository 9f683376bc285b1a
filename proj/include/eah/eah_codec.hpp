#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eah/adaptive_code.hpp"
#include "eah/adaptive_graph.hpp"
#include "eah/alphabet.hpp"
#include "eah/bitstream.hpp"

namespace eah {

/// What the decoder must know besides the payload bits.
struct StreamHeader {
  std::size_t order = 1;
  Alphabet alphabet;
  std::uint64_t length = 0;  // h, symbols in the original text

  friend bool operator==(const StreamHeader&, const StreamHeader&) = default;
};

/// The five EAHn components plus the fixed field width of D.
///   a  verbatim indices of the first min(h, n) symbols
///   b  one bit per order-n context: does it occur followed by a symbol
///   c  per symbol i, per present context j: is j ever followed by symbol i
///   d  frequency of every marked (i, j) pair, max_width bits each
///   e  per-context Huffman codewords for symbols n+1..h
struct EahPayload {
  BitString a;
  BitString b;
  BitString c;
  BitString d;
  BitString e;
  unsigned max_width = 0;

  friend bool operator==(const EahPayload&, const EahPayload&) = default;
};

struct ComponentLengths {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t c = 0;
  std::uint64_t d = 0;
  std::uint64_t e = 0;

  std::uint64_t total() const noexcept { return a + b + c + d + e; }
  friend bool operator==(const ComponentLengths&, const ComponentLengths&) = default;
};

ComponentLengths component_lengths(const EahPayload& payload) noexcept;

struct Encoded {
  StreamHeader header;
  EahPayload payload;

  friend bool operator==(const Encoded&, const Encoded&) = default;
};

/// Largest context space (m^n bits of B) the codec will allocate.
inline constexpr std::uint64_t kMaxContextCount = std::uint64_t{1} << 32;

/// m^n. Throws Error(argument) above kMaxContextCount.
std::uint64_t context_count(std::size_t alphabet_size, std::size_t order);

/// Index of an order-n context: its symbol indices read as a base-m number.
std::uint64_t context_index(const Alphabet& alphabet, std::string_view context);

/// One successor of a context in coding order.
struct Successor {
  std::size_t symbol = 0;  // alphabet index
  std::uint64_t frequency = 0;
  BitString codeword;

  friend bool operator==(const Successor&, const Successor&) = default;
};

struct ContextModel {
  std::uint64_t index = 0;
  std::vector<Successor> successors;

  const Successor* find(std::size_t symbol) const noexcept;
  friend bool operator==(const ContextModel&, const ContextModel&) = default;
};

/// Per-context codes, contexts in ascending index order.
struct CodeModel {
  std::vector<ContextModel> contexts;

  const ContextModel* find(std::uint64_t index) const noexcept;
  friend bool operator==(const CodeModel&, const CodeModel&) = default;
};

/// Reads the model off a graph whose codewords have been assigned.
CodeModel model_from_graph(const AdaptiveGraph& graph);

/// Rebuilds the model from B, C and D alone, recomputing the codewords.
/// Throws Error(corrupt_header) when the bitmaps and frequencies disagree.
CodeModel model_from_payload(const StreamHeader& header, const EahPayload& payload);

/// The model as an explicit adaptive code (length-n contexts only).
CodeTable to_code_table(const CodeModel& model, const StreamHeader& header);

/// Throws Error(argument) for empty text or order 0.
Encoded encode(std::string_view text, std::size_t order);

/// Inverse of encode. Never sees the original text.
std::string decode(const EahPayload& payload, const StreamHeader& header);

/// Container layout:
///   "EAH1" | version (1) | order (1) | m-1 (1) | alphabet (m) |
///   h (8, little endian) | max_width (1) | A B C D E packed MSB first
inline constexpr std::uint8_t kContainerVersion = 1;

std::vector<std::uint8_t> serialize(const Encoded& encoded);
/// Throws Error(bad_magic), Error(unsupported_version), Error(truncation),
/// Error(corrupt_header), Error(corrupt_stream) or Error(trailing_garbage).
Encoded deserialize(std::span<const std::uint8_t> bytes);

/// |A| + |B| + |C| + |D| + |E| for encode(text, order).
std::uint64_t leahn_length(std::string_view text, std::size_t order);

}  // namespace eah
