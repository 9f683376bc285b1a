#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "eah/alphabet.hpp"
#include "eah/bitstream.hpp"

namespace eah {

struct BaselineReport {
  std::string codec;
  std::uint64_t payload_bits = 0;
  std::uint64_t count = 0;  // symbols for Huffman, phrases for LZ78
};

/// Codeword-stream length of a static Huffman code over the symbol
/// frequencies of text (codebook not counted). Throws Error(argument) on
/// empty input.
std::uint64_t huffman_stream_length(std::string_view text);
BaselineReport huffman_report(std::string_view text);

/// How LZ78 (prefix, symbol) pairs are written.
enum class Lz78Accounting {
  /// Phrase k (1-based) is prefix * m + symbol in ceil(log2(k * m)) bits.
  variable_rate,
  /// Every phrase: ceil(log2(t + 1)) prefix bits + ceil(log2 m) symbol bits,
  /// t being the final phrase count.
  fixed_width,
};

struct Lz78Phrase {
  std::uint64_t prefix = 0;  // dictionary entry, 0 is the empty phrase
  std::size_t symbol = 0;    // alphabet index

  friend bool operator==(const Lz78Phrase&, const Lz78Phrase&) = default;
};

/// Greedy LZ78 parse: longest dictionary match plus one symbol. If the text
/// ends inside a known phrase s = s'c, the last phrase is (s', c).
std::vector<Lz78Phrase> lz78_parse(std::string_view text, const Alphabet& alphabet);

struct Lz78Encoding {
  BitString bits;
  std::uint64_t phrase_count = 0;
};

Lz78Encoding lz78_encode(std::string_view text, Lz78Accounting accounting = Lz78Accounting::variable_rate);
Lz78Encoding lz78_encode(std::string_view text, const Alphabet& alphabet,
                         Lz78Accounting accounting = Lz78Accounting::variable_rate);

/// Throws Error(corrupt_stream) on a reference to a phrase not yet defined,
/// Error(truncation) if bits run out, Error(trailing_garbage) on leftovers.
std::string lz78_decode(const BitString& bits, std::uint64_t phrase_count, const Alphabet& alphabet,
                        Lz78Accounting accounting = Lz78Accounting::variable_rate);

BaselineReport lz78_report(std::string_view text, Lz78Accounting accounting = Lz78Accounting::variable_rate);

}  // namespace eah
