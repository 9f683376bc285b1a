#include "eah/baselines.hpp"

#include <unordered_map>

#include "eah/error.hpp"
#include "eah/tuple_huffman.hpp"

namespace eah {

std::uint64_t huffman_stream_length(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::argument, "huffman baseline needs non-empty input");
  const Alphabet alphabet = Alphabet::of(text);
  std::vector<std::uint64_t> counts(alphabet.size(), 0);
  for (char c : text) ++counts[alphabet.index(static_cast<std::uint8_t>(c))];
  return weighted_length(counts, huffman(counts));
}

BaselineReport huffman_report(std::string_view text) {
  return {"huffman", huffman_stream_length(text), text.size()};
}

std::vector<Lz78Phrase> lz78_parse(std::string_view text, const Alphabet& alphabet) {
  const std::uint64_t m = alphabet.size();
  std::unordered_map<std::uint64_t, std::uint64_t> children;  // node * m + symbol -> node
  std::vector<Lz78Phrase> entries{{0, 0}};                     // entry 0 is the empty phrase
  std::vector<Lz78Phrase> phrases;

  std::uint64_t node = 0;
  for (char c : text) {
    const std::size_t symbol = alphabet.index(static_cast<std::uint8_t>(c));
    auto it = children.find(node * m + symbol);
    if (it != children.end()) {
      node = it->second;
      continue;
    }
    phrases.push_back({node, symbol});
    children.emplace(node * m + symbol, entries.size());
    entries.push_back({node, symbol});
    node = 0;
  }
  if (node != 0) phrases.push_back(entries[node]);
  return phrases;
}

Lz78Encoding lz78_encode(std::string_view text, Lz78Accounting accounting) {
  if (text.empty()) throw Error(ErrorCode::argument, "LZ78 baseline needs non-empty input");
  return lz78_encode(text, Alphabet::of(text), accounting);
}

Lz78Encoding lz78_encode(std::string_view text, const Alphabet& alphabet, Lz78Accounting accounting) {
  const auto phrases = lz78_parse(text, alphabet);
  const std::uint64_t m = alphabet.size();
  const std::uint64_t t = phrases.size();
  Lz78Encoding out;
  out.phrase_count = t;
  for (std::uint64_t k = 1; k <= t; ++k) {
    const auto& phrase = phrases[k - 1];
    if (accounting == Lz78Accounting::variable_rate) {
      out.bits.append_value(phrase.prefix * m + phrase.symbol, ceil_log2(k * m));
    } else {
      out.bits.append_value(phrase.prefix, ceil_log2(t + 1));
      out.bits.append_value(phrase.symbol, alphabet.index_width());
    }
  }
  return out;
}

std::string lz78_decode(const BitString& bits, std::uint64_t phrase_count, const Alphabet& alphabet,
                        Lz78Accounting accounting) {
  const std::uint64_t m = alphabet.size();
  std::vector<std::string> dictionary{""};
  BitReader reader(bits);
  std::string out;
  for (std::uint64_t k = 1; k <= phrase_count; ++k) {
    std::uint64_t prefix = 0;
    std::uint64_t symbol = 0;
    if (accounting == Lz78Accounting::variable_rate) {
      const std::uint64_t value = reader.read_value(ceil_log2(k * m));
      prefix = value / m;
      symbol = value % m;
    } else {
      prefix = reader.read_value(ceil_log2(phrase_count + 1));
      symbol = reader.read_value(alphabet.index_width());
      if (symbol >= m) throw Error(ErrorCode::corrupt_stream, "symbol index beyond the alphabet");
    }
    if (prefix >= dictionary.size()) {
      throw Error(ErrorCode::corrupt_stream, "phrase " + std::to_string(k) + " refers to undefined entry " +
                                                 std::to_string(prefix));
    }
    std::string phrase = dictionary[prefix];
    phrase.push_back(static_cast<char>(alphabet.symbol(static_cast<std::size_t>(symbol))));
    out += phrase;
    dictionary.push_back(std::move(phrase));
  }
  if (!reader.at_end()) throw Error(ErrorCode::trailing_garbage, "bits left after the last phrase");
  return out;
}

BaselineReport lz78_report(std::string_view text, Lz78Accounting accounting) {
  const auto encoded = lz78_encode(text, accounting);
  return {accounting == Lz78Accounting::variable_rate ? "lz78" : "lz78-fixed", encoded.bits.size(),
          encoded.phrase_count};
}

}  // namespace eah
