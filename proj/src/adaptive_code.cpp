#include "eah/adaptive_code.hpp"

#include <algorithm>

#include "eah/error.hpp"

namespace eah {

PrefixTrie::PrefixTrie(std::span<const std::pair<std::uint8_t, BitString>> code) {
  nodes_.emplace_back();
  for (const auto& [symbol, bits] : code) {
    if (bits.empty()) throw Error(ErrorCode::argument, "empty codeword");
    std::size_t node = 0;
    for (std::size_t pos = 0; pos < bits.size(); ++pos) {
      if (nodes_[node].symbol >= 0) throw Error(ErrorCode::argument, "codewords are not a prefix code");
      const int bit = bits[pos] ? 1 : 0;
      if (nodes_[node].child[bit] < 0) {
        nodes_[node].child[bit] = static_cast<std::int32_t>(nodes_.size());
        nodes_.emplace_back();
      }
      node = static_cast<std::size_t>(nodes_[node].child[bit]);
    }
    const Node& leaf = nodes_[node];
    if (leaf.symbol >= 0 || leaf.child[0] >= 0 || leaf.child[1] >= 0) {
      throw Error(ErrorCode::argument, "codewords are not a prefix code");
    }
    nodes_[node].symbol = symbol;
  }
}

std::uint8_t PrefixTrie::decode(BitReader& reader) const {
  if (nodes_.empty()) throw Error(ErrorCode::corrupt_stream, "no code for this context");
  std::size_t node = 0;
  while (nodes_[node].symbol < 0) {
    const auto next = nodes_[node].child[reader.read_bit() ? 1 : 0];
    if (next < 0) throw Error(ErrorCode::corrupt_stream, "bits do not match any codeword");
    node = static_cast<std::size_t>(next);
  }
  return static_cast<std::uint8_t>(nodes_[node].symbol);
}

bool is_prefix_code(std::span<const BitString> codewords) {
  for (std::size_t a = 0; a < codewords.size(); ++a) {
    for (std::size_t b = 0; b < codewords.size(); ++b) {
      if (a == b) continue;
      const auto& shorter = codewords[a];
      const auto& longer = codewords[b];
      if (shorter.size() > longer.size()) continue;
      if (longer.slice(0, shorter.size()) == shorter) return false;
    }
  }
  return true;
}

CodeTable::CodeTable(Alphabet alphabet, std::size_t order)
    : alphabet_(std::move(alphabet)), order_(order) {
  if (order_ < 1) throw Error(ErrorCode::argument, "adaptive code order must be at least 1");
}

void CodeTable::set(std::string_view context, std::uint8_t symbol, BitString codeword) {
  if (context.size() > order_) throw Error(ErrorCode::argument, "context longer than the code order");
  for (char c : context) {
    if (!alphabet_.contains(static_cast<std::uint8_t>(c))) {
      throw Error(ErrorCode::argument, "context symbol outside the alphabet");
    }
  }
  if (!alphabet_.contains(symbol)) throw Error(ErrorCode::argument, "symbol outside the alphabet");
  auto it = contexts_.find(context);
  if (it == contexts_.end()) it = contexts_.emplace(std::string(context), ContextCode{}).first;
  it->second[symbol] = std::move(codeword);
}

const CodeTable::ContextCode* CodeTable::context(std::string_view context) const {
  auto it = contexts_.find(context);
  return it == contexts_.end() ? nullptr : &it->second;
}

const BitString& CodeTable::codeword(std::uint8_t symbol, std::string_view ctx) const {
  const ContextCode* code = context(ctx);
  if (code != nullptr) {
    auto it = code->find(symbol);
    if (it != code->end()) return it->second;
  }
  throw Error(ErrorCode::table_incomplete,
              "no codeword for symbol " + std::to_string(symbol) + " in context \"" + std::string(ctx) + "\"");
}

bool CodeTable::is_complete() const {
  const std::size_t m = alphabet_.size();
  std::size_t expected = 0;
  std::size_t level = 1;
  for (std::size_t len = 0; len <= order_; ++len) {
    expected += level;
    level *= m;
  }
  if (contexts_.size() != expected) return false;
  return std::all_of(contexts_.begin(), contexts_.end(),
                     [m](const auto& entry) { return entry.second.size() == m; });
}

BitString extend(const CodeTable& table, std::string_view text) { return extend(table, text, nullptr); }

BitString extend(const CodeTable& table, std::string_view text, ContextTrace* trace) {
  BitString out;
  for (std::size_t t = 0; t < text.size(); ++t) {
    const std::size_t ctx_len = std::min(t, table.order());
    const std::string_view ctx = text.substr(t - ctx_len, ctx_len);
    if (trace != nullptr) trace->emplace_back(t, std::string(ctx));
    out.append(table.codeword(static_cast<std::uint8_t>(text[t]), ctx));
  }
  return out;
}

bool validate_prefix_condition(const CodeTable& table) {
  for (const auto& [ctx, code] : table.contexts()) {
    std::vector<BitString> words;
    words.reserve(code.size());
    for (const auto& [symbol, bits] : code) {
      if (bits.empty()) return false;
      words.push_back(bits);
    }
    if (!is_prefix_code(words)) return false;
  }
  return true;
}

std::string decode_with_table(const CodeTable& table, const BitString& bits, std::size_t count) {
  std::map<std::string, PrefixTrie, std::less<>> tries;
  for (const auto& [ctx, code] : table.contexts()) {
    std::vector<std::pair<std::uint8_t, BitString>> entries(code.begin(), code.end());
    try {
      tries.emplace(ctx, PrefixTrie(entries));
    } catch (const Error&) {
      throw Error(ErrorCode::argument, "context \"" + ctx + "\" is not a prefix code");
    }
  }

  BitReader reader(bits);
  std::string out;
  out.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t ctx_len = std::min(t, table.order());
    const std::string_view ctx = std::string_view(out).substr(t - ctx_len, ctx_len);
    auto it = tries.find(ctx);
    if (it == tries.end()) {
      throw Error(ErrorCode::table_incomplete, "no code for context \"" + std::string(ctx) + "\"");
    }
    out.push_back(static_cast<char>(it->second.decode(reader)));
  }
  if (!reader.at_end()) {
    throw Error(ErrorCode::trailing_garbage,
                std::to_string(reader.remaining()) + " bits left after " + std::to_string(count) + " symbols");
  }
  return out;
}

}  // namespace eah
