#include "eah/eah_codec.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "eah/error.hpp"
#include "eah/tuple_huffman.hpp"

namespace eah {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'E', 'A', 'H', '1'};

std::uint64_t first_symbols_bits(const StreamHeader& header) {
  return std::min<std::uint64_t>(header.length, header.order) * header.alphabet.index_width();
}

// Positions of the set bits of a bitmap, ascending.
std::vector<std::uint64_t> set_positions(const BitString& bits) {
  std::vector<std::uint64_t> out;
  const auto bytes = bits.bytes();
  for (std::size_t k = 0; k < bytes.size(); ++k) {
    if (bytes[k] == 0) continue;
    for (unsigned bit = 0; bit < 8; ++bit) {
      if ((bytes[k] >> (7 - bit)) & 1u) out.push_back(k * 8 + bit);
    }
  }
  return out;
}

// Order-1 contexts list their self successor (the aux edge) last.
void put_in_coding_order(std::vector<Successor>& successors, std::size_t order, std::uint64_t context) {
  std::ranges::sort(successors, {}, [&](const Successor& s) {
    const bool self = order == 1 && s.symbol == context;
    return std::pair{self, s.symbol};
  });
}

void assign_huffman(ContextModel& context) {
  std::vector<std::uint64_t> frequencies;
  frequencies.reserve(context.successors.size());
  for (const auto& s : context.successors) frequencies.push_back(s.frequency);
  const auto code = huffman(frequencies);
  for (std::size_t q = 0; q < code.size(); ++q) context.successors[q].codeword = code[q].bits;
}

std::string read_first_symbols(const StreamHeader& header, BitReader& reader) {
  const auto& alphabet = header.alphabet;
  const std::size_t count = static_cast<std::size_t>(std::min<std::uint64_t>(header.length, header.order));
  std::string out;
  out.reserve(count);
  for (std::size_t q = 0; q < count; ++q) {
    const auto idx = reader.read_value(alphabet.index_width());
    if (idx >= alphabet.size()) throw Error(ErrorCode::corrupt_header, "symbol index beyond the alphabet");
    out.push_back(static_cast<char>(alphabet.symbol(static_cast<std::size_t>(idx))));
  }
  return out;
}

// Decodes symbols n+1..h from reader, appending to text (which holds the
// first n symbols). Also checks the decoded transition counts against D.
void decode_symbols(const CodeModel& model, const StreamHeader& header, std::string& text, BitReader& reader) {
  const auto& alphabet = header.alphabet;
  const std::uint64_t m = alphabet.size();
  const std::uint64_t space = context_count(alphabet.size(), header.order);

  std::vector<PrefixTrie> tries;
  std::vector<std::vector<std::uint64_t>> seen;
  tries.reserve(model.contexts.size());
  for (const auto& ctx : model.contexts) {
    std::vector<std::pair<std::uint8_t, BitString>> entries;
    for (const auto& s : ctx.successors) entries.emplace_back(static_cast<std::uint8_t>(s.symbol), s.codeword);
    tries.emplace_back(entries);
    seen.emplace_back(ctx.successors.size(), 0);
  }

  std::uint64_t ctx = context_index(alphabet, text);
  for (std::uint64_t t = header.order; t < header.length; ++t) {
    const auto it = std::ranges::lower_bound(model.contexts, ctx, {}, &ContextModel::index);
    if (it == model.contexts.end() || it->index != ctx) {
      throw Error(ErrorCode::corrupt_stream, "reached a context absent from the context bitmap");
    }
    const auto slot = static_cast<std::size_t>(it - model.contexts.begin());
    const std::uint8_t symbol = tries[slot].decode(reader);
    for (std::size_t q = 0; q < it->successors.size(); ++q) {
      if (it->successors[q].symbol == symbol) ++seen[slot][q];
    }
    text.push_back(static_cast<char>(alphabet.symbol(symbol)));
    ctx = (ctx * m + symbol) % space;
  }

  for (std::size_t slot = 0; slot < model.contexts.size(); ++slot) {
    const auto& successors = model.contexts[slot].successors;
    for (std::size_t q = 0; q < successors.size(); ++q) {
      if (seen[slot][q] != successors[q].frequency) {
        throw Error(ErrorCode::corrupt_stream, "decoded symbol counts disagree with the frequency table");
      }
    }
  }
}

void check_header(const StreamHeader& header) {
  if (header.order < 1) throw Error(ErrorCode::corrupt_header, "order must be at least 1");
  if (header.length < 1) throw Error(ErrorCode::corrupt_header, "stream length must be at least 1");
}

}  // namespace

ComponentLengths component_lengths(const EahPayload& payload) noexcept {
  return {payload.a.size(), payload.b.size(), payload.c.size(), payload.d.size(), payload.e.size()};
}

std::uint64_t context_count(std::size_t alphabet_size, std::size_t order) {
  std::uint64_t count = 1;
  for (std::size_t q = 0; q < order; ++q) {
    count *= alphabet_size;
    if (count > kMaxContextCount) {
      throw Error(ErrorCode::argument, "context space m^n exceeds " + std::to_string(kMaxContextCount) +
                                           " (m=" + std::to_string(alphabet_size) +
                                           ", n=" + std::to_string(order) + ")");
    }
  }
  return count;
}

std::uint64_t context_index(const Alphabet& alphabet, std::string_view context) {
  std::uint64_t index = 0;
  for (char c : context) index = index * alphabet.size() + alphabet.index(static_cast<std::uint8_t>(c));
  return index;
}

const Successor* ContextModel::find(std::size_t symbol) const noexcept {
  auto it = std::ranges::find(successors, symbol, &Successor::symbol);
  return it == successors.end() ? nullptr : &*it;
}

const ContextModel* CodeModel::find(std::uint64_t index) const noexcept {
  auto it = std::ranges::lower_bound(contexts, index, {}, &ContextModel::index);
  return it == contexts.end() || it->index != index ? nullptr : &*it;
}

CodeModel model_from_graph(const AdaptiveGraph& graph) {
  const auto& alphabet = graph.alphabet();
  CodeModel model;
  for (const Vertex& v : graph.vertices()) {
    if (v.is_aux() || v.key.size() != graph.order()) continue;
    const auto tuple = successors_sorted(graph, v);
    if (tuple.empty()) continue;
    ContextModel ctx{context_index(alphabet, v.key), {}};
    for (const auto& [from, to] : tuple) {
      const auto& label = graph.find_edge(from, to)->label;
      ctx.successors.push_back(
          {alphabet.index(static_cast<std::uint8_t>(to.key.front())), label.frequency, label.codeword});
    }
    model.contexts.push_back(std::move(ctx));
  }
  std::ranges::sort(model.contexts, {}, &ContextModel::index);
  return model;
}

CodeModel model_from_payload(const StreamHeader& header, const EahPayload& payload) {
  check_header(header);
  const std::size_t m = header.alphabet.size();
  const std::uint64_t space = context_count(m, header.order);
  if (payload.b.size() != space) throw Error(ErrorCode::corrupt_header, "context bitmap has the wrong length");

  CodeModel model;
  for (auto index : set_positions(payload.b)) model.contexts.push_back({index, {}});
  if (payload.c.size() != m * model.contexts.size()) {
    throw Error(ErrorCode::corrupt_header, "successor bitmap has the wrong length");
  }
  if (payload.max_width > 64) throw Error(ErrorCode::corrupt_header, "frequency fields wider than 64 bits");
  const std::size_t marked = payload.c.count_ones();
  if (payload.d.size() != std::uint64_t{payload.max_width} * marked) {
    throw Error(ErrorCode::corrupt_header, "frequency table has the wrong length");
  }

  BitReader c_bits(payload.c);
  BitReader d_bits(payload.d);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (auto& ctx : model.contexts) {
      if (!c_bits.read_bit()) continue;
      const std::uint64_t frequency = d_bits.read_value(payload.max_width);
      if (frequency == 0) throw Error(ErrorCode::corrupt_header, "marked pair with zero frequency");
      ctx.successors.push_back({i, frequency, {}});
      total += frequency;
    }
  }

  const std::uint64_t expected = header.length > header.order ? header.length - header.order : 0;
  if (total != expected) {
    throw Error(ErrorCode::corrupt_header, "frequencies sum to " + std::to_string(total) + ", expected " +
                                               std::to_string(expected));
  }
  for (auto& ctx : model.contexts) {
    if (ctx.successors.empty()) throw Error(ErrorCode::corrupt_header, "present context without successors");
    put_in_coding_order(ctx.successors, header.order, ctx.index);
    assign_huffman(ctx);
  }
  return model;
}

CodeTable to_code_table(const CodeModel& model, const StreamHeader& header) {
  const auto& alphabet = header.alphabet;
  CodeTable table(alphabet, header.order);
  for (const auto& ctx : model.contexts) {
    const DigitTuple digits = b10(ctx.index, static_cast<std::uint32_t>(alphabet.size()), header.order);
    std::string key;
    for (auto d : digits.digits) key.push_back(static_cast<char>(alphabet.symbol(d)));
    for (const auto& s : ctx.successors) table.set(key, alphabet.symbol(s.symbol), s.codeword);
  }
  return table;
}

Encoded encode(std::string_view text, std::size_t order) {
  if (text.empty()) throw Error(ErrorCode::argument, "cannot encode empty input");
  if (order < 1) throw Error(ErrorCode::argument, "order must be at least 1");

  Encoded out{StreamHeader{order, Alphabet::of(text), text.size()}, {}};
  const auto& alphabet = out.header.alphabet;
  const std::size_t m = alphabet.size();
  const std::uint64_t space = context_count(m, order);
  EahPayload& p = out.payload;

  const std::size_t prefix = std::min(text.size(), order);
  for (std::size_t q = 0; q < prefix; ++q) {
    p.a.append_value(alphabet.index(static_cast<std::uint8_t>(text[q])), alphabet.index_width());
  }

  AdaptiveGraph graph = build_graph(text, order, alphabet);
  assign_codewords(graph);
  const CodeModel model = model_from_graph(graph);

  p.b.append_zeros(space);
  for (const auto& ctx : model.contexts) p.b.set(ctx.index);

  for (const auto& ctx : model.contexts) {
    for (const auto& s : ctx.successors) p.max_width = std::max(p.max_width, binary_width(s.frequency));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& ctx : model.contexts) {
      const Successor* s = ctx.find(i);
      p.c.push_back(s != nullptr);
      if (s != nullptr) p.d.append(mb10b2(s->frequency, p.max_width));
    }
  }

  if (text.size() > order) {
    std::uint64_t ctx = context_index(alphabet, text.substr(0, order));
    for (std::size_t t = order; t < text.size(); ++t) {
      const std::size_t symbol = alphabet.index(static_cast<std::uint8_t>(text[t]));
      p.e.append(model.find(ctx)->find(symbol)->codeword);
      ctx = (ctx * m + symbol) % space;
    }
  }
  return out;
}

std::string decode(const EahPayload& payload, const StreamHeader& header) {
  check_header(header);
  if (payload.a.size() != first_symbols_bits(header)) {
    throw Error(ErrorCode::corrupt_header, "verbatim prefix has the wrong length");
  }
  BitReader a_bits(payload.a);
  std::string text = read_first_symbols(header, a_bits);

  if (header.length <= header.order) {
    if (payload.b.size() != context_count(header.alphabet.size(), header.order)) {
      throw Error(ErrorCode::corrupt_header, "context bitmap has the wrong length");
    }
    if (!payload.c.empty() || !payload.d.empty() || !payload.e.empty()) {
      throw Error(ErrorCode::corrupt_header, "short stream carries code data");
    }
    return text;
  }
  if (payload.b.count_ones() == 0) {
    throw Error(ErrorCode::corrupt_header, "no context present but the stream is longer than the order");
  }

  if (payload.e.size() < header.length - header.order) {
    throw Error(ErrorCode::truncation, "codeword stream is shorter than the symbol count");
  }
  const CodeModel model = model_from_payload(header, payload);
  BitReader e_bits(payload.e);
  decode_symbols(model, header, text, e_bits);
  if (!e_bits.at_end()) {
    throw Error(ErrorCode::trailing_garbage, std::to_string(e_bits.remaining()) + " bits left in the codeword stream");
  }
  return text;
}

std::vector<std::uint8_t> serialize(const Encoded& encoded) {
  const auto& header = encoded.header;
  const auto& p = encoded.payload;
  if (header.order < 1 || header.order > 255) throw Error(ErrorCode::argument, "order must fit in one byte");
  if (p.max_width > 255) throw Error(ErrorCode::argument, "frequency width must fit in one byte");

  std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
  out.push_back(kContainerVersion);
  out.push_back(static_cast<std::uint8_t>(header.order));
  out.push_back(static_cast<std::uint8_t>(header.alphabet.size() - 1));
  const auto symbols = header.alphabet.symbols();
  out.insert(out.end(), symbols.begin(), symbols.end());
  for (unsigned q = 0; q < 8; ++q) out.push_back(static_cast<std::uint8_t>(header.length >> (8 * q)));
  out.push_back(static_cast<std::uint8_t>(p.max_width));

  BitWriter writer;
  writer.write(p.a);
  writer.write(p.b);
  writer.write(p.c);
  writer.write(p.d);
  writer.write(p.e);
  const auto bits = writer.flush();
  out.insert(out.end(), bits.begin(), bits.end());
  return out;
}

Encoded deserialize(std::span<const std::uint8_t> bytes) {
  std::size_t pos = 0;
  auto take = [&](std::size_t count) {
    if (bytes.size() - pos < count) throw Error(ErrorCode::truncation, "container header is truncated");
    auto chunk = bytes.subspan(pos, count);
    pos += count;
    return chunk;
  };

  const auto magic = take(kMagic.size());
  if (!std::ranges::equal(magic, kMagic)) throw Error(ErrorCode::bad_magic, "not an EAH1 container");
  const std::uint8_t version = take(1)[0];
  if (version != kContainerVersion) {
    throw Error(ErrorCode::unsupported_version, "container version " + std::to_string(version));
  }
  const std::size_t order = take(1)[0];
  const std::size_t m = std::size_t{take(1)[0]} + 1;
  const auto symbols = take(m);
  std::vector<std::uint8_t> alphabet_symbols(symbols.begin(), symbols.end());
  std::uint64_t length = 0;
  const auto length_bytes = take(8);
  for (unsigned q = 0; q < 8; ++q) length |= std::uint64_t{length_bytes[q]} << (8 * q);
  const unsigned max_width = take(1)[0];

  std::optional<Alphabet> alphabet;
  try {
    alphabet.emplace(std::move(alphabet_symbols));
  } catch (const Error&) {
    throw Error(ErrorCode::corrupt_header, "alphabet symbols are not distinct");
  }
  Encoded out{StreamHeader{order, std::move(*alphabet), length}, {}};
  check_header(out.header);
  const std::uint64_t space = context_count(m, order);

  const auto body = bytes.subspan(pos);
  BitReader reader(body, body.size() * 8);
  EahPayload& p = out.payload;
  p.max_width = max_width;

  const std::uint64_t a_bits = first_symbols_bits(out.header);
  if (reader.remaining() < a_bits + space) throw Error(ErrorCode::truncation, "container payload is truncated");
  p.a = reader.read_bits(a_bits);
  p.b = reader.read_bits(space);

  if (length > order) {
    const std::size_t contexts = p.b.count_ones();
    if (contexts == 0) {
      throw Error(ErrorCode::corrupt_header, "no context present but the stream is longer than the order");
    }
    p.c = reader.read_bits(m * contexts);
    p.d = reader.read_bits(std::uint64_t{max_width} * p.c.count_ones());
    // Every codeword is at least one bit long.
    if (reader.remaining() < length - order) throw Error(ErrorCode::truncation, "container payload is truncated");

    BitReader a_reader(p.a);
    std::string text = read_first_symbols(out.header, a_reader);
    const CodeModel model = model_from_payload(out.header, p);
    const std::size_t e_start = reader.position();
    decode_symbols(model, out.header, text, reader);
    BitReader e_reader(body, body.size() * 8);
    e_reader.skip(e_start);
    p.e = e_reader.read_bits(reader.position() - e_start);
  }

  if (reader.remaining() >= 8 || reader.read_value(static_cast<unsigned>(reader.remaining())) != 0) {
    throw Error(ErrorCode::trailing_garbage, "unexpected data after the payload");
  }
  return out;
}

std::uint64_t leahn_length(std::string_view text, std::size_t order) {
  return component_lengths(encode(text, order).payload).total();
}

}  // namespace eah
