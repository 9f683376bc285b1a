#include "eah/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <tuple>

#include "eah/adaptive_graph.hpp"
#include "eah/baselines.hpp"
#include "eah/eah_codec.hpp"
#include "eah/error.hpp"

namespace eah::cli {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path.string() + " for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::io, "failed reading " + path.string());
  return std::move(buffer).str();
}

void write_file(const fs::path& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::io, "cannot open " + path.string() + " for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  out.flush();
  if (!out) throw Error(ErrorCode::io, "failed writing " + path.string());
}

void check_order(std::size_t order) {
  const std::size_t cap = max_order();
  if (order < 1 || order > cap) {
    throw Error(ErrorCode::argument,
                "order " + std::to_string(order) + " outside 1.." + std::to_string(cap) + " (EAHC_MAX_ORDER)");
  }
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

// Runs body, turning exceptions into a message and exit status 1.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

BenchRow bench_row(const std::string& file, std::string_view text, std::size_t order) {
  const Encoded encoded = encode(text, order);
  const auto bytes = serialize(encoded);
  const Encoded parsed = deserialize(bytes);
  if (!(parsed == encoded) || decode(parsed.payload, parsed.header) != text) {
    throw Error(ErrorCode::corrupt_stream, "EAH round-trip failed for " + file);
  }
  const auto lz = lz78_encode(text);
  if (lz78_decode(lz.bits, lz.phrase_count, Alphabet::of(text)) != text) {
    throw Error(ErrorCode::corrupt_stream, "LZ78 round-trip failed for " + file);
  }
  return {file, text.size(), order, component_lengths(encoded.payload).total(), huffman_stream_length(text),
          lz.bits.size()};
}

void write_csv(std::ostream& out, std::vector<BenchRow> rows) {
  std::ranges::sort(rows, {}, [](const BenchRow& r) { return std::tie(r.file, r.order); });
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << csv_field(r.file) << ',' << r.length << ',' << r.order << ',' << r.leahn << ',' << r.lh << ','
        << r.llz << ',' << std::fixed << std::setprecision(6) << r.ratio() << '\n';
  }
}

std::size_t max_order() {
  const char* env = std::getenv("EAHC_MAX_ORDER");
  if (env == nullptr || *env == '\0') return 3;
  std::size_t value = 0;
  const std::string_view text(env);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1) {
    throw Error(ErrorCode::argument, "EAHC_MAX_ORDER must be a positive integer");
  }
  return value;
}

std::vector<std::size_t> parse_orders(std::string_view list) {
  std::vector<std::size_t> orders;
  while (true) {
    const auto comma = list.find(',');
    const auto item = list.substr(0, comma);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw Error(ErrorCode::argument, "bad order list \"" + std::string(list) + "\"");
    }
    orders.push_back(value);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return orders;
}

int cmd_encode(const fs::path& input, const fs::path& output, std::size_t order, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    check_order(order);
    const std::string text = read_file(input);
    const Encoded encoded = encode(text, order);
    const auto bytes = serialize(encoded);
    write_file(output, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
    const auto len = component_lengths(encoded.payload);
    out << "|A|=" << len.a << " |B|=" << len.b << " |C|=" << len.c << " |D|=" << len.d << " |E|=" << len.e
        << " LEAH" << order << "=" << len.total() << '\n';
    return 0;
  });
}

int cmd_decode(const fs::path& input, const fs::path& output, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::string raw = read_file(input);
    const Encoded encoded =
        deserialize(std::span(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()));
    const std::string text = decode(encoded.payload, encoded.header);
    if (text.size() != encoded.header.length) {
      throw Error(ErrorCode::corrupt_stream, "decoded length differs from the header");
    }
    write_file(output, text);
    out << "decoded " << text.size() << " bytes\n";
    return 0;
  });
}

int cmd_stats(const fs::path& input, const std::vector<std::size_t>& orders, const std::optional<fs::path>& csv,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    for (auto n : orders) check_order(n);
    const std::string text = read_file(input);
    if (text.empty()) throw Error(ErrorCode::argument, input.string() + " is empty");
    std::vector<BenchRow> rows;
    for (auto n : orders) rows.push_back(bench_row(input.filename().string(), text, n));

    out << "file: " << input.filename().string() << "  h=" << text.size() << '\n';
    out << "LH=" << rows.front().lh << "  LLZ=" << rows.front().llz << '\n';
    out << std::left << std::setw(4) << "n" << std::setw(12) << "LEAHn" << std::setw(12) << "LH" << std::setw(12)
        << "LLZ" << "ratio\n";
    for (const auto& r : rows) {
      out << std::setw(4) << r.order << std::setw(12) << r.leahn << std::setw(12) << r.lh << std::setw(12) << r.llz
          << std::fixed << std::setprecision(6) << r.ratio() << '\n';
    }
    if (csv) {
      std::ostringstream body;
      write_csv(body, rows);
      write_file(*csv, body.str());
    }
    return 0;
  });
}

int cmd_graph(const fs::path& input, std::size_t order, const fs::path& output, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    check_order(order);
    const std::string text = read_file(input);
    if (text.empty()) throw Error(ErrorCode::argument, input.string() + " is empty");
    AdaptiveGraph graph = build_graph(text, order);
    assign_codewords(graph);
    write_file(output, export_dot(graph));
    out << "wrote " << graph.vertices().size() << " vertices, " << graph.edges().size() << " edges\n";
    return 0;
  });
}

int cmd_bench(const fs::path& corpus, const std::vector<std::size_t>& orders, const fs::path& csv,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    for (auto n : orders) check_order(n);
    if (!fs::is_directory(corpus)) throw Error(ErrorCode::io, corpus.string() + " is not a directory");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(corpus)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::ranges::sort(files);

    std::vector<BenchRow> rows;
    for (const auto& path : files) {
      const std::string text = read_file(path);
      if (text.empty()) {
        err << "skipping empty file " << path.filename().string() << '\n';
        continue;
      }
      for (auto n : orders) rows.push_back(bench_row(path.filename().string(), text, n));
    }
    std::ostringstream body;
    write_csv(body, rows);
    write_file(csv, body.str());
    out << "wrote " << rows.size() << " rows to " << csv.string() << '\n';
    return 0;
  });
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"EAHn adaptive-code compressor"};
  app.require_subcommand(1);

  fs::path input;
  fs::path output;
  std::size_t order = 1;
  std::string orders_text = "1";
  std::string csv_text;

  auto* encode_cmd = app.add_subcommand("encode", "Compress a file into an EAH1 container");
  encode_cmd->add_option("-i,--input", input, "Input file")->required();
  encode_cmd->add_option("-o,--output", output, "Output container")->required();
  encode_cmd->add_option("-n,--order", order, "Context order")->capture_default_str();

  auto* decode_cmd = app.add_subcommand("decode", "Restore a file from an EAH1 container");
  decode_cmd->add_option("-i,--input", input, "Input container")->required();
  decode_cmd->add_option("-o,--output", output, "Output file")->required();

  auto* stats_cmd = app.add_subcommand("stats", "Compare EAHn, Huffman and LZ78 sizes for a file");
  stats_cmd->add_option("-i,--input", input, "Input file")->required();
  stats_cmd->add_option("--orders", orders_text, "Comma separated orders")->capture_default_str();
  stats_cmd->add_option("--csv", csv_text, "Also write rows as CSV");

  auto* graph_cmd = app.add_subcommand("graph", "Export the adaptive graph as Graphviz DOT");
  graph_cmd->add_option("-i,--input", input, "Input file")->required();
  graph_cmd->add_option("-o,--output", output, "Output .dot file")->required();
  graph_cmd->add_option("-n,--order", order, "Context order")->capture_default_str();

  auto* bench_cmd = app.add_subcommand("bench", "Benchmark every file of a directory");
  bench_cmd->add_option("-i,--input", input, "Corpus directory")->required();
  bench_cmd->add_option("--orders", orders_text, "Comma separated orders")->capture_default_str();
  bench_cmd->add_option("--csv", csv_text, "CSV output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  std::vector<std::size_t> orders;
  if (stats_cmd->parsed() || bench_cmd->parsed()) {
    try {
      orders = parse_orders(orders_text);
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    }
  }

  if (encode_cmd->parsed()) return cmd_encode(input, output, order, out, err);
  if (decode_cmd->parsed()) return cmd_decode(input, output, out, err);
  if (stats_cmd->parsed()) {
    std::optional<fs::path> csv;
    if (!csv_text.empty()) csv = csv_text;
    return cmd_stats(input, orders, csv, out, err);
  }
  if (graph_cmd->parsed()) return cmd_graph(input, order, output, out, err);
  return cmd_bench(input, orders, csv_text, out, err);
}

}  // namespace eah::cli
