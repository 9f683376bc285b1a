#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eah::cli {

/// One benchmark line: EAHn, Huffman and LZ78 sizes for a file at an order.
struct BenchRow {
  std::string file;
  std::uint64_t length = 0;  // h
  std::size_t order = 1;
  std::uint64_t leahn = 0;
  std::uint64_t lh = 0;
  std::uint64_t llz = 0;

  /// bits / (8 h)
  double ratio() const noexcept { return static_cast<double>(leahn) / (8.0 * static_cast<double>(length)); }
  double lh_ratio() const noexcept { return static_cast<double>(lh) / (8.0 * static_cast<double>(length)); }
  double llz_ratio() const noexcept { return static_cast<double>(llz) / (8.0 * static_cast<double>(length)); }
};

/// Computes a row after verifying that the container and the LZ78 stream
/// both round-trip. Throws Error(corrupt_stream) naming the file otherwise.
BenchRow bench_row(const std::string& file, std::string_view text, std::size_t order);

inline constexpr std::string_view kCsvHeader = "file,h,n,LEAHn,LH,LLZ,ratio";

/// Rows are sorted by (file, n) before writing.
void write_csv(std::ostream& out, std::vector<BenchRow> rows);

/// EAHC_MAX_ORDER, default 3.
std::size_t max_order();

/// "1,2,3" -> {1,2,3}. Throws Error(argument) on malformed lists.
std::vector<std::size_t> parse_orders(std::string_view list);

// Each command returns a process exit status and reports problems on err.
int cmd_encode(const std::filesystem::path& input, const std::filesystem::path& output, std::size_t order,
               std::ostream& out, std::ostream& err);
int cmd_decode(const std::filesystem::path& input, const std::filesystem::path& output, std::ostream& out,
               std::ostream& err);
int cmd_stats(const std::filesystem::path& input, const std::vector<std::size_t>& orders,
              const std::optional<std::filesystem::path>& csv, std::ostream& out, std::ostream& err);
int cmd_graph(const std::filesystem::path& input, std::size_t order, const std::filesystem::path& output,
              std::ostream& out, std::ostream& err);
int cmd_bench(const std::filesystem::path& corpus, const std::vector<std::size_t>& orders,
              const std::filesystem::path& csv, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a command.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace eah::cli
