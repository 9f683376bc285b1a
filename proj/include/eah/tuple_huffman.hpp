#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "eah/bitstream.hpp"
#include "eah/error.hpp"

namespace eah {

// Tuple operators used by the Huffman construction. Positions are 0-based.

template <typename T>
std::vector<T> append(std::vector<T> tuple, T element) {
  tuple.push_back(std::move(element));
  return tuple;
}

template <typename T>
std::vector<T> remove_at(std::vector<T> tuple, std::size_t pos) {
  if (pos >= tuple.size()) throw Error(ErrorCode::range, "tuple position out of range");
  tuple.erase(tuple.begin() + static_cast<std::ptrdiff_t>(pos));
  return tuple;
}

template <typename T>
std::vector<T> concat(std::vector<T> lhs, const std::vector<T>& rhs) {
  lhs.insert(lhs.end(), rhs.begin(), rhs.end());
  return lhs;
}

/// One entry of the Huffman work list: accumulated frequency, one depth
/// counter per member, and the original input positions it covers.
struct WorkItem {
  std::uint64_t total = 0;
  std::vector<std::uint32_t> depths;
  std::vector<std::size_t> members;

  static WorkItem leaf(std::uint64_t frequency, std::size_t position) {
    return {frequency, {0}, {position}};
  }

  friend bool operator==(const WorkItem&, const WorkItem&) = default;
};

/// Sums totals, bumps every depth counter by one and concatenates members.
WorkItem merge(const WorkItem& first, const WorkItem& second);

struct Codeword {
  BitString bits;
  std::size_t length = 0;

  friend bool operator==(const Codeword&, const Codeword&) = default;
};

/// Huffman code for the given frequencies, positionally aligned with the
/// input. A single frequency gets the codeword "0".
///
/// Each round merges the two smallest totals; among equal totals the later
/// list position wins. Of the chosen pair, the item earlier in the work list
/// gets prefix 0 and the later one prefix 1; the merged item goes to the end.
/// Encoder and decoder both rely on this exact rule.
///
/// Throws Error(argument) for an empty tuple or a zero frequency.
std::vector<Codeword> huffman(std::span<const std::uint64_t> frequencies);

/// Sum of frequency * codeword length.
std::uint64_t weighted_length(std::span<const std::uint64_t> frequencies,
                              std::span<const Codeword> code);

}  // namespace eah
