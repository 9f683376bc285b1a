#include "eah/tuple_huffman.hpp"

#include <algorithm>

namespace eah {

WorkItem merge(const WorkItem& first, const WorkItem& second) {
  WorkItem out;
  out.total = first.total + second.total;
  out.depths.reserve(first.depths.size() + second.depths.size());
  for (auto d : first.depths) out.depths.push_back(d + 1);
  for (auto d : second.depths) out.depths.push_back(d + 1);
  out.members = concat(first.members, second.members);
  return out;
}

namespace {

// Smallest total; ties go to the largest position. `skip` is excluded.
std::size_t pick_smallest(const std::vector<WorkItem>& list, std::size_t skip) {
  std::size_t best = list.size();
  for (std::size_t q = 0; q < list.size(); ++q) {
    if (q == skip) continue;
    if (best == list.size() || list[q].total <= list[best].total) best = q;
  }
  return best;
}

}  // namespace

std::vector<Codeword> huffman(std::span<const std::uint64_t> frequencies) {
  const std::size_t k = frequencies.size();
  if (k == 0) throw Error(ErrorCode::argument, "huffman needs at least one frequency");

  std::vector<WorkItem> list;
  list.reserve(k);
  for (std::size_t q = 0; q < k; ++q) {
    if (frequencies[q] == 0) throw Error(ErrorCode::argument, "frequencies must be positive");
    list.push_back(WorkItem::leaf(frequencies[q], q));
  }

  // Codewords grow at the front; keep them reversed until the end.
  std::vector<std::vector<bool>> reversed(k);
  if (k == 1) reversed[0].push_back(false);

  while (list.size() > 1) {
    const std::size_t a = pick_smallest(list, list.size());
    const std::size_t b = pick_smallest(list, a);
    const std::size_t i = std::min(a, b);
    const std::size_t j = std::max(a, b);

    for (auto x : list[i].members) reversed[x].push_back(false);
    for (auto x : list[j].members) reversed[x].push_back(true);

    WorkItem merged = merge(list[i], list[j]);
    list = remove_at(std::move(list), j);
    list = remove_at(std::move(list), i);
    list = append(std::move(list), std::move(merged));
  }

  std::vector<Codeword> out(k);
  for (std::size_t q = 0; q < k; ++q) {
    for (auto it = reversed[q].rbegin(); it != reversed[q].rend(); ++it) out[q].bits.push_back(*it);
    out[q].length = out[q].bits.size();
  }
  return out;
}

std::uint64_t weighted_length(std::span<const std::uint64_t> frequencies,
                              std::span<const Codeword> code) {
  if (frequencies.size() != code.size()) {
    throw Error(ErrorCode::argument, "frequency and code tuples differ in length");
  }
  std::uint64_t total = 0;
  for (std::size_t q = 0; q < code.size(); ++q) total += frequencies[q] * code[q].length;
  return total;
}

}  // namespace eah
