#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eah/alphabet.hpp"
#include "eah/bitstream.hpp"

namespace eah {

enum class VertexKind : std::uint8_t { base, aux };

/// Base vertices are keyed by an n-gram or a single symbol; an aux vertex is
/// keyed by the symbol it shadows (rendered with an "_aux" suffix).
struct Vertex {
  std::string key;
  VertexKind kind = VertexKind::base;

  static Vertex base(std::string_view key) { return {std::string(key), VertexKind::base}; }
  static Vertex aux(char symbol) { return {std::string(1, symbol), VertexKind::aux}; }

  bool is_aux() const noexcept { return kind == VertexKind::aux; }
  std::string name() const;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

enum class EdgeRole : std::uint8_t {
  transition,       // context -> following symbol
  self_transition,  // order 1 only: sigma -> sigma_aux, stands for sigma sigma
  aux_return,       // order 1 only: sigma_aux -> sigma, never counted
  context_link,     // order >= 2: symbol -> n-gram ending in it, never counted
};

/// Frequency and codeword of an edge. An empty codeword is the empty word.
struct EdgeLabel {
  std::uint64_t frequency = 0;
  BitString codeword;

  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};

struct EdgeData {
  EdgeRole role = EdgeRole::transition;
  EdgeLabel label;
};

using EdgeKey = std::pair<Vertex, Vertex>;

inline bool carries_symbol(EdgeRole role) noexcept {
  return role == EdgeRole::transition || role == EdgeRole::self_transition;
}

class AdaptiveGraph {
 public:
  AdaptiveGraph(Alphabet alphabet, std::size_t order);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t order() const noexcept { return order_; }
  const std::set<Vertex>& vertices() const noexcept { return vertices_; }
  const std::map<EdgeKey, EdgeData>& edges() const noexcept { return edges_; }
  bool empty() const noexcept { return vertices_.empty() && edges_.empty(); }

  bool contains(const Vertex& v) const { return vertices_.contains(v); }
  const EdgeData* find_edge(const Vertex& from, const Vertex& to) const;
  EdgeData* find_edge(const Vertex& from, const Vertex& to);

  void add_vertex(Vertex v) { vertices_.insert(std::move(v)); }
  /// Inserts the edge if absent; the role of an existing edge is kept.
  EdgeData& add_edge(const Vertex& from, const Vertex& to, EdgeRole role);

 private:
  Alphabet alphabet_;
  std::size_t order_;
  std::set<Vertex> vertices_;
  std::map<EdgeKey, EdgeData> edges_;
};

/// Adaptive graph of order n for text. Frequencies count every (possibly
/// overlapping) occurrence; codewords are left empty. Text of length <= n
/// gives the empty graph. Throws Error(lookup) if text leaves the alphabet.
AdaptiveGraph build_graph(std::string_view text, std::size_t order, const Alphabet& alphabet);
AdaptiveGraph build_graph(std::string_view text, std::size_t order);

struct DegreeStats {
  std::size_t in_base = 0;
  std::size_t out_base = 0;
  std::size_t in_aux = 0;
  std::size_t out_aux = 0;

  friend bool operator==(const DegreeStats&, const DegreeStats&) = default;
};

/// Edge counts at v split by whether the other endpoint is a base or an aux
/// vertex. Throws Error(lookup) if v is not in the graph.
DegreeStats degree_stats(const AdaptiveGraph& graph, const Vertex& v);

/// Symbol-carrying edges out of a context vertex, in the fixed order both
/// coder sides use: base successors by ascending symbol index, then the aux
/// successor (order 1) last.
std::vector<EdgeKey> successors_sorted(const AdaptiveGraph& graph, const Vertex& context);

/// Runs Huffman over every context's successor frequencies (in
/// successors_sorted order) and stores the codewords on the edges.
void assign_codewords(AdaptiveGraph& graph);

/// Graphviz rendering with edges labelled "(frequency,codeword)" and the
/// empty codeword shown as the lambda character. Byte-stable.
std::string export_dot(const AdaptiveGraph& graph);

}  // namespace eah
