#include "eah/adaptive_graph.hpp"

#include <algorithm>
#include <cstdio>

#include "eah/error.hpp"
#include "eah/tuple_huffman.hpp"

namespace eah {

namespace {

std::string render_key(std::string_view key) {
  std::string out;
  for (char c : key) {
    const auto b = static_cast<unsigned char>(c);
    if (b >= 0x20 && b < 0x7F) {
      out.push_back(c);
    } else {
      char buf[5];
      std::snprintf(buf, sizeof buf, "\\x%02X", b);
      out += buf;
    }
  }
  return out;
}

std::string dot_quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string Vertex::name() const {
  std::string out = render_key(key);
  if (is_aux()) out += "_aux";
  return out;
}

AdaptiveGraph::AdaptiveGraph(Alphabet alphabet, std::size_t order)
    : alphabet_(std::move(alphabet)), order_(order) {
  if (order_ < 1) throw Error(ErrorCode::argument, "graph order must be at least 1");
}

const EdgeData* AdaptiveGraph::find_edge(const Vertex& from, const Vertex& to) const {
  auto it = edges_.find(EdgeKey{from, to});
  return it == edges_.end() ? nullptr : &it->second;
}

EdgeData* AdaptiveGraph::find_edge(const Vertex& from, const Vertex& to) {
  auto it = edges_.find(EdgeKey{from, to});
  return it == edges_.end() ? nullptr : &it->second;
}

EdgeData& AdaptiveGraph::add_edge(const Vertex& from, const Vertex& to, EdgeRole role) {
  return edges_.try_emplace(EdgeKey{from, to}, EdgeData{role, {}}).first->second;
}

AdaptiveGraph build_graph(std::string_view text, std::size_t order) {
  if (text.empty()) throw Error(ErrorCode::argument, "cannot derive an alphabet from empty text");
  return build_graph(text, order, Alphabet::of(text));
}

AdaptiveGraph build_graph(std::string_view text, std::size_t order, const Alphabet& alphabet) {
  AdaptiveGraph graph(alphabet, order);
  for (char c : text) (void)alphabet.index(static_cast<std::uint8_t>(c));

  const std::size_t h = text.size();
  if (h <= order) return graph;

  for (std::size_t j = 0; j + order < h; ++j) graph.add_vertex(Vertex::base(text.substr(j, order)));
  for (std::size_t j = order; j < h; ++j) graph.add_vertex(Vertex::base(text.substr(j, 1)));

  for (std::size_t j = 0; j + order < h; ++j) {
    const Vertex context = Vertex::base(text.substr(j, order));
    const char next = text[j + order];
    EdgeData* counted = nullptr;
    if (order == 1 && text[j] == next) {
      const Vertex aux = Vertex::aux(next);
      graph.add_vertex(aux);
      counted = &graph.add_edge(context, aux, EdgeRole::self_transition);
      graph.add_edge(aux, context, EdgeRole::aux_return);
    } else {
      counted = &graph.add_edge(context, Vertex::base(std::string_view(&next, 1)), EdgeRole::transition);
    }
    ++counted->label.frequency;
  }

  if (order >= 2) {
    for (std::size_t j = order; j + 1 < h; ++j) {
      graph.add_edge(Vertex::base(text.substr(j, 1)), Vertex::base(text.substr(j + 1 - order, order)),
                     EdgeRole::context_link);
    }
  }
  return graph;
}

DegreeStats degree_stats(const AdaptiveGraph& graph, const Vertex& v) {
  if (!graph.contains(v)) throw Error(ErrorCode::lookup, "vertex " + v.name() + " not in graph");
  DegreeStats stats;
  for (const auto& [key, data] : graph.edges()) {
    const auto& [from, to] = key;
    if (from == v) ++(to.is_aux() ? stats.out_aux : stats.out_base);
    if (to == v) ++(from.is_aux() ? stats.in_aux : stats.in_base);
  }
  return stats;
}

std::vector<EdgeKey> successors_sorted(const AdaptiveGraph& graph, const Vertex& context) {
  std::vector<EdgeKey> base;
  std::vector<EdgeKey> aux;
  const auto& edges = graph.edges();
  for (auto it = edges.lower_bound(EdgeKey{context, Vertex{}}); it != edges.end() && it->first.first == context;
       ++it) {
    if (it->second.role == EdgeRole::transition) {
      base.push_back(it->first);
    } else if (it->second.role == EdgeRole::self_transition) {
      aux.push_back(it->first);
    }
  }
  const Alphabet& alphabet = graph.alphabet();
  std::ranges::sort(base, {}, [&alphabet](const EdgeKey& e) {
    return alphabet.index(static_cast<std::uint8_t>(e.second.key.front()));
  });
  base.insert(base.end(), aux.begin(), aux.end());
  return base;
}

void assign_codewords(AdaptiveGraph& graph) {
  for (const Vertex& v : graph.vertices()) {
    if (v.is_aux() || v.key.size() != graph.order()) continue;
    const auto tuple = successors_sorted(graph, v);
    if (tuple.empty()) continue;
    std::vector<std::uint64_t> frequencies;
    frequencies.reserve(tuple.size());
    for (const auto& e : tuple) frequencies.push_back(graph.find_edge(e.first, e.second)->label.frequency);
    const auto code = huffman(frequencies);
    for (std::size_t q = 0; q < tuple.size(); ++q) {
      graph.find_edge(tuple[q].first, tuple[q].second)->label.codeword = code[q].bits;
    }
  }
}

std::string export_dot(const AdaptiveGraph& graph) {
  std::string out = "digraph G {\n";
  for (const Vertex& v : graph.vertices()) out += "  " + dot_quote(v.name()) + ";\n";
  for (const auto& [key, data] : graph.edges()) {
    const std::string codeword = data.label.codeword.empty() ? "λ" : data.label.codeword.to_string();
    out += "  " + dot_quote(key.first.name()) + " -> " + dot_quote(key.second.name()) + " [label=\"(" +
           std::to_string(data.label.frequency) + "," + codeword + ")\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace eah
