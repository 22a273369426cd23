#include "cdc/graph.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cdc {

SearchGraph::SearchGraph(std::size_t n) : n_(n), stride_((n + 63) / 64), adj_(n * ((n + 63) / 64), 0) {}

void SearchGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw std::invalid_argument("SearchGraph::add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("SearchGraph::add_edge: self-loop");
  adj_[u * stride_ + v / 64] |= Word{1} << (v % 64);
  adj_[v * stride_ + u / 64] |= Word{1} << (u % 64);
}

std::size_t SearchGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (Word w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::size_t SearchGraph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

std::vector<std::uint32_t> SearchGraph::neighbors(std::size_t v) const {
  std::vector<std::uint32_t> out;
  const auto r = row(v);
  for (std::size_t w = 0; w < r.size(); ++w) {
    for (Word bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
    }
  }
  return out;
}

SearchGraph SearchGraph::induced(std::span<const std::uint32_t> vertices) const {
  SearchGraph out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (has_edge(vertices[i], vertices[j])) out.add_edge(i, j);
    }
  }
  return out;
}

bool SearchGraph::is_clique(std::span<const std::uint32_t> vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!has_edge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

void SearchGraph::write_adjacency(std::ostream& out) const {
  out << "p " << n_ << ' ' << edge_count() << '\n';
  for (std::size_t u = 0; u < n_; ++u) {
    for (auto v : neighbors(u)) {
      if (v > u) out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
    }
  }
}

SearchGraph SearchGraph::read_adjacency(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  SearchGraph g;
  bool have_header = false;
  std::size_t declared_edges = 0;
  std::size_t seen_edges = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "p") {
      std::string first;
      ls >> first;
      if (first == "edge" || first == "col") ls >> first;
      std::size_t n = 0;
      try {
        n = std::stoul(first);
      } catch (const std::exception&) {
        throw std::runtime_error("graph line " + std::to_string(line_no) + ": malformed header");
      }
      if (!(ls >> declared_edges)) throw std::runtime_error("graph line " + std::to_string(line_no) + ": missing edge count");
      g = SearchGraph(n);
      have_header = true;
    } else if (tag == "e") {
      std::size_t u = 0;
      std::size_t v = 0;
      if (!have_header) throw std::runtime_error("graph line " + std::to_string(line_no) + ": edge before header");
      if (!(ls >> u >> v) || u < 1 || v < 1 || u > g.size() || v > g.size() || u == v) {
        throw std::runtime_error("graph line " + std::to_string(line_no) + ": bad edge");
      }
      if (!g.has_edge(u - 1, v - 1)) ++seen_edges;
      g.add_edge(u - 1, v - 1);
    } else {
      throw std::runtime_error("graph line " + std::to_string(line_no) + ": unknown record '" + tag + "'");
    }
  }
  if (!have_header) throw std::runtime_error("graph: missing 'p' header");
  if (seen_edges != declared_edges) {
    throw std::runtime_error("graph: header declares " + std::to_string(declared_edges) + " edges, found " +
                             std::to_string(seen_edges));
  }
  return g;
}

}  // namespace cdc
