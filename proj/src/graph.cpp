#include "subsample/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace subsample {

namespace {

bool parse_int(std::string_view tok, long long& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> toks;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) toks.push_back(s.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

HostGraph HostGraph::load(std::string_view text) {
  std::vector<std::pair<int, int>> edges;
  long long declared_n = -1;
  int max_id = -1;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0][0] == '#') {
      // "# n=<N>" declares the vertex count (for isolated trailing vertices)
      for (auto& t : toks) {
        if (t.substr(0, 2) == "n=") {
          long long v;
          if (!parse_int(t.substr(2), v) || v < 0)
            throw ParseError("bad n= header", line_no);
          declared_n = v;
        }
      }
      continue;
    }
    if (toks.size() != 2)
      throw ParseError("expected two integers", line_no);
    long long u, v;
    if (!parse_int(toks[0], u) || !parse_int(toks[1], v))
      throw ParseError("malformed integer", line_no);
    if (u < 0 || v < 0) throw ParseError("negative vertex id", line_no);
    if (u == v) throw ParseError("self-loop", line_no);
    for (auto& e : edges) {
      if ((e.first == u && e.second == v) || (e.first == v && e.second == u))
        throw ParseError("duplicate edge", line_no);
    }
    edges.emplace_back((int)u, (int)v);
    max_id = std::max(max_id, (int)std::max(u, v));
  }
  int n = max_id + 1;
  if (declared_n >= 0) {
    if (declared_n < n) throw ParseError("n= header smaller than max id", 1);
    n = (int)declared_n;
  }
  return from_edges(n, std::move(edges));
}

HostGraph HostGraph::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load(ss.str());
}

HostGraph HostGraph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  HostGraph g;
  g.n_ = n;
  g.adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  g.edges_ = std::move(edges);
  g.sorted_adj_ = g.adj_;
  for (auto& nb : g.sorted_adj_) std::sort(nb.begin(), nb.end());
  for (int v = 0; v < n; ++v) {
    auto& nb = g.sorted_adj_[v];
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument("duplicate edge");
  }
  return g;
}

bool HostGraph::has_edge(int u, int v) const {
  const auto& nb = sorted_adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> HostGraph::larger_neighbors(int v) const {
  std::vector<int> out;
  for (int w : adj_[v])
    if (precedes(v, w)) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

std::string HostGraph::to_edge_list_text() const {
  std::string s = "# n=" + std::to_string(n_) + "\n";
  for (auto [u, v] : edges_)
    s += std::to_string(u) + " " + std::to_string(v) + "\n";
  return s;
}

}  // namespace subsample
