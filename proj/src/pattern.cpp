#include "subsample/pattern.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "subsample/generators.hpp"
#include "subsample/graph.hpp"

namespace subsample {

namespace {

void validate_pattern(const Pattern& h) {
  if (h.n() < 1) throw std::invalid_argument("pattern: empty");
  if (h.n() > Pattern::kMaxVertices)
    throw std::invalid_argument("pattern: more than 10 vertices");
  if (h.edge_count() > Pattern::kMaxEdges)
    throw std::invalid_argument("pattern: more than 15 edges");
  for (int v = 0; v < h.n(); ++v)
    if (h.degree(v) == 0)
      throw std::invalid_argument(
          "pattern: isolated vertex (no fractional edge cover exists)");
}

}  // namespace

Pattern Pattern::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  Pattern h;
  h.n_ = n;
  h.adj_.assign(n, {});
  for (auto& e : edges) {
    auto [u, v] = e;
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw std::invalid_argument("pattern: bad edge");
    if (u > v) e = {v, u};
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("pattern: duplicate edge");
  for (auto [u, v] : edges) {
    h.adj_[u].push_back(v);
    h.adj_[v].push_back(u);
  }
  h.edges_ = std::move(edges);
  h.spec_ = "custom";
  validate_pattern(h);
  return h;
}

Pattern Pattern::parse(const std::string& spec) {
  if (spec.empty()) throw std::invalid_argument("empty pattern spec");
  Pattern h;
  if (spec[0] == '@') {
    HostGraph g = HostGraph::load_file(spec.substr(1));
    h = from_edges(g.n(), g.edges());
  } else {
    char kind = spec[0];
    int k = 0;
    for (size_t i = 1; i < spec.size(); ++i) {
      if (!std::isdigit((unsigned char)spec[i]))
        throw std::invalid_argument("bad pattern spec: " + spec);
      k = k * 10 + (spec[i] - '0');
    }
    if (spec.size() == 1) throw std::invalid_argument("bad pattern spec: " + spec);
    HostGraph g = make_path(0);
    switch (kind) {
      case 'K':
        if (k < 2) throw std::invalid_argument("K needs >= 2 vertices");
        g = make_complete(k);
        break;
      case 'C':
        g = make_cycle(k);
        break;
      case 'S':
        if (k < 1) throw std::invalid_argument("S needs >= 1 petal");
        g = make_star(k);
        break;
      case 'P':
        if (k < 2) throw std::invalid_argument("P needs >= 2 vertices");
        g = make_path(k);
        break;
      default:
        throw std::invalid_argument("bad pattern spec: " + spec);
    }
    h = from_edges(g.n(), g.edges());
  }
  h.spec_ = spec;
  return h;
}

bool Pattern::has_edge(int u, int v) const {
  for (int w : adj_[u])
    if (w == v) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Fractional edge-cover number
// ---------------------------------------------------------------------------

namespace {

struct CoverSearch {
  const Pattern& h;
  std::vector<int> last_edge_of;  // per vertex, last incident edge index
  std::vector<int> cover;         // per vertex, accumulated half-units
  std::vector<int> remaining;     // per vertex, unassigned incident edges
  int best_half;

  explicit CoverSearch(const Pattern& hh) : h(hh) {
    last_edge_of.assign(h.n(), -1);
    remaining.assign(h.n(), 0);
    for (int i = 0; i < h.edge_count(); ++i) {
      auto [u, v] = h.edges()[i];
      last_edge_of[u] = i;
      last_edge_of[v] = i;
      ++remaining[u];
      ++remaining[v];
    }
    cover.assign(h.n(), 0);
    best_half = 2 * h.n() + 1;
  }

  void run(int idx, int total_half) {
    if (total_half >= best_half) return;
    if (idx == h.edge_count()) {
      best_half = total_half;
      return;
    }
    auto [u, v] = h.edges()[idx];
    --remaining[u];
    --remaining[v];
    for (int w = 0; w <= 2; ++w) {
      cover[u] += w;
      cover[v] += w;
      bool feasible =
          cover[u] + 2 * remaining[u] >= 2 && cover[v] + 2 * remaining[v] >= 2;
      if (feasible) run(idx + 1, total_half + w);
      cover[u] -= w;
      cover[v] -= w;
    }
    ++remaining[u];
    ++remaining[v];
  }
};

}  // namespace

Rational fractional_edge_cover_number(const Pattern& h) {
  validate_pattern(h);
  CoverSearch s(h);
  s.run(0, 0);
  return Rational(s.best_half, 2);
}

// ---------------------------------------------------------------------------
// Decomposition
// ---------------------------------------------------------------------------

namespace {

// Lexicographically smallest Hamiltonian cycle of H restricted to `mask`,
// as a vertex sequence starting at the smallest vertex; nullopt if none.
std::optional<std::vector<int>> canonical_hamiltonian_cycle(const Pattern& h,
                                                            unsigned mask) {
  int size = std::popcount(mask);
  std::vector<int> verts;
  for (int v = 0; v < h.n(); ++v)
    if (mask & (1u << v)) verts.push_back(v);
  int start = verts[0];

  std::vector<int> path{start};
  unsigned used = 1u << start;
  std::optional<std::vector<int>> found;

  std::function<bool(void)> dfs = [&]() -> bool {
    if ((int)path.size() == size) {
      if (h.has_edge(path.back(), start) && path[1] < path.back()) {
        found = path;
        return true;
      }
      return false;
    }
    // ascending neighbor order makes the first completed cycle canonical
    std::vector<int> nbs = h.neighbors(path.back());
    std::sort(nbs.begin(), nbs.end());
    for (int w : nbs) {
      if (!(mask & (1u << w)) || (used & (1u << w))) continue;
      path.push_back(w);
      used |= 1u << w;
      if (dfs()) return true;
      used &= ~(1u << w);
      path.pop_back();
    }
    return false;
  };
  if (size < 3 || size % 2 == 0) return std::nullopt;
  dfs();
  return found;
}

struct PieceOption {
  bool feasible = false;
  bool is_cycle = false;
  int cost_half = 0;  // 2 * rho
  std::vector<int> cycle_order;
  int star_root = -1;
  std::vector<int> star_leaves;
};

PieceOption best_piece_for(const Pattern& h, unsigned mask) {
  PieceOption opt;
  int size = std::popcount(mask);
  if (size < 2) return opt;  // a lone vertex cannot be covered

  if (auto cyc = canonical_hamiltonian_cycle(h, mask)) {
    // odd cycle costs size/2 < size-1 for size >= 3, so it always wins
    opt.feasible = true;
    opt.is_cycle = true;
    opt.cost_half = size;
    opt.cycle_order = *cyc;
    return opt;
  }
  for (int r = 0; r < h.n(); ++r) {
    if (!(mask & (1u << r))) continue;
    bool root_ok = true;
    std::vector<int> leaves;
    for (int v = 0; v < h.n(); ++v) {
      if (v == r || !(mask & (1u << v))) continue;
      if (!h.has_edge(r, v)) {
        root_ok = false;
        break;
      }
      leaves.push_back(v);
    }
    if (root_ok) {
      opt.feasible = true;
      opt.is_cycle = false;
      opt.cost_half = 2 * (size - 1);
      opt.star_root = r;
      opt.star_leaves = leaves;
      return opt;  // smallest eligible root, deterministic
    }
  }
  return opt;
}

}  // namespace

Decomposition decompose(const Pattern& h) {
  validate_pattern(h);
  int n = h.n();
  unsigned full = (n == 32) ? ~0u : (1u << n) - 1;

  std::vector<PieceOption> piece(full + 1);
  for (unsigned mask = 1; mask <= full; ++mask)
    piece[mask] = best_piece_for(h, mask);

  constexpr int INF = 1 << 20;
  std::vector<int> dp(full + 1, INF);
  std::vector<unsigned> choice(full + 1, 0);
  dp[0] = 0;
  for (unsigned s = 1; s <= full; ++s) {
    unsigned low = s & (~s + 1);  // lowest set bit must be in the chosen piece
    for (unsigned t = s; t; t = (t - 1) & s) {
      if (!(t & low)) continue;
      if (!piece[t].feasible || dp[s ^ t] == INF) continue;
      int cost = piece[t].cost_half + dp[s ^ t];
      if (cost < dp[s]) {  // strict: first candidate in enumeration order wins ties
        dp[s] = cost;
        choice[s] = t;
      }
    }
  }
  if (dp[full] == INF)
    throw std::logic_error("no odd-cycle/star partition exists");  // unreachable

  Decomposition d;
  for (unsigned s = full; s;) {
    unsigned t = choice[s];
    const PieceOption& p = piece[t];
    if (p.is_cycle)
      d.cycles.push_back(CyclePiece{p.cycle_order});
    else
      d.stars.push_back(StarPiece{p.star_root, p.star_leaves});
    s ^= t;
  }
  std::sort(d.cycles.begin(), d.cycles.end(),
            [](const CyclePiece& a, const CyclePiece& b) {
              return std::tie(a.vertices) < std::tie(b.vertices);
            });
  std::sort(d.stars.begin(), d.stars.end(),
            [](const StarPiece& a, const StarPiece& b) {
              return std::tie(a.root, a.leaves) < std::tie(b.root, b.leaves);
            });
  d.rho_total = Rational(dp[full], 2);
  return d;
}

std::string Decomposition::describe() const {
  std::string s;
  for (const auto& c : cycles) {
    if (!s.empty()) s += " + ";
    s += "C" + std::to_string(c.length());
  }
  for (const auto& st : stars) {
    if (!s.empty()) s += " + ";
    s += "S" + std::to_string(st.petals());
  }
  return s;
}

// ---------------------------------------------------------------------------
// Assembly / configuration semantics
// ---------------------------------------------------------------------------

namespace {

CopyInstance canonical_edge_image(const Pattern& h, const std::vector<int>& map) {
  CopyInstance out;
  out.reserve(h.edge_count());
  for (auto [u, v] : h.edges()) {
    int a = map[u], b = map[v];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Extend `map` piece by piece, trying every symmetry of each piece.
void search_embeddings(const Pattern& h, const Decomposition& t,
                       const std::vector<CycleInstance>& cycles,
                       const std::vector<StarInstance>& stars, size_t piece_idx,
                       std::vector<int>& map,
                       const std::function<bool(int, int)>& has_edge,
                       std::optional<CopyInstance>& best) {
  size_t o = t.cycles.size();
  if (piece_idx == o + t.stars.size()) {
    for (auto [u, v] : h.edges())
      if (!has_edge(map[u], map[v])) return;
    CopyInstance copy = canonical_edge_image(h, map);
    if (!best || copy < *best) best = copy;
    return;
  }
  if (piece_idx < o) {
    const auto& hseq = t.cycles[piece_idx].vertices;
    const auto& gseq = cycles[piece_idx].vertices;
    int L = (int)hseq.size();
    for (int rot = 0; rot < L; ++rot) {
      for (int dir : {1, -1}) {
        for (int i = 0; i < L; ++i)
          map[hseq[i]] = gseq[((rot + dir * i) % L + L) % L];
        search_embeddings(h, t, cycles, stars, piece_idx + 1, map, has_edge,
                          best);
      }
    }
    for (int v : hseq) map[v] = -1;
  } else {
    const auto& hp = t.stars[piece_idx - o];
    const auto& gp = stars[piece_idx - o];
    if ((int)gp.leaves.size() != hp.petals()) return;
    map[hp.root] = gp.root;
    std::vector<int> perm(gp.leaves.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (size_t i = 0; i < perm.size(); ++i)
        map[hp.leaves[i]] = gp.leaves[perm[i]];
      search_embeddings(h, t, cycles, stars, piece_idx + 1, map, has_edge,
                        best);
    } while (std::next_permutation(perm.begin(), perm.end()));
    map[hp.root] = -1;
    for (int v : hp.leaves) map[v] = -1;
  }
}

}  // namespace

std::optional<CopyInstance> realize_copy(
    const Pattern& h, const Decomposition& t,
    const std::vector<CycleInstance>& cycles,
    const std::vector<StarInstance>& stars,
    const std::function<bool(int, int)>& has_edge) {
  std::vector<int> map(h.n(), -1);
  std::optional<CopyInstance> best;
  search_embeddings(h, t, cycles, stars, 0, map, has_edge, best);
  return best;
}

// ---------------------------------------------------------------------------
// Configuration counting
// ---------------------------------------------------------------------------

namespace {

std::vector<CycleInstance> cycles_in_pattern(const Pattern& h, int length) {
  std::vector<CycleInstance> out;
  // canonical sequences: start at the cycle's smallest vertex, second < last
  for (int s = 0; s < h.n(); ++s) {
    std::vector<int> path{s};
    unsigned used = 1u << s;
    std::function<void(void)> dfs = [&]() {
      if ((int)path.size() == length) {
        if (h.has_edge(path.back(), s) && path[1] < path.back())
          out.push_back(CycleInstance{path});
        return;
      }
      for (int w : h.neighbors(path.back())) {
        if (w <= s || (used & (1u << w))) continue;
        path.push_back(w);
        used |= 1u << w;
        dfs();
        used &= ~(1u << w);
        path.pop_back();
      }
    };
    dfs();
  }
  return out;
}

std::vector<StarInstance> stars_in_pattern(const Pattern& h, int petals) {
  std::vector<StarInstance> out;
  for (int r = 0; r < h.n(); ++r) {
    std::vector<int> nbs = h.neighbors(r);
    std::sort(nbs.begin(), nbs.end());
    if ((int)nbs.size() < petals) continue;
    std::vector<int> pick(petals);
    std::function<void(int, int)> choose = [&](int from, int depth) {
      if (depth == petals) {
        StarInstance s;
        s.root = r;
        s.leaves.assign(pick.begin(), pick.end());
        out.push_back(std::move(s));
        return;
      }
      for (int i = from; i < (int)nbs.size(); ++i) {
        pick[depth] = nbs[i];
        choose(i + 1, depth + 1);
      }
    };
    choose(0, 0);
  }
  return out;
}

}  // namespace

long long count_configurations(const Pattern& h, const Decomposition& t) {
  auto has_edge = [&h](int u, int v) { return h.has_edge(u, v); };

  std::vector<std::vector<CycleInstance>> cycle_cands;
  for (const auto& c : t.cycles)
    cycle_cands.push_back(cycles_in_pattern(h, c.length()));
  std::vector<std::vector<StarInstance>> star_cands;
  for (const auto& s : t.stars)
    star_cands.push_back(stars_in_pattern(h, s.petals()));

  long long count = 0;
  std::vector<CycleInstance> cyc_pick(t.cycles.size());
  std::vector<StarInstance> star_pick(t.stars.size());

  std::function<void(size_t, unsigned)> fill = [&](size_t idx, unsigned used) {
    size_t o = t.cycles.size();
    if (idx == o + t.stars.size()) {
      if (realize_copy(h, t, cyc_pick, star_pick, has_edge)) ++count;
      return;
    }
    auto vertex_mask = [](const std::vector<int>& vs) {
      unsigned m = 0;
      for (int v : vs) m |= 1u << v;
      return m;
    };
    if (idx < o) {
      for (const auto& cand : cycle_cands[idx]) {
        unsigned m = vertex_mask(cand.vertices);
        if (m & used) continue;
        cyc_pick[idx] = cand;
        fill(idx + 1, used | m);
      }
    } else {
      for (const auto& cand : star_cands[idx - o]) {
        unsigned m = vertex_mask(cand.leaves) | (1u << cand.root);
        if (m & used) continue;
        star_pick[idx - o] = cand;
        fill(idx + 1, used | m);
      }
    }
  };
  fill(0, 0);
  return count;
}

long long agm_copies_upper_bound(long long m, const Rational& rho) {
  if (m <= 1) return 1;
  // rho is half-integral: rho = p/2 with p = 2*rho
  long long p = 0;
  if (rho.den() == 1)
    p = 2 * rho.num();
  else if (rho.den() == 2)
    p = rho.num();
  else
    throw std::logic_error("rho is not half-integral");
  __int128 pw = 1;
  const __int128 limit = (__int128)1 << 120;
  for (long long i = 0; i < p; ++i) {
    if (pw > limit / m) throw std::overflow_error("AGM bound exceeds integer range");
    pw *= m;
  }
  // ceil(sqrt(pw))
  __int128 r = (__int128)std::sqrt((double)pw);
  while (r * r > pw) --r;
  while (r * r < pw) ++r;
  if (r * r == pw) return (long long)r;
  // r is now the ceiling already (the loop above overshoots to it)
  return (long long)r;
}

}  // namespace subsample
