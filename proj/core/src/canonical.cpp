#include "spinmod/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "spinmod/cycles.hpp"
#include "spinmod/detail/colored.hpp"
#include "spinmod/error.hpp"

namespace spinmod {
namespace detail {

Colored make_colored(const Graph& g, const EdgeSet* p,
                     const std::vector<std::uint8_t>& vertex_sign) {
  Colored c;
  c.n = g.num_vertices();
  c.mult.assign(c.n * c.n, 0);
  std::vector<int> loops_p(c.n, 0);
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.ends(e);
    const bool in_p = p != nullptr && p->contains(e);
    if (u == v) {
      if (in_p) ++loops_p[u];
      continue;
    }
    const int inc = 256 + (in_p ? 1 : 0);
    c.mult[u * c.n + v] += inc;
    c.mult[v * c.n + u] += inc;
  }
  std::vector<std::vector<int>> legs(c.n);
  for (int i = 0; i < g.num_legs(); ++i) legs[g.endpoint(g.legs()[i])].push_back(i);

  c.label.resize(c.n);
  for (int v = 0; v < c.n; ++v) {
    auto& l = c.label[v];
    l = {g.weight(v), g.loops_at(v), loops_p[v],
         vertex_sign.empty() ? 0 : vertex_sign[v],
         static_cast<int>(legs[v].size())};
    l.insert(l.end(), legs[v].begin(), legs[v].end());
  }
  return c;
}

std::vector<int> refine_colors(const Colored& c) {
  const int n = c.n;
  auto rank_of = [n](const std::vector<std::vector<int>>& sigs) {
    std::vector<std::vector<int>> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v) {
      colors[v] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sigs[v]) -
          sorted.begin());
    }
    return std::pair{colors, static_cast<int>(sorted.size())};
  };

  auto [colors, classes] = rank_of(c.label);
  while (true) {
    std::vector<std::vector<int>> sigs(n);
    for (int v = 0; v < n; ++v) {
      std::vector<std::pair<int, int>> nbr;
      for (int u = 0; u < n; ++u) {
        if (u != v && c.at(v, u) != 0) nbr.emplace_back(colors[u], c.at(v, u));
      }
      std::sort(nbr.begin(), nbr.end());
      auto& s = sigs[v];
      s.push_back(colors[v]);
      for (auto [col, m] : nbr) {
        s.push_back(col);
        s.push_back(m);
      }
    }
    auto [next, next_classes] = rank_of(sigs);
    colors = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return colors;
}

namespace {

void push_byte(std::vector<std::uint8_t>& out, int x) {
  if (x < 0 || x > 255) {
    throw ResourceError("canonical encoding value " + std::to_string(x) +
                        " exceeds one byte");
  }
  out.push_back(static_cast<std::uint8_t>(x));
}

class MinimalOrder {
 public:
  MinimalOrder(const Colored& c, std::vector<int> cell_of_position)
      : c_(c), cell_of_position_(std::move(cell_of_position)) {}

  std::vector<std::uint8_t> run(const std::vector<int>& colors) {
    colors_ = &colors;
    used_.assign(c_.n, false);
    order_.clear();
    search(0, false);
    return best_;
  }

 private:
  std::vector<std::uint8_t> row(int x) const {
    std::vector<std::uint8_t> r;
    for (int value : c_.label[x]) push_byte(r, value);
    for (int y : order_) {
      const int m = c_.at(x, y);
      push_byte(r, m >> 8);
      push_byte(r, m & 0xff);
    }
    return r;
  }

  // better: current prefix is already strictly smaller than best_.
  void search(int k, bool better) {
    if (k == c_.n) {
      if (better || !have_best_) {
        best_ = current_;
        have_best_ = true;
      }
      return;
    }
    for (int x = 0; x < c_.n; ++x) {
      if (used_[x] || (*colors_)[x] != cell_of_position_[k]) continue;
      auto r = row(x);
      bool child_better = better;
      if (have_best_ && !better) {
        const auto begin = best_.begin() + static_cast<long>(current_.size());
        const auto cmp = std::lexicographical_compare_three_way(
            r.begin(), r.end(), begin, begin + static_cast<long>(r.size()));
        if (cmp > 0) continue;
        child_better = cmp < 0;
      }
      used_[x] = true;
      order_.push_back(x);
      const std::size_t mark = current_.size();
      current_.insert(current_.end(), r.begin(), r.end());
      search(k + 1, child_better);
      current_.resize(mark);
      order_.pop_back();
      used_[x] = false;
    }
  }

  const Colored& c_;
  std::vector<int> cell_of_position_;
  const std::vector<int>* colors_ = nullptr;
  std::vector<bool> used_;
  std::vector<int> order_;
  std::vector<std::uint8_t> current_;
  std::vector<std::uint8_t> best_;
  bool have_best_ = false;
};

}  // namespace

std::vector<std::uint8_t> canonical_encoding(const Colored& c) {
  const auto colors = refine_colors(c);
  std::vector<int> cell_of_position = colors;
  std::sort(cell_of_position.begin(), cell_of_position.end());
  std::vector<std::uint8_t> out;
  push_byte(out, c.n);
  MinimalOrder search(c, std::move(cell_of_position));
  auto body = search.run(colors);
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

void for_each_vertex_map(const Colored& a, const Colored& b,
                         const std::function<bool(const std::vector<int>&)>& visit) {
  if (a.n != b.n) return;
  const int n = a.n;
  // Refine the disjoint union so colours are comparable across a and b.
  Colored both;
  both.n = 2 * n;
  both.label = a.label;
  both.label.insert(both.label.end(), b.label.begin(), b.label.end());
  both.mult.assign(both.n * both.n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      both.mult[u * both.n + v] = a.at(u, v);
      both.mult[(u + n) * both.n + (v + n)] = b.at(u, v);
    }
  }
  const auto colors = refine_colors(both);

  std::vector<int> sigma(n, -1);
  std::vector<bool> used(n, false);
  bool stop = false;
  std::function<void(int)> extend = [&](int k) {
    if (stop) return;
    if (k == n) {
      if (!visit(sigma)) stop = true;
      return;
    }
    for (int y = 0; y < n && !stop; ++y) {
      if (used[y] || colors[y + n] != colors[k]) continue;
      if (a.label[k] != b.label[y]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) {
        ok = a.at(k, j) == b.at(y, sigma[j]);
      }
      if (!ok) continue;
      used[y] = true;
      sigma[k] = y;
      extend(k + 1);
      used[y] = false;
      sigma[k] = -1;
    }
  };
  extend(0);
}

}  // namespace detail

namespace {

std::string to_hex(char kind, const std::vector<std::uint8_t>& bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 + 2 * bytes.size());
  auto put = [&](unsigned x) {
    out.push_back(kDigits[(x >> 4) & 0xf]);
    out.push_back(kDigits[x & 0xf]);
  };
  put(static_cast<unsigned char>(kind));
  for (auto b : bytes) put(b);
  return out;
}

}  // namespace

std::string canonical_key(const Graph& g) {
  return to_hex('G', detail::canonical_encoding(detail::make_colored(g, nullptr, {})));
}

std::string canonical_key(const Graph& g, const EdgeSet& p) {
  if (p.size() != g.num_edges()) {
    throw InputError("edge set does not belong to this graph");
  }
  return to_hex('C', detail::canonical_encoding(detail::make_colored(g, &p, {})));
}

std::string canonical_key(const Graph& g, const SpinStructure& s) {
  const auto comps = pbar_components(g, s.cycle());
  std::vector<std::uint8_t> vertex_sign(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    vertex_sign[v] = s.sign()[comps.component_of[v]];
  }
  return to_hex('S', detail::canonical_encoding(
                         detail::make_colored(g, &s.cycle(), vertex_sign)));
}

namespace {

// Extends a vertex bijection to half-edges: parallel edges are matched in
// order and loops keep their half-edge orientation.
GraphMap extend_to_half_edges(const Graph& a, const Graph& b,
                              const std::vector<int>& sigma) {
  GraphMap m;
  m.vertex = sigma;
  m.half_edge.assign(a.num_half_edges(), -1);
  std::map<std::pair<int, int>, std::vector<int>> b_edges;
  for (int e = 0; e < b.num_edges(); ++e) {
    auto [u, v] = b.ends(e);
    b_edges[{std::min(u, v), std::max(u, v)}].push_back(e);
  }
  std::map<std::pair<int, int>, std::size_t> next;
  for (int e = 0; e < a.num_edges(); ++e) {
    auto [u, v] = a.ends(e);
    const int su = sigma[u];
    const int sv = sigma[v];
    const std::pair key{std::min(su, sv), std::max(su, sv)};
    const int f = b_edges.at(key).at(next[key]++);
    const auto& ea = a.edge(e);
    const auto& eb = b.edge(f);
    if (b.endpoint(eb.h0) == su) {
      m.half_edge[ea.h0] = eb.h0;
      m.half_edge[ea.h1] = eb.h1;
    } else {
      m.half_edge[ea.h0] = eb.h1;
      m.half_edge[ea.h1] = eb.h0;
    }
  }
  for (int i = 0; i < a.num_legs(); ++i) m.half_edge[a.legs()[i]] = b.legs()[i];
  return m;
}

}  // namespace

std::optional<GraphMap> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() ||
      a.num_legs() != b.num_legs()) {
    return std::nullopt;
  }
  const auto ca = detail::make_colored(a, nullptr, {});
  const auto cb = detail::make_colored(b, nullptr, {});
  std::optional<GraphMap> found;
  detail::for_each_vertex_map(ca, cb, [&](const std::vector<int>& sigma) {
    found = extend_to_half_edges(a, b, sigma);
    return false;
  });
  return found;
}

}  // namespace spinmod
