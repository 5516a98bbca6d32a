#include "spinmod/refine.hpp"

#include <string>

#include "spinmod/canonical.hpp"
#include "spinmod/cycles.hpp"
#include "spinmod/error.hpp"

namespace spinmod {

namespace {

struct Split {
  Graph graph;
  int new_edge = -1;
};

// u1 keeps v's id; u2 is appended. The new edge's half-edges are appended.
Split split_vertex(const Graph& g, int v, const std::vector<int>& to_u2_half,
                   int w1, const std::vector<int>& to_u2_legs) {
  std::vector<Vertex> vertices = g.vertices();
  const int u2 = g.num_vertices();
  const int w = vertices[v].weight;
  vertices[v].weight = w1;
  vertices.push_back({w - w1, false});
  std::vector<int> endpoint(g.endpoints().begin(), g.endpoints().end());
  std::vector<int> involution(g.involutions().begin(), g.involutions().end());
  for (int h : to_u2_half) endpoint[h] = u2;
  for (int h : to_u2_legs) endpoint[h] = u2;
  const int a = g.num_half_edges();
  endpoint.push_back(v);
  endpoint.push_back(u2);
  involution.push_back(a + 1);
  involution.push_back(a);
  Graph out(std::move(vertices), std::move(endpoint), std::move(involution),
            std::vector<int>(g.legs().begin(), g.legs().end()));
  const int e = out.edge_of(a);
  return {std::move(out), e};
}

bool lifts_to_whole(const Contraction& c, const SpinStructure& s, int sign) {
  const SpinStructure pushed = push_spin(c, s);
  return pushed.cycle() == c.target.all_edges() && pushed.sign().size() == 1 &&
         pushed.sign()[0] == sign;
}

}  // namespace

std::vector<std::string> refinement_failures(const Graph& g, int sign,
                                             const Refinement& r) {
  std::vector<std::string> out;
  const Graph& h = r.refined.graph;
  const SpinStructure& s = r.refined.spin;

  if (h.num_edges() != g.num_edges() + 1) out.push_back("edge count is not |E|+1");
  if (first_betti(h) != first_betti(g)) out.push_back("b1 changed");
  if (!is_stable(h)) out.push_back("refined graph is not stable");
  if (pbar_components(h, s.cycle()).count() != 1) {
    out.push_back("spin structure is not connected");
  }
  if (!(r.witness.target == g) || r.witness.contracted != EdgeSet::of(h.num_edges(), {r.new_edge})) {
    out.push_back("witness does not contract the new edge onto G");
  } else if (!lifts_to_whole(r.witness, s, sign)) {
    out.push_back("witness does not push (P', s') to (G, G, s)");
  }

  if (automorphisms(h, s).order() != automorphisms(h).order()) {
    out.push_back("Aut(G', P', s') is a proper subgroup of Aut(G')");
  }

  const std::string g_key = canonical_key(g);
  std::vector<Contraction> onto_g;
  for (int e = 0; e < h.num_edges(); ++e) {
    Contraction c = contract(h, EdgeSet::of(h.num_edges(), {e}));
    if (canonical_key(c.target) == g_key) onto_g.push_back(std::move(c));
  }
  // Contracting onto an isomorphic copy of G: compare pushed structures up to
  // isomorphism with (G, G, s).
  const SpinStructure whole(g, g.all_edges(), {static_cast<std::uint8_t>(sign)});
  const std::string whole_key = canonical_key(g, whole);
  auto reaches_whole = [&](const Contraction& c, const SpinStructure& t) {
    return canonical_key(c.target, push_spin(c, t)) == whole_key;
  };
  for (const auto& c : onto_g) {
    if (!reaches_whole(c, s)) {
      out.push_back("a contraction G' -> G does not push (P', s') to (G, G, s)");
      break;
    }
  }
  for (const auto& t : enumerate_spin(h).all()) {
    if (t == s) continue;
    for (const auto& c : onto_g) {
      if (reaches_whole(c, t)) {
        out.push_back("another spin structure (P=" + t.cycle().to_hex() +
                      ") also lifts (G, G, s)");
        break;
      }
    }
  }
  return out;
}

Refinement refine_nonbasic(const Graph& g, int sign) {
  if (sign != 0 && sign != 1) throw InputError("sign must be 0 or 1");
  const auto cls = classify(g);
  if (!is_stable(g) || !cls.eulerian || genus(g) < 2 || g.num_edges() == 0) {
    throw DomainError(
        "refinement needs a stable Eulerian graph of genus >= 2 with edges");
  }
  if (cls.basic) throw DomainError("graph is basic");

  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<int> halves;
    std::vector<int> legs;
    for (int h = 0; h < g.num_half_edges(); ++h) {
      if (g.endpoint(h) != v) continue;
      (g.involution(h) == h ? legs : halves).push_back(h);
    }
    // Legs in leg order.
    legs.clear();
    for (int h : g.legs()) {
      if (g.endpoint(h) == v) legs.push_back(h);
    }
    if (halves.size() > 20) throw ResourceError("vertex degree too large to split");

    for (std::uint32_t hmask = 0; hmask < (1U << halves.size()); ++hmask) {
      std::vector<int> to_u2;
      for (std::size_t i = 0; i < halves.size(); ++i) {
        if ((hmask >> i) & 1U) to_u2.push_back(halves[i]);
      }
      for (int w1 = 0; w1 <= g.weight(v); ++w1) {
        for (std::uint32_t lmask = 0; lmask < (1U << legs.size()); ++lmask) {
          std::vector<int> legs_u2;
          for (std::size_t i = 0; i < legs.size(); ++i) {
            if ((lmask >> i) & 1U) legs_u2.push_back(legs[i]);
          }
          Split split = split_vertex(g, v, to_u2, w1, legs_u2);
          const Graph& h = split.graph;
          if (!is_stable(h)) continue;

          EdgeSet p = h.all_edges();
          if (!is_cyclic(h, p)) {
            p.erase(split.new_edge);
            if (!is_cyclic(h, p)) continue;
          }
          if (pbar_components(h, p).count() != 1) continue;

          Refinement r;
          r.split_vertex = v;
          r.new_edge = split.new_edge;
          r.refined = {h, SpinStructure(h, p, {static_cast<std::uint8_t>(sign)})};
          r.witness = contract(h, EdgeSet::of(h.num_edges(), {split.new_edge}));
          if (refinement_failures(g, sign, r).empty()) return r;
        }
      }
    }
  }
  throw VerificationFailure("no one-edge refinement of " + canonical_key(g) +
                            " with sign " + std::to_string(sign) +
                            " passes all checks");
}

}  // namespace spinmod
