#include "spinmod/tropical.hpp"

#include <algorithm>
#include <set>

#include "spinmod/canonical.hpp"
#include "spinmod/error.hpp"

namespace spinmod {

bool TropicalCurve::finite() const {
  return std::none_of(lengths.begin(), lengths.end(),
                      [](const ExtRational& l) { return l.is_inf(); });
}

void validate(const TropicalCurve& c) {
  if (static_cast<int>(c.lengths.size()) != c.graph.num_edges()) {
    throw InputError("expected " + std::to_string(c.graph.num_edges()) +
                     " lengths, got " + std::to_string(c.lengths.size()));
  }
  for (const auto& l : c.lengths) {
    if (l < ExtRational(0)) throw InputError("negative edge length " + l.to_string());
  }
}

void validate(const FamilyDescriptor& fam) {
  if (static_cast<int>(fam.val.size()) != fam.special.graph.num_edges()) {
    throw InputError("expected " + std::to_string(fam.special.graph.num_edges()) +
                     " valuations, got " + std::to_string(fam.val.size()));
  }
  for (std::size_t e = 0; e < fam.val.size(); ++e) {
    if (!fam.val[e].positive()) {
      throw InputError("valuation of edge " + std::to_string(e) + " is not positive");
    }
  }
}

ConeComplex build_cone_complex(int g, int n, const Budget& budget,
                               std::size_t max_exhaustive, std::size_t samples) {
  ConeComplex cx;
  cx.g = g;
  cx.n = n;
  const Poset poset = build_spin_poset(g, n, budget);
  cx.stats = poset_stats(poset);
  cx.components = cx.stats.components;
  cx.failures = cx.stats.failures;

  for (const auto& node : poset.nodes) {
    ConeCell cell;
    cell.cls = node;
    cell.dim = node.graph.num_edges();
    cell.aut_order = automorphisms(node.graph, node.spin).edge_order();
    cx.cells.push_back(std::move(cell));
  }
  for (auto [u, l] : poset.covers) cx.cells[l].face_of.push_back(u);

  const int top = 3 * g - 3 + n;
  cx.pure = cx.stats.pure && cx.stats.graded && !cx.cells.empty();
  for (const auto& c : cx.cells) {
    if (c.dim > top) cx.pure = false;
  }
  if (!cx.pure && !cx.cells.empty()) cx.failures.push_back("cone complex is not pure");

  // Face relation: σ' is a face of σ iff some contraction carries the upper
  // spin graph onto the lower one.
  const PosetOrder order(poset);
  const std::size_t nc = cx.cells.size();
  auto compare = [&](std::size_t a, std::size_t b) {
    ++cx.face_pairs_checked;
    const auto& ua = cx.cells[a].cls;
    const auto& lb = cx.cells[b].cls;
    bool face = false;
    if (ua.rank >= lb.rank) {
      face = order_test({ua.graph, ua.spin}, {lb.graph, lb.spin}).has_value();
    }
    if (face != order.geq(static_cast<int>(a), static_cast<int>(b))) {
      cx.failures.push_back("face relation and poset order disagree on " + ua.key +
                            " / " + lb.key);
    }
  };
  if (nc <= max_exhaustive) {
    for (std::size_t a = 0; a < nc; ++a) {
      for (std::size_t b = 0; b < nc; ++b) compare(a, b);
    }
  } else if (nc > 0) {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, nc - 1);
    for (std::size_t i = 0; i < samples; ++i) {
      std::size_t a = pick(rng);
      std::size_t b = pick(rng);
      if (cx.cells[a].dim < cx.cells[b].dim) std::swap(a, b);
      compare(a, b);
    }
  }
  return cx;
}

TropicalCurve pi_trop(const SpinTropicalCurve& psi) {
  validate(psi.curve);
  TropicalCurve out = psi.curve;
  for (int e = 0; e < out.graph.num_edges(); ++e) {
    if (!psi.spin.cycle().contains(e)) out.lengths[e] = out.lengths[e] * ExtRational(2);
  }
  return out;
}

AutGroup length_automorphisms(const TropicalCurve& c) {
  validate(c);
  const AutGroup full = automorphisms(c.graph);
  std::vector<GraphMap> keep;
  for (const auto& a : full.elements()) {
    const auto perm = edge_permutation(c.graph, a);
    bool ok = true;
    for (int e = 0; e < c.graph.num_edges() && ok; ++e) {
      ok = c.lengths[perm[e]] == c.lengths[e];
    }
    if (ok) keep.push_back(a);
  }
  return AutGroup(c.graph, std::move(keep));
}

std::vector<SpinTropicalCurve> pi_trop_fiber(const TropicalCurve& c) {
  validate(c);
  if (!is_stable(c.graph)) throw DomainError("pi_trop fiber needs a stable curve");
  const AutGroup aut = length_automorphisms(c);
  std::set<SpinStructure> seen;
  std::vector<SpinTropicalCurve> out;
  for (const auto& s : enumerate_spin(c.graph).all()) {
    SpinStructure least = s;
    for (const auto& a : aut.elements()) least = std::min(least, act(c.graph, a, s));
    if (!seen.insert(least).second) continue;
    SpinTropicalCurve psi{c, s};
    for (int e = 0; e < c.graph.num_edges(); ++e) {
      if (!s.cycle().contains(e)) {
        psi.curve.lengths[e] = psi.curve.lengths[e] / ExtRational(2);
      }
    }
    out.push_back(std::move(psi));
  }
  return out;
}

SpinTropicalCurve trop_family(const FamilyDescriptor& fam) {
  validate(fam);
  return {{fam.special.graph, fam.val}, fam.special.spin};
}

TropicalCurve family_stable_model(const FamilyDescriptor& fam) {
  validate(fam);
  const Graph& g = fam.special.graph;
  // π#(t_e) = h_e^k: k = 2 where the node was blown up, else 1.
  std::vector<int> exponent(g.num_edges(), 1);
  const Graph blown = blow_up(g, fam.special.spin.cycle().complement());
  for (int v = g.num_vertices(); v < blown.num_vertices(); ++v) {
    // Each exceptional vertex sits on one former edge, found through its
    // half-edges' partners.
    for (int h = 0; h < blown.num_half_edges(); ++h) {
      if (blown.endpoint(h) != v) continue;
      exponent[g.edge_of(blown.involution(h))] = 2;
    }
  }
  TropicalCurve out{g, fam.val};
  for (int e = 0; e < g.num_edges(); ++e) {
    out.lengths[e] = out.lengths[e] * ExtRational(exponent[e]);
  }
  return out;
}

bool diagram_check(const FamilyDescriptor& fam) {
  return pi_trop(trop_family(fam)) == family_stable_model(fam);
}

GenericFiber family_generic_fiber(const FamilyDescriptor& fam) {
  validate(fam);
  const Graph& g = fam.special.graph;
  EdgeSet s0 = g.no_edges();
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!fam.val[e].is_inf()) s0.insert(e);
  }
  Contraction c = contract(g, s0);
  SpinStructure pushed = push_spin(c, fam.special.spin);
  SpinGraph fiber{c.target, pushed};
  auto witness = order_test(fam.special, fiber);
  if (!witness) {
    throw VerificationFailure("no contraction witnesses " +
                              canonical_key(fam.special) + " >= " +
                              canonical_key(fiber));
  }
  return {std::move(fiber), std::move(c), std::move(*witness)};
}

FamilyDescriptor random_family(const SpinGraph& sg, std::mt19937_64& rng) {
  FamilyDescriptor fam{sg, {}};
  std::uniform_int_distribution<int> quarter(0, 3);
  std::uniform_int_distribution<std::int64_t> num(1, 20);
  std::uniform_int_distribution<std::int64_t> den(1, 6);
  for (int e = 0; e < sg.graph.num_edges(); ++e) {
    if (quarter(rng) == 0) {
      fam.val.push_back(ExtRational::infinity());
    } else {
      const auto p = num(rng);
      fam.val.emplace_back(p, den(rng));
    }
  }
  return fam;
}

}  // namespace spinmod
