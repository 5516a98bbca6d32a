#include "spinmod/spin.hpp"

#include <algorithm>
#include <string>

#include "spinmod/error.hpp"

namespace spinmod {

namespace {

std::uint64_t pow2(int k) {
  if (k < 0 || k >= 64) throw ResourceError("2^" + std::to_string(k) + " overflows");
  return std::uint64_t{1} << k;
}

std::string describe(const Graph& g) {
  return "graph(|V|=" + std::to_string(g.num_vertices()) +
         ", |E|=" + std::to_string(g.num_edges()) +
         ", |L|=" + std::to_string(g.num_legs()) +
         ", g=" + std::to_string(genus(g)) + ")";
}

}  // namespace

SpinStructure::SpinStructure(const Graph& g, EdgeSet p,
                             std::vector<std::uint8_t> sign)
    : p_(std::move(p)), sign_(std::move(sign)) {
  if (p_.size() != g.num_edges()) {
    throw InputError("edge set does not belong to this graph");
  }
  if (!is_cyclic(g, p_)) {
    throw DomainError("P = " + p_.to_hex() + " is not cyclic");
  }
  const auto comps = pbar_components(g, p_);
  if (static_cast<int>(sign_.size()) != comps.count()) {
    throw InputError("sign vector has " + std::to_string(sign_.size()) +
                     " entries but P̄ has " + std::to_string(comps.count()) +
                     " components");
  }
  int total = 0;
  for (int c = 0; c < comps.count(); ++c) {
    if (sign_[c] > 1) throw InputError("sign values must be 0 or 1");
    if (sign_[c] == 1 && comps.genus[c] == 0) {
      throw DomainError("sign 1 on genus-0 component " + std::to_string(c));
    }
    total += sign_[c];
  }
  parity_ = total % 2;
}

SpinStructure trivial_spin(const Graph& g) {
  const auto p = g.no_edges();
  return SpinStructure(g, p,
                       std::vector<std::uint8_t>(pbar_components(g, p).count(), 0));
}

std::vector<SpinStructure> SpinEnumeration::all() const {
  std::vector<SpinStructure> out = even;
  out.insert(out.end(), odd.begin(), odd.end());
  return out;
}

std::vector<SpinStructure> spin_structures_over(const Graph& g,
                                                const EdgeSet& p) {
  const auto comps = pbar_components(g, p);
  std::vector<int> positive;
  for (int c = 0; c < comps.count(); ++c) {
    if (comps.genus[c] > 0) positive.push_back(c);
  }
  std::vector<SpinStructure> out;
  const std::uint64_t n = pow2(static_cast<int>(positive.size()));
  out.reserve(n);
  for (std::uint64_t mask = 0; mask < n; ++mask) {
    std::vector<std::uint8_t> sign(comps.count(), 0);
    for (std::size_t i = 0; i < positive.size(); ++i) {
      sign[positive[i]] = (mask >> i) & 1U;
    }
    out.emplace_back(g, p, std::move(sign));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SpinEnumeration enumerate_spin(const Graph& g, int cap) {
  SpinEnumeration out;
  for (const auto& p : enumerate_cyclic(g, cap)) {
    for (auto& s : spin_structures_over(g, p)) {
      (s.even() ? out.even : out.odd).push_back(std::move(s));
    }
  }
  return out;
}

SpinCountReport spin_count_check(const Graph& g) {
  SpinCountReport r;
  r.b1 = first_betti(g);
  const bool weightless = g.total_weight() == 0;
  bool every_nonzero_has_one = true;

  for (const auto& p : enumerate_cyclic(g)) {
    const auto comps = pbar_components(g, p);
    SpinCountReport::PerCycle pc{p, comps.c_plus(), 0, 0};
    for (const auto& s : spin_structures_over(g, p)) {
      (s.even() ? pc.even : pc.odd) += 1;
    }
    r.closed_form += pow2(pc.c_plus);
    r.enumerated += pc.even + pc.odd;
    if (!p.empty() && pc.c_plus != 1) every_nonzero_has_one = false;

    const auto fail = [&](const std::string& what) {
      throw VerificationFailure(what + " on " + describe(g) + ", P=" + p.to_hex());
    };
    if (pc.even + pc.odd != pow2(pc.c_plus)) fail("|SP_(G,P)| != 2^{c+}");
    if (p.empty() && weightless) {
      if (pc.even != 1 || pc.odd != 0) fail("weightless P=0 split is not (1,0)");
    } else if (pc.even != pow2(pc.c_plus - 1) || pc.odd != pow2(pc.c_plus - 1)) {
      fail("even/odd split is not 2^{c+-1} each");
    }
    r.per_cycle.push_back(pc);
  }

  r.lower_bound = pow2(r.b1 + 1) - 1;
  r.tight = r.closed_form == r.lower_bound;
  if (r.closed_form != r.enumerated) {
    throw VerificationFailure("closed form " + std::to_string(r.closed_form) +
                              " != enumeration " + std::to_string(r.enumerated) +
                              " on " + describe(g));
  }
  if (r.closed_form < r.lower_bound) {
    throw VerificationFailure("|SP_G| below 2^{b1+1}-1 on " + describe(g));
  }
  if (r.tight != (weightless && every_nonzero_has_one)) {
    throw VerificationFailure("equality case of the lower bound fails on " +
                              describe(g));
  }
  return r;
}

int ThetaDivisors::degree() const {
  int d = graph_divisor.degree();
  for (int m : midpoint_mass) d += m;
  return d;
}

ThetaDivisors theta_divisors(const Graph& g, const EdgeSet& p) {
  if (p.size() != g.num_edges()) {
    throw InputError("edge set does not belong to this graph");
  }
  if (!is_cyclic(g, p)) {
    throw DomainError("P = " + p.to_hex() + " is not cyclic");
  }
  ThetaDivisors t;
  std::vector<int> deg(g.num_vertices(), 0);
  for (int e : p.indices()) {
    auto [u, v] = g.ends(e);
    ++deg[u];
    ++deg[v];
  }
  t.graph_divisor.values.resize(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    t.graph_divisor.values[v] = g.weight(v) - 1 + deg[v] / 2;
  }
  t.midpoint_mass.assign(g.num_edges(), 0);
  for (int e : p.complement().indices()) t.midpoint_mass[e] = 1;
  return t;
}

StratumCount stratum_counts(const Graph& g) {
  if (!is_stable(g)) throw DomainError("stratum counts need a stable graph");
  const int b = first_betti(g);
  const int w = g.total_weight();
  const int gen = genus(g);
  StratumCount out;
  for (const auto& p : enumerate_cyclic(g)) {
    StratumCount::PerCycle pc;
    pc.p = p;
    pc.b1_p = first_betti(g, p);
    pc.point_count = pow2(pc.b1_p + 2 * w);
    pc.length_per_point = pow2(b - pc.b1_p);
    pc.total = pc.point_count * pc.length_per_point;
    if (pc.total != pow2(b + 2 * w)) {
      throw VerificationFailure("per-P length is not 2^{b+2|w|} on " +
                                describe(g) + ", P=" + p.to_hex());
    }
    // <P> connected: the edges of P meet a single component of (V, P).
    const auto comps = pbar_components(g, p);
    int touched = -1;
    bool connected = !p.empty();
    for (int e : p.indices()) {
      const int c = comps.component_of[g.ends(e).first];
      if (touched >= 0 && c != touched) connected = false;
      touched = c;
    }
    pc.split_applies = connected && pc.b1_p != 0;
    if (pc.split_applies) {
      pc.odd_points = pc.even_points = pow2(pc.b1_p + 2 * w - 1);
      if (pc.odd_points + pc.even_points != pc.point_count) {
        throw VerificationFailure("odd/even point split does not add up on " +
                                  describe(g) + ", P=" + p.to_hex());
      }
    }
    // Points factor over the components of P̄.
    std::uint64_t product = 1;
    std::vector<int> comp_weight(comps.count(), 0);
    for (int v = 0; v < g.num_vertices(); ++v) {
      comp_weight[comps.component_of[v]] += g.weight(v);
    }
    for (int c = 0; c < comps.count(); ++c) {
      const int b1c = comps.genus[c] - comp_weight[c];
      product *= pow2(b1c + 2 * comp_weight[c]);
    }
    if (product != pc.point_count) {
      throw VerificationFailure("component product of point counts differs on " +
                                describe(g) + ", P=" + p.to_hex());
    }
    out.grand_total += pc.total;
    out.per_p.push_back(pc);
  }
  if (out.grand_total != pow2(2 * gen)) {
    throw VerificationFailure("total length " + std::to_string(out.grand_total) +
                              " != 2^{2g} on " + describe(g));
  }
  return out;
}

int h0_general(const SpinGraph& sg) {
  int total = 0;
  for (auto s : sg.spin.sign()) total += s;
  return total;
}

GCollections g_collections(const Graph& g) {
  const auto cls = classify(g);
  if (!cls.basic) throw DomainError("G-collections need a basic graph");
  GCollections out;
  out.count = 1;
  for (int v = 0; v < g.num_vertices(); ++v) {
    const auto [w, j] = *cls.vertex_classes[v];
    if (w == 0 && j == 0) continue;
    std::vector<int> indices =
        w == 0 ? std::vector<int>{1, 2} : std::vector<int>{1, 2, 3, 4};
    out.count *= indices.size();
    out.index_sets.emplace_back(v, std::move(indices));
  }
  return out;
}

}  // namespace spinmod
