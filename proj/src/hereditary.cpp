#include "pivd/hereditary.hpp"

#include <algorithm>
#include <stdexcept>

#include "pivd/canonical.hpp"
#include "pivd/config.hpp"
#include "pivd/error.hpp"
#include "pivd/planarity.hpp"
#include "pivd/subgraph.hpp"

namespace pivd {

int compare_alpha(const AlphaSequence& a, const AlphaSequence& b) {
  size_t k = std::min(a.size(), b.size());
  for (size_t i = 0; i < k; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

AlphaSequence alpha_sequence_at(const Graph& h, int c) {
  if (c < 0 || c >= h.order()) throw InvalidArgument("alpha: vertex out of range");
  std::vector<int> rest;
  for (int v = 0; v < h.order(); ++v)
    if (v != c) rest.push_back(v);
  AlphaSequence sizes;
  for (const auto& comp : connected_components(induced_subgraph(h, rest)))
    sizes.push_back(static_cast<int>(comp.size()));
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

std::pair<AlphaSequence, int> alpha_sequence(const Graph& h) {
  if (h.order() == 0) throw InvalidArgument("alpha: graph must have at least one vertex");
  if (!is_connected(h)) throw InvalidArgument("alpha: graph must be connected");
  AlphaSequence best;
  int witness = -1;
  for (int c = 0; c < h.order(); ++c) {
    AlphaSequence cur = alpha_sequence_at(h, c);
    if (witness < 0 || compare_alpha(cur, best) < 0) {
      best = std::move(cur);
      witness = c;
    }
  }
  return {best, witness};
}

GammaKey gamma_key(const Graph& h) {
  if (!is_connected(h)) throw InvalidArgument("gamma key: graph must be connected");
  return {alpha_sequence(h).first, canonical_certificate(h)};
}

int compare(const GammaSequence& a, const GammaSequence& b) {
  size_t k = std::min(a.keys.size(), b.keys.size());
  for (size_t i = 0; i < k; ++i)
    if (int c = compare(a.keys[i], b.keys[i])) return c;
  if (a.keys.size() != b.keys.size()) return a.keys.size() < b.keys.size() ? -1 : 1;
  return 0;
}

GammaSequence gamma_sequence(const Graph& h) {
  if (h.order() == 0) throw InvalidArgument("gamma sequence: graph must have at least one vertex");
  GammaSequence seq;
  for (const auto& comp : connected_components(h))
    seq.keys.push_back(gamma_key(induced_subgraph(h, comp)));
  std::sort(seq.keys.begin(), seq.keys.end(),
            [](const GammaKey& a, const GammaKey& b) { return compare(b, a) < 0; });
  return seq;
}

ForbiddenFamily normalize_family(std::vector<Graph> graphs) {
  for (const Graph& g : graphs)
    if (g.order() == 0) throw InvalidArgument("family member with zero vertices");

  // isomorphism dedup
  std::vector<Graph> unique_members;
  std::vector<std::vector<uint8_t>> certs;
  for (Graph& g : graphs) {
    auto cert = canonical_certificate(g);
    bool dup = false;
    for (const auto& c : certs)
      if (c == cert) {
        dup = true;
        break;
      }
    if (!dup) {
      certs.push_back(std::move(cert));
      unique_members.push_back(std::move(g));
    }
  }

  // minimality: drop members containing another member induced
  std::vector<Graph> minimal;
  for (size_t i = 0; i < unique_members.size(); ++i) {
    bool contains_other = false;
    for (size_t k = 0; k < unique_members.size(); ++k) {
      if (i == k) continue;
      if (unique_members[k].order() > unique_members[i].order()) continue;
      if (contains_induced(unique_members[i], unique_members[k])) {
        contains_other = true;
        break;
      }
    }
    if (!contains_other) minimal.push_back(unique_members[i]);
  }

  std::vector<std::pair<GammaSequence, Graph>> keyed;
  for (Graph& g : minimal) keyed.emplace_back(gamma_sequence(g), std::move(g));
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });

  ForbiddenFamily family;
  for (auto& [seq, g] : keyed) {
    if (g.order() == 1) family.k1_warning = true;
    if (g.order() > default_order_cap())
      family.warnings.push_back("member of order " + std::to_string(g.order()) +
                                " exceeds the order cap " + std::to_string(default_order_cap()) +
                                "; canonical forms may be slow");
    family.members.push_back(std::move(g));
  }
  if (family.k1_warning)
    family.warnings.push_back("single-vertex member: only the empty graph satisfies the property");
  return family;
}

PropertyClass classify(const ForbiddenFamily& family) {
  int d = 0;
  for (const Graph& g : family.members)
    if (g.size() == 0 && (d == 0 || g.order() < d)) d = g.order();
  if (d > 0) return {PropertyClass::ExcludesIndependentSet, d};
  return {PropertyClass::ContainsAllIndependentSets, 0};
}

std::optional<MembershipWitness> membership_witness(const Graph& g, const ForbiddenFamily& family) {
  for (size_t i = 0; i < family.members.size(); ++i)
    if (auto phi = contains_induced(g, family.members[i]))
      return MembershipWitness{static_cast<int>(i), std::move(*phi)};
  return std::nullopt;
}

std::optional<MembershipWitness> membership_witness(const Graph& g, const ForbiddenFamily& family,
                                                    const std::vector<uint64_t>& alive) {
  for (size_t i = 0; i < family.members.size(); ++i)
    if (auto phi = contains_induced(g, family.members[i], alive))
      return MembershipWitness{static_cast<int>(i), std::move(*phi)};
  return std::nullopt;
}

bool member_free(const Graph& g, const ForbiddenFamily& family) {
  return !membership_witness(g, family).has_value();
}

ForbiddenFamily complement_family(const ForbiddenFamily& family) {
  std::vector<Graph> comp;
  for (const Graph& g : family.members) comp.push_back(complement(g));
  ForbiddenFamily result = normalize_family(std::move(comp));
  // Complementation is an automorphism of the induced-subgraph order, so
  // minimality carries over; a drop here would be a bug.
  if (result.members.size() != family.members.size())
    throw std::logic_error("complement family lost members during normalization");
  return result;
}

Graph select_h_pi(const ForbiddenFamily& family, bool planar_only) {
  if (family.members.empty()) throw InvalidArgument("empty family");
  const Graph* best = nullptr;
  GammaSequence best_seq;
  for (const Graph& g : family.members) {
    if (planar_only && !is_planar(g)) continue;
    GammaSequence seq = gamma_sequence(g);
    if (!best || compare(seq, best_seq) < 0) {
      best = &g;
      best_seq = std::move(seq);
    }
  }
  if (!best)
    throw IncompatibleError("no planar member: the property excludes no planar graph");
  return *best;
}

GadgetPlan build_gadget_plan(const Graph& h_pi, CPrimeMode cprime, bool allow_edgeless) {
  if (h_pi.order() == 0) throw InvalidArgument("gadget plan: empty graph");
  if (h_pi.size() == 0 && !allow_edgeless)
    throw IncompatibleError(
        "gadget plan: edgeless forbidden graph; the property excludes an independent set, use a "
        "complement construction instead");

  GadgetPlan plan;
  plan.h_pi = h_pi;
  plan.delta_max_degree = h_pi.max_degree();
  plan.delta_degeneracy = degeneracy(h_pi).degeneracy;

  auto comps = connected_components(h_pi);
  std::vector<GammaKey> keys;
  for (const auto& comp : comps) keys.push_back(gamma_key(induced_subgraph(h_pi, comp)));
  size_t h1_idx = 0;
  for (size_t i = 1; i < comps.size(); ++i)
    if (keys[h1_idx] < keys[i]) h1_idx = i;
  plan.d = 0;
  for (const auto& key : keys)
    if (key == keys[h1_idx]) ++plan.d;

  const std::vector<int>& h1_verts = comps[h1_idx];
  plan.h1 = induced_subgraph(h_pi, h1_verts);

  if (plan.h1.size() == 0) {
    // Only possible for an edgeless h_pi forced through: keep a plan usable
    // for inspection, unusable for constructions.
    plan.degenerate = true;
    plan.c = 0;
    plan.j = plan.h1;
    plan.d_graph = plan.h1;
    plan.j_vertices = {0};
    plan.d_vertices = {0};
    return plan;
  }

  plan.c = alpha_sequence(plan.h1).second;

  // J: largest component of h1 - c; ties by smallest gamma key, then by the
  // lexicographically smallest vertex set. Determinism is all that matters.
  std::vector<int> rest;
  for (int v = 0; v < plan.h1.order(); ++v)
    if (v != plan.c) rest.push_back(v);
  auto pieces = connected_components(induced_subgraph(plan.h1, rest));
  auto unlocal = [&](const std::vector<int>& piece) {
    std::vector<int> ids;
    for (int x : piece) ids.push_back(rest[x]);
    return ids;
  };
  size_t best_piece = 0;
  GammaKey best_key;
  for (size_t i = 0; i < pieces.size(); ++i) {
    GammaKey key = gamma_key(induced_subgraph(plan.h1, unlocal(pieces[i])));
    if (i == 0) {
      best_key = key;
      continue;
    }
    const auto& cur = pieces[i];
    const auto& best_v = pieces[best_piece];
    bool better = cur.size() > best_v.size();
    if (cur.size() == best_v.size()) {
      int kc = compare(key, best_key);
      better = kc < 0 || (kc == 0 && unlocal(cur) < unlocal(best_v));
    }
    if (better) {
      best_piece = i;
      best_key = key;
    }
  }

  plan.j_vertices = unlocal(pieces[best_piece]);
  plan.j_vertices.push_back(plan.c);
  std::sort(plan.j_vertices.begin(), plan.j_vertices.end());
  plan.j = induced_subgraph(plan.h1, plan.j_vertices);
  plan.c_in_j = static_cast<int>(
      std::lower_bound(plan.j_vertices.begin(), plan.j_vertices.end(), plan.c) -
      plan.j_vertices.begin());

  if (cprime == CPrimeMode::DegeneracyOrdering) {
    auto ordering = degeneracy(plan.j).ordering;
    for (auto it = ordering.rbegin(); it != ordering.rend(); ++it)
      if (*it != plan.c_in_j) {
        plan.cprime_in_j = *it;
        break;
      }
  } else {
    for (int v = 0; v < plan.j.order(); ++v)
      if (v != plan.c_in_j) {
        plan.cprime_in_j = v;
        break;
      }
  }

  plan.d_vertices = {plan.c};
  for (int v = 0; v < plan.h1.order(); ++v)
    if (v != plan.c &&
        !std::binary_search(plan.j_vertices.begin(), plan.j_vertices.end(), v))
      plan.d_vertices.push_back(v);
  std::sort(plan.d_vertices.begin(), plan.d_vertices.end());
  plan.d_graph = induced_subgraph(plan.h1, plan.d_vertices);
  plan.c_in_d = static_cast<int>(
      std::lower_bound(plan.d_vertices.begin(), plan.d_vertices.end(), plan.c) -
      plan.d_vertices.begin());

  if (plan.j.order() < 2) throw std::logic_error("gadget plan: J has fewer than two vertices");
  return plan;
}

}  // namespace pivd
