#include "pivd/reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include "pivd/canonical.hpp"
#include "pivd/enumerate.hpp"
#include "pivd/error.hpp"
#include "pivd/planarity.hpp"

namespace pivd {

namespace {

struct Assembly {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<OriginTag> origin;

  int add(OriginTag tag) {
    origin.push_back(tag);
    return n++;
  }
  void link(int u, int v) { edges.emplace_back(u, v); }

  // Copy `g` into the assembly; `pinned[local] >= 0` reuses an existing
  // output vertex, other vertices are created with tag_for(local).
  template <typename TagFor>
  std::vector<int> copy(const Graph& g, const std::vector<int>& pinned, TagFor tag_for) {
    std::vector<int> out(g.order(), -1);
    for (int v = 0; v < g.order(); ++v)
      out[v] = pinned[v] >= 0 ? pinned[v] : add(tag_for(v));
    for (const auto& [u, v] : g.edges()) link(out[u], out[v]);
    return out;
  }

  Graph graph() const { return Graph::build(n, edges); }
};

void require_usable(const GadgetPlan& plan) {
  if (plan.degenerate)
    throw IncompatibleError("gadget plan built from an edgeless graph cannot drive constructions");
}

void require_source(const VCInstance& src, const GadgetPlan& plan) {
  SourceValidation v = validate_source(src, plan.d);
  if (!v.pass()) {
    std::string why;
    if (!v.subcubic) why += " max degree exceeds 3;";
    if (!v.two_degenerate) why += " not 2-degenerate;";
    if (!v.girth_ok)
      why += " girth below " + std::to_string(v.required_girth) +
             " (subdivide the source first);";
    throw InvalidArgument("source fails validation:" + why);
  }
}

// Base copies + originals + J copy per edge + D copy per vertex. Returns the
// output ids of the source vertices.
std::vector<int> emit_main(Assembly& a, const VCInstance& src, const GadgetPlan& plan,
                           const ConstructionOptions& opts, int h1_copies) {
  const Graph& g = src.graph;
  int n = g.order();

  if (opts.mutation != Mutation::DropBase) {
    auto comps = connected_components(plan.h_pi);
    GammaKey h1_key = gamma_key(plan.h1);
    int first_h1_comp = -1;
    for (size_t ci = 0; ci < comps.size(); ++ci) {
      Graph comp = induced_subgraph(plan.h_pi, comps[ci]);
      if (gamma_key(comp) == h1_key) {
        if (first_h1_comp < 0) first_h1_comp = static_cast<int>(ci);
        continue;
      }
      std::vector<int> pinned(comp.order(), -1);
      for (int copy = 0; copy < 2 * n; ++copy)
        a.copy(comp, pinned, [&](int local) {
          return OriginTag{OriginTag::Base, static_cast<int>(ci), copy, local};
        });
    }
    std::vector<int> pinned(plan.h1.order(), -1);
    for (int copy = 0; copy < h1_copies; ++copy)
      a.copy(plan.h1, pinned, [&](int local) {
        return OriginTag{OriginTag::Base, first_h1_comp, copy, local};
      });
  }

  std::vector<int> orig(n);
  for (int v = 0; v < n; ++v) orig[v] = a.add({OriginTag::Original, v});

  for (const auto& [u, v] : g.edges()) {
    std::vector<int> pinned(plan.j.order(), -1);
    pinned[plan.c_in_j] = orig[u];
    if (opts.mutation != Mutation::WrongCPrime) pinned[plan.cprime_in_j] = orig[v];
    a.copy(plan.j, pinned, [&, u = u, v = v](int local) {
      return OriginTag{OriginTag::JCopy, u, v, local};
    });
  }

  if (plan.d_graph.order() >= 2) {
    for (int v = 0; v < n; ++v) {
      std::vector<int> pinned(plan.d_graph.order(), -1);
      pinned[plan.c_in_d] = orig[v];
      a.copy(plan.d_graph, pinned, [&, v](int local) {
        return OriginTag{OriginTag::DCopy, v, local};
      });
    }
  }
  return orig;
}

int budget_shift(const ConstructionOptions& opts) {
  return opts.mutation == Mutation::WrongBudget ? 1 : 0;
}

ReductionResult wrap(Assembly& a, const ForbiddenFamily& family, int k, bool connected) {
  ReductionResult res;
  res.instance = {a.graph(), k, family, connected};
  res.provenance = {std::move(a.origin)};
  return res;
}

}  // namespace

SourceValidation validate_source(const VCInstance& src, int d) {
  SourceValidation v;
  v.subcubic = src.graph.max_degree() <= 3;
  v.two_degenerate = degeneracy(src.graph).degeneracy <= 2;
  v.girth_value = girth(src.graph);
  v.required_girth = 3 * d;
  v.girth_ok = !v.girth_value || *v.girth_value >= v.required_girth;
  return v;
}

VCInstance subdivide_for_girth(const VCInstance& src, int d) {
  if (d < 1) throw InvalidArgument("subdivision parameter must be positive");
  if (src.graph.max_degree() > 3)
    throw InvalidArgument("subdivision source must be subcubic");
  int de = d % 2 ? d + 1 : d;

  const Graph& g = src.graph;
  std::vector<Edge> edges;
  int next = g.order();
  for (const auto& [u, v] : g.edges()) {
    int prev = u;
    for (int i = 0; i < de; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, v);
  }
  Graph out = Graph::build(next, std::move(edges), g.labels());
  return make_vc_instance(std::move(out), src.k + (de / 2) * g.size());
}

ReductionResult main_construction(const VCInstance& src, const GadgetPlan& plan,
                                  const ForbiddenFamily& family,
                                  const ConstructionOptions& opts) {
  require_usable(plan);
  require_source(src, plan);
  Assembly a;
  emit_main(a, src, plan, opts, plan.d - 1);
  return wrap(a, family, src.k + budget_shift(opts), false);
}

ReductionResult complement_construction(const VCInstance& src, const ForbiddenFamily& family,
                                        CPrimeMode cprime, const ConstructionOptions& opts) {
  if (classify(family).tag != PropertyClass::ExcludesIndependentSet)
    throw IncompatibleError(
        "complement construction needs a family excluding an independent set; use the main "
        "construction directly");
  ForbiddenFamily comp_family = complement_family(family);
  GadgetPlan plan = build_gadget_plan(select_h_pi(comp_family), cprime);
  require_usable(plan);
  require_source(src, plan);

  Assembly a;
  emit_main(a, src, plan, opts, plan.d - 1);
  ReductionResult res;
  res.instance = {complement(a.graph()), src.k + budget_shift(opts), family, false};
  res.provenance = {std::move(a.origin)};
  return res;
}

ReductionResult connected_tree_construction(const VCInstance& src, const GadgetPlan& plan,
                                            const ForbiddenFamily& family,
                                            const ConstructionOptions& opts) {
  require_usable(plan);

  // Pad with isolated vertices to the next power of two; they leave the
  // vertex cover untouched and are recorded as ordinary originals.
  int n0 = std::max(1, src.graph.order());
  int n_pad = 1;
  int mu = 0;
  while (n_pad < n0) {
    n_pad <<= 1;
    ++mu;
  }
  VCInstance padded{Graph::build(n_pad, src.graph.edges(), src.graph.labels()), src.k};
  require_source(padded, plan);

  Assembly a;
  std::vector<int> orig = emit_main(a, padded, plan, opts, plan.d - 1);

  std::vector<int> tree_order;
  std::vector<int> prev = orig;
  for (int level = mu - 1; level >= 0; --level) {
    std::vector<int> cur;
    for (int j = 0; j < (1 << level); ++j) {
      int t = a.add({OriginTag::TreeVertex, level, j});
      a.link(t, prev[j]);
      a.link(t, prev[j + (1 << level)]);
      cur.push_back(t);
      tree_order.push_back(t);
    }
    prev = std::move(cur);
  }
  for (int t : tree_order) {
    std::vector<int> pinned(plan.h1.order(), -1);
    pinned[plan.c] = t;
    a.copy(plan.h1, pinned, [&, t](int local) {
      return OriginTag{OriginTag::TreeAttachment, t, local};
    });
  }

  int k_prime = src.k + static_cast<int>(tree_order.size()) + budget_shift(opts);
  return wrap(a, family, k_prime, true);
}

ReductionResult connected_complement_construction(const VCInstance& src,
                                                  const ForbiddenFamily& family,
                                                  CPrimeMode cprime,
                                                  const ConstructionOptions& opts) {
  if (classify(family).tag != PropertyClass::ExcludesIndependentSet)
    throw IncompatibleError(
        "connected complement construction needs a family excluding an independent set");
  ForbiddenFamily comp_family = complement_family(family);
  GadgetPlan plan = build_gadget_plan(select_h_pi(comp_family), cprime);
  require_usable(plan);
  require_source(src, plan);

  Assembly a;
  emit_main(a, src, plan, opts, plan.d);  // one extra base copy of H1
  ReductionResult res;
  res.instance = {complement(a.graph()), src.k + 1 + budget_shift(opts), family, true};
  res.provenance = {std::move(a.origin)};
  return res;
}

ReductionResult planar_construction(const VCInstance& src, const ForbiddenFamily& family,
                                    CPrimeMode cprime, const ConstructionOptions& opts) {
  if (classify(family).tag != PropertyClass::ContainsAllIndependentSets)
    throw IncompatibleError("planar construction needs a family containing all independent sets");
  if (!is_planar(src.graph)) throw InvalidArgument("planar construction needs a planar source");
  GadgetPlan plan = build_gadget_plan(select_h_pi(family, /*planar_only=*/true), cprime);
  ReductionResult res = main_construction(src, plan, family, opts);
  if (opts.mutation == Mutation::None && !is_planar(res.instance.graph))
    throw IncompatibleError("planar construction produced a nonplanar graph for this family");
  return res;
}

ReductionResult planar_connected_construction(const VCInstance& src, const GadgetPlan& plan,
                                              const ForbiddenFamily& family,
                                              const ConstructionOptions& opts) {
  require_usable(plan);
  if (classify(family).tag != PropertyClass::ContainsAllIndependentSets)
    throw IncompatibleError(
        "connected planar construction needs a family containing all independent sets");
  if (src.graph.order() == 0 || !is_connected(src.graph))
    throw InvalidArgument("connected planar construction needs a connected source");
  auto embedding = planar_embedding(src.graph);
  if (!embedding) throw InvalidArgument("connected planar construction needs a planar source");
  if (!is_planar(plan.h_pi))
    throw IncompatibleError("connected planar construction needs a planar gadget graph");
  require_source(src, plan);

  Assembly a;
  std::vector<int> orig = emit_main(a, src, plan, opts, plan.d - 1);

  int face_count = static_cast<int>(embedding->faces.size());
  std::vector<int> face_vertices;
  for (int f = 0; f < face_count; ++f) {
    int fv = a.add({OriginTag::FaceVertex, f});
    for (int b : embedding->boundary_vertices(f)) a.link(fv, orig[b]);
    face_vertices.push_back(fv);
  }
  for (int f = 0; f < face_count; ++f) {
    std::vector<int> pinned(plan.h1.order(), -1);
    pinned[plan.c] = face_vertices[f];
    a.copy(plan.h1, pinned, [&, f](int local) {
      return OriginTag{OriginTag::FaceAttachment, f, local};
    });
  }

  ReductionResult res = wrap(a, family, src.k + face_count + budget_shift(opts), true);
  if (opts.mutation == Mutation::None && !is_planar(res.instance.graph))
    throw IncompatibleError("connected planar construction produced a nonplanar graph");
  return res;
}

std::optional<Graph> detect_case1(const GadgetPlan& plan, const ForbiddenFamily& family,
                                  int order_cap) {
  require_usable(plan);
  int max_member = 0;
  for (const Graph& g : family.members) max_member = std::max(max_member, g.order());
  if (order_cap < max_member)
    throw InvalidArgument("witness order cap below the largest member order");

  GammaKey h1_key = gamma_key(plan.h1);
  EnumConstraints connected_only;
  connected_only.connected = true;
  std::vector<Graph> candidates;
  for (const Graph& g : enumerate_graphs(order_cap, connected_only))
    if (g.order() >= 1 && gamma_key(g) < h1_key) candidates.push_back(g);

  struct Entry {
    std::vector<int> picks;
    int total;
    GammaSequence seq;
    Graph witness;
  };
  std::vector<Entry> entries;
  std::vector<int> picks;
  auto expand = [&](auto&& self, int start) -> void {
    if (!picks.empty()) {
      Graph w = candidates[picks[0]];
      for (size_t i = 1; i < picks.size(); ++i) w = disjoint_union(w, candidates[picks[i]]);
      entries.push_back({picks, w.order(), gamma_sequence(w), std::move(w)});
    }
    if (static_cast<int>(picks.size()) == max_member) return;
    for (int i = start; i < static_cast<int>(candidates.size()); ++i) {
      picks.push_back(i);
      self(self, i);
      picks.pop_back();
    }
  };
  expand(expand, 0);
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.total != b.total) return a.total < b.total;
    if (int c = compare(a.seq, b.seq)) return c < 0;
    return a.picks < b.picks;
  });

  for (const Entry& e : entries) {
    Graph composite = e.witness;
    for (int i = 0; i < plan.d - 1; ++i) composite = disjoint_union(composite, plan.h1);
    std::vector<Edge> edges = composite.edges();
    int hub = composite.order();
    for (int v = 0; v < composite.order(); ++v) edges.emplace_back(v, hub);
    Graph star = Graph::build(hub + 1, std::move(edges));
    if (!member_free(star, family)) return e.witness;
  }
  return std::nullopt;
}

ReductionResult dominating_vertex_construction(const VCInstance& src, const GadgetPlan& plan,
                                               const ForbiddenFamily& family,
                                               std::optional<Graph> witness,
                                               std::optional<int> order_cap,
                                               const ConstructionOptions& opts) {
  require_usable(plan);
  if (classify(family).tag != PropertyClass::ContainsAllIndependentSets)
    throw IncompatibleError(
        "dominating-vertex construction needs a family containing all independent sets");

  if (witness) {
    GammaKey h1_key = gamma_key(plan.h1);
    for (const auto& comp : connected_components(*witness)) {
      GammaKey key = gamma_key(induced_subgraph(*witness, comp));
      if (!(key < h1_key))
        throw InvalidArgument(
            "witness rejected: a component is not strictly below H1 in the gamma order");
    }
    Graph composite = *witness;
    for (int i = 0; i < plan.d - 1; ++i) composite = disjoint_union(composite, plan.h1);
    std::vector<Edge> edges = composite.edges();
    int hub = composite.order();
    for (int v = 0; v < composite.order(); ++v) edges.emplace_back(v, hub);
    if (member_free(Graph::build(hub + 1, std::move(edges)), family))
      throw InvalidArgument(
          "witness rejected: its composite under a universal vertex still satisfies the property");
  } else {
    int max_member = 0;
    for (const Graph& g : family.members) max_member = std::max(max_member, g.order());
    witness = detect_case1(plan, family, order_cap.value_or(max_member));
  }

  require_source(src, plan);
  Assembly a;
  emit_main(a, src, plan, opts, plan.d - 1);

  int extra = 0;
  if (witness) {
    extra = 1;
    std::vector<int> pinned(witness->order(), -1);
    a.copy(*witness, pinned, [&](int local) { return OriginTag{OriginTag::WitnessVertex, local}; });
  }
  int hub = a.add({OriginTag::UniversalVertex});
  for (int v = 0; v < hub; ++v) a.link(v, hub);

  return wrap(a, family, src.k + extra + budget_shift(opts), false);
}

std::vector<int> lift_vertex_cover(const Certificate& cert, const Provenance& prov,
                                   const PiVDInstance& reduced, const VCInstance& src) {
  validate_certificate(reduced, cert);
  if (prov.origin.size() != static_cast<size_t>(reduced.graph.order()))
    throw InvalidArgument("provenance does not match the reduced instance");

  std::vector<int> lifted;
  for (int v : cert.vertices) {
    const OriginTag& tag = prov.origin[v];
    switch (tag.kind) {
      case OriginTag::Original:
        lifted.push_back(tag.a);
        break;
      case OriginTag::DCopy:
        lifted.push_back(tag.a);
        break;
      case OriginTag::JCopy:
        lifted.push_back(std::min(tag.a, tag.b));
        break;
      default:
        break;  // base-graph hits carry no source vertex
    }
  }
  std::sort(lifted.begin(), lifted.end());
  lifted.erase(std::unique(lifted.begin(), lifted.end()), lifted.end());
  for (int v : lifted)
    if (v < 0 || v >= src.graph.order())
      throw std::logic_error("lifted vertex outside the source graph");
  return lifted;
}

}  // namespace pivd
