#include "pivd/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "pivd/canonical.hpp"
#include "pivd/enumerate.hpp"
#include "pivd/error.hpp"
#include "pivd/io.hpp"
#include "pivd/planarity.hpp"

namespace pivd {

namespace {

struct VariantInfo {
  Variant v;
  const char* name;
  bool connected;
  bool complement_side;
};

constexpr VariantInfo kVariants[] = {
    {Variant::Main, "main", false, false},
    {Variant::Complement, "complement", false, true},
    {Variant::Connected, "connected", true, false},
    {Variant::ConnectedComplement, "connected-complement", true, true},
    {Variant::Planar, "planar", false, false},
    {Variant::PlanarConnected, "planar-connected", true, false},
    {Variant::Dominating, "dominating", false, false},
};

const VariantInfo& info(Variant v) {
  for (const auto& i : kVariants)
    if (i.v == v) return i;
  throw std::logic_error("unknown variant");
}

int ceil_sqrt_ll(long long x) {
  if (x <= 0) return 0;
  auto s = static_cast<long long>(std::sqrt(static_cast<double>(x)));
  while (s * s < x) ++s;
  while ((s - 1) * (s - 1) >= x) --s;
  return static_cast<int>(s);
}

// Plan the variant actually reduces with; complement-style variants build
// their gadgets from the complement family.
GadgetPlan working_plan(Variant variant, const ForbiddenFamily& family, CPrimeMode cprime) {
  const VariantInfo& vi = info(variant);
  if (vi.complement_side) {
    if (classify(family).tag != PropertyClass::ExcludesIndependentSet)
      throw IncompatibleError("variant '" + std::string(vi.name) +
                              "' needs a family excluding an independent set");
    return build_gadget_plan(select_h_pi(complement_family(family)), cprime);
  }
  if (classify(family).tag != PropertyClass::ContainsAllIndependentSets)
    throw IncompatibleError("variant '" + std::string(vi.name) +
                            "' needs a family containing all independent sets");
  bool planar_only = variant == Variant::Planar || variant == Variant::PlanarConnected;
  return build_gadget_plan(select_h_pi(family, planar_only), cprime);
}

ReductionResult dispatch(Variant variant, const VCInstance& src, const GadgetPlan& plan,
                         const ForbiddenFamily& family, CPrimeMode cprime,
                         const ConstructionOptions& opts) {
  switch (variant) {
    case Variant::Main:
      return main_construction(src, plan, family, opts);
    case Variant::Complement:
      return complement_construction(src, family, cprime, opts);
    case Variant::Connected:
      return connected_tree_construction(src, plan, family, opts);
    case Variant::ConnectedComplement:
      return connected_complement_construction(src, family, cprime, opts);
    case Variant::Planar:
      return planar_construction(src, family, cprime, opts);
    case Variant::PlanarConnected:
      return planar_connected_construction(src, plan, family, opts);
    case Variant::Dominating:
      return dominating_vertex_construction(src, plan, family, std::nullopt, std::nullopt, opts);
  }
  throw std::logic_error("unknown variant");
}

StructuralExpectations variant_expectations(Variant variant, const GadgetPlan& plan,
                                            CPrimeMode cprime) {
  StructuralExpectations e;
  switch (variant) {
    case Variant::Main:
      e.max_degree = 3 * plan.delta_max_degree;
      if (cprime == CPrimeMode::DegeneracyOrdering) e.degeneracy = plan.delta_degeneracy + 1;
      break;
    case Variant::Planar:
      e.max_degree = 3 * plan.delta_max_degree;
      if (cprime == CPrimeMode::DegeneracyOrdering) e.degeneracy = plan.delta_degeneracy + 1;
      e.planar = true;
      break;
    case Variant::Connected:
      e.max_degree = 3 * plan.delta_max_degree + 1;
      break;
    case Variant::PlanarConnected:
      e.planar = true;
      break;
    case Variant::Dominating:
      e.dominating = true;
      break;
    default:
      break;  // complement-style outputs are dense by design
  }
  return e;
}

}  // namespace

std::optional<Variant> parse_variant(const std::string& name) {
  for (const auto& i : kVariants)
    if (name == i.name) return i.v;
  return std::nullopt;
}

const char* variant_name(Variant v) { return info(v).name; }
bool variant_is_connected(Variant v) { return info(v).connected; }

Graph random_subcubic(int n, uint64_t seed) {
  if (n < 1) throw InvalidArgument("order must be positive");
  std::mt19937_64 rng(seed);
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  size_t target = rng() % (3 * n / 2 + 1);
  std::vector<int> deg(n, 0);
  std::vector<Edge> edges;
  for (const auto& [u, v] : pairs) {
    if (edges.size() >= target) break;
    if (deg[u] < 3 && deg[v] < 3) {
      edges.emplace_back(u, v);
      ++deg[u];
      ++deg[v];
    }
  }
  return Graph::build(n, std::move(edges));
}

ReduceOutcome run_reduction(const VCInstance& src, const ForbiddenFamily& family,
                            const ReduceRequest& req, const ConstructionOptions& opts) {
  GadgetPlan plan = working_plan(req.variant, family, req.cprime);

  ReduceOutcome out;
  VCInstance prepared = src;
  if (req.girth_d) {
    prepared = subdivide_for_girth(src, *req.girth_d);
  } else if (req.girth_auto && !validate_source(src, plan.d).pass()) {
    prepared = subdivide_for_girth(src, std::max(plan.d, 1));
  }
  if (prepared.graph.order() != src.graph.order()) {
    SubdivisionInfo sub;
    int d_used = req.girth_d ? *req.girth_d : std::max(plan.d, 1);
    sub.d = d_used % 2 ? d_used + 1 : d_used;
    sub.k_before = src.k;
    sub.source_order = src.graph.order();
    sub.source_size = src.graph.size();
    out.subdivision = sub;
  }

  out.result = dispatch(req.variant, prepared, plan, family, req.cprime, opts);
  out.prepared_source = prepared;
  if (!info(req.variant).complement_side) out.plan = std::move(plan);
  return out;
}

StructuralReport structural_audit(const PiVDInstance& inst, const Provenance& prov,
                                  const StructuralExpectations& expect, int source_order) {
  StructuralReport rep;
  const Graph& g = inst.graph;
  rep.max_degree = g.max_degree();
  rep.degeneracy = degeneracy(g).degeneracy;
  rep.planar = is_planar(g);
  rep.dominating = false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == g.order() - 1 && g.order() > 0) {
      rep.dominating = true;
      break;
    }
  rep.vertex_ratio = static_cast<double>(g.order()) / std::max(1, source_order);
  rep.edge_ratio = static_cast<double>(g.size()) / std::max(1, source_order);

  if (prov.origin.size() != static_cast<size_t>(g.order()))
    rep.failures.push_back("provenance is not total");
  if (expect.max_degree && rep.max_degree > *expect.max_degree)
    rep.failures.push_back("max degree " + std::to_string(rep.max_degree) + " exceeds " +
                           std::to_string(*expect.max_degree));
  if (expect.degeneracy && rep.degeneracy > *expect.degeneracy)
    rep.failures.push_back("degeneracy " + std::to_string(rep.degeneracy) + " exceeds " +
                           std::to_string(*expect.degeneracy));
  if (expect.planar && *expect.planar && !rep.planar)
    rep.failures.push_back("output is not planar");
  if (expect.dominating && *expect.dominating && !rep.dominating)
    rep.failures.push_back("output has no dominating vertex");
  return rep;
}

namespace {

struct PreparedSource {
  Graph graph;        // construction input (subdivided when needed)
  int original_n;     // budget sweep runs over the original order
  int budget_shift;   // k_inner = k + shift
  std::string text;   // original source, for replay
};

std::vector<PreparedSource> harness_sources(Variant variant, const GadgetPlan& plan,
                                            const CheckBudget& budget) {
  EnumConstraints subcubic;
  subcubic.max_degree = 3;
  bool need_connected = variant == Variant::PlanarConnected;
  bool need_planar = variant == Variant::Planar || variant == Variant::PlanarConnected;

  std::vector<PreparedSource> out;
  auto prep = [&](const Graph& g, bool force_subdivide) -> std::optional<PreparedSource> {
    if (need_planar && !is_planar(g)) return std::nullopt;
    PreparedSource ps;
    ps.original_n = g.order();
    ps.text = format_graph(g);
    VCInstance probe{g, 0};
    if (force_subdivide || !validate_source(probe, plan.d).pass()) {
      if (g.max_degree() > 3) return std::nullopt;
      VCInstance sub = subdivide_for_girth(probe, std::max(plan.d, 1));
      ps.budget_shift = sub.k;
      ps.graph = sub.graph;
    } else {
      ps.budget_shift = 0;
      ps.graph = g;
    }
    if (need_connected && (ps.graph.order() == 0 || !is_connected(ps.graph)))
      return std::nullopt;
    return ps;
  };

  for (const Graph& g : enumerate_graphs(budget.exhaustive_n, subcubic))
    if (auto ps = prep(g, false)) out.push_back(std::move(*ps));

  std::mt19937_64 rng(budget.seed);
  int produced = 0, attempts = 0;
  while (produced < budget.random_count && attempts < 200 * std::max(1, budget.random_count)) {
    ++attempts;
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = random_subcubic(n, rng());
    // keep random sources small after subdivision so the oracles stay exact
    VCInstance sub = subdivide_for_girth({g, 0}, std::max(plan.d, 1));
    if (sub.graph.order() > 8) continue;
    if (auto ps = prep(g, true)) {
      out.push_back(std::move(*ps));
      ++produced;
    }
  }
  if (produced < budget.random_count)
    throw InvalidArgument("random source generation exhausted its attempt budget");
  return out;
}

}  // namespace

EquivalenceReport check_equivalence(Variant variant, const ForbiddenFamily& family,
                                    const CheckBudget& budget, CPrimeMode cprime,
                                    Mutation mutation) {
  GadgetPlan plan = working_plan(variant, family, cprime);

  EquivalenceReport rep;
  rep.family_text = format_graphs(family.members);
  rep.variant = variant;
  rep.exhaustive_n = budget.exhaustive_n;
  rep.random_count = budget.random_count;
  rep.seed = budget.seed;

  ConstructionOptions opts;
  opts.mutation = mutation;
  StructuralExpectations expect = variant_expectations(variant, plan, cprime);
  AuditOutcome deg_audit, degen_audit, planar_audit, dominating_audit, prov_audit;
  if (expect.max_degree) deg_audit.bound = *expect.max_degree;
  if (expect.degeneracy) degen_audit.bound = *expect.degeneracy;

  for (const PreparedSource& ps : harness_sources(variant, plan, budget)) {
    ++rep.sources_tested;
    VCInstance base_src = make_vc_instance(ps.graph, 0);
    ReductionResult reduced = dispatch(variant, base_src, plan, family, cprime, opts);
    int budget_offset = reduced.instance.k;  // variant offset at k_inner = 0

    if (mutation == Mutation::None) {
      StructuralReport audit =
          structural_audit(reduced.instance, reduced.provenance, expect, ps.graph.order());
      deg_audit.worst = std::max(deg_audit.worst, static_cast<double>(audit.max_degree));
      degen_audit.worst = std::max(degen_audit.worst, static_cast<double>(audit.degeneracy));
      if (expect.max_degree && audit.max_degree > *expect.max_degree) deg_audit.pass = false;
      if (expect.degeneracy && audit.degeneracy > *expect.degeneracy) degen_audit.pass = false;
      if (expect.planar && !audit.planar) planar_audit.pass = false;
      if (expect.dominating && !audit.dominating) dominating_audit.pass = false;
      if (prov_audit.pass) {
        // totality plus injective original tags
        std::vector<char> seen(ps.graph.order(), 0);
        if (reduced.provenance.origin.size() != static_cast<size_t>(reduced.instance.graph.order()))
          prov_audit.pass = false;
        for (const OriginTag& tag : reduced.provenance.origin)
          if (tag.kind == OriginTag::Original) {
            if (tag.a < 0 || tag.a >= ps.graph.order() || seen[tag.a]) prov_audit.pass = false;
            else seen[tag.a] = 1;
          }
      }
    }

    for (int k = 0; k <= ps.original_n; ++k) {
      ++rep.instances_checked;
      bool src_yes = solve_vertex_cover(make_vc_instance(ps.graph, k + ps.budget_shift)).yes;
      PiVDInstance inst = reduced.instance;
      inst.k = budget_offset + k + ps.budget_shift;
      bool red_yes = variant_is_connected(variant) ? solve_connected_bruteforce(inst).yes
                                                   : solve_branching(inst).yes;
      if (src_yes != red_yes)
        rep.mismatches.push_back({ps.text, k, src_yes, red_yes});
    }
  }

  if (mutation == Mutation::None) {
    if (expect.max_degree) rep.audits["max_degree"] = deg_audit;
    if (expect.degeneracy) rep.audits["degeneracy"] = degen_audit;
    if (expect.planar) rep.audits["planar"] = planar_audit;
    if (expect.dominating) rep.audits["dominating_vertex"] = dominating_audit;
    rep.audits["provenance"] = prov_audit;
  }
  return rep;
}

LiftReport check_lifting(const ForbiddenFamily& family, const CheckBudget& budget,
                         CPrimeMode cprime) {
  GadgetPlan plan = working_plan(Variant::Main, family, cprime);
  LiftReport rep;

  for (const PreparedSource& ps : harness_sources(Variant::Main, plan, budget)) {
    VCInstance base_src = make_vc_instance(ps.graph, 0);
    ReductionResult reduced = main_construction(base_src, plan, family);
    for (int k = 0; k <= ps.original_n; ++k) {
      int k_inner = std::min(k + ps.budget_shift, ps.graph.order());
      PiVDInstance inst = reduced.instance;
      inst.k = k_inner;
      SolveResult sol = solve_branching(inst);
      if (!sol.yes) continue;
      ++rep.instances;
      VCInstance src_inst = make_vc_instance(ps.graph, k_inner);
      std::vector<int> lifted =
          lift_vertex_cover(*sol.certificate, reduced.provenance, inst, src_inst);
      ++rep.lifted;
      if (lifted.size() > sol.certificate->vertices.size())
        rep.failures.push_back("lift grew beyond the certificate on " + ps.text);

      // complete on the residual source graph by brute force
      std::vector<int> keep;
      for (int v = 0; v < ps.graph.order(); ++v)
        if (std::find(lifted.begin(), lifted.end(), v) == lifted.end()) keep.push_back(v);
      Graph residual = induced_subgraph(ps.graph, keep);
      int completion = 0;
      while (!solve_vertex_cover(make_vc_instance(residual, completion)).yes) ++completion;
      if (static_cast<int>(lifted.size()) + completion > k_inner)
        rep.failures.push_back("lifted cover exceeds the budget " + std::to_string(k_inner) +
                               " on " + ps.text + " (k=" + std::to_string(k) + ")");
    }
  }
  return rep;
}

BranchAudit branch_count_audit(const std::vector<BranchRun>& runs, int d_is) {
  BranchAudit audit;
  for (const BranchRun& run : runs) {
    long double bound;
    if (run.m == 0) {
      bound = run.n + 1;
    } else {
      long long exp2 = ceil_sqrt_ll(run.m) +
                       static_cast<long long>(d_is - 1) * ceil_sqrt_ll(4 * run.m);
      if (exp2 >= 200) continue;  // astronomically large ceiling, nothing to audit
      bound = std::pow(static_cast<long double>(std::max(run.n, 1)), d_is - 1) *
              std::pow(2.0L, static_cast<long double>(exp2));
    }
    double ratio = static_cast<double>(run.branch_count / bound);
    audit.max_ratio = std::max(audit.max_ratio, ratio);
    if (static_cast<long double>(run.branch_count) > bound) {
      audit.pass = false;
      audit.failures.push_back("branch count " + std::to_string(run.branch_count) +
                               " exceeds bound at n=" + std::to_string(run.n) +
                               " m=" + std::to_string(run.m));
    }
  }
  return audit;
}

std::vector<SizeProbe> size_scaling_probe(const ForbiddenFamily& family,
                                          const std::vector<int>& source_orders, uint64_t seed,
                                          CPrimeMode cprime) {
  GadgetPlan plan = working_plan(Variant::Main, family, cprime);
  std::vector<SizeProbe> probes;
  for (int n : source_orders) {
    Graph g = random_subcubic(n, seed + static_cast<uint64_t>(n));
    VCInstance src{g, 0};
    if (!validate_source(src, plan.d).pass())
      src = subdivide_for_girth(src, std::max(plan.d, 1));
    ReductionResult res = main_construction(src, plan, family);
    SizeProbe p;
    p.source_order = n;
    p.input_order = src.graph.order();
    p.input_size = src.graph.size();
    p.output_order = res.instance.graph.order();
    p.output_size = res.instance.graph.size();
    p.vertex_ratio = static_cast<double>(p.output_order) / std::max(1, p.input_order);
    p.edge_ratio = static_cast<double>(p.output_size) / std::max(1, p.input_order);
    probes.push_back(p);
  }
  return probes;
}

std::string run_bench(const ForbiddenFamily& family, const std::vector<int>& edge_counts,
                      uint64_t seed, std::optional<int> k_override) {
  if (classify(family).tag != PropertyClass::ExcludesIndependentSet)
    throw IncompatibleError("bench needs a family excluding an independent set");

  std::ostringstream csv;
  csv << "m,n,k,algo,answer,branch_count,membership_calls,wall_ms\n";
  for (size_t i = 0; i < edge_counts.size(); ++i) {
    int m = edge_counts[i];
    int n = std::max(4, m / 2);
    while (static_cast<long long>(n) * (n - 1) / 2 < m) ++n;

    std::mt19937_64 rng(seed + i);
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(m);
    Graph g = Graph::build(n, std::move(pairs));

    int k = k_override.value_or(std::max(1, n - ceil_sqrt_ll(n)));
    PiVDInstance inst{g, k, family, false};

    auto timed = [&](const char* name, auto&& solver, bool enabled) {
      if (!enabled) {
        csv << m << "," << n << "," << k << "," << name << ",skipped,,,\n";
        return;
      }
      auto t0 = std::chrono::steady_clock::now();
      SolveResult res = solver();
      auto t1 = std::chrono::steady_clock::now();
      double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      csv << m << "," << n << "," << k << "," << name << "," << (res.yes ? "yes" : "no") << ","
          << res.branch_count << "," << res.membership_calls << "," << ms << "\n";
    };

    timed("subexp", [&] { return solve_subexp(inst); }, true);
    // brute force enumerates every subset up to size k; skip once infeasible
    long double subsets = 0, binom = 1;
    for (int s = 0; s <= k && subsets < 4e6L; ++s) {
      subsets += binom;
      binom = binom * (n - s) / (s + 1);
    }
    timed("brute", [&] { return solve_bruteforce(inst); }, subsets < 4e6L);
  }
  return csv.str();
}

}  // namespace pivd
