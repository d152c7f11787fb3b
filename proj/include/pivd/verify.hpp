#ifndef PIVD_VERIFY_HPP
#define PIVD_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pivd/reduction.hpp"

namespace pivd {

enum class Variant {
  Main,
  Complement,
  Connected,
  ConnectedComplement,
  Planar,
  PlanarConnected,
  Dominating,
};

std::optional<Variant> parse_variant(const std::string& name);
const char* variant_name(Variant v);
bool variant_is_connected(Variant v);

// Uniform-ish subcubic graph: a random edge count, then shuffled pair
// insertion respecting the degree cap. Deterministic per (n, seed).
Graph random_subcubic(int n, uint64_t seed);

// One reduction dispatch used by the CLI and the C API.
struct ReduceRequest {
  Variant variant = Variant::Main;
  CPrimeMode cprime = CPrimeMode::DegeneracyOrdering;
  std::optional<int> girth_d;  // force subdivision with this d
  bool girth_auto = false;     // subdivide only when validation fails
};

struct SubdivisionInfo {
  int d = 0;  // rounded-even internal vertices per edge
  int k_before = 0;
  int source_order = 0, source_size = 0;
};

struct ReduceOutcome {
  ReductionResult result;
  VCInstance prepared_source;  // post-subdivision source actually reduced
  std::optional<SubdivisionInfo> subdivision;
  std::optional<GadgetPlan> plan;  // absent for complement-style variants
};

ReduceOutcome run_reduction(const VCInstance& src, const ForbiddenFamily& family,
                            const ReduceRequest& req, const ConstructionOptions& opts = {});

struct StructuralExpectations {
  std::optional<int> max_degree;
  std::optional<int> degeneracy;
  std::optional<bool> planar;
  std::optional<bool> dominating;
};

struct StructuralReport {
  int max_degree = 0;
  int degeneracy = 0;
  bool planar = false;
  bool dominating = false;
  double vertex_ratio = 0;  // |V'| / max(1, source order)
  double edge_ratio = 0;    // |E'| / max(1, source order)
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

StructuralReport structural_audit(const PiVDInstance& inst, const Provenance& prov,
                                  const StructuralExpectations& expect, int source_order);

struct CheckBudget {
  int exhaustive_n = 5;
  int random_count = 0;
  uint64_t seed = 0;
};

struct Mismatch {
  std::string source_text;
  int k = 0;
  bool source_answer = false;
  bool reduced_answer = false;
};

struct AuditOutcome {
  bool pass = true;
  double worst = 0;
  double bound = 0;
};

struct EquivalenceReport {
  std::string family_text;
  Variant variant = Variant::Main;
  int exhaustive_n = 0;
  int random_count = 0;
  uint64_t seed = 0;
  int sources_tested = 0;
  int instances_checked = 0;
  std::vector<Mismatch> mismatches;
  std::map<std::string, AuditOutcome> audits;
  bool pass() const {
    if (!mismatches.empty()) return false;
    for (const auto& [name, a] : audits)
      if (!a.pass) return false;
    return true;
  }
};

// Source answers by the vertex-cover oracle, reduced answers by the
// branching oracle (connected brute force for connected variants), over
// exhaustive subcubic sources up to exhaustive_n plus seeded random
// subdivided sources. Sources failing validation are subdivided first.
EquivalenceReport check_equivalence(Variant variant, const ForbiddenFamily& family,
                                    const CheckBudget& budget,
                                    CPrimeMode cprime = CPrimeMode::DegeneracyOrdering,
                                    Mutation mutation = Mutation::None);

struct LiftReport {
  int instances = 0;
  int lifted = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

// For every yes instance of the main construction: lift the solver
// certificate, complete it on the residual source graph by brute force, and
// insist the result is a vertex cover within the source budget.
LiftReport check_lifting(const ForbiddenFamily& family, const CheckBudget& budget,
                         CPrimeMode cprime = CPrimeMode::DegeneracyOrdering);

struct BranchRun {
  long long branch_count = 0;
  int n = 0;
  long long m = 0;
};

struct BranchAudit {
  bool pass = true;
  double max_ratio = 0;
  std::vector<std::string> failures;
};

// Ceiling-adjusted branch bound per run: 2^ceil(sqrt m) * n^(d-1) *
// 2^((d-1) ceil(2 sqrt m)); edgeless instances fall back to n + 1.
BranchAudit branch_count_audit(const std::vector<BranchRun>& runs, int d_is);

struct SizeProbe {
  int source_order = 0;
  int input_order = 0, input_size = 0;  // post-subdivision construction input
  int output_order = 0, output_size = 0;
  double vertex_ratio = 0, edge_ratio = 0;  // relative to input order
};

// Main-construction growth on random subcubic sources of the given orders.
std::vector<SizeProbe> size_scaling_probe(const ForbiddenFamily& family,
                                          const std::vector<int>& source_orders, uint64_t seed,
                                          CPrimeMode cprime = CPrimeMode::DegeneracyOrdering);

// CSV comparing the subexponential solver against brute force on random
// instances of growing edge count. Header:
// m,n,k,algo,answer,branch_count,membership_calls,wall_ms
std::string run_bench(const ForbiddenFamily& family, const std::vector<int>& edge_counts,
                      uint64_t seed, std::optional<int> k_override = std::nullopt);

}  // namespace pivd

#endif
