#ifndef PIVD_SOLVE_HPP
#define PIVD_SOLVE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pivd/hereditary.hpp"

namespace pivd {

struct VCInstance {
  Graph graph;
  int k = 0;  // clamped to the order on construction
};
VCInstance make_vc_instance(Graph graph, int k);

struct PiVDInstance {
  Graph graph;
  int k = 0;
  ForbiddenFamily family;
  bool connected_variant = false;
};

struct Certificate {
  enum Kind { VertexCover, PiDeletion, ConnectedPiDeletion } kind = PiDeletion;
  std::vector<int> vertices;
};

struct SolveResult {
  bool yes = false;
  std::optional<Certificate> certificate;  // present and re-validated on yes
  long long branch_count = 0;              // leaf checks explored
  long long membership_calls = 0;
  std::vector<std::string> warnings;
};

// Deleting the certificate leaves a member-free graph (and, for connected
// instances, the certificate induces a connected subgraph). Throws on breach.
void validate_certificate(const PiVDInstance& inst, const Certificate& cert);

// Subsets in size order, lexicographic within a size. Intended for small
// orders with small budgets.
SolveResult solve_bruteforce(const PiVDInstance& inst);

// Bounded search tree on forbidden occurrences with deleted-set memoization;
// the everyday exact oracle.
SolveResult solve_branching(const PiVDInstance& inst);

enum class ThresholdMode { Default, Sqrt2mOverD };

// Exact solver for families excluding an edgeless member: mandatory singleton
// deletions, a high/low degree split at 2*sqrt(m) (or sqrt(2m/(d-1)) with the
// alternate threshold), then enumeration of high subsets, small low-side
// independent sets and their neighborhood subsets. Asserts the branch-count
// ceiling on every run under the default threshold.
SolveResult solve_subexp(const PiVDInstance& inst, ThresholdMode threshold = ThresholdMode::Default);

// Exact when every graph satisfying the property has minimum degree n - d.
// That premise is unverifiable from a finite family; it is checked
// empirically on all members of order <= 7 before running, rejecting callers
// whose d is too small for the evidence.
SolveResult solve_mindegree(const PiVDInstance& inst, int d);

// Exact over connected deletion sets of size <= k, plus the empty set.
SolveResult solve_connected_bruteforce(const PiVDInstance& inst);

// Source-side oracle: exact vertex cover decision via degree branching with
// leaf reductions and a matching lower bound.
SolveResult solve_vertex_cover(const VCInstance& inst);

// All independent sets of size < d, including the empty set, ordered by size
// then lexicographically.
std::vector<std::vector<int>> list_small_independent_sets(const Graph& g, int d);

}  // namespace pivd

#endif
