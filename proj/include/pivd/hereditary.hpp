#ifndef PIVD_HEREDITARY_HPP
#define PIVD_HEREDITARY_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pivd/graph.hpp"

namespace pivd {

// Non-increasing component orders of H - c; empty for a single vertex.
// Sequences compare lexicographically with a strict prefix ordered first.
using AlphaSequence = std::vector<int>;

int compare_alpha(const AlphaSequence& a, const AlphaSequence& b);

// alpha sequence for one deletion choice / the minimum over all choices,
// with the smallest witnessing vertex. Connected input required.
AlphaSequence alpha_sequence_at(const Graph& h, int c);
std::pair<AlphaSequence, int> alpha_sequence(const Graph& h);

// Total order on connected graphs refining the alpha order and separating
// non-isomorphic graphs: alpha first, canonical certificate as tie-break.
struct GammaKey {
  AlphaSequence alpha;
  std::vector<uint8_t> cert;

  friend int compare(const GammaKey& a, const GammaKey& b) {
    if (int c = compare_alpha(a.alpha, b.alpha)) return c;
    if (a.cert != b.cert) return a.cert < b.cert ? -1 : 1;
    return 0;
  }
  bool operator==(const GammaKey& o) const { return compare(*this, o) == 0; }
  bool operator<(const GammaKey& o) const { return compare(*this, o) < 0; }
};

GammaKey gamma_key(const Graph& h);

// Component keys in non-increasing order; again prefix-first lexicographic.
struct GammaSequence {
  std::vector<GammaKey> keys;

  friend int compare(const GammaSequence& a, const GammaSequence& b);
  bool operator==(const GammaSequence& o) const { return compare(*this, o) == 0; }
  bool operator<(const GammaSequence& o) const { return compare(*this, o) < 0; }
};

GammaSequence gamma_sequence(const Graph& h);

// Finite set of minimal forbidden induced subgraphs defining a hereditary
// property: pairwise non-isomorphic, no member inside another, ordered by
// gamma sequence.
struct ForbiddenFamily {
  std::vector<Graph> members;
  bool k1_warning = false;  // a single-vertex member leaves only the empty graph
  std::vector<std::string> warnings;
};

ForbiddenFamily normalize_family(std::vector<Graph> graphs);

struct PropertyClass {
  enum Tag { ContainsAllIndependentSets, ExcludesIndependentSet } tag;
  int d_is = 0;  // minimum order of an edgeless member, when excluding
};

PropertyClass classify(const ForbiddenFamily& family);

// Witness that a family member occurs induced in g.
struct MembershipWitness {
  int member_index;
  std::vector<int> embedding;  // member vertex -> host vertex
};

// True (nullopt) iff no member occurs induced in g.
std::optional<MembershipWitness> membership_witness(const Graph& g, const ForbiddenFamily& family);
std::optional<MembershipWitness> membership_witness(const Graph& g, const ForbiddenFamily& family,
                                                    const std::vector<uint64_t>& alive);
bool member_free(const Graph& g, const ForbiddenFamily& family);

ForbiddenFamily complement_family(const ForbiddenFamily& family);

// The member with lexicographically smallest gamma sequence; with the planar
// filter, smallest among planar members (rejecting when none is planar).
Graph select_h_pi(const ForbiddenFamily& family, bool planar_only = false);

enum class CPrimeMode { DegeneracyOrdering, SmallestId };

// The decomposition driving the gadget constructions. h1, j and d_graph are
// standalone graphs; index maps back into h1 are kept for audits.
struct GadgetPlan {
  Graph h_pi;
  Graph h1;      // component of h_pi with maximum gamma key
  int d = 1;     // number of h_pi components isomorphic to h1
  int c = 0;     // vertex of h1 whose deletion realizes alpha(h1)
  Graph j;       // largest component of h1 - c, plus c
  int c_in_j = 0;
  int cprime_in_j = 0;
  Graph d_graph;  // h1 minus (V(j) \ {c})
  int c_in_d = 0;
  int delta_max_degree = 0;   // max degree of h_pi
  int delta_degeneracy = 0;   // degeneracy of h_pi
  std::vector<int> j_vertices;  // in h1 ids, includes c
  std::vector<int> d_vertices;  // in h1 ids, includes c
  bool degenerate = false;      // edgeless h_pi forced through with allow_edgeless
};

GadgetPlan build_gadget_plan(const Graph& h_pi,
                             CPrimeMode cprime = CPrimeMode::DegeneracyOrdering,
                             bool allow_edgeless = false);

}  // namespace pivd

#endif
