#ifndef PIVD_REDUCTION_HPP
#define PIVD_REDUCTION_HPP

#include <optional>
#include <vector>

#include "pivd/hereditary.hpp"
#include "pivd/solve.hpp"

namespace pivd {

// Per-vertex origin of a reduced instance; enough to lift solutions back and
// to audit the layout. Field meaning by kind:
//   Original        a = source vertex
//   JCopy           a,b = source edge endpoints (a < b), c = J-local vertex
//   DCopy           a = source vertex, b = D-local vertex
//   Base            a = h_pi component index, b = copy index, c = local vertex
//   TreeVertex      a = level, b = position within level
//   TreeAttachment  a = output id of the tree vertex, b = H1-local vertex
//   FaceVertex      a = face index
//   FaceAttachment  a = face index, b = H1-local vertex
//   WitnessVertex   a = witness-local vertex
struct OriginTag {
  enum Kind {
    Original,
    JCopy,
    DCopy,
    Base,
    TreeVertex,
    TreeAttachment,
    FaceVertex,
    FaceAttachment,
    UniversalVertex,
    WitnessVertex,
  } kind = Original;
  int a = -1, b = -1, c = -1;
};

struct Provenance {
  std::vector<OriginTag> origin;  // indexed by output vertex
};

// Seeded construction defects for mutation testing of the harness itself.
enum class Mutation { None, DropBase, WrongBudget, WrongCPrime };

struct ConstructionOptions {
  Mutation mutation = Mutation::None;
};

struct ReductionResult {
  PiVDInstance instance;
  Provenance provenance;
};

struct SourceValidation {
  bool subcubic = false;
  bool two_degenerate = false;
  bool girth_ok = false;
  std::optional<int> girth_value;  // nullopt: acyclic
  int required_girth = 0;
  bool pass() const { return subcubic && two_degenerate && girth_ok; }
};

// Report (not a rejection): max degree <= 3, 2-degenerate, girth >= 3d.
SourceValidation validate_source(const VCInstance& src, int d);

// Replace every edge by a path with d internal vertices (d rounded up to
// even) and raise the budget by (d/2)*m. Output is subcubic, 2-degenerate,
// and every cycle is longer than 3d. Rejects sources of max degree > 3.
VCInstance subdivide_for_girth(const VCInstance& src, int d);

// The core gadget reduction: base copies calibrating how many H1 components
// survive, one J copy per source edge identified at c/c', one D copy per
// source vertex, budget unchanged.
ReductionResult main_construction(const VCInstance& src, const GadgetPlan& plan,
                                  const ForbiddenFamily& family,
                                  const ConstructionOptions& opts = {});

// For families excluding an independent set: run the main construction for
// the complement family, then complement the output graph.
ReductionResult complement_construction(const VCInstance& src, const ForbiddenFamily& family,
                                        CPrimeMode cprime = CPrimeMode::DegeneracyOrdering,
                                        const ConstructionOptions& opts = {});

// Connected variant: pad the source to a power of two with isolated
// vertices, run the main construction, then overlay a binary connector tree
// with an H1 attachment on every tree vertex; budget grows by |tree|.
ReductionResult connected_tree_construction(const VCInstance& src, const GadgetPlan& plan,
                                            const ForbiddenFamily& family,
                                            const ConstructionOptions& opts = {});

// Connected variant for excluding families: main construction on the
// complement family with one extra H1 base copy, complemented, budget + 1.
ReductionResult connected_complement_construction(const VCInstance& src,
                                                  const ForbiddenFamily& family,
                                                  CPrimeMode cprime = CPrimeMode::DegeneracyOrdering,
                                                  const ConstructionOptions& opts = {});

// Main construction with the gadget chosen among planar members only;
// planar sources yield planar outputs (asserted).
ReductionResult planar_construction(const VCInstance& src, const ForbiddenFamily& family,
                                    CPrimeMode cprime = CPrimeMode::DegeneracyOrdering,
                                    const ConstructionOptions& opts = {});

// Connected planar variant: one vertex per face of an embedding of the
// (connected, planar) source, adjacent to the face boundary and carrying an
// H1 attachment; gadgets apply to the original edges and vertices only;
// budget grows by the face count.
ReductionResult planar_connected_construction(const VCInstance& src, const GadgetPlan& plan,
                                              const ForbiddenFamily& family,
                                              const ConstructionOptions& opts = {});

// Bounded search for a witness multiset I (components below H1 in the gamma
// order) whose composite with d-1 H1 copies under a universal vertex leaves
// the property. Ordered by total order, then gamma sequence; first hit wins.
std::optional<Graph> detect_case1(const GadgetPlan& plan, const ForbiddenFamily& family,
                                  int order_cap);

// Dominating-vertex variant: with a witness, disjoint-union it in and spend
// one extra deletion on the universal vertex; without one, the universal
// vertex rides along for free.
ReductionResult dominating_vertex_construction(const VCInstance& src, const GadgetPlan& plan,
                                               const ForbiddenFamily& family,
                                               std::optional<Graph> witness = std::nullopt,
                                               std::optional<int> order_cap = std::nullopt,
                                               const ConstructionOptions& opts = {});

// Project a valid deletion certificate of a main-construction instance back
// to source vertices: originals stay, a hit D copy charges its anchor, a hit
// J copy charges its smaller endpoint. Never larger than the certificate.
std::vector<int> lift_vertex_cover(const Certificate& cert, const Provenance& prov,
                                   const PiVDInstance& reduced, const VCInstance& src);

}  // namespace pivd

#endif
