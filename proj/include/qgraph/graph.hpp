// Quantum graphs over a quantum set (B, ψ) and the Schur-product calculus.
//
// A quantum adjacency operator is a linear map A : B -> B that is idempotent
// for the Schur product A • A' = δ⁻² m (A ⊗ A') m†.  Three coordinate systems
// are used interchangeably:
//   * the GNS matrix of A itself (SuperOp),
//   * the "edge projection" p_A, a blockwise matrix over B^op ⊗ B whose
//     (s,t) block acts on C^{n_s} ⊗ C^{n_t}; A ↦ p_A is a *-isomorphism from
//     (maps with •) onto (B^op ⊗ B with composition), so Schur products are
//     computed blockwise as matrix products,
//   * the bimodule picture: P_A = ι ∘ (A • ·) ∘ ι⁻¹ acting on B ⊗ B, whose
//     range is the edge space; Schur idempotents correspond exactly to
//     ψ-preserving-bimodule projections.
#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgraph/qalg.hpp"

namespace qgraph {

// --- Schur product calculus -------------------------------------------------

// A • A' = δ⁻² m (A ⊗ A') m†, for maps B -> B.
SuperOp schur_product(const SuperOp& a, const SuperOp& b);

// The Schur unit: reflexive complete graph J = δ² |1><1| ... i.e. J • A = A.
SuperOp schur_unit(const QSetPtr& qs);

// Schur involution A ↦ A^• with (A^•)(x) = (A(x*))*; conjugates matrices by
// the involution matrix K.  Anti-multiplicative: (S • T)^• = T^• • S^•.
SuperOp schur_involution(const SuperOp& a);

bool is_schur_idempotent(const SuperOp& a, double eq_tol);

// --- Edge projection coordinates -------------------------------------------

// p_A ∈ B^op ⊗ B stored blockwise: block (s,t) is an (n_s n_t) × (n_s n_t)
// matrix acting on C^{n_s} ⊗ C^{n_t} (first factor = the B^op leg).
struct EdgeProjection {
  QSetPtr owner;
  std::vector<Mat> blocks;  // indexed st = s * num_blocks + t

  const Mat& block(int s, int t) const {
    return blocks[s * owner->num_blocks() + t];
  }
  Mat& block(int s, int t) { return blocks[s * owner->num_blocks() + t]; }
};

EdgeProjection to_edge_projection(const SuperOp& a);
SuperOp from_edge_projection(const EdgeProjection& p);

// Numerical rank of p (sum over blocks), using the given absolute tolerance
// on eigenvalues; for projections this is the trace rounded to an integer.
int edge_projection_rank(const EdgeProjection& p, double eig_tol);

// --- Bimodule picture -------------------------------------------------------

// ι : B(L²B) -> B ⊗ B, ι(|x><y|) = (x ⊗ 1)(m† applied to y*)… concretely a
// scaled permutation of coordinates; Ψ-inner products on B(L²B) become plain
// ℓ² inner products of ι-coordinates.
TensorElement iota(const SuperOp& a);
SuperOp iota_inv(const TensorElement& w);

// P_A = ι ∘ (A • ·) ∘ ι⁻¹ : B⊗B -> B⊗B, an orthogonal projection commuting
// with the outer bimodule actions iff A is a Schur idempotent.
SuperOp to_bimodule_projection(const SuperOp& a);

// Inverse direction: A = δ² (ψ ⊗ id) P(· ⊗ 1).  Validates that P is an
// idempotent self-adjoint bimodule map (throws not_bimodule / not_projection).
SuperOp from_bimodule_projection(const SuperOp& p, double eq_tol = 1e-9);

// --- Quantum graphs ---------------------------------------------------------

// Structure predicates are computed once per graph and cached; all of them
// depend only on the adjacency operator and the quantum set.
struct GraphFacts {
  bool real = false;           // A commutes with the involution
  bool self_adjoint = false;   // A = A† (GNS)
  bool undirected = false;     // real and self-adjoint
  bool kms_symmetric = false;  // real and A = A‡ (KMS adjoint)
  bool reflexive = false;      // A • id = id
  bool irreflexive = false;    // A • id = 0
  bool has_partial_loops = false;  // neither reflexive nor irreflexive
  bool schur_central = false;  // A • commutes with everything (all p-blocks scalar)
  std::optional<double> degree;  // d with A1 = d1 and A†1 = d̄1, if regular
  double edge_count = 0.0;       // δ² ψ-weighted count <1|A|1> (real A)
  int rank = 0;                  // rank of p_A
};

class QuantumGraph {
 public:
  // Validates Schur idempotence A • A = A at the given tolerance.
  QuantumGraph(SuperOp adjacency, double eq_tol = 1e-9);

  const QSetPtr& qset() const { return adjacency_.owner(); }
  const SuperOp& adjacency() const { return adjacency_; }
  const Mat& mat() const { return adjacency_.mat(); }

  const GraphFacts& facts() const;  // computed lazily, cached

  bool is_real() const { return facts().real; }
  bool is_self_adjoint() const { return facts().self_adjoint; }
  bool is_undirected() const { return facts().undirected; }
  bool is_kms_symmetric() const { return facts().kms_symmetric; }
  bool is_reflexive() const { return facts().reflexive; }
  bool is_irreflexive() const { return facts().irreflexive; }
  bool is_schur_central() const { return facts().schur_central; }
  std::optional<double> degree() const { return facts().degree; }

 private:
  SuperOp adjacency_;
  double eq_tol_;
  std::shared_ptr<GraphFacts> cache_;  // filled on first facts() call
  std::shared_ptr<std::once_flag> once_;
};

// --- Constructions ----------------------------------------------------------

QuantumGraph trivial_graph(const QSetPtr& qs);             // A = id
QuantumGraph empty_graph(const QSetPtr& qs);               // A = 0
QuantumGraph complete_graph(const QSetPtr& qs);            // A = J - id
QuantumGraph reflexive_complete_graph(const QSetPtr& qs);  // A = J

// Complement via the Schur unit: A ↦ J - A (always a Schur idempotent when
// A is one and A • J = A, which holds for every quantum graph).
QuantumGraph complement(const QuantumGraph& g);

// A classical graph on n labeled vertices over C^n with uniform ψ: edges are
// (i, j) pairs; the operator convention is (A f)(i) = Σ_{j: i~j} f(j), i.e.
// matrix entry A[i][j] = 1 iff (j → i) is an edge when directed = true, and
// both directions are inserted when directed = false.
QuantumGraph classical_graph(int n, const std::vector<std::pair<int, int>>& edges,
                             bool directed = false);

// Bipartite double: adjacency [[0, A], [A†, 0]] over B ⊕ B with state
// (ψ ⊕ ψ)/2.  Requires a real adjacency operator.
QuantumGraph bipartite_double(const QuantumGraph& g);

// Disjoint union over B₀ ⊕ B₁ with ψ = α ψ₀ ⊕ (1-α) ψ₁, α = δ₀²/(δ₀²+δ₁²);
// the result has δ² = δ₀² + δ₁².
QuantumGraph disjoint_union(const QuantumGraph& g0, const QuantumGraph& g1);

// Tensor product over B₀ ⊗ B₁ with ψ₀ ⊗ ψ₁ (blocks n_s·n_t, δ² = δ₀²δ₁²).
QuantumGraph tensor_product(const QuantumGraph& g0, const QuantumGraph& g1);

// --- Orientations -----------------------------------------------------------

struct OrientationCheck {
  bool valid = false;
  std::string detail;  // first failed requirement, empty when valid
};

// T orients G when T is a Schur idempotent with A • T = T, T • T† = 0 (GNS
// adjoint), and the ranges of T • · and T† • · together span the range of
// A • · — i.e. the edges of G split into T and its adjoint.  Checked
// blockwise on edge projections: rank[p_T | p_{T†}] = rank p_A =
// rank[p_A | p_T | p_{T†}].  With kms = true the split condition A = T + T‡
// (KMS adjoint) is required instead of the GNS-adjoint range conditions.
OrientationCheck is_orientation(const QuantumGraph& g, const SuperOp& t,
                                bool kms = false, double eq_tol = 1e-9,
                                double eig_tol = 1e-7);

// Parity obstruction for irreflexive undirected graphs: if an orientation
// exists, rank p_A = 2 rank p_T must be even, so odd rank proves
// non-orientability.
struct OrientationObstruction {
  int edge_rank = 0;              // rank of the edge projection
  bool decomposition_possible = false;  // edge_rank is even
  std::string detail;
};
OrientationObstruction orientation_rank_obstruction(const QuantumGraph& g,
                                                    double eig_tol = 1e-7);

// --- Random graphs ----------------------------------------------------------

// Spectral-projection construction: pick a random blockwise-Hermitian element
// of B^op ⊗ B, project onto a random subset of its eigenspaces, and pull the
// projection back to an adjacency operator.  With undirected = true (tracial
// ψ only) the projection is replaced by the meet p ∧ p_{A†} so the result is
// additionally self-adjoint.
QuantumGraph random_quantum_graph(const QSetPtr& qs, std::uint64_t seed,
                                  bool undirected = false);

}  // namespace qgraph
