#pragma once
// Unital *-homomorphisms between quantum sets, graph homomorphisms,
// t-homomorphisms (homomorphisms "with measurements"), and 2-colorability.
//
// Conventions
// -----------
// A StarHom is a unital *-homomorphism  f : B_dom -> B_cod (x) M_k.
// For graph-level use the *domain* carries the target graph's algebra and the
// *codomain* carries the source graph's algebra (homomorphisms of graphs act
// contravariantly on the function algebras).  All graph-level helpers below
// take (source_graph, target_graph) in graph order and spell out which
// algebra each one expects.
//
// Componentwise, f(x) = sum_{a,b} f_ab(x) (x) E_ab with linear maps
// f_ab : B_dom -> B_cod.  Over GNS coordinates each f_ab is a matrix F_ab,
// and compositions obey
//   (f f^dag)_{(a,c)} = sum_b F_ab F_cb^H,
//   (f^dag f)_{(d,b)} = sum_a F_ad^H F_ab,
//   (f^dag (T (x) 1) f)_{(d,b)} = sum_a F_ad^H T F_ab.

#include <optional>
#include <string>
#include <vector>

#include "qgraph/graph.hpp"

namespace qgraph {

// ---------------------------------------------------------------------------
// StarHom
// ---------------------------------------------------------------------------

// Unital *-homomorphism f : dom -> cod (x) M_k, stored by its values on the
// matrix units of the domain.
//
// images[a][s] is the block-s component of f applied to the a-th domain
// matrix unit (a = flat GNS index of E^t_{ij}).  Block s of cod (x) M_k is an
// (n_s k) x (n_s k) matrix laid out codomain-leg major: entry
// (r*k + u, c*k + v) is the coefficient of E^s_{rc} (x) E^{M_k}_{uv}.
//
// The constructor validates that the assignment extends to a unital
// *-homomorphism and throws Error with code not_unital / not_star /
// not_multiplicative otherwise.
class StarHom {
 public:
  StarHom(QSetPtr dom, QSetPtr cod, int rep_dim,
          std::vector<std::vector<Mat>> images, double eq_tol = 1e-9);

  const QSetPtr& dom() const { return dom_; }
  const QSetPtr& cod() const { return cod_; }
  int rep_dim() const { return k_; }

  // Image of the flat-index-a domain matrix unit, block s of cod (x) M_k.
  const Mat& image(int a, int s) const { return images_[a][s]; }

  // Component map F_uv over GNS coordinates (dim(cod) x dim(dom)); the
  // entry at (flat_cod(s,r,c), flat_dom(t,i,j)) is
  //   sqrt(q^cod_c) * images[flat_dom(t,i,j)][s](r*k + u, c*k + v)
  //     / sqrt(q^dom_j).
  const Mat& component(int u, int v) const { return components_[u * k_ + v]; }

  // All k^2 components stacked vertically (row blocks in (u,v) row-major
  // order); f is injective iff this has full column rank.
  Mat stacked_matrix() const;

  // Component (d,b) of f^dag (T (x) 1) f, i.e. sum_a F_ad^H T F_ab, for a
  // superoperator matrix T over cod GNS coordinates.  Central to the
  // t-homomorphism conditions.
  Mat sandwich(const Mat& t, int d, int b) const;

  // f viewed as a SuperOp from dom to cod; requires rep_dim() == 1.
  SuperOp as_superop() const;

  // f(x), blockwise over cod (x) M_k (same layout as images).
  std::vector<Mat> apply(const AlgebraElement& x) const;

 private:
  QSetPtr dom_, cod_;
  int k_ = 1;
  std::vector<std::vector<Mat>> images_;
  std::vector<Mat> components_;
};

// Identity homomorphism of a quantum set (k = 1).
StarHom identity_hom(const QSetPtr& qs);

// Pullback of a vertex map between classical sets.  vertex_map[v] = w means
// the underlying map sends vertex v of the source (n0 = vertex_map.size()
// vertices) to vertex w of the target (n1 vertices); the induced
// *-homomorphism goes from the target's function algebra C^{n1} (dom) to the
// source's C^{n0} (cod), e_w |-> sum_{v : vertex_map[v]=w} e_v.  Both quantum
// sets must be classical (all blocks 1x1); densities need not be uniform.
StarHom function_pullback(const QSetPtr& target_funcs, const QSetPtr& source_funcs,
                          const std::vector<int>& vertex_map, double eq_tol = 1e-9);

// *-homomorphism C^m -> B determined by pairwise-orthogonal projections
// x_1,...,x_m in B summing to 1 (e_i |-> x_i).  The domain must be classical
// with m blocks.
StarHom projection_partition_hom(const QSetPtr& cm, const std::vector<AlgebraElement>& xs,
                                 double eq_tol = 1e-9);

// ---------------------------------------------------------------------------
// Graph homomorphisms
// ---------------------------------------------------------------------------

struct HomReport {
  bool holds = false;
  double residual = 0.0;        // largest violation over all checks
  std::string failing_check;    // empty when holds
};

// Pushforward adjacency candidate f^dag (A_source (x) 1) f as a superoperator
// on the domain algebra; for k = 1 this is F^H A F.  The source graph lives
// on f's codomain.
SuperOp pushforward(const StarHom& f, const QuantumGraph& source);

// Graph homomorphism condition: A_target schur-dominates the pushforward,
//   A_target • (f^dag (A_source (x) 1) f) = f^dag (A_source (x) 1) f.
// source lives on f's codomain, target on f's domain.
HomReport is_graph_homomorphism(const StarHom& f, const QuantumGraph& source,
                                const QuantumGraph& target, double eq_tol = 1e-9);

// Rank-based injectivity/surjectivity.  A *-homomorphism is "surjective as a
// graph map" when f itself is injective (full column rank of the stacked
// component matrix).
bool hom_is_injective(const StarHom& f, double eig_tol = 1e-7);
// Injectivity of f restricted to the named domain blocks (column restriction
// of the stacked matrix).
bool hom_is_injective_on(const StarHom& f, const std::vector<int>& dom_blocks,
                         double eig_tol = 1e-7);

// Two candidate notions of surjectivity/injectivity for quantum graph
// homomorphisms; both are reported, neither is endorsed as "the" definition.
// scale = delta_dom^2 / delta_cod^2 throughout.
struct SurjectivityReport {
  bool injective_star_hom = false;  // f injective (classical analogue: onto vertices)
  bool frame_bound = false;         // f^dag f >= scale * (id (x) 1) as a positive map
  double frame_min_eig = 0.0;       // smallest eigenvalue of Gram - scale*id
  double scale = 0.0;
};
SurjectivityReport surjectivity_report(const StarHom& f, double eig_tol = 1e-7);

struct InjectivityReport {
  bool coisometry = false;          // f f^dag = scale * (id (x) 1)
  double coisometry_residual = 0.0;
  bool adjoint_injective = false;   // f^dag injective
  double scale = 0.0;
};
InjectivityReport injectivity_report(const StarHom& f, double eig_tol = 1e-7);

// ---------------------------------------------------------------------------
// t-homomorphisms
// ---------------------------------------------------------------------------

// Two equivalent formulations of the t-homomorphism condition for a
// *-homomorphism f : B_target -> B_source (x) M_k; they must agree and tests
// enforce that.
enum class THomCriterion {
  // A_target • g_db(A_source • T) = g_db(A_source • T) for all superoperator
  // basis elements T over the source algebra and all components (d,b), where
  // g_db(T) = sum_a F_ad^H T F_ab.
  schur_stability,
  // <S | g_db(T)> = 0 for every S in the orthocomplement of the target edge
  // space and every T in the source edge space.
  edge_space_orthogonality,
};

HomReport is_t_homomorphism(const StarHom& f, const QuantumGraph& source,
                            const QuantumGraph& target, THomCriterion criterion,
                            double eq_tol = 1e-9);

// Every unital *-homomorphism is a t-homomorphism between the trivial graphs
// on its domain and codomain; verifies that instance directly.
HomReport verify_trivial_inclusion(const StarHom& f, double eq_tol = 1e-9);

// For a classical target (C^n, uniform trace, classical adjacency), the
// t-homomorphism condition is equivalent to: with P_i = f(e_i),
//   lambda(P_i) (S (x) 1) lambda(P_j) = 0  for every non-adjacent pair (i,j)
// and every S in the source edge space.  Componentwise:
//   sum_b lambda(f_ab(e_i)) S lambda(f_bd(e_j)) = 0 for all components (a,d).
HomReport classical_target_condition(const StarHom& f, const QuantumGraph& source,
                                     const QuantumGraph& target, double eq_tol = 1e-9);

// ---------------------------------------------------------------------------
// Local vs. plain graph homomorphisms
// ---------------------------------------------------------------------------

// A t-homomorphism is always a graph homomorphism; the converse holds when
// both graphs are real, the target is Schur-central, and f intertwines the
// modular groups.  This reports both verdicts plus the hypothesis and
// consistency bookkeeping.
struct HomEquivalenceReport {
  HomReport graph_hom;
  HomReport local_hom;          // schur_stability criterion
  bool hypotheses_hold = false; // both real + target Schur-central + f modular-invariant
  bool consistent = false;      // local => graph always; equal verdicts under hypotheses
  std::string detail;
};
HomEquivalenceReport loc_vs_graph_hom(const StarHom& f, const QuantumGraph& source,
                                      const QuantumGraph& target, double eq_tol = 1e-9);

// Schur-centrality via its projection characterization: the edge space is
// spanned by Schur-central Schur projections iff every block of the edge
// projection is 0 or the identity.  Cross-checkable against
// QuantumGraph::is_schur_central (dimension count).
bool is_schur_central_via_projections(const QuantumGraph& g, double eig_tol = 1e-7);

// ---------------------------------------------------------------------------
// Two-colorability
// ---------------------------------------------------------------------------

enum class TwoColorMode {
  local,         // constructive: t-homomorphism onto the complete graph K_2
  alg_spectral,  // spectral test: Spec(A) = -Spec(A) with algebraic multiplicity
};

struct TwoColorReport {
  TwoColorMode mode = TwoColorMode::local;
  bool colorable = false;
  bool spectrum_symmetric = false;   // always filled
  std::optional<StarHom> coloring;   // local mode, when colorable
  std::string detail;
};

// local mode requires a regular, undirected, tracial graph (throws Error with
// code hypotheses_not_met otherwise) and decides 2-colorability
// constructively through a bipartition; the returned coloring is a verified
// t-homomorphism onto K_2.  alg_spectral mode works for any real graph and
// reports the spectral-symmetry condition; for connected regular undirected
// tracial graphs that condition is exactly algebraic 2-colorability,
// otherwise it is only necessary and `detail` says so.
TwoColorReport two_colorable(const QuantumGraph& g, TwoColorMode mode,
                             double eq_tol = 1e-9, double eig_tol = 1e-7);

// Convenience: the local-mode coloring (nullopt when not 2-colorable).
std::optional<StarHom> two_coloring(const QuantumGraph& g, double eq_tol = 1e-9,
                                    double eig_tol = 1e-7);

}  // namespace qgraph
