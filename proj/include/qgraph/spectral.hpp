#pragma once
// Spectral theory of quantum adjacency operators: spectra, norms, the
// gradient/Laplacian calculus, and the spectral characterizations of
// connectedness and bipartiteness with constructive witnesses.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgraph/homs.hpp"

namespace qgraph {

// ---------------------------------------------------------------------------
// Spectrum
// ---------------------------------------------------------------------------

// Eigenvalues of an adjacency operator clustered at absolute tolerance
// eig_tol and sorted by (real, imaginary) part.  Multiplicities are algebraic
// (counted from the full eigenvalue list of the GNS matrix).
struct Spectrum {
  std::vector<cplx> values;        // cluster centers
  std::vector<int> multiplicities; // same length; sums to dim of the algebra
  bool real_spectrum = false;      // every cluster center has |Im| <= eig_tol
  bool symmetric = false;          // Spec = -Spec including multiplicity
  double eig_tol = 1e-7;

  bool contains(cplx z) const;
  int multiplicity_of(cplx z) const;  // 0 when absent
};

Spectrum spectrum(const QuantumGraph& g, double eig_tol = 1e-7);

// Largest |eigenvalue|.
double spectral_radius(const QuantumGraph& g);

// Operator norm of the adjacency operator as a map on L^2(B, psi) with the
// GNS inner product, or on the KMS inner product space (computed by
// reweighting the GNS matrix with the modular weights).
enum class InnerProduct { gns, kms };
double operator_norm(const QuantumGraph& g, InnerProduct ip);

// ---------------------------------------------------------------------------
// Gradient calculus
// ---------------------------------------------------------------------------

// Gradient nabla = delta^-2 (A^dag (x) id - id (x) A) m^dag, an operator from
// B to B (x) B.
SuperOp gradient(const QuantumGraph& g);

// In/out degree matrices D_in = lambda(A 1), D_out = rho(A^dag 1).
std::pair<SuperOp, SuperOp> degree_matrices(const QuantumGraph& g);

// Laplacian nabla^dag nabla (GNS adjoint); for real graphs this equals
// delta^-2 (D_in - A + D_out - A^dag) and is positive semidefinite.
SuperOp laplacian(const QuantumGraph& g);

// ---------------------------------------------------------------------------
// Eigenvectors inside the algebra
// ---------------------------------------------------------------------------

// A self-adjoint eigenvector of A for the real eigenvalue lambda, normalized
// to GNS norm 1.  Requires a real graph; throws Error(not_eigenvalue) when
// lambda is not within eig_tol of the spectrum, and Error(not_self_adjoint)
// if no self-adjoint eigenvector exists in the eigenspace.
AlgebraElement sa_eigenvector(const QuantumGraph& g, double lambda,
                              double eig_tol = 1e-7);

// Spectral decomposition x = sum_i lambda_i p_i of a self-adjoint element:
// eigenvalues (clustered at eig_tol, descending) with their orthogonal
// spectral projections.
std::vector<std::pair<double, AlgebraElement>> spectral_projections(
    const AlgebraElement& x, double eig_tol = 1e-7);

// Round an approximate projection: snap eigenvalues within snap_tol of {0,1}
// to exactly {0,1} and rebuild.  Throws Error(not_projection) if any
// eigenvalue is farther than snap_tol from both.
AlgebraElement snap_projection(const AlgebraElement& x, double snap_tol = 1e-6);

// ---------------------------------------------------------------------------
// Connectedness and bipartiteness
// ---------------------------------------------------------------------------

// The spectral characterizations below hold for regular undirected graphs
// over tracial quantum sets; functions gated on these throw Error with code
// hypotheses_not_met listing what is missing.
struct SpectralHypotheses {
  bool regular = false;
  bool undirected = false;
  bool tracial = false;
  bool all() const { return regular && undirected && tracial; }
  std::string missing() const;
};
SpectralHypotheses spectral_hypotheses(const QuantumGraph& g);

// Connected iff the degree eigenvalue d of A is simple.  One-dimensional
// algebras are connected; degree 0 with dim >= 2 is disconnected.
bool is_connected(const QuantumGraph& g, double eig_tol = 1e-7);

// For a disconnected graph, a verified surjective graph homomorphism onto
// the reflexive two-point graph T_2 (equivalently a nontrivial partition
// 1 = x_1 + x_2 into projections with A x_i = d x_i).  nullopt when
// connected.
std::optional<StarHom> disconnection_witness(const QuantumGraph& g,
                                             double eq_tol = 1e-9,
                                             double eig_tol = 1e-7);

// Some connected component is bipartite iff -d lies in the spectrum (for
// d = 0: iff dim >= 2).
bool has_bipartite_component(const QuantumGraph& g, double eig_tol = 1e-7);

// The whole graph is bipartite: a partition 1 = x_+ + x_- into nonzero
// projections with A x_+/- = d x_-/+ exists.  For connected graphs this is
// equivalent to -d in Spec; in general the partition is searched for inside
// the self-adjoint part of ker(d + A).
bool is_bipartite(const QuantumGraph& g, double eq_tol = 1e-9,
                  double eig_tol = 1e-7);

// Constructive certificate for (component-)bipartiteness.
enum class BipartiteTarget {
  k2,            // hom onto the complete graph on two points: graph bipartite
  k2_sqcup_t1,   // hom onto K_2 ⊔ T_1: a bipartite component was isolated
};
struct BipartitionWitness {
  AlgebraElement x_plus;
  AlgebraElement x_minus;
  BipartiteTarget target;
  StarHom hom;  // verified graph homomorphism, injective on the K_2 part
};
// nullopt when no bipartite component exists.
std::optional<BipartitionWitness> bipartition_witness(const QuantumGraph& g,
                                                      double eq_tol = 1e-9,
                                                      double eig_tol = 1e-7);

// ---------------------------------------------------------------------------
// Positivity counterexample
// ---------------------------------------------------------------------------

// On M_2 with the (non-diagonal) faithful state psi = Tr(u* Q u .),
// Q = diag(1, q^2)/(1+q^2), u the 45-degree rotation, the projections
// x_+ = E_11, x_- = E_22 and the perturbation xi = alpha [[1, c], [c, 1]]
// with c = (1+q^2)/(1-q^2) satisfy: y_± = x_± + xi are both positive,
// psi(xi) = 0, and psi(x_±) = psi(y_±) — so the state together with
// positivity cannot pin down a positive/negative decomposition even though
// xi != 0.  Valid for 0 < q < 1 and 0 < alpha <= (q^-1 - q)^2 / 4; throws
// Error(param_out_of_range) otherwise.
struct PositivityCounterexample {
  double q = 0.0;
  double alpha = 0.0;
  Mat x_plus, x_minus;   // 2x2 orthogonal projections (standard coordinates)
  Mat xi;                // the perturbation
  Mat y_plus, y_minus;   // perturbed positive elements
  double min_eig_y_plus = 0.0;
  double min_eig_y_minus = 0.0;
  double state_of_xi = 0.0;       // |psi(xi)|
  double xi_norm = 0.0;           // Frobenius norm of xi
  bool valid = false;             // all assertions verified
};
PositivityCounterexample verify_positivity_counterexample(double q, double alpha);

}  // namespace qgraph
