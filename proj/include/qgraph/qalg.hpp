// Finite quantum sets and the operator calculus over them.
//
// A quantum set is a multimatrix algebra B = ⊕_s M_{n_s}(C) together with a
// faithful state ψ = Tr(Q ·) whose density Q is diagonal and satisfies the
// delta-form law Tr(Q_s^{-1}) = δ² for every block s.  The GNS inner product
// is <x|y> = ψ(x* y); the matrix units E_ij scaled by 1/sqrt(q_j) form an
// orthonormal basis of L²(B, ψ), enumerated in (block, row, column)
// lexicographic order.  Linear maps B^{⊗m} -> B^{⊗n} ("superoperators") are
// stored as dense matrices over tensor powers of that basis, first factor
// major, so composition and adjoints are plain matrix algebra.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "qgraph/types.hpp"

namespace qgraph {

class QuantumSet;
using QSetPtr = std::shared_ptr<const QuantumSet>;

class AlgebraElement;
class TensorElement;
class SuperOp;

class QuantumSet {
 public:
  // Desk-scale bound on dim B = Σ n_s²; every constructor enforces it.
  static constexpr int kDefaultDimCap = 128;

  // Throws not_a_state / not_faithful / not_delta_form / param_out_of_range.
  static QSetPtr make(std::vector<int> blocks, std::vector<RVec> density,
                      int dim_cap = kDefaultDimCap);
  // The tracial delta-form τ_B = ⊕_s (n_s / dim B) Tr_s, with δ² = dim B.
  static QSetPtr tracial(std::vector<int> blocks, int dim_cap = kDefaultDimCap);

  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const std::vector<int>& blocks() const { return blocks_; }
  int block_size(int s) const { return blocks_[s]; }
  int dim() const { return dim_; }
  double delta_sq() const { return delta_sq_; }
  const RVec& density(int s) const { return density_[s]; }
  bool is_tracial(double tol = 1e-12) const;

  // GNS basis bookkeeping: flat index a in [0, dim) <-> (block, row, col).
  struct BasisIndex {
    int block, row, col;
  };
  const BasisIndex& basis_index(int a) const { return index_[a]; }
  int flat_index(int s, int i, int j) const {
    return offset_[s] + i * blocks_[s] + j;
  }
  double q_row(int a) const { return density_[index_[a].block](index_[a].row); }
  double q_col(int a) const { return density_[index_[a].block](index_[a].col); }

  // GNS coordinates of the unit 1_B (a unit vector, since ψ(1) = 1).
  const Vec& unit_vector() const { return unit_vec_; }

 private:
  QuantumSet() = default;

  std::vector<int> blocks_;
  std::vector<RVec> density_;
  std::vector<int> offset_;
  std::vector<BasisIndex> index_;
  Vec unit_vec_;
  int dim_ = 0;
  double delta_sq_ = 0.0;
};

// Structural equality of the underlying quantum set; used for owner checks.
bool same_qset(const QSetPtr& a, const QSetPtr& b);
void require_same_qset(const QSetPtr& a, const QSetPtr& b, const char* where);

// An element of B, stored blockwise.
class AlgebraElement {
 public:
  AlgebraElement(QSetPtr owner, std::vector<Mat> blocks);

  const QSetPtr& owner() const { return owner_; }
  const Mat& block(int s) const { return blocks_[s]; }
  std::vector<Mat>& mutable_blocks() { return blocks_; }

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;  // algebra product
  AlgebraElement scaled(cplx c) const;
  AlgebraElement adjoint() const;  // x*

  cplx state() const;  // ψ(x)
  Vec gns() const;     // GNS coordinates
  double gns_norm() const;

  bool is_zero(double tol = 1e-9) const;
  bool is_self_adjoint(double tol = 1e-9) const;
  bool is_projection(double tol = 1e-9) const;

  static AlgebraElement from_gns(const QSetPtr& qs, const Vec& coords);

 private:
  QSetPtr owner_;
  std::vector<Mat> blocks_;
};

AlgebraElement unit_element(const QSetPtr& qs);
AlgebraElement zero_element(const QSetPtr& qs);
AlgebraElement matrix_unit(const QSetPtr& qs, int s, int i, int j);

cplx gns_inner(const AlgebraElement& x, const AlgebraElement& y);
// KMS inner product ψ(x* σ_{-i/2}(y)); agrees with GNS iff ψ is tracial.
cplx kms_inner(const AlgebraElement& x, const AlgebraElement& y);

// An element of B^{⊗k}, stored as coordinates over the k-fold GNS basis.
class TensorElement {
 public:
  TensorElement(QSetPtr owner, int arity, Vec coords);

  const QSetPtr& owner() const { return owner_; }
  int arity() const { return arity_; }
  const Vec& coords() const { return coords_; }

  static TensorElement from_element(const AlgebraElement& x);
  static TensorElement tensor(const AlgebraElement& x, const AlgebraElement& y);
  AlgebraElement as_element() const;  // arity 1 only

  // B-bimodule actions on the outer legs: x·ξ multiplies the first leg on
  // the left, ξ·y multiplies the last leg on the right.
  TensorElement left_mul(const AlgebraElement& x) const;
  TensorElement right_mul(const AlgebraElement& y) const;

  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  double norm() const { return coords_.norm(); }

 private:
  QSetPtr owner_;
  int arity_;
  Vec coords_;
};

// A linear map B^{⊗in} -> B^{⊗out} as a dim^out × dim^in matrix over GNS
// coordinates.  GNS adjoints are matrix adjoints by construction.
class SuperOp {
 public:
  SuperOp(QSetPtr owner, int in_arity, int out_arity, Mat mat);

  const QSetPtr& owner() const { return owner_; }
  int in_arity() const { return in_; }
  int out_arity() const { return out_; }
  const Mat& mat() const { return mat_; }

  SuperOp operator+(const SuperOp& o) const;
  SuperOp operator-(const SuperOp& o) const;
  SuperOp operator*(const SuperOp& o) const;  // composition
  SuperOp scaled(cplx c) const;

  SuperOp gns_adjoint() const;
  // KMS adjoint T‡ = σ_{i/2}^{⊗out appl.} ... for T: B^{⊗m} -> B^{⊗n} this is
  // σ_{i/2}^{⊗m} ∘ T† ∘ σ_{-i/2}^{⊗n}; real maps stay real under it.
  SuperOp kms_adjoint() const;

  TensorElement apply(const TensorElement& x) const;
  AlgebraElement apply(const AlgebraElement& x) const;  // arity 1 -> 1 only

  static SuperOp identity(const QSetPtr& qs, int arity = 1);
  static SuperOp zero(const QSetPtr& qs, int in_arity, int out_arity);

  bool approx(const SuperOp& o, double eq_tol) const;

 private:
  QSetPtr owner_;
  int in_, out_;
  Mat mat_;
};

SuperOp tensor(const SuperOp& a, const SuperOp& b);

// Multiplication m : B⊗B -> B and its GNS adjoint m† (the comultiplication);
// the delta-form law is exactly m m† = δ² id.
SuperOp mult_map(const QSetPtr& qs);
SuperOp comult_map(const QSetPtr& qs);

// Modular automorphism σ_z(x) = Q^{iz} x Q^{-iz}, entire in z; σ_z = id for
// tracial ψ.  On matrix units: σ_z(E_ij) = (q_i/q_j)^{iz} E_ij.
SuperOp modular_map(const QSetPtr& qs, cplx z);

SuperOp left_mult(const AlgebraElement& x);   // λ(x) = x ·
SuperOp right_mult(const AlgebraElement& x);  // ρ(x) = · x
SuperOp rank_one(const AlgebraElement& x, const AlgebraElement& y);  // |x><y|

// Matrix K of the antilinear involution: gns(x*) = K · conj(gns(x)).
Mat involution_matrix(const QSetPtr& qs);

// Change-of-basis diagonal between the GNS and KMS orthonormal bases; the
// matrix of an operator in the KMS basis is W^{-1} M W with W = kms_weights.
RVec kms_weights(const QSetPtr& qs);

// Deterministic pseudorandom objects (all consume a seeded engine).
QSetPtr random_delta_form(const std::vector<int>& blocks, std::uint64_t seed,
                          int dim_cap = QuantumSet::kDefaultDimCap);
AlgebraElement random_element(const QSetPtr& qs, std::mt19937_64& rng);
AlgebraElement random_self_adjoint(const QSetPtr& qs, std::mt19937_64& rng);
SuperOp random_superop(const QSetPtr& qs, std::mt19937_64& rng);

}  // namespace qgraph
