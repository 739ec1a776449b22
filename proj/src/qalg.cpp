#include "qgraph/qalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

namespace qgraph {

int matrix_rank(const Mat& m, double eig_tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& sv = svd.singularValues();
  const double cut = eig_tol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++r;
  return r;
}

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_a_state: return "not_a_state";
    case errc::not_faithful: return "not_faithful";
    case errc::not_delta_form: return "not_delta_form";
    case errc::owner_mismatch: return "owner_mismatch";
    case errc::arity_mismatch: return "arity_mismatch";
    case errc::not_real: return "not_real";
    case errc::not_projection: return "not_projection";
    case errc::not_bimodule: return "not_bimodule";
    case errc::not_eigenvalue: return "not_eigenvalue";
    case errc::not_self_adjoint: return "not_self_adjoint";
    case errc::not_unital: return "not_unital";
    case errc::not_star: return "not_star";
    case errc::not_multiplicative: return "not_multiplicative";
    case errc::hypotheses_not_met: return "hypotheses_not_met";
    case errc::param_out_of_range: return "param_out_of_range";
    case errc::parse_error: return "parse_error";
  }
  return "unknown_error";
}

// ---------------------------------------------------------------------------
// QuantumSet

QSetPtr QuantumSet::make(std::vector<int> blocks, std::vector<RVec> density,
                         int dim_cap) {
  if (blocks.empty()) fail(errc::param_out_of_range, "no blocks given");
  if (density.size() != blocks.size())
    fail(errc::param_out_of_range, "one density vector per block required");

  int dim = 0;
  for (size_t s = 0; s < blocks.size(); ++s) {
    if (blocks[s] < 1) fail(errc::param_out_of_range, "block sizes must be >= 1");
    if (density[s].size() != blocks[s])
      fail(errc::param_out_of_range, "density length must match block size");
    dim += blocks[s] * blocks[s];
  }
  if (dim > dim_cap) {
    std::ostringstream os;
    os << "dim B = " << dim << " exceeds the cap " << dim_cap;
    fail(errc::param_out_of_range, os.str());
  }

  // State: weights nonnegative, Tr(Q) = Σ_s n_s Σ_j q_j^{(s)} ... with a
  // diagonal density the trace weight of entry q_j within block s is n_s
  // copies on the diagonal?  No: Q_s = diag(q_1..q_{n_s}) contributes
  // Tr(Q_s) = Σ_j q_j directly.
  double trace = 0.0;
  for (size_t s = 0; s < blocks.size(); ++s) {
    for (int j = 0; j < blocks[s]; ++j) {
      double q = density[s](j);
      if (q < -1e-12) fail(errc::not_a_state, "density has a negative entry");
      if (q <= 1e-14) fail(errc::not_faithful, "density has a zero entry");
      trace += q;
    }
  }
  if (std::abs(trace - 1.0) > 1e-9)
    fail(errc::not_a_state, "density does not sum to 1");

  // Delta-form law: Tr(Q_s^{-1}) equal across blocks.
  double delta_sq = 0.0;
  for (size_t s = 0; s < blocks.size(); ++s) {
    double t = 0.0;
    for (int j = 0; j < blocks[s]; ++j) t += 1.0 / density[s](j);
    if (s == 0) {
      delta_sq = t;
    } else if (std::abs(t - delta_sq) > 1e-9 * std::max(1.0, delta_sq)) {
      fail(errc::not_delta_form,
           "Tr(Q_s^{-1}) differs across blocks; state is not a delta-form");
    }
  }

  auto qs = std::shared_ptr<QuantumSet>(new QuantumSet());
  qs->blocks_ = std::move(blocks);
  qs->density_ = std::move(density);
  qs->dim_ = dim;
  qs->delta_sq_ = delta_sq;
  qs->offset_.resize(qs->blocks_.size());
  int off = 0;
  for (size_t s = 0; s < qs->blocks_.size(); ++s) {
    qs->offset_[s] = off;
    int n = qs->blocks_[s];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        qs->index_.push_back({static_cast<int>(s), i, j});
    off += n * n;
  }
  qs->unit_vec_ = Vec::Zero(dim);
  for (int a = 0; a < dim; ++a) {
    const auto& ix = qs->index_[a];
    if (ix.row == ix.col)
      qs->unit_vec_(a) = std::sqrt(qs->density_[ix.block](ix.col));
  }
  return qs;
}

QSetPtr QuantumSet::tracial(std::vector<int> blocks, int dim_cap) {
  int dim = 0;
  for (int n : blocks) {
    if (n < 1) fail(errc::param_out_of_range, "block sizes must be >= 1");
    dim += n * n;
  }
  std::vector<RVec> density;
  density.reserve(blocks.size());
  for (int n : blocks)
    density.push_back(RVec::Constant(n, static_cast<double>(n) / dim));
  return make(std::move(blocks), std::move(density), dim_cap);
}

bool QuantumSet::is_tracial(double tol) const {
  for (int s = 0; s < num_blocks(); ++s) {
    double want = static_cast<double>(blocks_[s]) / dim_;
    for (int j = 0; j < blocks_[s]; ++j)
      if (std::abs(density_[s](j) - want) > tol) return false;
  }
  return true;
}

bool same_qset(const QSetPtr& a, const QSetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->blocks() != b->blocks()) return false;
  for (int s = 0; s < a->num_blocks(); ++s)
    if ((a->density(s) - b->density(s)).cwiseAbs().maxCoeff() > 1e-12)
      return false;
  return true;
}

void require_same_qset(const QSetPtr& a, const QSetPtr& b, const char* where) {
  if (!same_qset(a, b))
    fail(errc::owner_mismatch,
         std::string(where) + ": operands live over different quantum sets");
}

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement::AlgebraElement(QSetPtr owner, std::vector<Mat> blocks)
    : owner_(std::move(owner)), blocks_(std::move(blocks)) {
  if (static_cast<int>(blocks_.size()) != owner_->num_blocks())
    fail(errc::param_out_of_range, "element: wrong number of blocks");
  for (int s = 0; s < owner_->num_blocks(); ++s) {
    int n = owner_->block_size(s);
    if (blocks_[s].rows() != n || blocks_[s].cols() != n)
      fail(errc::param_out_of_range, "element: block has wrong shape");
  }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  require_same_qset(owner_, o.owner_, "element sum");
  std::vector<Mat> out(blocks_.size());
  for (size_t s = 0; s < blocks_.size(); ++s) out[s] = blocks_[s] + o.blocks_[s];
  return AlgebraElement(owner_, std::move(out));
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  require_same_qset(owner_, o.owner_, "element difference");
  std::vector<Mat> out(blocks_.size());
  for (size_t s = 0; s < blocks_.size(); ++s) out[s] = blocks_[s] - o.blocks_[s];
  return AlgebraElement(owner_, std::move(out));
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  require_same_qset(owner_, o.owner_, "element product");
  std::vector<Mat> out(blocks_.size());
  for (size_t s = 0; s < blocks_.size(); ++s) out[s] = blocks_[s] * o.blocks_[s];
  return AlgebraElement(owner_, std::move(out));
}

AlgebraElement AlgebraElement::scaled(cplx c) const {
  std::vector<Mat> out(blocks_.size());
  for (size_t s = 0; s < blocks_.size(); ++s) out[s] = c * blocks_[s];
  return AlgebraElement(owner_, std::move(out));
}

AlgebraElement AlgebraElement::adjoint() const {
  std::vector<Mat> out(blocks_.size());
  for (size_t s = 0; s < blocks_.size(); ++s) out[s] = blocks_[s].adjoint();
  return AlgebraElement(owner_, std::move(out));
}

cplx AlgebraElement::state() const {
  cplx v = 0.0;
  for (int s = 0; s < owner_->num_blocks(); ++s)
    v += (owner_->density(s).asDiagonal().toDenseMatrix().cast<cplx>() *
          blocks_[s])
             .trace();
  return v;
}

Vec AlgebraElement::gns() const {
  Vec v(owner_->dim());
  for (int a = 0; a < owner_->dim(); ++a) {
    const auto& ix = owner_->basis_index(a);
    v(a) = std::sqrt(owner_->q_col(a)) * blocks_[ix.block](ix.row, ix.col);
  }
  return v;
}

double AlgebraElement::gns_norm() const { return gns().norm(); }

bool AlgebraElement::is_zero(double tol) const {
  for (const auto& b : blocks_)
    if (b.norm() > tol) return false;
  return true;
}

bool AlgebraElement::is_self_adjoint(double tol) const {
  for (const auto& b : blocks_)
    if ((b - b.adjoint().eval()).norm() > tol * std::max(1.0, b.norm()))
      return false;
  return true;
}

bool AlgebraElement::is_projection(double tol) const {
  if (!is_self_adjoint(tol)) return false;
  for (const auto& b : blocks_)
    if ((b * b - b).norm() > tol * std::max(1.0, b.norm())) return false;
  return true;
}

AlgebraElement AlgebraElement::from_gns(const QSetPtr& qs, const Vec& coords) {
  if (coords.size() != qs->dim())
    fail(errc::param_out_of_range, "from_gns: wrong coordinate length");
  std::vector<Mat> blocks(qs->num_blocks());
  for (int s = 0; s < qs->num_blocks(); ++s)
    blocks[s] = Mat::Zero(qs->block_size(s), qs->block_size(s));
  for (int a = 0; a < qs->dim(); ++a) {
    const auto& ix = qs->basis_index(a);
    blocks[ix.block](ix.row, ix.col) = coords(a) / std::sqrt(qs->q_col(a));
  }
  return AlgebraElement(qs, std::move(blocks));
}

AlgebraElement unit_element(const QSetPtr& qs) {
  std::vector<Mat> blocks(qs->num_blocks());
  for (int s = 0; s < qs->num_blocks(); ++s)
    blocks[s] = Mat::Identity(qs->block_size(s), qs->block_size(s));
  return AlgebraElement(qs, std::move(blocks));
}

AlgebraElement zero_element(const QSetPtr& qs) {
  std::vector<Mat> blocks(qs->num_blocks());
  for (int s = 0; s < qs->num_blocks(); ++s)
    blocks[s] = Mat::Zero(qs->block_size(s), qs->block_size(s));
  return AlgebraElement(qs, std::move(blocks));
}

AlgebraElement matrix_unit(const QSetPtr& qs, int s, int i, int j) {
  if (s < 0 || s >= qs->num_blocks() || i < 0 || j < 0 ||
      i >= qs->block_size(s) || j >= qs->block_size(s))
    fail(errc::param_out_of_range, "matrix_unit: index out of range");
  auto x = zero_element(qs);
  x.mutable_blocks()[s](i, j) = 1.0;
  return x;
}

cplx gns_inner(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_qset(x.owner(), y.owner(), "gns_inner");
  return x.gns().dot(y.gns());  // Eigen's dot conjugates the left argument
}

cplx kms_inner(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_qset(x.owner(), y.owner(), "kms_inner");
  auto sigma = modular_map(x.owner(), cplx(0.0, -0.5));
  return x.gns().dot(sigma.mat() * y.gns());
}

// ---------------------------------------------------------------------------
// TensorElement

static Eigen::Index ipow(Eigen::Index base, int e) {
  Eigen::Index r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

TensorElement::TensorElement(QSetPtr owner, int arity, Vec coords)
    : owner_(std::move(owner)), arity_(arity), coords_(std::move(coords)) {
  if (arity_ < 1) fail(errc::arity_mismatch, "tensor arity must be >= 1");
  if (coords_.size() != ipow(owner_->dim(), arity_))
    fail(errc::arity_mismatch, "tensor coordinates have wrong length");
}

TensorElement TensorElement::from_element(const AlgebraElement& x) {
  return TensorElement(x.owner(), 1, x.gns());
}

TensorElement TensorElement::tensor(const AlgebraElement& x,
                                    const AlgebraElement& y) {
  require_same_qset(x.owner(), y.owner(), "tensor");
  Vec a = x.gns(), b = y.gns();
  Vec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return TensorElement(x.owner(), 2, std::move(out));
}

AlgebraElement TensorElement::as_element() const {
  if (arity_ != 1) fail(errc::arity_mismatch, "as_element: arity is not 1");
  return AlgebraElement::from_gns(owner_, coords_);
}

TensorElement TensorElement::left_mul(const AlgebraElement& x) const {
  require_same_qset(owner_, x.owner(), "left_mul");
  Eigen::Index rest = ipow(owner_->dim(), arity_ - 1);
  Mat lambda = left_mult(x).mat();
  Eigen::Map<const Mat> view(coords_.data(), rest, owner_->dim());
  // first-factor-major layout: coords[(a, rest-index)] = view(restIdx, a)
  Mat out = view * lambda.transpose();
  return TensorElement(owner_, arity_, Vec(Eigen::Map<Vec>(out.data(), coords_.size())));
}

TensorElement TensorElement::right_mul(const AlgebraElement& y) const {
  require_same_qset(owner_, y.owner(), "right_mul");
  Eigen::Index rest = ipow(owner_->dim(), arity_ - 1);
  Mat rho = right_mult(y).mat();
  Eigen::Map<const Mat> view(coords_.data(), owner_->dim(), rest);
  Mat out = rho * view;
  return TensorElement(owner_, arity_, Vec(Eigen::Map<Vec>(out.data(), coords_.size())));
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  require_same_qset(owner_, o.owner_, "tensor sum");
  if (arity_ != o.arity_) fail(errc::arity_mismatch, "tensor sum: arity");
  return TensorElement(owner_, arity_, coords_ + o.coords_);
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
  require_same_qset(owner_, o.owner_, "tensor difference");
  if (arity_ != o.arity_) fail(errc::arity_mismatch, "tensor difference: arity");
  return TensorElement(owner_, arity_, coords_ - o.coords_);
}

// ---------------------------------------------------------------------------
// SuperOp

SuperOp::SuperOp(QSetPtr owner, int in_arity, int out_arity, Mat mat)
    : owner_(std::move(owner)), in_(in_arity), out_(out_arity),
      mat_(std::move(mat)) {
  if (in_ < 0 || out_ < 0) fail(errc::arity_mismatch, "negative arity");
  if (mat_.rows() != ipow(owner_->dim(), out_) ||
      mat_.cols() != ipow(owner_->dim(), in_))
    fail(errc::arity_mismatch, "superoperator matrix has wrong shape");
}

SuperOp SuperOp::operator+(const SuperOp& o) const {
  require_same_qset(owner_, o.owner_, "superop sum");
  if (in_ != o.in_ || out_ != o.out_) fail(errc::arity_mismatch, "superop sum");
  return SuperOp(owner_, in_, out_, mat_ + o.mat_);
}

SuperOp SuperOp::operator-(const SuperOp& o) const {
  require_same_qset(owner_, o.owner_, "superop difference");
  if (in_ != o.in_ || out_ != o.out_)
    fail(errc::arity_mismatch, "superop difference");
  return SuperOp(owner_, in_, out_, mat_ - o.mat_);
}

SuperOp SuperOp::operator*(const SuperOp& o) const {
  require_same_qset(owner_, o.owner_, "superop composition");
  if (in_ != o.out_)
    fail(errc::arity_mismatch, "superop composition: arities do not chain");
  return SuperOp(owner_, o.in_, out_, mat_ * o.mat_);
}

SuperOp SuperOp::scaled(cplx c) const { return SuperOp(owner_, in_, out_, c * mat_); }

SuperOp SuperOp::gns_adjoint() const {
  return SuperOp(owner_, out_, in_, mat_.adjoint());
}

SuperOp SuperOp::kms_adjoint() const {
  Mat shalf = modular_map(owner_, cplx(0.0, 0.5)).mat();   // σ_{i/2}
  Mat smhalf = modular_map(owner_, cplx(0.0, -0.5)).mat(); // σ_{-i/2}
  Mat lhs = Mat::Identity(1, 1), rhs = Mat::Identity(1, 1);
  for (int i = 0; i < in_; ++i)
    lhs = Eigen::kroneckerProduct(lhs, shalf).eval();
  for (int i = 0; i < out_; ++i)
    rhs = Eigen::kroneckerProduct(rhs, smhalf).eval();
  return SuperOp(owner_, out_, in_, lhs * mat_.adjoint() * rhs);
}

TensorElement SuperOp::apply(const TensorElement& x) const {
  require_same_qset(owner_, x.owner(), "superop apply");
  if (x.arity() != in_) fail(errc::arity_mismatch, "superop apply: arity");
  return TensorElement(owner_, out_, mat_ * x.coords());
}

AlgebraElement SuperOp::apply(const AlgebraElement& x) const {
  require_same_qset(owner_, x.owner(), "superop apply");
  if (in_ != 1 || out_ != 1)
    fail(errc::arity_mismatch, "superop apply on element: arity is not 1 -> 1");
  return AlgebraElement::from_gns(owner_, mat_ * x.gns());
}

SuperOp SuperOp::identity(const QSetPtr& qs, int arity) {
  Eigen::Index d = ipow(qs->dim(), arity);
  return SuperOp(qs, arity, arity, Mat::Identity(d, d));
}

SuperOp SuperOp::zero(const QSetPtr& qs, int in_arity, int out_arity) {
  return SuperOp(qs, in_arity, out_arity,
                 Mat::Zero(ipow(qs->dim(), out_arity), ipow(qs->dim(), in_arity)));
}

bool SuperOp::approx(const SuperOp& o, double eq_tol) const {
  if (!same_qset(owner_, o.owner_) || in_ != o.in_ || out_ != o.out_)
    return false;
  return approx_eq(mat_, o.mat_, eq_tol);
}

SuperOp tensor(const SuperOp& a, const SuperOp& b) {
  require_same_qset(a.owner(), b.owner(), "superop tensor");
  return SuperOp(a.owner(), a.in_arity() + b.in_arity(),
                 a.out_arity() + b.out_arity(),
                 Eigen::kroneckerProduct(a.mat(), b.mat()));
}

// ---------------------------------------------------------------------------
// Canonical maps

SuperOp mult_map(const QSetPtr& qs) {
  int d = qs->dim();
  Mat m = Mat::Zero(d, static_cast<Eigen::Index>(d) * d);
  // f_(s,i,j) f_(t,k,l) = δ_st δ_jk E_il / (sqrt(q_j) sqrt(q_l)); in GNS
  // coordinates that is a single entry 1/sqrt(q_j) at (s,i,l).
  for (int a = 0; a < d; ++a) {
    const auto& ia = qs->basis_index(a);
    for (int b = 0; b < d; ++b) {
      const auto& ib = qs->basis_index(b);
      if (ia.block != ib.block || ia.col != ib.row) continue;
      int target = qs->flat_index(ia.block, ia.row, ib.col);
      m(target, static_cast<Eigen::Index>(a) * d + b) =
          1.0 / std::sqrt(qs->q_col(a));
    }
  }
  return SuperOp(qs, 2, 1, std::move(m));
}

SuperOp comult_map(const QSetPtr& qs) { return mult_map(qs).gns_adjoint(); }

SuperOp modular_map(const QSetPtr& qs, cplx z) {
  int d = qs->dim();
  Mat m = Mat::Zero(d, d);
  for (int a = 0; a < d; ++a) {
    double ratio = qs->q_row(a) / qs->q_col(a);
    m(a, a) = std::exp(cplx(0.0, 1.0) * z * std::log(ratio));
  }
  return SuperOp(qs, 1, 1, std::move(m));
}

SuperOp left_mult(const AlgebraElement& x) {
  const QSetPtr& qs = x.owner();
  int d = qs->dim();
  Mat m = Mat::Zero(d, d);
  for (int b = 0; b < d; ++b) {
    const auto& ib = qs->basis_index(b);
    // x · E_kl has block ib.block column ib.col = x_block.col(ib.row) ... :
    // (x E_kl)_{i l} = x_{i k}.
    for (int i = 0; i < qs->block_size(ib.block); ++i) {
      int a = qs->flat_index(ib.block, i, ib.col);
      m(a, b) = x.block(ib.block)(i, ib.row) *
                std::sqrt(qs->q_col(a) / qs->q_col(b));
    }
  }
  return SuperOp(qs, 1, 1, std::move(m));
}

SuperOp right_mult(const AlgebraElement& x) {
  const QSetPtr& qs = x.owner();
  int d = qs->dim();
  Mat m = Mat::Zero(d, d);
  for (int b = 0; b < d; ++b) {
    const auto& ib = qs->basis_index(b);
    // (E_kl · x)_{k j} = x_{l j}.
    for (int j = 0; j < qs->block_size(ib.block); ++j) {
      int a = qs->flat_index(ib.block, ib.row, j);
      m(a, b) = x.block(ib.block)(ib.col, j) *
                std::sqrt(qs->q_col(a) / qs->q_col(b));
    }
  }
  return SuperOp(qs, 1, 1, std::move(m));
}

SuperOp rank_one(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_qset(x.owner(), y.owner(), "rank_one");
  return SuperOp(x.owner(), 1, 1, x.gns() * y.gns().adjoint());
}

Mat involution_matrix(const QSetPtr& qs) {
  int d = qs->dim();
  Mat k = Mat::Zero(d, d);
  // (x*)_{ij} = conj(x_{ji}), so gns(x*)_a picks up conj(gns(x)_{a'}) with
  // a' the transposed index, weighted by sqrt(q_j / q_i).
  for (int a = 0; a < d; ++a) {
    const auto& ix = qs->basis_index(a);
    int ap = qs->flat_index(ix.block, ix.col, ix.row);
    k(a, ap) = std::sqrt(qs->q_col(a) / qs->q_row(a));
  }
  return k;
}

RVec kms_weights(const QSetPtr& qs) {
  RVec w(qs->dim());
  for (int a = 0; a < qs->dim(); ++a)
    w(a) = std::pow(qs->q_col(a) / qs->q_row(a), 0.25);
  return w;
}

// ---------------------------------------------------------------------------
// Random objects

QSetPtr random_delta_form(const std::vector<int>& blocks, std::uint64_t seed,
                          int dim_cap) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.3, 1.0);
  // Scale each block so Tr(Q_s^{-1}) agrees across blocks, then normalize
  // the total trace to one; both operations preserve the block law.
  std::vector<RVec> density;
  density.reserve(blocks.size());
  for (int n : blocks) {
    RVec r(n);
    for (int j = 0; j < n; ++j) r(j) = uni(rng);
    double harm = 0.0;
    for (int j = 0; j < n; ++j) harm += 1.0 / r(j);
    density.push_back(r * harm);
  }
  double total = 0.0;
  for (const auto& q : density) total += q.sum();
  for (auto& q : density) q /= total;
  return QuantumSet::make(blocks, std::move(density), dim_cap);
}

AlgebraElement random_element(const QSetPtr& qs, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Mat> blocks(qs->num_blocks());
  for (int s = 0; s < qs->num_blocks(); ++s) {
    int n = qs->block_size(s);
    Mat b(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b(i, j) = cplx(g(rng), g(rng));
    blocks[s] = std::move(b);
  }
  return AlgebraElement(qs, std::move(blocks));
}

AlgebraElement random_self_adjoint(const QSetPtr& qs, std::mt19937_64& rng) {
  auto x = random_element(qs, rng);
  return (x + x.adjoint()).scaled(0.5);
}

SuperOp random_superop(const QSetPtr& qs, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  int d = qs->dim();
  Mat m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = cplx(g(rng), g(rng));
  return SuperOp(qs, 1, 1, std::move(m));
}

}  // namespace qgraph
