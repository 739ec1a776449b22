#include "qgraph/graph.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace qgraph {

namespace {

int transpose_index(const QuantumSet& qs, int a) {
  const auto& ix = qs.basis_index(a);
  return qs.flat_index(ix.block, ix.col, ix.row);
}

void require_endo(const SuperOp& a, const char* where) {
  if (a.in_arity() != 1 || a.out_arity() != 1)
    fail(errc::arity_mismatch, std::string(where) + ": expected a map B -> B");
}

EdgeProjection blockwise_product(const EdgeProjection& pa, const EdgeProjection& pb) {
  EdgeProjection out{pa.owner, {}};
  out.blocks.reserve(pa.blocks.size());
  for (std::size_t i = 0; i < pa.blocks.size(); ++i)
    out.blocks.push_back(pa.blocks[i] * pb.blocks[i]);
  return out;
}

// Hermitian projection onto the eigenspaces of h with eigenvalue > cut.
Mat eigenspace_projection_above(const Mat& h, double cut) {
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  Mat proj = Mat::Zero(h.rows(), h.cols());
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > cut)
      proj += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
  return proj;
}

}  // namespace

// --- Schur product calculus --------------------------------------------------

SuperOp schur_product(const SuperOp& a, const SuperOp& b) {
  require_same_qset(a.owner(), b.owner(), "schur_product");
  require_endo(a, "schur_product");
  require_endo(b, "schur_product");
  return from_edge_projection(
      blockwise_product(to_edge_projection(a), to_edge_projection(b)));
}

SuperOp schur_unit(const QSetPtr& qs) {
  const AlgebraElement one = unit_element(qs);
  return rank_one(one, one).scaled(qs->delta_sq());
}

SuperOp schur_involution(const SuperOp& a) {
  require_endo(a, "schur_involution");
  const Mat k = involution_matrix(a.owner());
  return SuperOp(a.owner(), 1, 1, k * a.mat().conjugate() * k);
}

bool is_schur_idempotent(const SuperOp& a, double eq_tol) {
  if (a.in_arity() != 1 || a.out_arity() != 1) return false;
  return approx_eq(schur_product(a, a).mat(), a.mat(), eq_tol);
}

// --- Edge projection coordinates ----------------------------------------------

EdgeProjection to_edge_projection(const SuperOp& a) {
  require_endo(a, "to_edge_projection");
  const QuantumSet& qs = *a.owner();
  const int nb = qs.num_blocks();
  const double inv_d2 = 1.0 / qs.delta_sq();
  EdgeProjection p{a.owner(), {}};
  p.blocks.resize(static_cast<std::size_t>(nb) * nb);
  for (int s = 0; s < nb; ++s) {
    const int ns = qs.block_size(s);
    const RVec& q_s = qs.density(s);
    for (int t = 0; t < nb; ++t) {
      const int nt = qs.block_size(t);
      const RVec& q_t = qs.density(t);
      Mat blk(ns * nt, ns * nt);
      for (int av = 0; av < ns; ++av)
        for (int i = 0; i < nt; ++i)
          for (int bv = 0; bv < ns; ++bv)
            for (int j = 0; j < nt; ++j)
              blk(av * nt + i, bv * nt + j) =
                  inv_d2 / std::sqrt(q_s(av) * q_t(j)) *
                  a.mat()(qs.flat_index(t, i, j), qs.flat_index(s, av, bv));
      p.block(s, t) = std::move(blk);
    }
  }
  return p;
}

SuperOp from_edge_projection(const EdgeProjection& p) {
  const QuantumSet& qs = *p.owner;
  const int nb = qs.num_blocks();
  const double d2 = qs.delta_sq();
  Mat m = Mat::Zero(qs.dim(), qs.dim());
  for (int s = 0; s < nb; ++s) {
    const int ns = qs.block_size(s);
    const RVec& q_s = qs.density(s);
    for (int t = 0; t < nb; ++t) {
      const int nt = qs.block_size(t);
      const RVec& q_t = qs.density(t);
      const Mat& blk = p.block(s, t);
      for (int av = 0; av < ns; ++av)
        for (int i = 0; i < nt; ++i)
          for (int bv = 0; bv < ns; ++bv)
            for (int j = 0; j < nt; ++j)
              m(qs.flat_index(t, i, j), qs.flat_index(s, av, bv)) =
                  d2 * std::sqrt(q_s(av) * q_t(j)) * blk(av * nt + i, bv * nt + j);
    }
  }
  return SuperOp(p.owner, 1, 1, std::move(m));
}

int edge_projection_rank(const EdgeProjection& p, double eig_tol) {
  int r = 0;
  for (const Mat& blk : p.blocks) r += matrix_rank(blk, eig_tol);
  return r;
}

// --- Bimodule picture ----------------------------------------------------------

TensorElement iota(const SuperOp& a) {
  require_endo(a, "iota");
  const QuantumSet& qs = *a.owner();
  const int d = qs.dim();
  Vec w = Vec::Zero(static_cast<Eigen::Index>(d) * d);
  for (int col = 0; col < d; ++col) {
    const int u = transpose_index(qs, col);
    const double fac = std::sqrt(qs.q_col(col) / qs.q_row(col));
    for (int c = 0; c < d; ++c) w(static_cast<Eigen::Index>(u) * d + c) = fac * a.mat()(c, col);
  }
  return TensorElement(a.owner(), 2, std::move(w));
}

SuperOp iota_inv(const TensorElement& w) {
  if (w.arity() != 2) fail(errc::arity_mismatch, "iota_inv: expected an element of B ⊗ B");
  const QuantumSet& qs = *w.owner();
  const int d = qs.dim();
  Mat m(d, d);
  for (int col = 0; col < d; ++col) {
    const int u = transpose_index(qs, col);
    const double fac = std::sqrt(qs.q_row(col) / qs.q_col(col));
    m.col(col) = fac * w.coords().segment(static_cast<Eigen::Index>(u) * d, d);
  }
  return SuperOp(w.owner(), 1, 1, std::move(m));
}

SuperOp to_bimodule_projection(const SuperOp& a) {
  require_endo(a, "to_bimodule_projection");
  const QSetPtr& qs = a.owner();
  const int d = qs->dim();
  const EdgeProjection pa = to_edge_projection(a);
  Mat big(static_cast<Eigen::Index>(d) * d, static_cast<Eigen::Index>(d) * d);
  for (int u = 0; u < d; ++u) {
    const int t = transpose_index(*qs, u);
    const double fac = std::sqrt(qs->q_col(u) / qs->q_row(u));
    for (int c = 0; c < d; ++c) {
      Mat m = Mat::Zero(d, d);
      m(c, t) = fac;
      const SuperOp col_op = from_edge_projection(
          blockwise_product(pa, to_edge_projection(SuperOp(qs, 1, 1, std::move(m)))));
      big.col(static_cast<Eigen::Index>(u) * d + c) = iota(col_op).coords();
    }
  }
  return SuperOp(qs, 2, 2, std::move(big));
}

SuperOp from_bimodule_projection(const SuperOp& p, double eq_tol) {
  if (p.in_arity() != 2 || p.out_arity() != 2)
    fail(errc::arity_mismatch, "from_bimodule_projection: expected a map on B ⊗ B");
  const QSetPtr& qs = p.owner();
  const int d = qs->dim();
  if (!approx_eq(p.mat(), p.mat().adjoint().eval(), eq_tol))
    fail(errc::not_projection, "bimodule projection is not self-adjoint");
  if (!approx_eq(p.mat(), (p.mat() * p.mat()).eval(), eq_tol))
    fail(errc::not_projection, "bimodule projection is not idempotent");

  // Commutation with the outer bimodule actions x ⊗ 1 (left), 1 ⊗ y (right),
  // probed on seeded random pairs.
  std::mt19937_64 rng(0x51D2ULL);
  for (int probe = 0; probe < 8; ++probe) {
    const SuperOp act =
        tensor(left_mult(random_element(qs, rng)), right_mult(random_element(qs, rng)));
    if (!approx_eq((p.mat() * act.mat()).eval(), (act.mat() * p.mat()).eval(),
                   10 * eq_tol * std::max(1.0, act.mat().norm())))
      fail(errc::not_bimodule,
           "projection does not commute with the bimodule actions on B ⊗ B");
  }

  const Vec& u = qs->unit_vector();
  const Mat shrink =
      Eigen::kroneckerProduct(u.transpose(), Mat::Identity(d, d)).eval();
  const Mat grow = Eigen::kroneckerProduct(Mat::Identity(d, d), u).eval();
  SuperOp a(qs, 1, 1, (qs->delta_sq() * shrink * p.mat() * grow).eval());
  if (!approx_eq(to_bimodule_projection(a).mat(), p.mat(), 10 * eq_tol))
    fail(errc::not_bimodule,
         "projection is not the edge-space projection of any Schur idempotent");
  return a;
}

// --- Quantum graphs -------------------------------------------------------------

QuantumGraph::QuantumGraph(SuperOp adjacency, double eq_tol)
    : adjacency_(std::move(adjacency)),
      eq_tol_(eq_tol),
      cache_(std::make_shared<GraphFacts>()),
      once_(std::make_shared<std::once_flag>()) {
  require_endo(adjacency_, "QuantumGraph");
  Tolerance{eq_tol_, 1e-7}.validate();
  if (!is_schur_idempotent(adjacency_, eq_tol_))
    fail(errc::not_projection, "adjacency operator is not a Schur idempotent");
}

const GraphFacts& QuantumGraph::facts() const {
  std::call_once(*once_, [this] {
    GraphFacts f;
    const QSetPtr& qsp = adjacency_.owner();
    const QuantumSet& qs = *qsp;
    const Mat& m = adjacency_.mat();
    const double scale = std::max(1.0, m.norm());

    const Mat k = involution_matrix(qsp);
    f.real = approx_eq(m, (k * m.conjugate() * k).eval(), eq_tol_);
    f.self_adjoint = approx_eq(m, m.adjoint().eval(), eq_tol_);
    f.undirected = f.real && f.self_adjoint;
    f.kms_symmetric = f.real && approx_eq(m, adjacency_.kms_adjoint().mat(), eq_tol_);

    const SuperOp diag = schur_product(adjacency_, SuperOp::identity(qsp));
    f.reflexive = approx_eq(diag.mat(), SuperOp::identity(qsp).mat(), eq_tol_);
    f.irreflexive = diag.mat().norm() <= eq_tol_ * scale;
    f.has_partial_loops = !f.reflexive && !f.irreflexive;

    const EdgeProjection p = to_edge_projection(adjacency_);
    f.schur_central = true;
    for (const Mat& blk : p.blocks) {
      const cplx mean = blk.trace() / static_cast<double>(blk.rows());
      const Mat dev = blk - mean * Mat::Identity(blk.rows(), blk.cols());
      if (dev.norm() > eq_tol_ * std::max(1.0, blk.norm())) {
        f.schur_central = false;
        break;
      }
    }
    f.rank = edge_projection_rank(p, 1e-7);

    const Vec& u = qs.unit_vector();
    const cplx dval = u.dot(m * u);
    const bool reg = (m * u - dval * u).norm() <= eq_tol_ * std::max(1.0, std::abs(dval)) &&
                     (m.adjoint() * u - std::conj(dval) * u).norm() <=
                         eq_tol_ * std::max(1.0, std::abs(dval)) &&
                     std::abs(dval.imag()) <= eq_tol_ * std::max(1.0, std::abs(dval));
    if (reg) f.degree = dval.real();
    f.edge_count = qs.delta_sq() * dval.real();
    *cache_ = std::move(f);
  });
  return *cache_;
}

// --- Constructions ---------------------------------------------------------------

QuantumGraph trivial_graph(const QSetPtr& qs) { return QuantumGraph(SuperOp::identity(qs)); }

QuantumGraph empty_graph(const QSetPtr& qs) { return QuantumGraph(SuperOp::zero(qs, 1, 1)); }

QuantumGraph complete_graph(const QSetPtr& qs) {
  return QuantumGraph(schur_unit(qs) - SuperOp::identity(qs));
}

QuantumGraph reflexive_complete_graph(const QSetPtr& qs) {
  return QuantumGraph(schur_unit(qs));
}

QuantumGraph complement(const QuantumGraph& g) {
  return QuantumGraph(schur_unit(g.qset()) - g.adjacency());
}

QuantumGraph classical_graph(int n, const std::vector<std::pair<int, int>>& edges,
                             bool directed) {
  if (n < 1) fail(errc::param_out_of_range, "classical_graph: need at least one vertex");
  const QSetPtr qs = QuantumSet::tracial(std::vector<int>(n, 1));
  Mat m = Mat::Zero(n, n);
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail(errc::param_out_of_range, "classical_graph: edge endpoint out of range");
    m(b, a) = 1.0;  // column = source vertex, row = target vertex
    if (!directed) m(a, b) = 1.0;
  }
  return QuantumGraph(SuperOp(qs, 1, 1, std::move(m)));
}

QuantumGraph bipartite_double(const QuantumGraph& g) {
  if (!g.is_real())
    fail(errc::not_real, "bipartite_double requires a real adjacency operator");
  const QuantumSet& qs = *g.qset();
  std::vector<int> blocks2;
  std::vector<RVec> density2;
  for (int copy = 0; copy < 2; ++copy)
    for (int s = 0; s < qs.num_blocks(); ++s) {
      blocks2.push_back(qs.block_size(s));
      density2.push_back(0.5 * qs.density(s));
    }
  const QSetPtr qs2 = QuantumSet::make(std::move(blocks2), std::move(density2));
  const int d = qs.dim();
  Mat m2 = Mat::Zero(2 * d, 2 * d);
  m2.block(0, d, d, d) = g.mat();
  m2.block(d, 0, d, d) = g.mat().adjoint();
  return QuantumGraph(SuperOp(qs2, 1, 1, std::move(m2)));
}

QuantumGraph disjoint_union(const QuantumGraph& g0, const QuantumGraph& g1) {
  const QuantumSet& qa = *g0.qset();
  const QuantumSet& qb = *g1.qset();
  const double alpha = qa.delta_sq() / (qa.delta_sq() + qb.delta_sq());
  std::vector<int> blocks;
  std::vector<RVec> density;
  for (int s = 0; s < qa.num_blocks(); ++s) {
    blocks.push_back(qa.block_size(s));
    density.push_back(alpha * qa.density(s));
  }
  for (int s = 0; s < qb.num_blocks(); ++s) {
    blocks.push_back(qb.block_size(s));
    density.push_back((1.0 - alpha) * qb.density(s));
  }
  const QSetPtr qs2 = QuantumSet::make(std::move(blocks), std::move(density));
  const int da = qa.dim(), db = qb.dim();
  Mat m = Mat::Zero(da + db, da + db);
  m.topLeftCorner(da, da) = g0.mat();
  m.bottomRightCorner(db, db) = g1.mat();
  return QuantumGraph(SuperOp(qs2, 1, 1, std::move(m)));
}

QuantumGraph tensor_product(const QuantumGraph& g0, const QuantumGraph& g1) {
  const QuantumSet& qa = *g0.qset();
  const QuantumSet& qb = *g1.qset();
  std::vector<int> blocks;
  std::vector<RVec> density;
  for (int s = 0; s < qa.num_blocks(); ++s)
    for (int t = 0; t < qb.num_blocks(); ++t) {
      const int ns = qa.block_size(s), nt = qb.block_size(t);
      blocks.push_back(ns * nt);
      RVec q(ns * nt);
      for (int i = 0; i < ns; ++i)
        for (int k = 0; k < nt; ++k) q(i * nt + k) = qa.density(s)(i) * qb.density(t)(k);
      density.push_back(std::move(q));
    }
  const QSetPtr qs2 = QuantumSet::make(std::move(blocks), std::move(density));

  const int da = qa.dim(), db = qb.dim();
  // Permutation from kron coordinates (flat0 * db + flat1) to the flat GNS
  // index of the product algebra.
  std::vector<int> perm(static_cast<std::size_t>(da) * db);
  for (int s = 0; s < qa.num_blocks(); ++s)
    for (int t = 0; t < qb.num_blocks(); ++t) {
      const int ns = qa.block_size(s), nt = qb.block_size(t);
      for (int i = 0; i < ns; ++i)
        for (int j = 0; j < ns; ++j)
          for (int kk = 0; kk < nt; ++kk)
            for (int l = 0; l < nt; ++l)
              perm[static_cast<std::size_t>(qa.flat_index(s, i, j)) * db +
                   qb.flat_index(t, kk, l)] =
                  qs2->flat_index(s * qb.num_blocks() + t, i * nt + kk, j * nt + l);
    }
  const Mat kron = Eigen::kroneckerProduct(g0.mat(), g1.mat()).eval();
  Mat m(da * db, da * db);
  for (int r = 0; r < da * db; ++r)
    for (int c = 0; c < da * db; ++c) m(perm[r], perm[c]) = kron(r, c);
  return QuantumGraph(SuperOp(qs2, 1, 1, std::move(m)));
}

// --- Orientations ------------------------------------------------------------------

OrientationCheck is_orientation(const QuantumGraph& g, const SuperOp& t, bool kms,
                                double eq_tol, double eig_tol) {
  require_same_qset(g.qset(), t.owner(), "is_orientation");
  require_endo(t, "is_orientation");
  if (!is_schur_idempotent(t, eq_tol)) return {false, "T is not a Schur idempotent"};
  if (!approx_eq(schur_product(g.adjacency(), t).mat(), t.mat(), eq_tol))
    return {false, "T is not supported on the edge space of G (A • T ≠ T)"};
  const SuperOp tdag = t.gns_adjoint();
  if (schur_product(t, tdag).mat().norm() > eq_tol * std::max(1.0, t.mat().norm()))
    return {false, "T overlaps its adjoint (T • T† ≠ 0)"};
  if (kms) {
    if (!approx_eq(g.mat(), (t + t.kms_adjoint()).mat(), eq_tol))
      return {false, "A ≠ T + T‡ (KMS splitting fails)"};
    return {true, ""};
  }
  const EdgeProjection pa = to_edge_projection(g.adjacency());
  const EdgeProjection pt = to_edge_projection(t);
  const EdgeProjection ptd = to_edge_projection(tdag);
  int rank_t = 0, rank_a = 0, rank_all = 0;
  for (std::size_t i = 0; i < pa.blocks.size(); ++i) {
    const Eigen::Index n = pa.blocks[i].rows();
    Mat two(n, 2 * n), three(n, 3 * n);
    two << pt.blocks[i], ptd.blocks[i];
    three << pa.blocks[i], pt.blocks[i], ptd.blocks[i];
    rank_t += matrix_rank(two, eig_tol);
    rank_a += matrix_rank(pa.blocks[i], eig_tol);
    rank_all += matrix_rank(three, eig_tol);
  }
  if (rank_t != rank_a || rank_all != rank_a)
    return {false, "ranges of T • and T† • do not exactly cover the edge space of G"};
  return {true, ""};
}

OrientationObstruction orientation_rank_obstruction(const QuantumGraph& g, double eig_tol) {
  OrientationObstruction out;
  out.edge_rank = edge_projection_rank(to_edge_projection(g.adjacency()), eig_tol);
  if (!(g.is_irreflexive() && g.is_undirected())) {
    out.decomposition_possible = true;
    out.detail = "rank parity is only an obstruction for irreflexive undirected graphs";
    return out;
  }
  out.decomposition_possible = (out.edge_rank % 2 == 0);
  out.detail = out.decomposition_possible
                   ? "edge rank is even; an orientation is not ruled out by rank parity"
                   : "edge rank is odd; no splitting of the edge projection into T and "
                     "T† can exist";
  return out;
}

// --- Random graphs --------------------------------------------------------------------

QuantumGraph random_quantum_graph(const QSetPtr& qs, std::uint64_t seed, bool undirected) {
  if (undirected && !qs->is_tracial())
    fail(errc::hypotheses_not_met,
         "undirected random graphs are only defined over tracial quantum sets");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::bernoulli_distribution coin(0.5);

  const int nb = qs->num_blocks();
  EdgeProjection p{qs, {}};
  p.blocks.resize(static_cast<std::size_t>(nb) * nb);
  for (int s = 0; s < nb; ++s)
    for (int t = 0; t < nb; ++t) {
      const int n = qs->block_size(s) * qs->block_size(t);
      Mat h(n, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) h(r, c) = cplx(gauss(rng), gauss(rng));
      h = (h + h.adjoint().eval()) / 2.0;
      Eigen::SelfAdjointEigenSolver<Mat> es(h);
      Mat proj = Mat::Zero(n, n);
      for (Eigen::Index i = 0; i < n; ++i)
        if (coin(rng))
          proj += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
      p.block(s, t) = std::move(proj);
    }

  if (undirected) {
    const SuperOp a = from_edge_projection(p);
    const EdgeProjection pdag = to_edge_projection(a.gns_adjoint());
    for (std::size_t i = 0; i < p.blocks.size(); ++i)
      p.blocks[i] = eigenspace_projection_above(p.blocks[i] + pdag.blocks[i], 1.5);
  }
  return QuantumGraph(from_edge_projection(p));
}

}  // namespace qgraph
