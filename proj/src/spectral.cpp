#include "qgraph/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <utility>

namespace qgraph {

namespace {

struct Cluster {
  cplx center;
  int mult = 0;
};

// Greedy clustering of eigenvalues sorted by (re, im): attach to an existing
// cluster whose center lies within tol, else start a new one; centers track
// the running mean of their members.
std::vector<Cluster> cluster_eigenvalues(std::vector<cplx> eigs, double tol) {
  std::sort(eigs.begin(), eigs.end(), [](cplx a, cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  std::vector<Cluster> out;
  for (cplx z : eigs) {
    Cluster* best = nullptr;
    double best_d = tol;
    for (Cluster& c : out) {
      const double d = std::abs(z - c.center);
      if (d <= best_d) {
        best = &c;
        best_d = d;
      }
    }
    if (best) {
      best->center = (best->center * double(best->mult) + z) / double(best->mult + 1);
      best->mult += 1;
    } else {
      out.push_back({z, 1});
    }
  }
  return out;
}

void require_spectral_hypotheses(const QuantumGraph& g, const char* where) {
  const SpectralHypotheses hyp = spectral_hypotheses(g);
  if (!hyp.all())
    fail(errc::hypotheses_not_met,
         std::string(where) +
             ": requires a regular undirected graph over a tracial quantum set; "
             "missing: " +
             hyp.missing());
}

// Orthonormal basis (columns) of the kernel of m, singular values below
// eig_tol * max(1, largest).
Mat kernel_basis(const Mat& m, double eig_tol) {
  Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = eig_tol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++rank;
  return svd.matrixV().rightCols(svd.matrixV().cols() - rank);
}

// Self-adjoint elements spanning (with the originals) the *-closed subspace
// spanned by the columns of v: symmetric and antisymmetric parts, normalized,
// near-zero ones dropped.
std::vector<AlgebraElement> self_adjoint_span(const QSetPtr& qs, const Mat& v) {
  const Mat k = involution_matrix(qs);
  std::vector<AlgebraElement> out;
  for (Eigen::Index c = 0; c < v.cols(); ++c) {
    const Vec w = v.col(c);
    const Vec star = k * w.conjugate();
    for (const Vec& h : {Vec((w + star) / 2.0), Vec((w - star) / cplx(0, 2))}) {
      const double n = h.norm();
      if (n > 1e-10) out.push_back(AlgebraElement::from_gns(qs, h / n));
    }
  }
  return out;
}

// Blockwise smallest/largest |eigenvalue| of a self-adjoint element.
std::pair<double, double> abs_eig_range(const AlgebraElement& x) {
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (int s = 0; s < x.owner()->num_blocks(); ++s) {
    Eigen::SelfAdjointEigenSolver<Mat> es(x.block(s));
    lo = std::min(lo, es.eigenvalues().cwiseAbs().minCoeff());
    hi = std::max(hi, es.eigenvalues().cwiseAbs().maxCoeff());
  }
  return {lo, hi};
}

AlgebraElement positive_spectral_part(const AlgebraElement& x) {
  std::vector<Mat> blocks;
  for (int s = 0; s < x.owner()->num_blocks(); ++s) {
    Eigen::SelfAdjointEigenSolver<Mat> es(x.block(s));
    Mat p = Mat::Zero(x.block(s).rows(), x.block(s).cols());
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
      if (es.eigenvalues()(i) > 0)
        p += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
    blocks.push_back(std::move(p));
  }
  return AlgebraElement(x.owner(), std::move(blocks));
}

}  // namespace

// --- Spectrum ----------------------------------------------------------------

bool Spectrum::contains(cplx z) const {
  return multiplicity_of(z) > 0;
}

int Spectrum::multiplicity_of(cplx z) const {
  int best = 0;
  double best_d = eig_tol;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double d = std::abs(z - values[i]);
    if (d <= best_d) {
      best = multiplicities[i];
      best_d = d;
    }
  }
  return best;
}

Spectrum spectrum(const QuantumGraph& g, double eig_tol) {
  Eigen::ComplexEigenSolver<Mat> es(g.mat(), /*computeEigenvectors=*/false);
  std::vector<cplx> eigs(es.eigenvalues().data(),
                         es.eigenvalues().data() + es.eigenvalues().size());
  const auto clusters = cluster_eigenvalues(std::move(eigs), eig_tol);

  Spectrum sp;
  sp.eig_tol = eig_tol;
  sp.real_spectrum = true;
  for (const Cluster& c : clusters) {
    sp.values.push_back(c.center);
    sp.multiplicities.push_back(c.mult);
    if (std::abs(c.center.imag()) > eig_tol) sp.real_spectrum = false;
  }

  // Symmetry: greedy matching of each cluster against one of equal
  // multiplicity at (approximately) the negated center.
  std::vector<bool> used(clusters.size(), false);
  sp.symmetric = true;
  for (std::size_t i = 0; i < clusters.size() && sp.symmetric; ++i) {
    if (used[i]) continue;
    const cplx want = -clusters[i].center;
    bool found = false;
    for (std::size_t j = 0; j < clusters.size(); ++j) {
      if (used[j] && j != i) continue;
      if (std::abs(clusters[j].center - want) > 2 * eig_tol) continue;
      if (clusters[j].mult != clusters[i].mult) continue;
      if (j == i) {
        used[i] = true;  // self-paired cluster at ~0
      } else {
        used[i] = used[j] = true;
      }
      found = true;
      break;
    }
    if (!found) sp.symmetric = false;
  }
  return sp;
}

double spectral_radius(const QuantumGraph& g) {
  Eigen::ComplexEigenSolver<Mat> es(g.mat(), /*computeEigenvectors=*/false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double operator_norm(const QuantumGraph& g, InnerProduct ip) {
  Mat m = g.mat();
  if (ip == InnerProduct::kms) {
    const RVec w = kms_weights(g.qset());
    const Mat reweighted = w.cwiseInverse().cast<cplx>().asDiagonal() * m *
                           w.cast<cplx>().asDiagonal();
    m = reweighted;
  }
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
}

// --- Gradient calculus ------------------------------------------------------------

SuperOp gradient(const QuantumGraph& g) {
  const QSetPtr& qs = g.qset();
  const SuperOp id = SuperOp::identity(qs);
  const SuperOp a = g.adjacency();
  return ((tensor(a.gns_adjoint(), id) - tensor(id, a)) * comult_map(qs))
      .scaled(1.0 / qs->delta_sq());
}

std::pair<SuperOp, SuperOp> degree_matrices(const QuantumGraph& g) {
  const AlgebraElement one = unit_element(g.qset());
  return {left_mult(g.adjacency().apply(one)),
          right_mult(g.adjacency().gns_adjoint().apply(one))};
}

SuperOp laplacian(const QuantumGraph& g) {
  const SuperOp grad = gradient(g);
  return grad.gns_adjoint() * grad;
}

// --- Eigenvectors inside the algebra ---------------------------------------------

AlgebraElement sa_eigenvector(const QuantumGraph& g, double lambda, double eig_tol) {
  if (!g.is_real())
    fail(errc::hypotheses_not_met,
         "sa_eigenvector: requires a real adjacency operator");
  const Eigen::Index dim = g.mat().rows();
  const Mat shifted = g.mat() - lambda * Mat::Identity(dim, dim);
  const Mat v = kernel_basis(shifted, eig_tol);
  if (v.cols() == 0)
    fail(errc::not_eigenvalue, "sa_eigenvector: lambda is not an eigenvalue");
  const auto candidates = self_adjoint_span(g.qset(), v);
  for (const AlgebraElement& x : candidates) {
    const double resid = (g.mat() * x.gns() - lambda * x.gns()).norm();
    if (resid <= 1e-6 * std::max(1.0, std::abs(lambda)) && x.is_self_adjoint(1e-8))
      return x;
  }
  fail(errc::not_self_adjoint,
       "sa_eigenvector: no self-adjoint eigenvector found in the eigenspace");
}

std::vector<std::pair<double, AlgebraElement>> spectral_projections(
    const AlgebraElement& x, double eig_tol) {
  if (!x.is_self_adjoint())
    fail(errc::not_self_adjoint, "spectral_projections: element is not self-adjoint");
  const QSetPtr& qs = x.owner();

  // Blockwise eigendecomposition, then cluster all eigenvalues jointly.
  struct Piece {
    double lambda;
    int block;
    Vec vec;
  };
  std::vector<Piece> pieces;
  std::vector<cplx> eigs;
  for (int s = 0; s < qs->num_blocks(); ++s) {
    Eigen::SelfAdjointEigenSolver<Mat> es(x.block(s));
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      pieces.push_back({es.eigenvalues()(i), s, es.eigenvectors().col(i)});
      eigs.push_back(cplx(es.eigenvalues()(i), 0.0));
    }
  }
  const auto clusters = cluster_eigenvalues(std::move(eigs), eig_tol);

  std::vector<std::pair<double, AlgebraElement>> out;
  for (const Cluster& c : clusters) {
    std::vector<Mat> blocks;
    for (int s = 0; s < qs->num_blocks(); ++s)
      blocks.push_back(Mat::Zero(qs->block_size(s), qs->block_size(s)));
    for (const Piece& p : pieces)
      if (std::abs(p.lambda - c.center.real()) <= eig_tol)
        blocks[p.block] += p.vec * p.vec.adjoint();
    out.emplace_back(c.center.real(), AlgebraElement(qs, std::move(blocks)));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  return out;
}

AlgebraElement snap_projection(const AlgebraElement& x, double snap_tol) {
  const QSetPtr& qs = x.owner();
  std::vector<Mat> blocks;
  for (int s = 0; s < qs->num_blocks(); ++s) {
    Eigen::SelfAdjointEigenSolver<Mat> es(x.block(s));
    Mat p = Mat::Zero(x.block(s).rows(), x.block(s).cols());
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
      const double lam = es.eigenvalues()(i);
      if (std::abs(lam - 1.0) <= snap_tol)
        p += es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
      else if (std::abs(lam) > snap_tol)
        fail(errc::not_projection,
             "snap_projection: an eigenvalue is far from both 0 and 1");
    }
    blocks.push_back(std::move(p));
  }
  return AlgebraElement(qs, std::move(blocks));
}

// --- Connectedness ------------------------------------------------------------------

std::string SpectralHypotheses::missing() const {
  const std::pair<bool, const char*> checks[] = {
      {regular, "regular"}, {undirected, "undirected"}, {tracial, "tracial state"}};
  std::ostringstream os;
  bool first = true;
  for (auto [ok, name] : checks) {
    if (ok) continue;
    if (!first) os << ", ";
    os << name;
    first = false;
  }
  return os.str();
}

SpectralHypotheses spectral_hypotheses(const QuantumGraph& g) {
  SpectralHypotheses h;
  h.regular = g.degree().has_value();
  h.undirected = g.is_undirected();
  h.tracial = g.qset()->is_tracial();
  return h;
}

bool is_connected(const QuantumGraph& g, double eig_tol) {
  require_spectral_hypotheses(g, "is_connected");
  if (g.qset()->dim() == 1) return true;
  const double d = *g.degree();
  if (std::abs(d) <= eig_tol) return false;
  return spectrum(g, eig_tol).multiplicity_of(cplx(d, 0.0)) == 1;
}

std::optional<StarHom> disconnection_witness(const QuantumGraph& g, double eq_tol,
                                             double eig_tol) {
  require_spectral_hypotheses(g, "disconnection_witness");
  if (is_connected(g, eig_tol)) return std::nullopt;
  const QSetPtr& qs = g.qset();
  const double d = *g.degree();

  AlgebraElement x1 = zero_element(qs);
  if (std::abs(d) <= eig_tol) {
    // Degree 0 forces A = 0 for an undirected graph, so any nontrivial
    // projection splits the graph.
    auto& blocks = x1.mutable_blocks();
    if (qs->num_blocks() >= 2)
      blocks[0] = Mat::Identity(qs->block_size(0), qs->block_size(0));
    else
      blocks[0](0, 0) = 1.0;
  } else {
    // A self-adjoint element of the degree eigenspace, orthogonal to 1; its
    // top spectral projection stays in the eigenspace (it is a subalgebra).
    const Eigen::Index dim = g.mat().rows();
    const Mat v = kernel_basis((g.mat() - d * Mat::Identity(dim, dim)).eval(), eig_tol);
    const Vec u = qs->unit_vector();
    const Mat w = v - u * (u.adjoint() * v);
    // Re-orthonormalize the projected span (one column became ~0).
    Eigen::JacobiSVD<Mat> svd(w, Eigen::ComputeThinU);
    Eigen::Index keep = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()(i) > 1e-8) ++keep;
    const auto cands = self_adjoint_span(qs, svd.matrixU().leftCols(keep));
    if (cands.empty())
      fail(errc::hypotheses_not_met,
           "disconnection_witness: internal error: degenerate degree eigenspace");
    const auto parts = spectral_projections(cands.front(), eig_tol);
    x1 = parts.front().second;
  }

  const AlgebraElement x2 = unit_element(qs) - x1;
  QuantumGraph t2 = trivial_graph(QuantumSet::tracial({1, 1}));
  StarHom f = projection_partition_hom(t2.qset(), {x1, x2}, 1e-7);
  const HomReport rep = is_graph_homomorphism(f, g, t2, std::max(eq_tol, 1e-8));
  if (!rep.holds || !hom_is_injective(f, eig_tol))
    fail(errc::hypotheses_not_met,
         "disconnection_witness: internal error: candidate split failed verification");
  return f;
}

// --- Bipartiteness -------------------------------------------------------------------

bool has_bipartite_component(const QuantumGraph& g, double eig_tol) {
  require_spectral_hypotheses(g, "has_bipartite_component");
  const double d = *g.degree();
  if (std::abs(d) <= eig_tol) return g.qset()->dim() >= 2;
  return spectrum(g, eig_tol).contains(cplx(-d, 0.0));
}

bool is_bipartite(const QuantumGraph& g, double eq_tol, double eig_tol) {
  const auto w = bipartition_witness(g, eq_tol, eig_tol);
  return w && w->target == BipartiteTarget::k2;
}

std::optional<BipartitionWitness> bipartition_witness(const QuantumGraph& g,
                                                      double eq_tol, double eig_tol) {
  require_spectral_hypotheses(g, "bipartition_witness");
  if (!has_bipartite_component(g, eig_tol)) return std::nullopt;
  const QSetPtr& qs = g.qset();
  const double d = *g.degree();

  const QuantumGraph k2 = classical_graph(2, {{0, 1}});
  const auto finish_k2 = [&](const AlgebraElement& xp,
                             const AlgebraElement& xm) -> std::optional<BipartitionWitness> {
    if (xp.is_zero(1e-8) || xm.is_zero(1e-8)) return std::nullopt;
    try {
      StarHom f = projection_partition_hom(k2.qset(), {xp, xm}, 1e-7);
      if (!is_graph_homomorphism(f, g, k2, std::max(eq_tol, 1e-8)).holds)
        return std::nullopt;
      if (!hom_is_injective(f, eig_tol)) return std::nullopt;
      return BipartitionWitness{xp, xm, BipartiteTarget::k2, std::move(f)};
    } catch (const Error&) {
      return std::nullopt;
    }
  };

  if (std::abs(d) <= eig_tol) {
    // Degree 0: A = 0 and any nontrivial projection partition is a
    // bipartition.
    AlgebraElement xp = zero_element(qs);
    auto& blocks = xp.mutable_blocks();
    if (qs->num_blocks() >= 2)
      blocks[0] = Mat::Identity(qs->block_size(0), qs->block_size(0));
    else
      blocks[0](0, 0) = 1.0;
    return finish_k2(xp, unit_element(qs) - xp);
  }

  // Self-adjoint elements of ker(A + d).
  const Eigen::Index dim = g.mat().rows();
  const Mat v = kernel_basis((g.mat() + d * Mat::Identity(dim, dim)).eval(), eig_tol);
  if (v.cols() == 0) return std::nullopt;
  std::vector<AlgebraElement> candidates = self_adjoint_span(qs, v);
  if (candidates.empty()) return std::nullopt;

  // Deterministic random combinations widen the search for an invertible
  // element of the (real) span.
  {
    std::mt19937_64 rng(0x2C01ULL);
    std::normal_distribution<double> coeff(0.0, 1.0);
    const std::size_t base = candidates.size();
    for (int trial = 0; trial < 16; ++trial) {
      AlgebraElement x = zero_element(qs);
      for (std::size_t i = 0; i < base; ++i)
        x = x + candidates[i].scaled(coeff(rng));
      const double n = x.gns_norm();
      if (n > 1e-10) candidates.push_back(x.scaled(1.0 / n));
    }
  }

  const double verify_tol = 1e-6 * std::max(1.0, d);
  // Invertible candidate: its sign decomposition is a full bipartition.
  for (const AlgebraElement& x : candidates) {
    const auto [lo, hi] = abs_eig_range(x);
    if (lo <= 1e-6 * hi) continue;
    const AlgebraElement xp = positive_spectral_part(x);
    const AlgebraElement xm = unit_element(qs) - xp;
    if ((g.mat() * xp.gns() - d * xm.gns()).norm() > verify_tol) continue;
    if ((g.mat() * xm.gns() - d * xp.gns()).norm() > verify_tol) continue;
    if (auto w = finish_k2(xp, xm)) return w;
  }

  // No invertible element: isolate one bipartite component.  For any
  // self-adjoint x in ker(A + d), A maps the spectral projection at lambda
  // to d times the one at -lambda, so the top spectral pair gives a
  // partial bipartition and the remainder is a disjoint third part.
  for (AlgebraElement x : candidates) {
    auto parts = spectral_projections(x, 1e-6);
    if (parts.front().first <= 1e-6) {  // flip so the top eigenvalue is positive
      x = x.scaled(-1.0);
      parts = spectral_projections(x, 1e-6);
    }
    const double top = parts.front().first;
    if (top <= 1e-6) continue;
    const AlgebraElement& xp = parts.front().second;
    std::optional<AlgebraElement> xm;
    for (const auto& [lam, p] : parts)
      if (std::abs(lam + top) <= 1e-6) xm = p;
    if (!xm) continue;
    if ((g.mat() * xp.gns() - d * xm->gns()).norm() > verify_tol) continue;
    if ((g.mat() * xm->gns() - d * xp.gns()).norm() > verify_tol) continue;

    const AlgebraElement y = unit_element(qs) - xp - *xm;
    if (y.is_zero(1e-8)) {
      if (auto w = finish_k2(xp, *xm)) return w;
      continue;
    }
    try {
      QuantumGraph target = disjoint_union(k2, trivial_graph(QuantumSet::tracial({1})));
      StarHom f = projection_partition_hom(target.qset(), {xp, *xm, y}, 1e-7);
      if (!is_graph_homomorphism(f, g, target, std::max(eq_tol, 1e-8)).holds) continue;
      if (!hom_is_injective_on(f, {0, 1}, eig_tol)) continue;
      return BipartitionWitness{xp, *xm, BipartiteTarget::k2_sqcup_t1, std::move(f)};
    } catch (const Error&) {
      continue;
    }
  }
  return std::nullopt;
}

// --- Positivity counterexample -----------------------------------------------------

PositivityCounterexample verify_positivity_counterexample(double q, double alpha) {
  if (!(q > 0.0 && q < 1.0))
    fail(errc::param_out_of_range,
         "verify_positivity_counterexample: q must lie in (0, 1)");
  const double bound = std::pow(1.0 / q - q, 2) / 4.0;
  if (!(alpha > 0.0 && alpha <= bound))
    fail(errc::param_out_of_range,
         "verify_positivity_counterexample: alpha must lie in (0, (1/q - q)^2 / 4]");

  PositivityCounterexample ce;
  ce.q = q;
  ce.alpha = alpha;

  Mat qmat = Mat::Zero(2, 2);
  qmat(0, 0) = 1.0 / (1.0 + q * q);
  qmat(1, 1) = q * q / (1.0 + q * q);
  Mat u(2, 2);
  u << 1, -1, 1, 1;
  u /= std::sqrt(2.0);
  const Mat density = u.adjoint() * qmat * u;  // psi(x) = Tr(density * x)

  ce.x_plus = Mat::Zero(2, 2);
  ce.x_plus(0, 0) = 1.0;
  ce.x_minus = Mat::Zero(2, 2);
  ce.x_minus(1, 1) = 1.0;

  const double c = (1.0 + q * q) / (1.0 - q * q);
  ce.xi = Mat::Zero(2, 2);
  ce.xi << 1, c, c, 1;
  ce.xi *= alpha;

  ce.y_plus = ce.x_plus + ce.xi;
  ce.y_minus = ce.x_minus + ce.xi;

  const auto min_eig = [](const Mat& m) {
    Eigen::SelfAdjointEigenSolver<Mat> es(m);
    return es.eigenvalues().minCoeff();
  };
  ce.min_eig_y_plus = min_eig(ce.y_plus);
  ce.min_eig_y_minus = min_eig(ce.y_minus);
  ce.state_of_xi = std::abs((density * ce.xi).trace());
  ce.xi_norm = ce.xi.norm();

  const auto state = [&](const Mat& m) { return (density * m).trace(); };
  const bool states_match =
      std::abs(state(ce.x_plus) - state(ce.y_plus)) <= 1e-12 &&
      std::abs(state(ce.x_minus) - state(ce.y_minus)) <= 1e-12;
  const bool projections =
      (ce.x_plus * ce.x_plus - ce.x_plus).norm() <= 1e-12 &&
      (ce.x_minus * ce.x_minus - ce.x_minus).norm() <= 1e-12 &&
      (ce.x_plus * ce.x_minus).norm() <= 1e-12;
  ce.valid = ce.min_eig_y_plus >= -1e-12 && ce.min_eig_y_minus >= -1e-12 &&
             ce.state_of_xi <= 1e-12 && states_match && projections &&
             ce.xi_norm > 0.0;
  return ce;
}

}  // namespace qgraph
