// Spectra, operator norms, the gradient/Laplacian stack, and the spectral
// characterizations of connectivity and bipartiteness with their constructive
// witnesses.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qgraph/homs.hpp"
#include "qgraph/spectral.hpp"

using namespace qgraph;

namespace {

QuantumGraph m2_example() {
  Mat a = Mat::Zero(4, 4);
  a(0, 0) = 1;
  a(1, 1) = -1;
  a(2, 2) = -1;
  a(3, 3) = 1;
  return QuantumGraph(SuperOp(QuantumSet::tracial({2}), 1, 1, std::move(a)));
}

QuantumGraph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return classical_graph(n, edges);
}

QuantumGraph complete_classical(int n) {
  return complete_graph(QuantumSet::tracial(std::vector<int>(n, 1)));
}

QuantumGraph from_oracle(const oracle::Digraph& g) {
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < g.n; ++u)
    for (int v = 0; v < g.n; ++v)
      if (g.adj[u][v]) arcs.push_back({u, v});
  return classical_graph(g.n, arcs, /*directed=*/true);
}

bool oracle_regular(const oracle::Digraph& g) {
  int d0 = -1;
  for (int u = 0; u < g.n; ++u) {
    int d = 0;
    for (int v = 0; v < g.n; ++v) d += g.adj[u][v] ? 1 : 0;
    if (d0 == -1) d0 = d;
    if (d != d0) return false;
  }
  return true;
}

// A verified witness must be an honest injective homomorphism.
void check_witness_hom(const StarHom& f, const QuantumGraph& src,
                       const QuantumGraph& tgt) {
  CHECK(is_graph_homomorphism(f, src, tgt, 1e-7).holds);
  CHECK(hom_is_injective(f));
}

}  // namespace

TEST_CASE("eigenvalue clustering on known spectra") {
  Spectrum c4 = spectrum(cycle(4));
  REQUIRE(c4.values.size() == 3);
  CHECK(c4.multiplicity_of(cplx(2, 0)) == 1);
  CHECK(c4.multiplicity_of(cplx(0, 0)) == 2);
  CHECK(c4.multiplicity_of(cplx(-2, 0)) == 1);
  CHECK(c4.real_spectrum);
  CHECK(c4.symmetric);
  CHECK_FALSE(c4.contains(cplx(1, 0)));

  Spectrum c5 = spectrum(cycle(5));
  const double golden = 2 * std::cos(2 * std::numbers::pi / 5);
  const double golden2 = 2 * std::cos(4 * std::numbers::pi / 5);
  CHECK(c5.multiplicity_of(cplx(2, 0)) == 1);
  CHECK(c5.multiplicity_of(cplx(golden, 0)) == 2);
  CHECK(c5.multiplicity_of(cplx(golden2, 0)) == 2);
  CHECK_FALSE(c5.symmetric);

  Spectrum k4 = spectrum(complete_classical(4));
  CHECK(k4.multiplicity_of(cplx(3, 0)) == 1);
  CHECK(k4.multiplicity_of(cplx(-1, 0)) == 3);

  // Petersen graph: {3, 1 x5, -2 x4}.
  std::vector<std::pair<int, int>> pe;
  for (int i = 0; i < 5; ++i) {
    pe.push_back({i, (i + 1) % 5});
    pe.push_back({5 + i, 5 + (i + 2) % 5});
    pe.push_back({i, 5 + i});
  }
  Spectrum pet = spectrum(classical_graph(10, pe));
  CHECK(pet.multiplicity_of(cplx(3, 0)) == 1);
  CHECK(pet.multiplicity_of(cplx(1, 0)) == 5);
  CHECK(pet.multiplicity_of(cplx(-2, 0)) == 4);

  // Directed cycle: cube roots of unity, complex and asymmetric.
  Spectrum dt = spectrum(classical_graph(3, {{0, 1}, {1, 2}, {2, 0}}, true));
  CHECK_FALSE(dt.real_spectrum);
  CHECK(dt.multiplicity_of(cplx(1, 0)) == 1);
  CHECK(dt.multiplicity_of(cplx(-0.5, std::sqrt(3) / 2)) == 1);
  CHECK(dt.multiplicity_of(cplx(-0.5, -std::sqrt(3) / 2)) == 1);

  // Quantum golden block example: {-1 x2, 1 x2}.
  Spectrum m2 = spectrum(m2_example());
  CHECK(m2.multiplicity_of(cplx(1, 0)) == 2);
  CHECK(m2.multiplicity_of(cplx(-1, 0)) == 2);
  CHECK(m2.symmetric);

  // Multiplicities always account for the full dimension.
  int total = 0;
  for (int m : pet.multiplicities) total += m;
  CHECK(total == 10);
}

TEST_CASE("spectral radius and operator norms equal the degree for regular graphs") {
  struct Case {
    QuantumGraph g;
    double d;
  };
  const Case cases[] = {
      {complete_classical(4), 3.0},
      {cycle(6), 2.0},
      {complete_graph(QuantumSet::tracial({2})), 3.0},
      {m2_example(), 1.0},
      {bipartite_double(complete_graph(QuantumSet::tracial({2}))), 3.0},
  };
  for (const auto& [g, d] : cases) {
    REQUIRE(g.degree().has_value());
    CHECK(*g.degree() == doctest::Approx(d).epsilon(1e-9));
    CHECK(spectral_radius(g) == doctest::Approx(d).epsilon(1e-8));
    CHECK(operator_norm(g, InnerProduct::gns) == doctest::Approx(d).epsilon(1e-8));
    CHECK(operator_norm(g, InnerProduct::kms) == doctest::Approx(d).epsilon(1e-8));
  }

  // Non-uniform state: the KMS norm still equals the degree (3.5),
  // while nothing forces the GNS norm to.
  auto nt = QuantumSet::make({2}, {(RVec(2) << 1.0 / 3, 2.0 / 3).finished()});
  QuantumGraph knt = complete_graph(nt);
  CHECK(*knt.degree() == doctest::Approx(3.5).epsilon(1e-10));
  CHECK(spectral_radius(knt) == doctest::Approx(3.5).epsilon(1e-8));
  CHECK(operator_norm(knt, InnerProduct::kms) == doctest::Approx(3.5).epsilon(1e-8));

  // A real regular directed graph: permutation action has norm = degree = 1.
  QuantumGraph dt = classical_graph(3, {{0, 1}, {1, 2}, {2, 0}}, true);
  CHECK(operator_norm(dt, InnerProduct::kms) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("gradient agrees with the classical coboundary operator") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);  // 2..6 vertices
    oracle::Digraph og = oracle::random_digraph(n, rng, 0.45, /*allow_loops=*/true);
    QuantumGraph g = from_oracle(og);
    const Eigen::MatrixXcd want = oracle::coboundary_matrix(og);
    CHECK((gradient(g).mat() - want).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("gradient is a derivation implemented by a commutator") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 8; ++trial) {
    QSetPtr qs = trial % 2 ? QuantumSet::tracial({2, 1})
                           : random_delta_form({1, 2}, 50 + trial);
    QuantumGraph g = random_quantum_graph(qs, 500 + trial);
    const SuperOp grad = gradient(g);
    AlgebraElement x = random_element(qs, rng);
    AlgebraElement y = random_element(qs, rng);

    // delta^2 iota^{-1}(grad x) = rho(x) A - A rho(x).
    SuperOp lhs = iota_inv(grad.apply(TensorElement::from_element(x)))
                      .scaled(qs->delta_sq());
    SuperOp rho = right_mult(x);
    SuperOp comm = rho * g.adjacency() - g.adjacency() * rho;
    CHECK((lhs.mat() - comm.mat()).norm() < 1e-9);

    // Derivation property via the bimodule actions.
    TensorElement dxy = grad.apply(TensorElement::from_element(x * y));
    TensorElement sum = grad.apply(TensorElement::from_element(x)).right_mul(y) +
                        grad.apply(TensorElement::from_element(y)).left_mul(x);
    CHECK((dxy - sum).norm() < 1e-9);

    // The gradient lives inside the graph's bimodule range and kills the unit.
    CHECK(((to_bimodule_projection(g.adjacency()) * grad) - grad).mat().norm() < 1e-8);
    CHECK(grad.apply(TensorElement::from_element(unit_element(qs))).norm() < 1e-10);
  }
}

TEST_CASE("laplacian: closed form, positivity, spectra") {
  std::mt19937_64 rng(88);
  for (int trial = 0; trial < 6; ++trial) {
    QSetPtr qs = trial % 2 ? QuantumSet::tracial({2})
                           : random_delta_form({1, 2}, 80 + trial);
    QuantumGraph g = random_quantum_graph(qs, 600 + trial);
    SuperOp lap = laplacian(g);
    auto [din, dout] = degree_matrices(g);
    SuperOp closed = (din - g.adjacency() + dout - g.adjacency().gns_adjoint())
                         .scaled(1.0 / qs->delta_sq());
    CHECK(lap.approx(closed, 1e-9));
    Eigen::SelfAdjointEigenSolver<Mat> es(lap.mat());
    CHECK(es.eigenvalues().minCoeff() > -1e-9);
    // It is the square of the gradient.
    SuperOp grad = gradient(g);
    CHECK((lap.mat() - (grad.gns_adjoint() * grad).mat()).norm() < 1e-9);
  }

  // C4: delta^2 = 4, degree 2, Laplacian eigenvalues {0, 1, 1, 2}.
  Eigen::SelfAdjointEigenSolver<Mat> c4(laplacian(cycle(4)).mat());
  RVec want(4);
  want << 0, 1, 1, 2;
  CHECK((c4.eigenvalues() - want).cwiseAbs().maxCoeff() < 1e-9);

  // Golden block example: eigenvalues {0, 0, 1, 1}.
  Eigen::SelfAdjointEigenSolver<Mat> lm2(laplacian(m2_example()).mat());
  RVec want2(4);
  want2 << 0, 0, 1, 1;
  CHECK((lm2.eigenvalues() - want2).cwiseAbs().maxCoeff() < 1e-9);

  // Regular real graphs: rotated Hermitian parts stay below the degree.
  std::mt19937_64 rng2(99);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  for (const QuantumGraph& g : {cycle(5), complete_graph(QuantumSet::tracial({2}))}) {
    const double d = *g.degree();
    for (int k = 0; k < 5; ++k) {
      const cplx theta = std::exp(cplx(0, angle(rng2)));
      Mat herm = (theta * g.mat() + std::conj(theta) * g.mat().adjoint()) / 2.0;
      Eigen::SelfAdjointEigenSolver<Mat> es(herm);
      CHECK(es.eigenvalues().maxCoeff() <= d + 1e-7);
    }
  }
}

TEST_CASE("self-adjoint eigenvectors and spectral projections") {
  // Eigenspace of the golden example at -1 is the off-diagonal.
  AlgebraElement x = sa_eigenvector(m2_example(), -1.0);
  CHECK(x.is_self_adjoint(1e-9));
  CHECK(x.gns_norm() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(x.block(0)(0, 0)) < 1e-8);
  CHECK(std::abs(x.block(0)(1, 1)) < 1e-8);
  CHECK(std::abs(x.block(0)(0, 1)) > 0.1);

  // At the degree the unit works; the returned vector is a genuine eigenvector.
  QuantumGraph k3 = complete_classical(3);
  AlgebraElement top = sa_eigenvector(k3, 2.0);
  CHECK((Mat(k3.mat() * top.gns()) - 2.0 * top.gns()).norm() < 1e-8);

  // C4 at -2: supported on the alternating function.
  AlgebraElement alt = sa_eigenvector(cycle(4), -2.0);
  CHECK(std::abs(std::abs(alt.block(0)(0, 0)) - std::abs(alt.block(1)(0, 0))) < 1e-8);
  CHECK(std::abs(alt.block(0)(0, 0) + alt.block(1)(0, 0)) < 1e-8);

  CHECK_THROWS_AS(sa_eigenvector(k3, 0.5), Error);

  // Spectral projections resolve a random self-adjoint element.
  auto qs = random_delta_form({2, 1}, 31);
  std::mt19937_64 rng(13);
  AlgebraElement h = random_self_adjoint(qs, rng);
  auto parts = spectral_projections(h, 1e-9);
  AlgebraElement sum = zero_element(qs);
  AlgebraElement recon = zero_element(qs);
  for (const auto& [lam, p] : parts) {
    CHECK(p.is_projection(1e-8));
    sum = sum + p;
    recon = recon + p.scaled(lam);
  }
  CHECK((sum - unit_element(qs)).is_zero(1e-8));
  CHECK((recon - h).is_zero(1e-8));

  // Snapping repairs small perturbations of a projection.
  AlgebraElement p = parts.front().second;
  AlgebraElement noisy = p + random_self_adjoint(qs, rng).scaled(1e-8);
  CHECK(snap_projection(noisy).is_projection(1e-12));
}

TEST_CASE("exhaustive small-graph sweep: connectivity and bipartiteness") {
  // Every regular loop-free undirected graph on up to 6 vertices, compared
  // against breadth-first-search oracles.  Regularity is required by the
  // spectral characterization, so the sweep filters on the oracle's notion.
  int checked = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const oracle::Digraph& og : oracle::all_graphs(n)) {
      if (!oracle_regular(og)) continue;
      QuantumGraph g = from_oracle(og);
      REQUIRE(g.degree().has_value());

      CHECK(is_connected(g) == oracle::is_connected(og));
      CHECK(has_bipartite_component(g) == oracle::has_bipartite_component(og));
      CHECK(is_bipartite(g) == oracle::is_bipartite(og));

      auto wit = bipartition_witness(g);
      CHECK(wit.has_value() == oracle::has_bipartite_component(og));
      if (wit) {
        CHECK((wit->target == BipartiteTarget::k2) == oracle::is_bipartite(og));
        CHECK(wit->x_plus.is_projection(1e-7));
        CHECK(wit->x_minus.is_projection(1e-7));
        CHECK((wit->x_plus * wit->x_minus).is_zero(1e-7));
      }
      auto dis = disconnection_witness(g);
      CHECK(dis.has_value() == !oracle::is_connected(og));
      if (dis)
        check_witness_hom(*dis, g,
                          trivial_graph(QuantumSet::tracial({1, 1})));
      ++checked;
    }
  }
  CHECK(checked == 198);  // 26 graphs on <=5 vertices, 172 more on 6
}

TEST_CASE("connectivity of genuinely quantum graphs") {
  QuantumGraph m2 = m2_example();
  CHECK_FALSE(is_connected(m2));
  auto dis = disconnection_witness(m2);
  REQUIRE(dis.has_value());
  check_witness_hom(*dis, m2, trivial_graph(QuantumSet::tracial({1, 1})));

  QuantumGraph km2 = complete_graph(QuantumSet::tracial({2}));
  CHECK(is_connected(km2));
  CHECK_FALSE(disconnection_witness(km2).has_value());

  QuantumGraph two = disjoint_union(km2, km2);
  CHECK_FALSE(is_connected(two));
  auto dis2 = disconnection_witness(two);
  REQUIRE(dis2.has_value());
  check_witness_hom(*dis2, two, trivial_graph(QuantumSet::tracial({1, 1})));

  // Trivial and empty graphs decompose as soon as the algebra is bigger than C.
  CHECK_FALSE(is_connected(trivial_graph(QuantumSet::tracial({2}))));
  CHECK_FALSE(is_connected(empty_graph(QuantumSet::tracial({1, 1, 1}))));
  CHECK(is_connected(trivial_graph(QuantumSet::tracial({1}))));

  // The spectral machinery refuses directed input.
  QuantumGraph dt = classical_graph(3, {{0, 1}, {1, 2}, {2, 0}}, true);
  CHECK_THROWS_AS(is_connected(dt), Error);
  try {
    is_connected(dt);
  } catch (const Error& e) {
    CHECK(e.code() == errc::hypotheses_not_met);
  }
}

TEST_CASE("bipartition witnesses on quantum and composite graphs") {
  // Golden block example: the pinned witness projections.
  auto wit = bipartition_witness(m2_example());
  REQUIRE(wit.has_value());
  CHECK(wit->target == BipartiteTarget::k2);
  Mat xp(2, 2), xm(2, 2);
  xp << 0.5, 0.5, 0.5, 0.5;
  xm << 0.5, -0.5, -0.5, 0.5;
  CHECK((wit->x_plus.block(0) - xp).norm() < 1e-7);
  CHECK((wit->x_minus.block(0) - xm).norm() < 1e-7);
  check_witness_hom(wit->hom, m2_example(), complete_classical(2));

  // Connected bipartite classical graphs map onto K2.
  for (QuantumGraph g : {cycle(6), classical_graph(2, {{0, 1}}),
                         bipartite_double(complete_classical(3))}) {
    auto w = bipartition_witness(g);
    REQUIRE(w.has_value());
    CHECK(w->target == BipartiteTarget::k2);
    check_witness_hom(w->hom, g, complete_classical(2));
  }

  // A bipartite component inside a non-bipartite graph: witness onto K2 + T1.
  QuantumGraph mixed = disjoint_union(cycle(4), cycle(3));
  CHECK(has_bipartite_component(mixed));
  CHECK_FALSE(is_bipartite(mixed));
  auto w = bipartition_witness(mixed);
  REQUIRE(w.has_value());
  CHECK(w->target == BipartiteTarget::k2_sqcup_t1);
  check_witness_hom(w->hom,
                    mixed,
                    disjoint_union(complete_classical(2),
                                   trivial_graph(QuantumSet::tracial({1}))));

  // No bipartite component at all.
  CHECK_FALSE(bipartition_witness(complete_classical(3)).has_value());
  CHECK_FALSE(has_bipartite_component(cycle(5)));
  CHECK_FALSE(bipartition_witness(complete_graph(QuantumSet::tracial({2}))).has_value());

  // Disjoint unions of bipartite pieces stay bipartite.
  QuantumGraph both = disjoint_union(cycle(4), cycle(6));
  CHECK(is_bipartite(both));
  auto wb = bipartition_witness(both);
  REQUIRE(wb.has_value());
  CHECK(wb->target == BipartiteTarget::k2);
}

TEST_CASE("failure of joint positivity for non-uniform states") {
  for (double q : {0.3, 0.5, 0.7}) {
    const double bound = std::pow(1.0 / q - q, 2) / 4.0;
    for (double alpha : {0.5 * bound, bound}) {
      PositivityCounterexample ce = verify_positivity_counterexample(q, alpha);
      CHECK(ce.valid);
      CHECK(ce.min_eig_y_plus > -1e-10);
      CHECK(ce.min_eig_y_minus > -1e-10);
      CHECK(ce.state_of_xi < 1e-12);
      CHECK(ce.xi_norm > 0.1);
      // The matrices themselves verify: projections, orthogonal, sum to 1.
      CHECK((ce.x_plus * ce.x_plus - ce.x_plus).norm() < 1e-10);
      CHECK((ce.x_plus * ce.x_minus).norm() < 1e-10);
      CHECK((ce.x_plus + ce.x_minus - Mat::Identity(2, 2)).norm() < 1e-10);
      CHECK((ce.y_plus - ce.x_plus - ce.xi).norm() < 1e-12);
      CHECK((ce.y_minus - ce.x_minus - ce.xi).norm() < 1e-12);
    }
  }
  CHECK_THROWS_AS(verify_positivity_counterexample(1.5, 0.1), Error);
  CHECK_THROWS_AS(verify_positivity_counterexample(0.5, 100.0), Error);
  CHECK_THROWS_AS(verify_positivity_counterexample(0.5, -0.1), Error);
}

TEST_CASE("hypothesis reporting") {
  SpectralHypotheses h = spectral_hypotheses(m2_example());
  CHECK(h.all());
  CHECK(h.missing().empty());

  SpectralHypotheses hd =
      spectral_hypotheses(classical_graph(3, {{0, 1}}, true));
  CHECK_FALSE(hd.all());
  CHECK(hd.missing().find("undirected") != std::string::npos);

  auto nt = QuantumSet::make({2}, {(RVec(2) << 1.0 / 3, 2.0 / 3).finished()});
  SpectralHypotheses hn = spectral_hypotheses(complete_graph(nt));
  CHECK_FALSE(hn.tracial);
  CHECK(hn.missing().find("tracial") != std::string::npos);
}
