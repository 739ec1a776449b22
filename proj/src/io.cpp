#include "qgraph/io.hpp"

#include <CLI11.hpp>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

namespace qgraph {

namespace {

// --- JSON primitives ---------------------------------------------------------

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx json_to_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(errc::parse_error, "expected a complex entry as a [re, im] pair");
  return cplx(j[0].get<double>(), j[1].get<double>());
}

json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat json_to_mat(const json& j, Eigen::Index rows, Eigen::Index cols) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows)
    fail(errc::parse_error, "matrix has the wrong number of rows");
  Mat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      fail(errc::parse_error, "matrix has the wrong number of columns");
    for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = json_to_complex(row[c]);
  }
  return m;
}

json element_to_json(const AlgebraElement& x) {
  json blocks = json::array();
  for (int s = 0; s < x.owner()->num_blocks(); ++s) blocks.push_back(mat_to_json(x.block(s)));
  return blocks;
}

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) fail(errc::parse_error, "malformed JSON");
  return j;
}

json hom_report_to_json(const HomReport& r) {
  json j;
  j["holds"] = r.holds;
  j["residual"] = r.residual;
  if (!r.failing_check.empty()) j["failing_check"] = r.failing_check;
  return j;
}

// --- formatting helpers ------------------------------------------------------

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::string fmt_complex(cplx z) {
  if (std::abs(z.imag()) < 1e-12) return fmt_double(z.real());
  std::ostringstream os;
  os << fmt_double(z.real()) << (z.imag() < 0 ? " - " : " + ")
     << fmt_double(std::abs(z.imag())) << "i";
  return os.str();
}

}  // namespace

// --- Documents ---------------------------------------------------------------

GraphDocument parse_graph_document(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object()) fail(errc::parse_error, "graph document must be a JSON object");
  GraphDocument doc;
  if (!j.contains("format_version") || !j["format_version"].is_number_integer() ||
      j["format_version"].get<int>() != 1)
    fail(errc::parse_error, "unsupported or missing format_version (expected 1)");
  doc.format_version = 1;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail(errc::parse_error, "name must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("provenance")) {
    if (!j["provenance"].is_string())
      fail(errc::parse_error, "provenance must be a string");
    doc.provenance = j["provenance"].get<std::string>();
  }

  if (!j.contains("qset") || !j["qset"].is_object())
    fail(errc::parse_error, "missing qset object");
  const json& q = j["qset"];
  if (!q.contains("blocks") || !q["blocks"].is_array() || q["blocks"].empty())
    fail(errc::parse_error, "qset.blocks must be a non-empty array");
  std::vector<int> blocks;
  for (const json& b : q["blocks"]) {
    if (!b.is_number_integer() || b.get<int>() < 1)
      fail(errc::parse_error, "qset.blocks entries must be positive integers");
    blocks.push_back(b.get<int>());
  }
  if (q.contains("density")) {
    const json& d = q["density"];
    if (!d.is_array() || d.size() != blocks.size())
      fail(errc::parse_error, "qset.density must have one diagonal per block");
    std::vector<RVec> density;
    for (std::size_t s = 0; s < blocks.size(); ++s) {
      const json& row = d[s];
      if (!row.is_array() || static_cast<int>(row.size()) != blocks[s])
        fail(errc::parse_error, "qset.density diagonal has the wrong length");
      RVec v(blocks[s]);
      for (int i = 0; i < blocks[s]; ++i) {
        if (!row[i].is_number())
          fail(errc::parse_error, "qset.density entries must be numbers");
        v(i) = row[i].get<double>();
      }
      density.push_back(std::move(v));
    }
    doc.qset = QuantumSet::make(blocks, density);
  } else {
    doc.qset = QuantumSet::tracial(blocks);
  }

  if (!j.contains("adjacency"))
    fail(errc::parse_error, "missing adjacency matrix");
  const int dim = doc.qset->dim();
  doc.adjacency = json_to_mat(j["adjacency"], dim, dim);
  return doc;
}

QuantumGraph graph_from_document(const GraphDocument& doc, double eq_tol) {
  return QuantumGraph(SuperOp(doc.qset, 1, 1, doc.adjacency), eq_tol);
}

QuantumGraph parse_graph(const std::string& text, double eq_tol) {
  return graph_from_document(parse_graph_document(text), eq_tol);
}

json graph_to_json(const QuantumGraph& g, const std::string& name,
                   const std::string& provenance) {
  json j;
  j["format_version"] = 1;
  if (!name.empty()) j["name"] = name;
  if (!provenance.empty()) j["provenance"] = provenance;
  const QSetPtr& qs = g.qset();
  json qj;
  qj["blocks"] = qs->blocks();
  json density = json::array();
  for (int s = 0; s < qs->num_blocks(); ++s) {
    json diag = json::array();
    for (int i = 0; i < qs->block_size(s); ++i) diag.push_back(qs->density(s)(i));
    density.push_back(std::move(diag));
  }
  qj["density"] = std::move(density);
  j["qset"] = std::move(qj);
  j["adjacency"] = mat_to_json(g.mat());
  return j;
}

std::string serialize_graph(const QuantumGraph& g, const std::string& name,
                            const std::string& provenance) {
  return graph_to_json(g, name, provenance).dump(2) + "\n";
}

StarHom parse_hom_document(const std::string& text, const QSetPtr& dom,
                           const QSetPtr& cod, double eq_tol) {
  const json j = parse_text(text);
  if (!j.is_object()) fail(errc::parse_error, "hom document must be a JSON object");
  if (!j.contains("format_version") || !j["format_version"].is_number_integer() ||
      j["format_version"].get<int>() != 1)
    fail(errc::parse_error, "unsupported or missing format_version (expected 1)");
  if (!j.contains("rep_dim") || !j["rep_dim"].is_number_integer() ||
      j["rep_dim"].get<int>() < 1)
    fail(errc::parse_error, "rep_dim must be a positive integer");
  const int k = j["rep_dim"].get<int>();
  if (!j.contains("images") || !j["images"].is_array() ||
      static_cast<int>(j["images"].size()) != dom->dim())
    fail(errc::parse_error, "images must list one entry per domain matrix unit");
  std::vector<std::vector<Mat>> images;
  for (const json& per_block : j["images"]) {
    if (!per_block.is_array() ||
        static_cast<int>(per_block.size()) != cod->num_blocks())
      fail(errc::parse_error, "each image must list one matrix per codomain block");
    std::vector<Mat> mats;
    for (int s = 0; s < cod->num_blocks(); ++s) {
      const Eigen::Index n = static_cast<Eigen::Index>(cod->block_size(s)) * k;
      mats.push_back(json_to_mat(per_block[s], n, n));
    }
    images.push_back(std::move(mats));
  }
  return StarHom(dom, cod, k, std::move(images), eq_tol);
}

json hom_to_json(const StarHom& f, const std::string& name) {
  json j;
  j["format_version"] = 1;
  if (!name.empty()) j["name"] = name;
  j["rep_dim"] = f.rep_dim();
  json images = json::array();
  for (int a = 0; a < f.dom()->dim(); ++a) {
    json per_block = json::array();
    for (int s = 0; s < f.cod()->num_blocks(); ++s)
      per_block.push_back(mat_to_json(f.image(a, s)));
    images.push_back(std::move(per_block));
  }
  j["images"] = std::move(images);
  return j;
}

std::string serialize_hom(const StarHom& f, const std::string& name) {
  return hom_to_json(f, name).dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse_error, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --- Curated examples ---------------------------------------------------------

namespace {

QuantumGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return classical_graph(n, edges);
}

QuantumGraph complete_classical(int n) {
  return complete_graph(QuantumSet::tracial(std::vector<int>(n, 1)));
}

QuantumGraph m2_example_graph() {
  auto qs = QuantumSet::tracial({2});
  Mat a = Mat::Zero(4, 4);
  a(0, 0) = 1;
  a(1, 1) = -1;
  a(2, 2) = -1;
  a(3, 3) = 1;
  return QuantumGraph(SuperOp(qs, 1, 1, std::move(a)));
}

QSetPtr m2_nontracial_qset() {
  return QuantumSet::make({2}, {(RVec(2) << 1.0 / 3, 2.0 / 3).finished()});
}

const std::map<std::string, std::function<QuantumGraph()>>& example_registry() {
  static const std::map<std::string, std::function<QuantumGraph()>> reg = [] {
    std::map<std::string, std::function<QuantumGraph()>> m;
    for (int n = 1; n <= 6; ++n) {
      m["t" + std::to_string(n)] = [n] {
        return trivial_graph(QuantumSet::tracial(std::vector<int>(n, 1)));
      };
      m["k" + std::to_string(n)] = [n] { return complete_classical(n); };
    }
    for (int n = 3; n <= 8; ++n)
      m["c" + std::to_string(n)] = [n] { return cycle_graph(n); };
    m["petersen"] = [] {
      // Outer 5-cycle, inner pentagram, spokes.
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({5 + i, 5 + (i + 2) % 5});
        edges.push_back({i, 5 + i});
      }
      return classical_graph(10, edges);
    };
    m["p3_path"] = [] { return classical_graph(3, {{0, 1}, {1, 2}}); };
    m["directed_edge"] = [] { return classical_graph(2, {{0, 1}}, true); };
    m["directed_triangle"] = [] {
      return classical_graph(3, {{0, 1}, {1, 2}, {2, 0}}, true);
    };
    m["j_c4"] = [] {
      return reflexive_complete_graph(QuantumSet::tracial({1, 1, 1, 1}));
    };
    m["m2_nonorientable"] = [] { return m2_example_graph(); };
    m["t_m2"] = [] { return trivial_graph(QuantumSet::tracial({2})); };
    m["k_m2"] = [] { return complete_graph(QuantumSet::tracial({2})); };
    m["j_m2"] = [] { return reflexive_complete_graph(QuantumSet::tracial({2})); };
    m["k_m2_nontracial"] = [] { return complete_graph(m2_nontracial_qset()); };
    m["t_m2_nontracial"] = [] { return trivial_graph(m2_nontracial_qset()); };
    m["t_c1m2"] = [] { return trivial_graph(QuantumSet::tracial({1, 2})); };
    m["k_c1m2"] = [] { return complete_graph(QuantumSet::tracial({1, 2})); };
    m["double_m2"] = [] { return bipartite_double(m2_example_graph()); };
    m["double_k3"] = [] { return bipartite_double(complete_classical(3)); };
    m["double_c5"] = [] { return bipartite_double(cycle_graph(5)); };
    m["c3_sqcup_c3"] = [] { return disjoint_union(cycle_graph(3), cycle_graph(3)); };
    m["c4_sqcup_c6"] = [] { return disjoint_union(cycle_graph(4), cycle_graph(6)); };
    m["c4_sqcup_c3"] = [] { return disjoint_union(cycle_graph(4), cycle_graph(3)); };
    m["k2_sqcup_t1"] = [] {
      return disjoint_union(complete_classical(2),
                            trivial_graph(QuantumSet::tracial({1})));
    };
    m["t1_sqcup_k3"] = [] {
      return disjoint_union(trivial_graph(QuantumSet::tracial({1})),
                            complete_classical(3));
    };
    m["km2_sqcup_km2"] = [] {
      return disjoint_union(complete_graph(QuantumSet::tracial({2})),
                            complete_graph(QuantumSet::tracial({2})));
    };
    m["k2_tensor_k2"] = [] {
      return tensor_product(complete_classical(2), complete_classical(2));
    };
    m["c4_tensor_k2"] = [] {
      return tensor_product(cycle_graph(4), complete_classical(2));
    };
    m["km2_tensor_k2"] = [] {
      return tensor_product(complete_graph(QuantumSet::tracial({2})),
                            complete_classical(2));
    };
    return m;
  }();
  return reg;
}

}  // namespace

std::vector<std::string> example_names() {
  std::vector<std::string> names;
  for (const auto& [name, make] : example_registry()) names.push_back(name);
  return names;  // std::map iterates sorted
}

QuantumGraph example_graph(const std::string& name) {
  const auto& reg = example_registry();
  auto it = reg.find(name);
  if (it == reg.end())
    fail(errc::param_out_of_range, "unknown example graph: " + name);
  return it->second();
}

// --- Analysis ------------------------------------------------------------------

AnalysisReport analyze_graph(const QuantumGraph& g, const std::string& name,
                             const Tolerance& tol) {
  AnalysisReport r;
  r.name = name;
  const QSetPtr& qs = g.qset();
  r.blocks = qs->blocks();
  for (int s = 0; s < qs->num_blocks(); ++s)
    for (int i = 0; i < qs->block_size(s); ++i) r.density.push_back(qs->density(s)(i));
  r.delta_sq = qs->delta_sq();
  r.tracial = qs->is_tracial();

  const GraphFacts& facts = g.facts();
  r.real = facts.real;
  r.self_adjoint = facts.self_adjoint;
  r.undirected = facts.undirected;
  r.kms_symmetric = facts.kms_symmetric;
  r.reflexive = facts.reflexive;
  r.irreflexive = facts.irreflexive;
  r.no_partial_loops = !facts.has_partial_loops;
  r.schur_central = facts.schur_central;
  r.regular = facts.degree.has_value();
  r.degree = facts.degree;

  r.spec = spectrum(g, tol.eig_tol);
  r.spectral_radius = qgraph::spectral_radius(g);
  r.gns_norm = operator_norm(g, InnerProduct::gns);
  r.kms_norm = operator_norm(g, InnerProduct::kms);
  if (facts.real) r.edge_count = facts.edge_count;

  {
    Eigen::SelfAdjointEigenSolver<Mat> es(laplacian(g).mat());
    r.laplacian_min_eig = es.eigenvalues().minCoeff();
    r.laplacian_max_eig = es.eigenvalues().maxCoeff();
  }

  r.hypotheses = spectral_hypotheses(g);
  if (r.hypotheses.all()) {
    r.connected = is_connected(g, tol.eig_tol);
    r.bipartite_component = has_bipartite_component(g, tol.eig_tol);
    r.bipartition = bipartition_witness(g, tol.eq_tol, tol.eig_tol);
    r.bipartite = r.bipartition.has_value() &&
                  r.bipartition->target == BipartiteTarget::k2;
    if (!*r.connected)
      r.disconnection_witnessed =
          disconnection_witness(g, tol.eq_tol, tol.eig_tol).has_value();
  }

  r.orientation = orientation_rank_obstruction(g, tol.eig_tol);
  return r;
}

json report_to_json(const AnalysisReport& r) {
  json j;
  if (!r.name.empty()) j["name"] = r.name;
  json qset;
  qset["blocks"] = r.blocks;
  qset["density"] = r.density;
  qset["delta_sq"] = r.delta_sq;
  qset["tracial"] = r.tracial;
  j["qset"] = std::move(qset);

  json pred;
  pred["real"] = r.real;
  pred["self_adjoint"] = r.self_adjoint;
  pred["undirected"] = r.undirected;
  pred["kms_symmetric"] = r.kms_symmetric;
  pred["reflexive"] = r.reflexive;
  pred["irreflexive"] = r.irreflexive;
  pred["no_partial_loops"] = r.no_partial_loops;
  pred["schur_central"] = r.schur_central;
  pred["regular"] = r.regular;
  if (r.degree) pred["degree"] = *r.degree;
  j["predicates"] = std::move(pred);

  json spec;
  json values = json::array();
  for (cplx v : r.spec.values) values.push_back(complex_to_json(v));
  spec["values"] = std::move(values);
  spec["multiplicities"] = r.spec.multiplicities;
  spec["real_spectrum"] = r.spec.real_spectrum;
  spec["symmetric"] = r.spec.symmetric;
  j["spectrum"] = std::move(spec);

  j["spectral_radius"] = r.spectral_radius;
  j["gns_norm"] = r.gns_norm;
  j["kms_norm"] = r.kms_norm;
  if (r.edge_count) j["edge_count"] = *r.edge_count;
  j["laplacian_min_eig"] = r.laplacian_min_eig;
  j["laplacian_max_eig"] = r.laplacian_max_eig;

  json hyp;
  hyp["regular"] = r.hypotheses.regular;
  hyp["undirected"] = r.hypotheses.undirected;
  hyp["tracial"] = r.hypotheses.tracial;
  hyp["all"] = r.hypotheses.all();
  if (!r.hypotheses.all()) hyp["missing"] = r.hypotheses.missing();
  j["spectral_hypotheses"] = std::move(hyp);

  if (r.connected) j["connected"] = *r.connected;
  if (r.bipartite_component) j["has_bipartite_component"] = *r.bipartite_component;
  if (r.bipartite) j["bipartite"] = *r.bipartite;
  j["disconnection_witnessed"] = r.disconnection_witnessed;
  if (r.bipartition) {
    json w;
    w["target"] = r.bipartition->target == BipartiteTarget::k2 ? "k2" : "k2_sqcup_t1";
    w["x_plus"] = element_to_json(r.bipartition->x_plus);
    w["x_minus"] = element_to_json(r.bipartition->x_minus);
    w["hom"] = hom_to_json(r.bipartition->hom);
    j["bipartition_witness"] = std::move(w);
  }

  json ori;
  ori["edge_rank"] = r.orientation.edge_rank;
  ori["decomposition_possible"] = r.orientation.decomposition_possible;
  ori["detail"] = r.orientation.detail;
  j["orientation_obstruction"] = std::move(ori);
  return j;
}

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream os;
  if (!r.name.empty()) os << "graph: " << r.name << "\n";
  os << "quantum set: blocks [";
  for (std::size_t i = 0; i < r.blocks.size(); ++i)
    os << (i ? ", " : "") << r.blocks[i];
  os << "], dim " << [&] {
    int d = 0;
    for (int b : r.blocks) d += b * b;
    return d;
  }() << ", delta^2 = " << fmt_double(r.delta_sq)
      << (r.tracial ? ", tracial" : ", non-tracial") << "\n";

  os << "predicates:";
  const std::pair<bool, const char*> preds[] = {
      {r.real, "real"},
      {r.self_adjoint, "self-adjoint"},
      {r.undirected, "undirected"},
      {r.kms_symmetric, "kms-symmetric"},
      {r.reflexive, "reflexive"},
      {r.irreflexive, "irreflexive"},
      {!r.no_partial_loops, "partial-loops"},
      {r.schur_central, "schur-central"}};
  bool any = false;
  for (auto [ok, label] : preds)
    if (ok) {
      os << " " << label;
      any = true;
    }
  if (!any) os << " (none)";
  os << "\n";

  if (r.degree)
    os << "regular with degree " << fmt_double(*r.degree) << "\n";
  else
    os << "not regular\n";

  os << "spectrum:";
  for (std::size_t i = 0; i < r.spec.values.size(); ++i) {
    os << " " << fmt_complex(r.spec.values[i]);
    if (r.spec.multiplicities[i] > 1) os << " (x" << r.spec.multiplicities[i] << ")";
    if (i + 1 < r.spec.values.size()) os << ",";
  }
  os << "  [" << (r.spec.real_spectrum ? "real" : "complex") << ", "
     << (r.spec.symmetric ? "symmetric" : "asymmetric") << "]\n";

  os << "spectral radius: " << fmt_double(r.spectral_radius) << "\n";
  os << "norms: gns " << fmt_double(r.gns_norm) << ", kms " << fmt_double(r.kms_norm)
     << "\n";
  if (r.edge_count) os << "edge count: " << fmt_double(*r.edge_count) << "\n";
  os << "laplacian eigenvalues in [" << fmt_double(r.laplacian_min_eig) << ", "
     << fmt_double(r.laplacian_max_eig) << "]\n";

  if (r.hypotheses.all()) {
    os << "spectral hypotheses (regular, undirected, tracial): hold\n";
    os << "connected: " << (*r.connected ? "yes" : "no");
    if (!*r.connected)
      os << (r.disconnection_witnessed ? " (witness verified)" : " (no witness)");
    os << "\n";
    os << "has bipartite component: " << (*r.bipartite_component ? "yes" : "no") << "\n";
    os << "bipartite: " << (*r.bipartite ? "yes" : "no");
    if (r.bipartition)
      os << " (witness onto "
         << (r.bipartition->target == BipartiteTarget::k2 ? "K2" : "K2 + T1")
         << " verified)";
    os << "\n";
  } else {
    os << "spectral hypotheses: not met (missing: " << r.hypotheses.missing()
       << "); connectivity/bipartiteness not decided\n";
  }

  os << "orientation: edge rank " << r.orientation.edge_rank << "; "
     << r.orientation.detail << "\n";
  return os.str();
}

// --- CLI -----------------------------------------------------------------------

namespace {

int errc_exit_code(errc code) {
  switch (code) {
    case errc::parse_error:
      return 2;
    case errc::hypotheses_not_met:
      return 4;
    default:
      return 3;  // axiom / validation failure
  }
}

void emit_error(std::ostream& err, const std::string& code, const std::string& message) {
  json j;
  j["error"] = code;
  j["message"] = message;
  err << j.dump() << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"quantum graph toolkit: validate, analyze, and certify "
               "operator-algebraic graphs"};
  app.name("qgraph");
  app.require_subcommand(1);
  // Let global flags (--json, --tol-eq, ...) appear after the subcommand too:
  // subcommands inherit fallthrough from the app at creation time.
  app.fallthrough();

  double tol_eq = 1e-9;
  if (const char* env = std::getenv("QGRAPH_TOL_EQ")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end && *end == '\0' && v > 0) tol_eq = v;
  }
  double tol_eig = 1e-7;
  bool as_json = false;
  app.add_option("--tol-eq", tol_eq,
                 "equality tolerance for axiom checks (env QGRAPH_TOL_EQ)")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-eig", tol_eig, "tolerance for ranks and eigenvalue clustering")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", as_json, "emit JSON instead of text");

  auto* validate_cmd =
      app.add_subcommand("validate", "parse a graph document and check all axioms");
  std::string validate_path;
  validate_cmd->add_option("path", validate_path, "graph document (JSON)")->required();

  auto* analyze_cmd =
      app.add_subcommand("analyze", "full structural and spectral report");
  std::string analyze_path;
  bool analyze_text = false;
  analyze_cmd->add_option("path", analyze_path, "graph document (JSON)")->required();
  analyze_cmd->add_flag("--text", analyze_text, "force text output (default)");

  auto* checkhom_cmd = app.add_subcommand(
      "check-hom", "verify a homomorphism document between two graphs");
  std::string src_path, dst_path, hom_path;
  checkhom_cmd->add_option("source", src_path, "source graph document")->required();
  checkhom_cmd->add_option("target", dst_path, "target graph document")->required();
  checkhom_cmd->add_option("hom", hom_path, "homomorphism document")->required();

  auto* color2_cmd = app.add_subcommand(
      "color2", "decide 2-colorability and emit the coloring certificate");
  std::string color2_path;
  color2_cmd->add_option("path", color2_path, "graph document (JSON)")->required();

  auto* examples_cmd =
      app.add_subcommand("examples", "curated example documents (all, or one by name)");
  std::string example_name;
  examples_cmd->add_option("name", example_name, "example name (omit to list all)");

  auto* random_cmd =
      app.add_subcommand("random", "generate a random quantum graph document");
  std::string qset_spec = "2";
  std::uint64_t seed = 0;
  bool undirected = false;
  random_cmd->add_option("--qset", qset_spec,
                         "comma-separated block sizes of the (tracial) quantum set");
  random_cmd->add_option("--seed", seed, "RNG seed (determinism contract)");
  random_cmd->add_flag("--undirected", undirected,
                       "produce an undirected graph (tracial quantum sets only)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    emit_error(err, "parse_error", e.what());
    return 2;
  }

  const Tolerance tol{tol_eq, tol_eig};
  try {
    if (validate_cmd->parsed()) {
      const GraphDocument doc = parse_graph_document(read_file(validate_path));
      const QuantumGraph g = graph_from_document(doc, tol.eq_tol);
      if (as_json) {
        json j;
        j["valid"] = true;
        if (!doc.name.empty()) j["name"] = doc.name;
        j["dim"] = g.qset()->dim();
        j["delta_sq"] = g.qset()->delta_sq();
        out << j.dump(2) << "\n";
      } else {
        out << "valid quantum graph"
            << (doc.name.empty() ? "" : " '" + doc.name + "'") << ": dim "
            << g.qset()->dim() << ", delta^2 = " << fmt_double(g.qset()->delta_sq())
            << "\n";
      }
      return 0;
    }

    if (analyze_cmd->parsed()) {
      const GraphDocument doc = parse_graph_document(read_file(analyze_path));
      const QuantumGraph g = graph_from_document(doc, tol.eq_tol);
      const AnalysisReport rep = analyze_graph(g, doc.name, tol);
      if (as_json && !analyze_text)
        out << report_to_json(rep).dump(2) << "\n";
      else
        out << report_to_text(rep);
      return 0;
    }

    if (checkhom_cmd->parsed()) {
      const QuantumGraph source = parse_graph(read_file(src_path), tol.eq_tol);
      const QuantumGraph target = parse_graph(read_file(dst_path), tol.eq_tol);
      const StarHom f = parse_hom_document(read_file(hom_path), target.qset(),
                                           source.qset(), tol.eq_tol);
      const HomReport schur =
          is_t_homomorphism(f, source, target, THomCriterion::schur_stability, tol.eq_tol);
      const HomReport orth = is_t_homomorphism(
          f, source, target, THomCriterion::edge_space_orthogonality, tol.eq_tol);
      json j;
      j["rep_dim"] = f.rep_dim();
      if (f.rep_dim() == 1)
        j["graph_hom"] =
            hom_report_to_json(is_graph_homomorphism(f, source, target, tol.eq_tol));
      j["t_hom_schur"] = hom_report_to_json(schur);
      j["t_hom_orthogonality"] = hom_report_to_json(orth);
      j["criteria_agree"] = schur.holds == orth.holds;
      if (as_json) {
        out << j.dump(2) << "\n";
      } else {
        out << "rep_dim: " << f.rep_dim() << "\n";
        if (f.rep_dim() == 1)
          out << "graph homomorphism: " << (j["graph_hom"]["holds"].get<bool>() ? "yes" : "no")
              << " (residual " << fmt_double(j["graph_hom"]["residual"].get<double>())
              << ")\n";
        out << "t-homomorphism (schur stability): " << (schur.holds ? "yes" : "no")
            << " (residual " << fmt_double(schur.residual) << ")\n";
        out << "t-homomorphism (edge orthogonality): " << (orth.holds ? "yes" : "no")
            << " (residual " << fmt_double(orth.residual) << ")\n";
        out << "criteria agree: " << (schur.holds == orth.holds ? "yes" : "no") << "\n";
      }
      return 0;
    }

    if (color2_cmd->parsed()) {
      const GraphDocument doc = parse_graph_document(read_file(color2_path));
      const QuantumGraph g = graph_from_document(doc, tol.eq_tol);
      const TwoColorReport rep =
          two_colorable(g, TwoColorMode::local, tol.eq_tol, tol.eig_tol);
      if (as_json) {
        json j;
        j["colorable"] = rep.colorable;
        j["spectrum_symmetric"] = rep.spectrum_symmetric;
        j["detail"] = rep.detail;
        if (rep.coloring) j["coloring"] = hom_to_json(*rep.coloring);
        out << j.dump(2) << "\n";
      } else {
        out << "2-colorable: " << (rep.colorable ? "yes" : "no") << " (" << rep.detail
            << ")\n";
        if (rep.coloring)
          out << "coloring certificate:\n" << serialize_hom(*rep.coloring);
      }
      return 0;
    }

    if (examples_cmd->parsed()) {
      if (example_name.empty()) {
        if (as_json) {
          json all = json::array();
          for (const std::string& name : example_names())
            all.push_back(graph_to_json(example_graph(name), name, "curated"));
          out << all.dump(2) << "\n";
        } else {
          for (const std::string& name : example_names()) out << name << "\n";
        }
      } else {
        out << serialize_graph(example_graph(example_name), example_name, "curated");
      }
      return 0;
    }

    if (random_cmd->parsed()) {
      std::vector<int> blocks;
      std::stringstream ss(qset_spec);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          std::size_t pos = 0;
          const int n = std::stoi(item, &pos);
          if (pos != item.size() || n < 1) throw std::invalid_argument(item);
          blocks.push_back(n);
        } catch (const std::exception&) {
          fail(errc::parse_error, "--qset must be comma-separated positive integers");
        }
      }
      if (blocks.empty())
        fail(errc::parse_error, "--qset must name at least one block");
      const QSetPtr qs = QuantumSet::tracial(blocks);
      const QuantumGraph g = random_quantum_graph(qs, seed, undirected);
      out << serialize_graph(g, "random-" + std::to_string(seed), "random");
      return 0;
    }
  } catch (const Error& e) {
    emit_error(err, errc_name(e.code()), e.what());
    return errc_exit_code(e.code());
  } catch (const std::exception& e) {
    emit_error(err, "parse_error", e.what());
    return 2;
  }
  return 2;  // no subcommand matched (unreachable with require_subcommand)
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace qgraph
