// Documents, the curated example registry, analysis reports, and the
// command-line interface (in-process and through the installed binary).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qgraph/io.hpp"

using namespace qgraph;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliResult r;
  r.exit_code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string("/tmp/qgraph_io_test_") + name;
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << content;
  return path;
}

StarHom toy_hom() {
  auto dom = QuantumSet::tracial({1, 1, 1, 1});
  auto cod = QuantumSet::tracial({1, 1});
  auto img = [&](int point, int level) {
    std::vector<Mat> mats(2, Mat::Zero(2, 2));
    mats[point](level, level) = 1.0;
    return mats;
  };
  return StarHom(dom, cod, 2, {img(0, 0), img(1, 0), img(0, 1), img(1, 1)});
}

}  // namespace

TEST_CASE("graph documents round-trip through serialization") {
  for (const std::string& name : example_names()) {
    QuantumGraph g = example_graph(name);
    const std::string text = serialize_graph(g, name, "curated");
    GraphDocument doc = parse_graph_document(text);
    CHECK(doc.name == name);
    CHECK(doc.provenance == "curated");
    QuantumGraph back = graph_from_document(doc);
    CHECK(same_qset(back.qset(), g.qset()));
    CHECK((back.mat() - g.mat()).norm() < 1e-14);
    // Value identity: parse . serialize is the identity on documents.
    CHECK(graph_to_json(back, name, "curated") == graph_to_json(g, name, "curated"));
    // Byte identity of a second pass.
    CHECK(serialize_graph(back, name, "curated") == text);
  }
}

TEST_CASE("documents without an explicit state default to the uniform one") {
  const char* doc = R"({
    "format_version": 1,
    "qset": {"blocks": [1, 1]},
    "adjacency": [[[0,0],[1,0]],[[1,0],[0,0]]]
  })";
  QuantumGraph g = parse_graph(doc);
  CHECK(g.qset()->is_tracial());
  CHECK(g.qset()->delta_sq() == doctest::Approx(2.0));
  CHECK(g.is_undirected());
}

TEST_CASE("malformed documents fail with diagnosable codes") {
  auto code_of = [](const std::string& text) {
    try {
      parse_graph_document(text);
      return errc::parse_error;  // placeholder; the calls below all throw
    } catch (const Error& e) {
      return e.code();
    }
  };
  CHECK(code_of("{ not json") == errc::parse_error);
  CHECK(code_of("[1,2,3]") == errc::parse_error);
  CHECK(code_of(R"({"qset":{"blocks":[2]},"adjacency":[]})") == errc::parse_error);
  CHECK(code_of(R"({"format_version":2,"qset":{"blocks":[2]},"adjacency":[]})") ==
        errc::parse_error);
  CHECK(code_of(R"({"format_version":1,"adjacency":[]})") == errc::parse_error);
  CHECK(code_of(R"({"format_version":1,"qset":{"blocks":[]},"adjacency":[]})") ==
        errc::parse_error);
  // Shape mismatch: 1-point set with a 2x2 adjacency.
  CHECK(code_of(R"({"format_version":1,"qset":{"blocks":[1]},
                    "adjacency":[[[0,0],[0,0]],[[0,0],[0,0]]]})") == errc::parse_error);
  // Entries must be [re, im] pairs.
  CHECK(code_of(R"({"format_version":1,"qset":{"blocks":[1]},"adjacency":[[1.0]]})") ==
        errc::parse_error);

  // State axioms surface as their own codes, not as parse errors.
  try {
    parse_graph_document(R"({"format_version":1,
      "qset":{"blocks":[1,1],"density":[[0.3],[0.8]]},
      "adjacency":[[[1,0],[0,0]],[[0,0],[1,0]]]})");
    FAIL("expected a state axiom failure");
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_a_state);
  }
}

TEST_CASE("homomorphism documents round-trip") {
  StarHom f = toy_hom();
  const std::string text = serialize_hom(f, "toy");
  StarHom back = parse_hom_document(text, f.dom(), f.cod());
  CHECK(back.rep_dim() == 2);
  for (int a = 0; a < f.dom()->dim(); ++a)
    for (int s = 0; s < f.cod()->num_blocks(); ++s)
      CHECK((back.image(a, s) - f.image(a, s)).norm() < 1e-14);
  CHECK(serialize_hom(back, "toy") == text);

  // Wrong shapes and versions are parse errors.
  CHECK_THROWS_AS(parse_hom_document("{}", f.dom(), f.cod()), Error);
  CHECK_THROWS_AS(
      parse_hom_document(R"({"format_version":1,"rep_dim":2,"images":[]})", f.dom(),
                         f.cod()),
      Error);
}

TEST_CASE("curated example registry") {
  const std::vector<std::string> names = example_names();
  CHECK(names.size() == 43);
  CHECK(std::is_sorted(names.begin(), names.end()));
  for (const std::string& name : names) CHECK_NOTHROW(example_graph(name));
  CHECK_THROWS_AS(example_graph("no_such_graph"), Error);

  // Spot-check a few structural facts.
  CHECK(example_graph("petersen").qset()->dim() == 10);
  CHECK(*example_graph("petersen").degree() == doctest::Approx(3.0));
  CHECK_FALSE(example_graph("p3_path").degree().has_value());
  CHECK_FALSE(example_graph("directed_edge").is_self_adjoint());
  CHECK_FALSE(example_graph("k_m2_nontracial").qset()->is_tracial());
  CHECK(example_graph("j_c4").is_reflexive());
  CHECK(example_graph("double_c5").qset()->dim() == 10);
  CHECK(example_graph("km2_tensor_k2").qset()->num_blocks() == 2);
}

TEST_CASE("analysis reports carry the golden facts") {
  AnalysisReport r = analyze_graph(example_graph("m2_nonorientable"),
                                   "m2_nonorientable", Tolerance{});
  CHECK(r.delta_sq == doctest::Approx(4.0));
  CHECK(r.tracial);
  CHECK(r.undirected);
  CHECK(r.irreflexive);
  CHECK_FALSE(r.schur_central);
  REQUIRE(r.degree.has_value());
  CHECK(*r.degree == doctest::Approx(1.0));
  CHECK(r.spec.multiplicity_of(cplx(1, 0)) == 2);
  CHECK(r.spec.symmetric);
  REQUIRE(r.connected.has_value());
  CHECK_FALSE(*r.connected);
  CHECK(r.disconnection_witnessed);
  REQUIRE(r.bipartite.has_value());
  CHECK(*r.bipartite);
  REQUIRE(r.bipartition.has_value());
  CHECK(r.bipartition->target == BipartiteTarget::k2);
  CHECK(r.orientation.edge_rank == 1);
  CHECK_FALSE(r.orientation.decomposition_possible);

  // JSON and text renderings expose the same verdicts.
  json j = report_to_json(r);
  CHECK(j["qset"]["delta_sq"].get<double>() == doctest::Approx(4.0));
  CHECK(j["predicates"]["undirected"].get<bool>());
  CHECK_FALSE(j["connected"].get<bool>());
  CHECK(j["bipartite"].get<bool>());
  CHECK(j["orientation_obstruction"]["edge_rank"].get<int>() == 1);
  const std::string text = report_to_text(r);
  CHECK(text.find("connected: no") != std::string::npos);
  CHECK(text.find("bipartite: yes") != std::string::npos);
  CHECK(text.find("edge rank 1") != std::string::npos);
}

TEST_CASE("report values are numerically pinned") {
  // Five-cycle: all quantities have closed forms.  Stability contract: 1e-8.
  AnalysisReport r = analyze_graph(example_graph("c5"), "c5", Tolerance{});
  const double phi_minus = (std::sqrt(5.0) - 1) / 2;   // 2 cos(2 pi / 5)
  const double phi_plus = -(std::sqrt(5.0) + 1) / 2;   // 2 cos(4 pi / 5)
  CHECK(std::abs(r.delta_sq - 5.0) < 1e-8);
  CHECK(std::abs(*r.degree - 2.0) < 1e-8);
  CHECK(std::abs(r.spectral_radius - 2.0) < 1e-8);
  CHECK(std::abs(r.gns_norm - 2.0) < 1e-8);
  CHECK(std::abs(r.kms_norm - 2.0) < 1e-8);
  CHECK(std::abs(*r.edge_count - 10.0) < 1e-8);
  CHECK(std::abs(r.laplacian_min_eig - 0.0) < 1e-8);
  CHECK(std::abs(r.laplacian_max_eig - (2.0 / 5) * (2.0 - phi_plus)) < 1e-8);
  REQUIRE(r.spec.values.size() == 3);
  CHECK(r.spec.multiplicity_of(cplx(2, 0)) == 1);
  CHECK(r.spec.multiplicity_of(cplx(phi_minus, 0)) == 2);
  CHECK(r.spec.multiplicity_of(cplx(phi_plus, 0)) == 2);
}

TEST_CASE("cli: validate, analyze, and error exits") {
  QuantumGraph m2 = example_graph("m2_nonorientable");
  const std::string good = write_temp("m2.json", serialize_graph(m2, "m2"));
  CliResult ok = cli({"validate", good});
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("valid quantum graph") != std::string::npos);

  const std::string bad = write_temp("bad.json", "{ nope");
  CliResult parse_fail = cli({"validate", bad});
  CHECK(parse_fail.exit_code == 2);
  CHECK(parse_fail.err.find("\"error\"") != std::string::npos);
  CHECK(json::parse(parse_fail.err)["error"] == "parse_error");

  // An axiom failure (not a pointwise idempotent) exits 3.
  const std::string axiom = write_temp("axiom.json", R"({"format_version":1,
    "qset":{"blocks":[1,1]},
    "adjacency":[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]})");
  CliResult axiom_fail = cli({"validate", axiom});
  CHECK(axiom_fail.exit_code == 3);
  CHECK(json::parse(axiom_fail.err)["error"] == "not_projection");

  CliResult missing = cli({"validate", "/tmp/definitely_missing_file.json"});
  CHECK(missing.exit_code == 2);

  // analyze: text by default, JSON on demand; both agree on the verdicts.
  CliResult text = cli({"analyze", good});
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("connected: no") != std::string::npos);
  CliResult js = cli({"--json", "analyze", good});
  CHECK(js.exit_code == 0);
  json report = json::parse(js.out);
  CHECK(report["name"] == "m2");
  CHECK(report["bipartite"].get<bool>());
  // Global flags are accepted after the subcommand as well.
  CliResult js2 = cli({"analyze", good, "--json"});
  CHECK(js2.exit_code == 0);
  CHECK(json::parse(js2.out) == report);

  // Unknown flags are parse errors with machine-readable output.
  CliResult unknown = cli({"analyze", good, "--frobnicate"});
  CHECK(unknown.exit_code == 2);
  CHECK(json::parse(unknown.err)["error"] == "parse_error");

  // Help goes to stdout and exits 0.
  CliResult help = cli({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("validate") != std::string::npos);
}

TEST_CASE("cli: examples and 2-coloring") {
  CliResult list = cli({"examples"});
  CHECK(list.exit_code == 0);
  int lines = 0;
  for (char c : list.out) lines += c == '\n';
  CHECK(lines == 43);

  CliResult one = cli({"examples", "c4"});
  CHECK(one.exit_code == 0);
  QuantumGraph c4 = parse_graph(one.out);
  CHECK(c4.qset()->dim() == 4);
  CHECK(*c4.degree() == doctest::Approx(2.0));

  CliResult nope = cli({"examples", "zzz"});
  CHECK(nope.exit_code == 3);
  CHECK(json::parse(nope.err)["error"] == "param_out_of_range");

  const std::string c4_path = write_temp("c4.json", one.out);
  CliResult color = cli({"--json", "color2", c4_path});
  CHECK(color.exit_code == 0);
  json cj = json::parse(color.out);
  CHECK(cj["colorable"].get<bool>());
  CHECK(cj.contains("coloring"));

  // The emitted coloring certificate is itself checkable as a document.
  QuantumGraph k2 = example_graph("k2");
  StarHom coloring =
      parse_hom_document(cj["coloring"].dump(), k2.qset(), c4.qset(), 1e-7);
  CHECK(is_t_homomorphism(coloring, c4, k2, THomCriterion::schur_stability, 1e-7)
            .holds);

  // Odd cycle: computed verdict "no", exit code still 0.
  const std::string c5_path = write_temp("c5.json", cli({"examples", "c5"}).out);
  CliResult no = cli({"--json", "color2", c5_path});
  CHECK(no.exit_code == 0);
  CHECK_FALSE(json::parse(no.out)["colorable"].get<bool>());

  // Directed input: hypotheses are not met, exit 4.
  const std::string dt_path =
      write_temp("dt.json", cli({"examples", "directed_triangle"}).out);
  CliResult gated = cli({"color2", dt_path});
  CHECK(gated.exit_code == 4);
  CHECK(json::parse(gated.err)["error"] == "hypotheses_not_met");
}

TEST_CASE("cli: homomorphism checking") {
  const std::string m2_path =
      write_temp("hom_m2.json", cli({"examples", "m2_nonorientable"}).out);
  const std::string k2_path = write_temp("hom_k2.json", cli({"examples", "k2"}).out);
  CliResult color = cli({"--json", "color2", m2_path});
  REQUIRE(color.exit_code == 0);
  const std::string hom_path =
      write_temp("hom_doc.json", json::parse(color.out)["coloring"].dump());

  CliResult check = cli({"--json", "check-hom", m2_path, k2_path, hom_path});
  CHECK(check.exit_code == 0);
  json cj = json::parse(check.out);
  CHECK(cj["graph_hom"]["holds"].get<bool>());
  CHECK(cj["t_hom_schur"]["holds"].get<bool>());
  CHECK(cj["t_hom_orthogonality"]["holds"].get<bool>());
  CHECK(cj["criteria_agree"].get<bool>());

  // A non-homomorphism yields a computed verdict (exit 0, holds = false).
  QuantumGraph c4 = example_graph("c4"), k2 = example_graph("k2");
  StarHom not_hom = function_pullback(k2.qset(), c4.qset(), {0, 0, 1, 1});
  const std::string c4_path = write_temp("hom_c4.json", cli({"examples", "c4"}).out);
  const std::string bad_hom = write_temp("hom_bad.json", serialize_hom(not_hom));
  CliResult verdict = cli({"--json", "check-hom", c4_path, k2_path, bad_hom});
  CHECK(verdict.exit_code == 0);
  json vj = json::parse(verdict.out);
  CHECK_FALSE(vj["graph_hom"]["holds"].get<bool>());
  CHECK_FALSE(vj["t_hom_schur"]["holds"].get<bool>());
  CHECK(vj["criteria_agree"].get<bool>());

  // A document that parses but is not a *-homomorphism (images sum to the
  // identity yet are not idempotent) exits with the axiom code.
  // dom = K2 functions (2 points), cod = C4 functions (4 blocks).
  const std::string broken2 = write_temp(
      "hom_broken2.json",
      R"({"format_version":1,"rep_dim":1,"images":[
        [[[[0.5,0]]],[[[0.5,0]]],[[[0.5,0]]],[[[0.5,0]]]],
        [[[[0.5,0]]],[[[0.5,0]]],[[[0.5,0]]],[[[0.5,0]]]]]})");
  CliResult nothom = cli({"check-hom", c4_path, k2_path, broken2});
  CHECK(nothom.exit_code == 3);
  CHECK(json::parse(nothom.err)["error"] == "not_multiplicative");
}

TEST_CASE("cli: random graphs are deterministic and honor the state flags") {
  CliResult a = cli({"random", "--qset", "2,1", "--seed", "11"});
  CliResult b = cli({"random", "--qset", "2,1", "--seed", "11"});
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);  // byte-identical
  CliResult c = cli({"random", "--qset", "2,1", "--seed", "12"});
  CHECK(c.out != a.out);

  QuantumGraph g = parse_graph(a.out);
  CHECK(g.qset()->num_blocks() == 2);

  CliResult und = cli({"random", "--qset", "2", "--seed", "3", "--undirected"});
  CHECK(und.exit_code == 0);
  CHECK(parse_graph(und.out).is_undirected());

  CliResult badspec = cli({"random", "--qset", "2,x"});
  CHECK(badspec.exit_code == 2);
}

TEST_CASE("cli: tolerance precedence between environment and flags") {
  // A graph whose idempotency only holds loosely (entries off by 1e-5).
  const std::string loose = write_temp("loose.json", R"({"format_version":1,
    "qset":{"blocks":[1,1]},
    "adjacency":[[[1.00001,0],[0,0]],[[0,0],[0,0]]]})");

  CHECK(cli({"validate", loose}).exit_code == 3);           // default 1e-9
  CHECK(cli({"--tol-eq", "1e-3", "validate", loose}).exit_code == 0);

  setenv("QGRAPH_TOL_EQ", "1e-3", 1);
  CHECK(cli({"validate", loose}).exit_code == 0);           // env loosens default
  CHECK(cli({"--tol-eq", "1e-9", "validate", loose}).exit_code == 3);  // flag wins
  unsetenv("QGRAPH_TOL_EQ");
  CHECK(cli({"validate", loose}).exit_code == 3);
}

TEST_CASE("installed binary matches the in-process interface") {
  const char* bin = std::getenv("QGRAPH_CLI");
  if (bin == nullptr) return;  // only wired up under the build harness

  auto shell = [&](const std::string& args) {
    const std::string out_path = "/tmp/qgraph_io_test_proc_out";
    const std::string cmd = std::string(bin) + " " + args + " > " + out_path + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return std::pair<int, std::string>{WEXITSTATUS(status), ss.str()};
  };

  auto [code, out] = shell("examples c4");
  CHECK(code == 0);
  CHECK(out == cli({"examples", "c4"}).out);

  auto [code2, out2] = shell("examples nope");
  CHECK(code2 == 3);

  // Determinism through the real binary.
  auto r1 = shell("random --qset 2 --seed 99");
  auto r2 = shell("random --qset 2 --seed 99");
  CHECK(r1.second == r2.second);
}
