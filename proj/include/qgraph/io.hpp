#pragma once
// JSON (de)serialization, the curated example library, whole-graph analysis
// reports, and the command-line front end.
//
// Graph document schema (format_version 1)
// -----------------------------------------
// {
//   "format_version": 1,
//   "name": "k2",                     // optional metadata
//   "provenance": "curated",          // optional metadata
//   "qset": {
//     "blocks": [1, 2],               // matrix block sizes of B
//     "density": [[0.2], [0.4, 0.4]]  // diag of Q per block; omit => tracial
//   },
//   "adjacency": [[[re, im], ...], ...]
// }
// The adjacency matrix is dense, dim(B) x dim(B), over the GNS basis of
// (B, psi): matrix units E^s_{ij} scaled to unit vectors, ordered
// lexicographically by (block s, row i, column j).  Complex entries are
// always [re, im] pairs.
//
// Homomorphism document schema (format_version 1)
// -----------------------------------------------
// {
//   "format_version": 1,
//   "name": "...",                    // optional
//   "rep_dim": k,
//   "images": [ ... ]                 // one entry per domain GNS index a:
// }                                   // a list over codomain blocks s of
//                                     // (n_s k) x (n_s k) complex matrices
// Block s of B_cod (x) M_k is stored codomain-leg major: entry
// (r*k + u, c*k + v) is the coefficient of E^s_{rc} (x) E_{uv}.  The domain
// and codomain quantum sets are supplied externally (for check-hom they come
// from the target and source graph documents).

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgraph/spectral.hpp"

namespace qgraph {

using json = nlohmann::ordered_json;

// --- Documents ---------------------------------------------------------------

struct GraphDocument {
  int format_version = 1;
  std::string name;         // empty when absent
  std::string provenance;   // empty when absent
  QSetPtr qset;
  Mat adjacency;            // GNS coordinates
};

// Throws Error(parse_error) on malformed JSON / wrong shapes; quantum-set
// axiom violations surface as the qalg error codes (not_a_state, ...).
GraphDocument parse_graph_document(const std::string& text);
// Validates the adjacency as a Schur idempotent (throws not_projection etc.).
QuantumGraph graph_from_document(const GraphDocument& doc, double eq_tol = 1e-9);
// Parse + validate in one step.
QuantumGraph parse_graph(const std::string& text, double eq_tol = 1e-9);

json graph_to_json(const QuantumGraph& g, const std::string& name = "",
                   const std::string& provenance = "");
std::string serialize_graph(const QuantumGraph& g, const std::string& name = "",
                            const std::string& provenance = "");

StarHom parse_hom_document(const std::string& text, const QSetPtr& dom,
                           const QSetPtr& cod, double eq_tol = 1e-9);
json hom_to_json(const StarHom& f, const std::string& name = "");
std::string serialize_hom(const StarHom& f, const std::string& name = "");

std::string read_file(const std::string& path);  // throws parse_error if unreadable

// --- Curated examples ---------------------------------------------------------

// Sorted names of the curated example graphs (complete graphs, cycles,
// trivial graphs, the Petersen graph, quantum M_2-based graphs, bipartite
// doubles, disjoint unions, tensor products, ...).
std::vector<std::string> example_names();
// Throws Error(param_out_of_range) for unknown names.
QuantumGraph example_graph(const std::string& name);

// --- Analysis ------------------------------------------------------------------

// Full report over one graph.  Hypothesis-gated verdicts (connectedness,
// bipartiteness, local 2-colorability) are present only when their
// hypotheses hold; the report always records which hypotheses were checked
// and which failed.
struct AnalysisReport {
  std::string name;

  // Quantum set summary.
  std::vector<int> blocks;
  std::vector<double> density;  // concatenated per-block diagonals
  double delta_sq = 0.0;
  bool tracial = false;

  // Predicate table.
  bool real = false;
  bool self_adjoint = false;
  bool undirected = false;
  bool kms_symmetric = false;
  bool reflexive = false;
  bool irreflexive = false;
  bool no_partial_loops = false;
  bool schur_central = false;
  bool regular = false;
  std::optional<double> degree;

  Spectrum spec;
  double spectral_radius = 0.0;
  double gns_norm = 0.0;
  double kms_norm = 0.0;
  std::optional<double> edge_count;  // real graphs only
  double laplacian_min_eig = 0.0;
  double laplacian_max_eig = 0.0;

  // Hypotheses gating the connectivity/bipartiteness block.
  SpectralHypotheses hypotheses;
  std::optional<bool> connected;
  std::optional<bool> bipartite_component;
  std::optional<bool> bipartite;
  std::optional<BipartitionWitness> bipartition;  // when a component is bipartite
  bool disconnection_witnessed = false;           // witness built and verified

  OrientationObstruction orientation;
};

AnalysisReport analyze_graph(const QuantumGraph& g, const std::string& name = "",
                             const Tolerance& tol = {});
json report_to_json(const AnalysisReport& report);
std::string report_to_text(const AnalysisReport& report);

// --- CLI -----------------------------------------------------------------------

// Entry point used by the qgraph binary and by tests.  args excludes the
// program name.  Returns the process exit code: 0 success / verdict
// computed, 2 parse or usage error, 3 axiom violation, 4 hypotheses not met.
// Reports go to out; structured {"error": ..., "message": ...} JSON goes to
// err on failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace qgraph
