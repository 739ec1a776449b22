// Shared scalar types, tolerances and error reporting for the quantum-graph
// library.  All numerics are double precision; operator equality is always
// a relative Frobenius-norm test controlled by Tolerance::eq_tol, while
// eigenvalue clustering and numerical rank decisions use the absolute
// Tolerance::eig_tol.
#pragma once

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qgraph {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

// Error codes cover construction axioms (states, delta-forms, projections,
// homomorphism laws), usage errors (owner/arity mismatches, parameters) and
// theorem preconditions (hypotheses_not_met).  The CLI maps these to exit
// codes: parse_error -> 2, hypotheses_not_met -> 4, everything else -> 3.
enum class errc {
  not_a_state,
  not_faithful,
  not_delta_form,
  owner_mismatch,
  arity_mismatch,
  not_real,
  not_projection,
  not_bimodule,
  not_eigenvalue,
  not_self_adjoint,
  not_unital,
  not_star,
  not_multiplicative,
  hypotheses_not_met,
  param_out_of_range,
  parse_error,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

struct Tolerance {
  double eq_tol = 1e-9;   // relative Frobenius tolerance for operator equality
  double eig_tol = 1e-7;  // absolute tolerance for eigenvalue clustering/rank

  void validate() const {
    if (!(eq_tol > 0.0 && eq_tol < 1.0) || !(eig_tol > 0.0 && eig_tol < 1.0))
      fail(errc::param_out_of_range, "tolerances must lie strictly in (0, 1)");
  }
};

// ‖a - b‖_F relative to max(1, ‖a‖_F, ‖b‖_F); the floor of 1 keeps the test
// meaningful for operators that are (nearly) zero.
inline double rel_dist(const Mat& a, const Mat& b) {
  double scale = std::max({1.0, a.norm(), b.norm()});
  return (a - b).norm() / scale;
}

inline bool approx_eq(const Mat& a, const Mat& b, double eq_tol) {
  return rel_dist(a, b) <= eq_tol;
}

// Numerical rank: number of singular values above eig_tol * max(1, largest).
int matrix_rank(const Mat& m, double eig_tol);

}  // namespace qgraph
