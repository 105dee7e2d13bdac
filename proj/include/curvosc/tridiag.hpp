#pragma once

#include <vector>

namespace curvosc::tridiag {

// Symmetric tridiagonal eigenproblem, diagonal d[0..n-1] and
// subdiagonal e[0..n-2].  Eigenvalues by Sturm-sequence bisection,
// eigenvectors by inverse iteration with a partially pivoted tridiagonal
// solve.  Deterministic: no randomness, results depend only on inputs.

// Number of eigenvalues strictly below x (Sturm count).
int count_below(const std::vector<double>& d, const std::vector<double>& e,
                double x);

// The k smallest eigenvalues, ascending, each bisected to roughly
// machine precision relative to the Gershgorin scale.
std::vector<double> lowest_eigenvalues(const std::vector<double>& d,
                                       const std::vector<double>& e, int k);

// All eigenvalues strictly below `bound`, ascending.
std::vector<double> eigenvalues_below(const std::vector<double>& d,
                                      const std::vector<double>& e,
                                      double bound);

// Unit eigenvector for an isolated eigenvalue lambda (inverse
// iteration; orthogonalized against `previous` to stabilize close
// clusters).  NumericalError if iteration fails to settle.
std::vector<double> eigenvector(const std::vector<double>& d,
                                const std::vector<double>& e, double lambda,
                                const std::vector<std::vector<double>>& previous = {});

} // namespace curvosc::tridiag
