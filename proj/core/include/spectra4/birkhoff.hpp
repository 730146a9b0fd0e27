#pragma once

#include <functional>
#include <string>
#include <vector>

#include "spectra4/exact.hpp"

namespace spectra4 {

/// The constant matrices of the diagonalizing transformation chain, exact
/// over Q(i). All are defined in one translation unit; everything downstream
/// (identity checks, asymptotic constants) reads them from here.
namespace birkhoff {

/// T = diag(i, 1, -1, -i); the quartic roots of unity ordering the sectors.
ExactMatrix4 matrix_T();

ExactMatrix4 matrix_P();
ExactMatrix4 matrix_Q();
/// The "hollow" variant of Q appearing in the second-order commutator
/// identity (zero anti-diagonal).
ExactMatrix4 matrix_Q_hollow();
ExactMatrix4 matrix_W1();
ExactMatrix4 matrix_W2();
ExactMatrix4 matrix_Q1();
ExactMatrix4 matrix_Q2();
ExactMatrix4 matrix_Q3();
ExactMatrix4 matrix_Q4();

/// Omega: the Vandermonde-like matrix of the unperturbed fundamental system,
/// rows (1, -z, z^2, -z^3) evaluated at the four roots. Entries are Laurent
/// monomials in z.
PolyMatrix4 matrix_omega();

/// The first-order system matrix (rows of the companion form with
/// quasi-derivative last row), with lambda = z^4 and symbolic p, q.
PolyMatrix4 matrix_system();

}  // namespace birkhoff

/// One registered exact identity; `run` returns true when it holds.
struct IdentityCheck {
  std::string name;
  std::string statement;
  std::function<bool()> run;
};

/// The full table of ten identities checked by `verify-algebra`, in a fixed
/// order. All are exact computations except the determinant spot check of
/// the unperturbed boundary matrix, which samples random z and compares
/// against 16i z^6 cos z cosh z in floating point.
const std::vector<IdentityCheck>& registered_identities();

// Individual checks (each also appears in registered_identities()).

/// P + 4i[T, W1] = -iT^3  and  [P, W1] - 4i W1 [T, W1] = Q_hollow / 8.
bool verify_w1_identities();

/// W1 + i[W2, T] = 0.
bool verify_w2_identity();

/// The third-stage matching, split by coefficient:
///   i[Q1, T]/32 + W2 = 0,
///   i[Q2, T]/8 - Q/4 = -iT/4,
///   i[Q3, T]/64 + ([P, W1] - 4i W1 [T, W1])/4 = iT/32.
bool verify_w3_identity();

/// 64i W1 [W2, T] + 64i W2 [W1, T] + 16 [P, W2] + 64 W1^2 + 2 Q3 = Q4.
bool verify_q4_combination();

/// Omega^{-1} P_sys Omega = iz T - (p/4z) P - (q/4z^3) Q, verified as
/// P_sys * Omega - Omega * (...) = 0 over Q(i)[z, z^{-1}, p, q].
bool verify_conjugation_identity();

/// det Omega as a Laurent polynomial; the identity check asserts -16i z^6.
LaurentPoly det_omega();

/// Determinant of the unperturbed boundary matrix (rows phi'(0), phi'''(0),
/// phi(1), phi''(1)) against 16i z^6 cos z cosh z, at `samples` seeded
/// random points with |z| <= 3. Returns the worst relative error.
double det_phi0_worst_error(int samples = 20);

/// tr W1^2; asserted equal to -3/16.
GaussianRational trace_w1_squared();

}  // namespace spectra4
