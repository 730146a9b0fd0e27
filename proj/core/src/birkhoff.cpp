#include "spectra4/birkhoff.hpp"

#include <cmath>
#include <complex>
#include <random>

namespace spectra4 {

using birkhoff::matrix_omega;
using birkhoff::matrix_P;
using birkhoff::matrix_Q;
using birkhoff::matrix_Q1;
using birkhoff::matrix_Q2;
using birkhoff::matrix_Q3;
using birkhoff::matrix_Q4;
using birkhoff::matrix_Q_hollow;
using birkhoff::matrix_system;
using birkhoff::matrix_T;
using birkhoff::matrix_W1;
using birkhoff::matrix_W2;

namespace {

const GaussianRational kI = GaussianRational::i();

ExactMatrix4 t_cubed() {
  const ExactMatrix4 T = matrix_T();
  return T * T * T;
}

}  // namespace

bool verify_w1_identities() {
  const ExactMatrix4 T = matrix_T();
  const ExactMatrix4 P = matrix_P();
  const ExactMatrix4 W1 = matrix_W1();
  const ExactMatrix4 lhs1 = P + T.commutator(W1) * (kI * GaussianRational(4));
  if (!(lhs1 + t_cubed() * kI).is_zero()) return false;
  const ExactMatrix4 lhs2 =
      P.commutator(W1) - W1 * T.commutator(W1) * (kI * GaussianRational(4));
  const ExactMatrix4 rhs2 = matrix_Q_hollow() * GaussianRational(Rational(1, 8));
  return (lhs2 - rhs2).is_zero();
}

bool verify_w2_identity() {
  const ExactMatrix4 lhs =
      matrix_W1() + matrix_W2().commutator(matrix_T()) * kI;
  return lhs.is_zero();
}

bool verify_w3_identity() {
  const ExactMatrix4 T = matrix_T();
  const ExactMatrix4 P = matrix_P();
  const ExactMatrix4 W1 = matrix_W1();
  // Coefficient of p'': i[Q1, T]/32 + W2 = 0.
  const ExactMatrix4 c_ppp =
      matrix_Q1().commutator(T) * (kI * GaussianRational(Rational(1, 32))) +
      matrix_W2();
  if (!c_ppp.is_zero()) return false;
  // Coefficient of q: i[Q2, T]/8 - Q/4 = -iT/4.
  const ExactMatrix4 c_q =
      matrix_Q2().commutator(T) * (kI * GaussianRational(Rational(1, 8))) -
      matrix_Q() * GaussianRational(Rational(1, 4)) +
      T * (kI * GaussianRational(Rational(1, 4)));
  if (!c_q.is_zero()) return false;
  // Coefficient of p^2: i[Q3, T]/64 + ([P, W1] - 4i W1 [T, W1])/4 = iT/32.
  const ExactMatrix4 bracket =
      P.commutator(W1) - W1 * T.commutator(W1) * (kI * GaussianRational(4));
  const ExactMatrix4 c_p2 =
      matrix_Q3().commutator(T) * (kI * GaussianRational(Rational(1, 64))) +
      bracket * GaussianRational(Rational(1, 4)) -
      T * (kI * GaussianRational(Rational(1, 32)));
  return c_p2.is_zero();
}

bool verify_q4_combination() {
  const ExactMatrix4 T = matrix_T();
  const ExactMatrix4 P = matrix_P();
  const ExactMatrix4 W1 = matrix_W1();
  const ExactMatrix4 W2 = matrix_W2();
  const ExactMatrix4 lhs =
      W1 * W2.commutator(T) * (kI * GaussianRational(64)) +
      W2 * W1.commutator(T) * (kI * GaussianRational(64)) +
      P.commutator(W2) * GaussianRational(16) +
      W1 * W1 * GaussianRational(64) + matrix_Q3() * GaussianRational(2);
  return (lhs - matrix_Q4()).is_zero();
}

bool verify_conjugation_identity() {
  const PolyMatrix4 omega = matrix_omega();
  const PolyMatrix4 sys = matrix_system();
  const LaurentPoly iz = LaurentPoly::monomial(kI, 1, 0, 0);
  const LaurentPoly p_over_4z =
      LaurentPoly::monomial(GaussianRational(Rational(1, 4)), -1, 1, 0);
  const LaurentPoly q_over_4z3 =
      LaurentPoly::monomial(GaussianRational(Rational(1, 4)), -3, 0, 1);
  const PolyMatrix4 rhs =
      PolyMatrix4::from_exact(matrix_T()).scale(iz) -
      PolyMatrix4::from_exact(matrix_P()).scale(p_over_4z) -
      PolyMatrix4::from_exact(matrix_Q()).scale(q_over_4z3);
  return (sys * omega - omega * rhs).is_zero();
}

LaurentPoly det_omega() {
  const PolyMatrix4 m = matrix_omega();
  auto at = [&](int r, int c) -> const LaurentPoly& { return m.at(r, c); };
  auto m3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
    return at(r0, c0) * (at(r1, c1) * at(r2, c2) - at(r1, c2) * at(r2, c1)) -
           at(r0, c1) * (at(r1, c0) * at(r2, c2) - at(r1, c2) * at(r2, c0)) +
           at(r0, c2) * (at(r1, c0) * at(r2, c1) - at(r1, c1) * at(r2, c0));
  };
  return at(0, 0) * m3(1, 2, 3, 1, 2, 3) - at(0, 1) * m3(1, 2, 3, 0, 2, 3) +
         at(0, 2) * m3(1, 2, 3, 0, 1, 3) - at(0, 3) * m3(1, 2, 3, 0, 1, 2);
}

GaussianRational trace_w1_squared() {
  const ExactMatrix4 W1 = matrix_W1();
  return (W1 * W1).trace();
}

double det_phi0_worst_error(int samples) {
  using C = std::complex<double>;
  std::mt19937 rng(0x5eed);
  std::uniform_real_distribution<double> mag(0.5, 3.0);
  std::uniform_real_distribution<double> ang(-3.14159, 3.14159);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const C z = std::polar(mag(rng), ang(rng));
    const C z2 = z * z, z3 = z2 * z;
    const C i(0.0, 1.0);
    // Boundary matrix of the unperturbed fundamental solutions
    // e^{-zx}, e^{izx}, e^{-izx}, e^{zx}: rows phi'(0), phi'''(0),
    // phi(1), phi''(1).
    const C em = std::exp(-z), ei = std::exp(i * z), emi = std::exp(-i * z),
            ep = std::exp(z);
    C m[4][4] = {{-z, i * z, -i * z, z},
                 {-z3, -i * z3, i * z3, z3},
                 {em, ei, emi, ep},
                 {z2 * em, -z2 * ei, -z2 * emi, z2 * ep}};
    auto m3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
      return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
             m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
             m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
    };
    const C det = m[0][0] * m3(1, 2, 3, 1, 2, 3) -
                  m[0][1] * m3(1, 2, 3, 0, 2, 3) +
                  m[0][2] * m3(1, 2, 3, 0, 1, 3) -
                  m[0][3] * m3(1, 2, 3, 0, 1, 2);
    const C expected = 16.0 * i * z3 * z3 * std::cos(z) * std::cosh(z);
    const double denom = std::max(std::abs(expected), 1e-6);
    worst = std::max(worst, std::abs(det - expected) / denom);
  }
  return worst;
}

const std::vector<IdentityCheck>& registered_identities() {
  static const std::vector<IdentityCheck> table = {
      {"w1-first", "P + 4i[T, W1] = -i T^3",
       [] {
         const ExactMatrix4 lhs =
             matrix_P() +
             matrix_T().commutator(matrix_W1()) * (kI * GaussianRational(4));
         return (lhs + t_cubed() * kI).is_zero();
       }},
      {"w1-second", "[P, W1] - 4i W1 [T, W1] = Q_hollow / 8",
       [] {
         const ExactMatrix4 T = matrix_T();
         const ExactMatrix4 W1 = matrix_W1();
         const ExactMatrix4 lhs = matrix_P().commutator(W1) -
                                  W1 * T.commutator(W1) *
                                      (kI * GaussianRational(4));
         return (lhs - matrix_Q_hollow() * GaussianRational(Rational(1, 8)))
             .is_zero();
       }},
      {"w2", "W1 + i[W2, T] = 0", [] { return verify_w2_identity(); }},
      {"w3-coefficients",
       "third-stage matching, coefficient-wise in p'', q, p^2",
       [] { return verify_w3_identity(); }},
      {"q4-combination",
       "64i W1[W2,T] + 64i W2[W1,T] + 16[P,W2] + 64 W1^2 + 2 Q3 = Q4",
       [] { return verify_q4_combination(); }},
      {"conjugation",
       "Omega^-1 Psys Omega = izT - (p/4z)P - (q/4z^3)Q over Q(i)[z,1/z,p,q]",
       [] { return verify_conjugation_identity(); }},
      {"det-omega", "det Omega = -16i z^6",
       [] {
         const LaurentPoly expected = LaurentPoly::monomial(
             GaussianRational(0) - kI * GaussianRational(16), 6, 0, 0);
         return (det_omega() - expected).is_zero();
       }},
      {"det-phi0-numeric",
       "det of the unperturbed boundary matrix = 16i z^6 cos z cosh z",
       [] { return det_phi0_worst_error(20) < 1e-9; }},
      {"t-power", "T^4 = I",
       [] {
         const ExactMatrix4 T = matrix_T();
         return (T * T * T * T - ExactMatrix4::identity()).is_zero();
       }},
      {"f1-off-diagonal",
       "diag of -(p/4)(P + iT^3) vanishes: the z^-1 coefficient is hollow",
       [] {
         const ExactMatrix4 F = (matrix_P() + t_cubed() * kI) *
                                GaussianRational(Rational(-1, 4));
         for (int i = 0; i < 4; ++i) {
           if (!F.at(i, i).is_zero()) return false;
         }
         return true;
       }},
  };
  return table;
}

}  // namespace spectra4
