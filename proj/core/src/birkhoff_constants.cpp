#include "spectra4/birkhoff.hpp"

namespace spectra4::birkhoff {

namespace {

ExactMatrix4 from_parts(const int (&re)[16], const int (&im)[16], int denom) {
  ExactMatrix4 m;
  for (int i = 0; i < 16; ++i) {
    m.e[i] = GaussianRational(Rational(re[i], denom), Rational(im[i], denom));
  }
  return m;
}

}  // namespace

ExactMatrix4 matrix_T() {
  return ExactMatrix4::diagonal({GaussianRational::i(), GaussianRational(1),
                                 GaussianRational(-1),
                                 -GaussianRational::i()});
}

ExactMatrix4 matrix_P() {
  static const int re[16] = {-1, 0, 0, 1,  //
                             1,  0, 0, -1,  //
                             1,  0, 0, -1,  //
                             -1, 0, 0, 1};
  static const int im[16] = {0, 1,  -1, 0,  //
                             0, -1, 1,  0,  //
                             0, -1, 1,  0,  //
                             0, 1,  -1, 0};
  return from_parts(re, im, 1);
}

ExactMatrix4 matrix_Q() {
  static const int re[16] = {-1, -1, -1, -1,  //
                             0,  0,  0,  0,   //
                             0,  0,  0,  0,   //
                             1,  1,  1,  1};
  static const int im[16] = {0,  0,  0,  0,  //
                             1,  1,  1,  1,  //
                             -1, -1, -1, -1, //
                             0,  0,  0,  0};
  return from_parts(re, im, 1);
}

ExactMatrix4 matrix_Q_hollow() {
  static const int re[16] = {-1, -1, -1, 0,  //
                             0,  0,  0,  0,  //
                             0,  0,  0,  0,  //
                             0,  1,  1,  1};
  static const int im[16] = {0,  0, 0,  0,   //
                             1,  1, 0,  1,   //
                             -1, 0, -1, -1,  //
                             0,  0, 0,  0};
  return from_parts(re, im, 1);
}

ExactMatrix4 matrix_W1() {
  static const int re[16] = {0,  1,  1, 1,   //
                             -1, 0,  -1, -1, //
                             -1, -1, 0,  -1, //
                             1,  1,  1,  0};
  static const int im[16] = {0, 1,  -1, 0,  //
                             1, 0,  0,  -1, //
                             -1, 0, 0,  1,  //
                             0, -1, 1,  0};
  return from_parts(re, im, 8);
}

ExactMatrix4 matrix_W2() {
  static const int re[16] = {0, -2, -2, -1,  //
                             0, 0,  0,  0,   //
                             0, 0,  0,  0,   //
                             1, 2,  2,  0};
  static const int im[16] = {0,  0,  0, 0,   //
                             2,  0,  1, 2,   //
                             -2, -1, 0, -2,  //
                             0,  0,  0, 0};
  return from_parts(re, im, 16);
}

ExactMatrix4 matrix_Q1() {
  static const int re[16] = {0, 2, 2, 1,  //
                             2, 0, 1, 2,  //
                             2, 1, 0, 2,  //
                             1, 2, 2, 0};
  static const int im[16] = {0,  -2, 2,  0,  //
                             2,  0,  0,  -2, //
                             -2, 0,  0,  2,  //
                             0,  2,  -2, 0};
  return from_parts(re, im, 1);
}

ExactMatrix4 matrix_Q2() {
  static const int re[16] = {2,  -1, -1, -1,  //
                             -1, 0,  -1, -1,  //
                             -1, -1, 0,  -1,  //
                             -1, -1, -1, -2};
  static const int im[16] = {0,  1,  -1, 0,   //
                             -1, -2, 0,  1,   //
                             1,  0,  2,  -1,  //
                             0,  -1, 1,  0};
  return from_parts(re, im, 1);
}

ExactMatrix4 matrix_Q3() {
  static const int re[16] = {-2, 1, 1, 0,  //
                             1,  0, 0, 1,  //
                             1,  0, 0, 1,  //
                             0,  1, 1, 2};
  static const int im[16] = {0,  -1, 1,  0,  //
                             1,  2,  0,  -1, //
                             -1, 0,  -2, 1,  //
                             0,  1,  -1, 0};
  return from_parts(re, im, 1);
}

ExactMatrix4 matrix_Q4() {
  static const int re[16] = {-7, 5,  5,  -2,  //
                             5,  -3, -2, 5,   //
                             5,  -2, -3, 5,   //
                             -2, 5,  5,  1};
  static const int im[16] = {0, -4, 4,  0,   //
                             4, 4,  0,  -4,  //
                             -4, 0, -4, 4,   //
                             0, 4,  -4, 0};
  return from_parts(re, im, 1);
}

PolyMatrix4 matrix_omega() {
  using LP = LaurentPoly;
  const GaussianRational one(1), mone(-1);
  const GaussianRational i = GaussianRational::i();
  const GaussianRational mi = -i;
  PolyMatrix4 m;
  const GaussianRational row1[4] = {one, one, one, one};
  const GaussianRational row2[4] = {mone, i, mi, one};
  const GaussianRational row3[4] = {one, mone, mone, one};
  const GaussianRational row4[4] = {mone, mi, i, one};
  for (int c = 0; c < 4; ++c) {
    m.at(0, c) = LP::monomial(row1[c], 0, 0, 0);
    m.at(1, c) = LP::monomial(row2[c], 1, 0, 0);
    m.at(2, c) = LP::monomial(row3[c], 2, 0, 0);
    m.at(3, c) = LP::monomial(row4[c], 3, 0, 0);
  }
  return m;
}

PolyMatrix4 matrix_system() {
  using LP = LaurentPoly;
  PolyMatrix4 m;
  m.at(0, 1) = LP(GaussianRational(1));
  m.at(1, 2) = LP(GaussianRational(1));
  m.at(2, 1) = -LP::p();
  m.at(2, 3) = LP(GaussianRational(1));
  m.at(3, 0) = LP::z(4) - LP::q();
  return m;
}

}  // namespace spectra4::birkhoff
