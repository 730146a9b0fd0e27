#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

namespace spectra4 {

using Rational = boost::multiprecision::cpp_rational;

/// Exact element of Q(i): re + i*im with rational parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(long r) : re(r) {}
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }

  GaussianRational operator+(const GaussianRational& o) const {
    return {re + o.re, im + o.im};
  }
  GaussianRational operator-(const GaussianRational& o) const {
    return {re - o.re, im - o.im};
  }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational operator*(const GaussianRational& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussianRational operator/(const GaussianRational& o) const {
    Rational d = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / d, (im * o.re - re * o.im) / d};
  }
  bool operator==(const GaussianRational& o) const = default;

  std::string str() const;
};

/// 4x4 matrix over Q(i), enough linear algebra for the identity checks.
struct ExactMatrix4 {
  std::array<GaussianRational, 16> e{};

  GaussianRational& at(int r, int c) { return e[4 * r + c]; }
  const GaussianRational& at(int r, int c) const { return e[4 * r + c]; }

  static ExactMatrix4 zero() { return {}; }
  static ExactMatrix4 identity();
  static ExactMatrix4 diagonal(const std::array<GaussianRational, 4>& d);

  ExactMatrix4 operator+(const ExactMatrix4& o) const;
  ExactMatrix4 operator-(const ExactMatrix4& o) const;
  ExactMatrix4 operator*(const ExactMatrix4& o) const;
  ExactMatrix4 operator*(const GaussianRational& s) const;
  bool operator==(const ExactMatrix4& o) const = default;

  ExactMatrix4 commutator(const ExactMatrix4& o) const;  // [this, o]
  GaussianRational trace() const;
  GaussianRational det() const;
  bool is_zero() const;
  bool is_diagonal() const;
};

/// Monomial exponents z^ez * p^ep * q^eq; ez may be negative (Laurent).
struct Monomial {
  int ez = 0;
  int ep = 0;
  int eq = 0;
  auto operator<=>(const Monomial&) const = default;
};

/// Sparse Laurent polynomial in z (invertible) and p, q over Q(i).
/// Commutative model: p, q stand for scalar coefficient values, which is
/// exactly the setting of the conjugation identity.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(GaussianRational c);
  static LaurentPoly monomial(GaussianRational c, int ez, int ep, int eq);
  static LaurentPoly z(int power = 1) { return monomial(1, power, 0, 0); }
  static LaurentPoly p() { return monomial(1, 0, 1, 0); }
  static LaurentPoly q() { return monomial(1, 0, 0, 1); }

  bool is_zero() const { return terms_.empty(); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  const std::map<Monomial, GaussianRational>& terms() const { return terms_; }
  std::string str() const;

 private:
  void prune();
  std::map<Monomial, GaussianRational> terms_;
};

/// 4x4 matrix with LaurentPoly entries; used to verify the conjugated
/// first-order system symbolically.
struct PolyMatrix4 {
  std::array<LaurentPoly, 16> e{};

  LaurentPoly& at(int r, int c) { return e[4 * r + c]; }
  const LaurentPoly& at(int r, int c) const { return e[4 * r + c]; }

  static PolyMatrix4 from_exact(const ExactMatrix4& m);
  static PolyMatrix4 identity();

  PolyMatrix4 operator+(const PolyMatrix4& o) const;
  PolyMatrix4 operator-(const PolyMatrix4& o) const;
  PolyMatrix4 operator*(const PolyMatrix4& o) const;
  PolyMatrix4 scale(const LaurentPoly& s) const;
  bool is_zero() const;
};

}  // namespace spectra4
