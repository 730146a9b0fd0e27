#include "spectra4/exact.hpp"

#include <sstream>

namespace spectra4 {

std::string GaussianRational::str() const {
  std::ostringstream os;
  if (im == 0) {
    os << re;
  } else if (re == 0) {
    os << im << "*i";
  } else {
    os << re << (im > 0 ? "+" : "") << im << "*i";
  }
  return os.str();
}

ExactMatrix4 ExactMatrix4::identity() {
  ExactMatrix4 m;
  for (int i = 0; i < 4; ++i) m.at(i, i) = GaussianRational(1);
  return m;
}

ExactMatrix4 ExactMatrix4::diagonal(const std::array<GaussianRational, 4>& d) {
  ExactMatrix4 m;
  for (int i = 0; i < 4; ++i) m.at(i, i) = d[i];
  return m;
}

ExactMatrix4 ExactMatrix4::operator+(const ExactMatrix4& o) const {
  ExactMatrix4 r;
  for (int i = 0; i < 16; ++i) r.e[i] = e[i] + o.e[i];
  return r;
}

ExactMatrix4 ExactMatrix4::operator-(const ExactMatrix4& o) const {
  ExactMatrix4 r;
  for (int i = 0; i < 16; ++i) r.e[i] = e[i] - o.e[i];
  return r;
}

ExactMatrix4 ExactMatrix4::operator*(const ExactMatrix4& o) const {
  ExactMatrix4 r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      GaussianRational s;
      for (int k = 0; k < 4; ++k) s = s + at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  }
  return r;
}

ExactMatrix4 ExactMatrix4::operator*(const GaussianRational& s) const {
  ExactMatrix4 r;
  for (int i = 0; i < 16; ++i) r.e[i] = e[i] * s;
  return r;
}

ExactMatrix4 ExactMatrix4::commutator(const ExactMatrix4& o) const {
  return (*this) * o - o * (*this);
}

GaussianRational ExactMatrix4::trace() const {
  return at(0, 0) + at(1, 1) + at(2, 2) + at(3, 3);
}

GaussianRational ExactMatrix4::det() const {
  auto m3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
    return at(r0, c0) * (at(r1, c1) * at(r2, c2) - at(r1, c2) * at(r2, c1)) -
           at(r0, c1) * (at(r1, c0) * at(r2, c2) - at(r1, c2) * at(r2, c0)) +
           at(r0, c2) * (at(r1, c0) * at(r2, c1) - at(r1, c1) * at(r2, c0));
  };
  return at(0, 0) * m3(1, 2, 3, 1, 2, 3) - at(0, 1) * m3(1, 2, 3, 0, 2, 3) +
         at(0, 2) * m3(1, 2, 3, 0, 1, 3) - at(0, 3) * m3(1, 2, 3, 0, 1, 2);
}

bool ExactMatrix4::is_zero() const {
  for (const auto& v : e) {
    if (!v.is_zero()) return false;
  }
  return true;
}

bool ExactMatrix4::is_diagonal() const {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j && !at(i, j).is_zero()) return false;
    }
  }
  return true;
}

LaurentPoly::LaurentPoly(GaussianRational c) {
  if (!c.is_zero()) terms_[Monomial{}] = std::move(c);
}

LaurentPoly LaurentPoly::monomial(GaussianRational c, int ez, int ep, int eq) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_[Monomial{ez, ep, eq}] = std::move(c);
  return p;
}

void LaurentPoly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero()) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = r.terms_.try_emplace(m, c);
    if (!inserted) it->second = it->second + c;
  }
  r.prune();
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      const Monomial m{m1.ez + m2.ez, m1.ep + m2.ep, m1.eq + m2.eq};
      auto [it, inserted] = r.terms_.try_emplace(m, c1 * c2);
      if (!inserted) it->second = it->second + c1 * c2;
    }
  }
  r.prune();
  return r;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (m.ez != 0) os << "*z^" << m.ez;
    if (m.ep != 0) os << "*p^" << m.ep;
    if (m.eq != 0) os << "*q^" << m.eq;
  }
  return os.str();
}

PolyMatrix4 PolyMatrix4::from_exact(const ExactMatrix4& m) {
  PolyMatrix4 r;
  for (int i = 0; i < 16; ++i) r.e[i] = LaurentPoly(m.e[i]);
  return r;
}

PolyMatrix4 PolyMatrix4::identity() {
  PolyMatrix4 r;
  for (int i = 0; i < 4; ++i) r.at(i, i) = LaurentPoly(GaussianRational(1));
  return r;
}

PolyMatrix4 PolyMatrix4::operator+(const PolyMatrix4& o) const {
  PolyMatrix4 r;
  for (int i = 0; i < 16; ++i) r.e[i] = e[i] + o.e[i];
  return r;
}

PolyMatrix4 PolyMatrix4::operator-(const PolyMatrix4& o) const {
  PolyMatrix4 r;
  for (int i = 0; i < 16; ++i) r.e[i] = e[i] - o.e[i];
  return r;
}

PolyMatrix4 PolyMatrix4::operator*(const PolyMatrix4& o) const {
  PolyMatrix4 r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      LaurentPoly s;
      for (int k = 0; k < 4; ++k) s = s + at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  }
  return r;
}

PolyMatrix4 PolyMatrix4::scale(const LaurentPoly& s) const {
  PolyMatrix4 r;
  for (int i = 0; i < 16; ++i) r.e[i] = e[i] * s;
  return r;
}

bool PolyMatrix4::is_zero() const {
  for (const auto& v : e) {
    if (!v.is_zero()) return false;
  }
  return true;
}

}  // namespace spectra4
