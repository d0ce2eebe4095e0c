#include "heckelab/poly.hpp"

#include <algorithm>

namespace heckelab {

Poly Poly::constant(int nvars, const Scalar& c) {
  Poly p(nvars);
  if (!c.is_zero()) p.terms.emplace(Mono(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  Poly p(nvars);
  Mono m(nvars, 0);
  m[i] = 1;
  p.terms.emplace(m, Scalar(1));
  return p;
}

Poly Poly::linear(const SVec& coeffs) {
  Poly p((int)coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    Mono m(coeffs.size(), 0);
    m[i] = 1;
    p.terms.emplace(m, coeffs[i]);
  }
  return p;
}

Poly Poly::linear(const QVec& coeffs) {
  SVec s(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) s[i] = Scalar(coeffs[i]);
  return linear(s);
}

bool Poly::is_constant() const {
  if (terms.empty()) return true;
  return terms.size() == 1 && terms.begin()->first == Mono(nvars, 0);
}

Scalar Poly::constant_term() const {
  auto it = terms.find(Mono(nvars, 0));
  return it == terms.end() ? Scalar(0) : it->second;
}

int Poly::total_degree() const {
  int d = 0;
  for (auto& [m, c] : terms) {
    int s = 0;
    for (unsigned e : m) s += (int)e;
    d = std::max(d, s);
  }
  return d;
}

void Poly::add_term(const Mono& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (auto& [m, c] : o.terms) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (auto& [m, c] : o.terms) r.add_term(m, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(nvars);
  for (auto& [m, c] : terms) r.terms.emplace(m, -c);
  return r;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly r(nvars);
  if (c.is_zero()) return r;
  for (auto& [m, x] : terms) r.terms.emplace(m, x * c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(nvars);
  for (auto& [m1, c1] : terms)
    for (auto& [m2, c2] : o.terms) {
      Mono m(nvars);
      for (int i = 0; i < nvars; ++i) m[i] = m1[i] + m2[i];
      r.add_term(m, c1 * c2);
    }
  return r;
}

Scalar Poly::eval(const SVec& point) const {
  Scalar acc(0);
  for (auto& [m, c] : terms) {
    Scalar t = c;
    for (int i = 0; i < nvars; ++i)
      for (unsigned e = 0; e < m[i]; ++e) t *= point[i];
    acc += t;
  }
  return acc;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  Poly r(nvars);
  for (auto& [m, c] : terms) {
    Poly t = Poly::constant(nvars, c);
    for (int i = 0; i < nvars; ++i)
      for (unsigned e = 0; e < m[i]; ++e) t = t * images[i];
    r = r + t;
  }
  return r;
}

Poly Poly::substitute_linear(const std::vector<QVec>& mat_cols) const {
  std::vector<Poly> images;
  images.reserve(nvars);
  for (int i = 0; i < nvars; ++i) images.push_back(Poly::linear(mat_cols[i]));
  return substitute(images);
}

std::string Poly::str() const {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [m, c] : terms) {
    if (!first) out += " + ";
    first = false;
    std::string mono;
    for (int i = 0; i < nvars; ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += to_string(c);
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += "(" + to_string(c) + ")*" + mono;
    }
  }
  return out;
}

std::optional<Poly> divide_by_linear(const Poly& f, const Poly& L) {
  int nv = f.nvars;
  // pivot variable: first coordinate appearing in L
  int piv = -1;
  Scalar lead;
  for (auto& [m, c] : L.terms) {
    for (int i = 0; i < nv; ++i)
      if (m[i] == 1 && (piv == -1 || i < piv)) {
        piv = i;
        lead = c;
      }
  }
  if (piv == -1) {
    // constant divisor
    Scalar c = L.constant_term();
    if (c.is_zero()) return std::nullopt;
    return f.scaled(c.inv());
  }

  Poly rem = f, quot(nv);
  Scalar lead_inv = lead.inv();
  while (true) {
    // monomial of maximal pivot-degree, ties broken by map order
    int dmax = 0;
    for (auto& [m, c] : rem.terms) dmax = std::max(dmax, (int)m[piv]);
    if (dmax == 0) break;
    Poly chunk(nv);
    for (auto& [m, c] : rem.terms)
      if ((int)m[piv] == dmax) {
        Mono m2 = m;
        m2[piv] -= 1;
        chunk.add_term(m2, c * lead_inv);
      }
    quot = quot + chunk;
    rem = rem - chunk * L;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

}  // namespace heckelab
