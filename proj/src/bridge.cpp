#include "heckelab/bridge.hpp"

#include <algorithm>
#include <stdexcept>

namespace heckelab {

void AdditiveParameter::validate() const {
  if (y.n != sigma.n) throw std::invalid_argument("parameter: size mismatch");
  y.validate();
  if (!commutation_holds(y, sigma, r))
    throw std::invalid_argument("parameter: [sigma,y] = 2ry fails");
}

ExactMatrix AdditiveParameter::sigma0() const {
  if (y.mat.is_zero()) return sigma.as_matrix();
  if (r.is_zero()) return sigma.as_matrix();
  return sl2_adapted(y, sigma, r).sigma0;
}

void MultiplicativeParameter::validate() const {
  if ((int)s_exp.size() != n || nil.rows != n || nil.cols != n)
    throw std::invalid_argument("multiplicative parameter: size mismatch");
  if (!nil.pow(n).is_zero())
    throw std::invalid_argument("multiplicative parameter: N not nilpotent");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (nil.at(i, j).is_zero()) continue;
      if (s_exp[i] - s_exp[j] != q_exp)
        throw std::invalid_argument("multiplicative parameter: Ad(s) N = q N fails");
    }
}

MultiplicativeParameter to_multiplicative(const AdditiveParameter& p) {
  p.validate();
  MultiplicativeParameter m;
  m.n = p.sigma.n;
  m.s_exp = p.sigma.eigen;
  m.q_exp = Scalar(2) * p.r;
  m.nil = p.y.mat;
  m.validate();
  return m;
}

bool mult_is_open(const MultiplicativeParameter& m) {
  m.validate();
  if (m.q_exp.is_zero())
    throw std::invalid_argument("mult_is_open: q must not be 1 (r = 0 is out of range)");
  int n = m.n;
  // V_q(s): matrix units with exponent gap q_exp
  int space_dim = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.s_exp[i] - m.s_exp[j] == m.q_exp) ++space_dim;

  // dim Z(s): pairs with equal exponents
  int zs_dim = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.s_exp[i] == m.s_exp[j]) ++zs_dim;

  // dim of the stabilizer of N inside Z(s): solve [X, N] = 0 over the
  // equal-exponent support
  std::vector<std::pair<int, int>> unknowns;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.s_exp[i] == m.s_exp[j]) unknowns.emplace_back(i, j);
  ExactMatrix sys(n * n, (int)unknowns.size());
  for (size_t u = 0; u < unknowns.size(); ++u) {
    auto [i, j] = unknowns[u];
    for (int b = 0; b < n; ++b)
      if (!m.nil.at(j, b).is_zero()) sys.at(i * n + b, (int)u) += m.nil.at(j, b);
    for (int a = 0; a < n; ++a)
      if (!m.nil.at(a, i).is_zero()) sys.at(a * n + j, (int)u) -= m.nil.at(a, i);
  }
  int stab = (int)unknowns.size() - sys.rank();
  return zs_dim - stab == space_dim;
}

Scalar AffineReductionInput::root_value(int root_idx) const {
  const QVec& alpha = datum.roots[root_idx];
  Scalar v(1);
  for (int i = 0; i < datum.rank; ++i) {
    Rat c = alpha[i];
    if (c == 0) continue;
    if (c.get_den() != 1) throw std::invalid_argument("root with non-integer coordinates");
    long e = (long)c.get_num().get_si();
    Scalar base = u_basis_values[i];
    if (e < 0) {
      base = base.inv();
      e = -e;
    }
    for (long k = 0; k < e; ++k) v *= base;
  }
  return v;
}

void AffineReductionInput::validate() const {
  if ((int)u_basis_values.size() != datum.rank)
    throw std::invalid_argument("reduce_affine: u has wrong rank");
  for (auto& v : u_basis_values)
    if (v.norm() != 1) throw std::invalid_argument("reduce_affine: u is not unitary");
  // lambda* agrees with lambda off the alpha^vee in 2Y locus
  for (int r = 0; r < datum.num_roots(); ++r) {
    bool in_2y = true;
    for (auto& c : datum.coroots[r]) {
      Rat half = c / 2;
      if (half.get_den() != 1) in_2y = false;
    }
    if (!in_2y && lambda.values[r] != lambda_star.values[r])
      throw std::invalid_argument(
          "reduce_affine: lambda* must equal lambda when alpha^vee is not in 2Y");
  }
}

AffineReductionOutput reduce_affine(const AffineReductionInput& input) {
  input.validate();
  const auto& d = input.datum;
  AffineReductionOutput out;

  // s_alpha(u) = u iff u(alpha)^c = 1, c generating <X, alpha^vee>
  for (int r = 0; r < d.num_roots(); ++r) {
    mpz_class c(0);
    for (int i = 0; i < d.rank; ++i) {
      Rat v = d.coroots[r][i];
      if (v.get_den() != 1) throw std::invalid_argument("non-integral coroot");
      c = gcd(c, v.get_num());
    }
    Scalar val = input.root_value(r);
    Scalar pw(1);
    for (mpz_class k = 0; k < abs(c); ++k) pw *= val;
    if (pw.is_one()) out.r_u.push_back(r);
  }

  // positives among R_u (positive = nonnegative on the base), then the
  // indecomposable ones form Delta_u
  auto is_positive = [&](int r) {
    // expand in the simple basis and read the sign
    ExactMatrix smat(d.num_simples(), d.rank);
    for (int k = 0; k < d.num_simples(); ++k)
      for (int j = 0; j < d.rank; ++j) smat.at(k, j) = Scalar(d.simple_root(k)[j]);
    ExactMatrix b(d.rank, 1);
    for (int j = 0; j < d.rank; ++j) b.at(j, 0) = Scalar(d.roots[r][j]);
    auto sol = solve(smat.transpose(), b);
    if (!sol) throw std::logic_error("root outside simple span");
    for (int k = 0; k < d.num_simples(); ++k)
      if (sol->at(k, 0).re < 0) return false;
    return true;
  };
  std::vector<int> positives;
  for (int r : out.r_u)
    if (is_positive(r)) positives.push_back(r);
  for (int r : positives) {
    bool decomposable = false;
    for (int a : positives)
      for (int b : positives) {
        if (a == r || b == r) continue;
        QVec sum = d.roots[a];
        for (int i = 0; i < d.rank; ++i) sum[i] += d.roots[b][i];
        if (sum == d.roots[r]) decomposable = true;
      }
    if (!decomposable) out.delta_u.push_back(r);
  }

  // Gamma_u: elements fixing u and stabilizing Delta_u
  const auto& G = *input.group;
  for (int e = 0; e < G.size(); ++e) {
    bool fixes_u = true;
    for (int i = 0; i < d.rank && fixes_u; ++i) {
      // (e u)(x_i) = u(e^{-1} x_i)
      QVec ei(d.rank, Rat(0));
      ei[i] = 1;
      QVec img = mat_apply(G.x_action[G.invs[e]], ei);
      Scalar v(1);
      for (int j = 0; j < d.rank; ++j) {
        if (img[j] == 0) continue;
        if (img[j].get_den() != 1)
          throw std::invalid_argument("reduce_affine: non-integral group action on X");
        long ex = (long)img[j].get_num().get_si();
        Scalar base = input.u_basis_values[j];
        if (ex < 0) {
          base = base.inv();
          ex = -ex;
        }
        for (long k = 0; k < ex; ++k) v *= base;
      }
      if (v != input.u_basis_values[i]) fixes_u = false;
    }
    if (!fixes_u) continue;
    bool stab = true;
    for (int r : out.delta_u) {
      QVec img = G.apply_to_x(e, d.roots[r]);
      bool found = false;
      for (int s : out.delta_u)
        if (img == d.roots[s]) found = true;
      if (!found) stab = false;
    }
    if (stab) out.gamma_u.push_back(e);
  }

  // k_{u,alpha} = (lambda(alpha) + alpha(u) lambda*(alpha)) / 2
  for (int r : out.r_u) {
    Scalar au = input.root_value(r);
    if (!au.is_real() || (au.re != 1 && au.re != -1))
      throw std::invalid_argument("reduce_affine: alpha(u) must be +-1 on R_u");
    Rat k = (input.lambda.values[r] + au.re * input.lambda_star.values[r]) / 2;
    out.k_u.emplace_back(r, k);
  }
  return out;
}

ExpuWeight expu_transfer(const SVec& sigma, const Scalar& r, const SVec& u_basis_values) {
  return ExpuWeight{u_basis_values, sigma, r};
}

SVec expu_log(const ExpuWeight& w) { return w.sigma_exp; }

SteinbergCharacter steinberg_char(const ExtendedWeylGroup& group, const ParameterFunction& lambda,
                                  const Scalar& q_exponent) {
  (void)q_exponent;
  SteinbergCharacter out;
  for (int e = 0; e < group.size(); ++e) out.values.push_back(group.det_char[e]);
  // (T_s + 1)(T_s - q^{2 lambda}) on the character: T_s acts by -1, so the
  // first factor vanishes identically, whatever q^{2 lambda} is
  out.quadratic_relation_ok = true;
  for (int s = 0; s < group.datum.num_simples(); ++s) {
    int se = group.simple_reflection(s);
    if (out.values[se] != -1) out.quadratic_relation_ok = false;
    (void)lambda;
  }
  return out;
}

}  // namespace heckelab
