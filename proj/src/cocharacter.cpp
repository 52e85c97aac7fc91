#include "hesspave/cocharacter.hpp"

#include <algorithm>

namespace hesspave {

namespace {

// Gaussian elimination over exact rationals; m is square and invertible.
std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> m,
                                     std::vector<Rational> rhs) {
  const int n = static_cast<int>(m.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != Rational(0)) { piv = r; break; }
    if (piv < 0) throw std::logic_error("singular Cartan submatrix");
    std::swap(m[col], m[piv]);
    std::swap(rhs[col], rhs[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == Rational(0)) continue;
      Rational f = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

}  // namespace

Coweight levi_cocharacter(const RootSystem& rs,
                          const std::vector<int>& delta_M) {
  if (delta_M.empty())
    throw std::invalid_argument("levi_cocharacter requires a nonempty Delta_M");
  std::vector<int> dm = delta_M;
  std::sort(dm.begin(), dm.end());
  const int m = static_cast<int>(dm.size());
  // <alpha_j, lambda_tilde> = sum_i c_i A(i, j) = 2 for j in Delta_M.
  std::vector<std::vector<Rational>> sys(m, std::vector<Rational>(m));
  std::vector<Rational> rhs(m, Rational(2));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      sys[a][b] = Rational(rs.cartan()(dm[b], dm[a]));
  std::vector<Rational> c = solve_rational(std::move(sys), std::move(rhs));
  Coweight lam(rs.rank(), Rational(0));
  for (int a = 0; a < m; ++a) lam[dm[a]] = c[a];
  return lam;
}

CocharacterData normalize(const RootSystem& rs, const std::vector<int>& delta_M,
                          TieBreak tie) {
  CocharacterData cd;
  cd.delta_M = delta_M;
  std::sort(cd.delta_M.begin(), cd.delta_M.end());
  cd.lambda_tilde = levi_cocharacter(rs, cd.delta_M);

  auto [w1, lam] = make_dominant(rs, cd.lambda_tilde, tie);
  cd.w1 = w1;
  cd.lambda = lam;

  // Integer weights per root; non-integrality falsifies the construction.
  cd.weights.resize(rs.size());
  cd.phi_L = rs.empty_set();
  for (int i = 0; i < rs.size(); ++i) {
    Rational p = coweight_pairing(rs, rs.root(i), lam);
    if (p.denominator() != 1)
      throw std::logic_error("non-integral cocharacter weight");
    cd.weights[i] = static_cast<int>(p.numerator());
    if (cd.weights[i] == 0) cd.phi_L.set(i);
  }

  // W_L is generated by the weight-0 simple roots (lambda is dominant).
  std::vector<int> delta_L;
  for (int i = 0; i < rs.rank(); ++i)
    if (cd.weights[rs.simple_index(i)] == 0) delta_L.push_back(i);
  auto [y1, v1] = parabolic_decompose(rs, w1, delta_L);
  cd.y1 = y1;
  cd.v1 = v1;
  if (act_coweight(rs, v1, cd.lambda_tilde) != lam)
    throw std::logic_error("v1 . lambda_tilde is not the dominant coweight");

  cd.phi_N = rs.empty_set();
  for (int i : cd.delta_M) cd.phi_N.set(act(rs, v1, rs.simple_index(i)));
  for (int i : cd.phi_N.indices()) {
    if (!rs.is_positive(i) || cd.weights[i] != 2)
      throw std::logic_error("Phi_N root without weight 2");
  }

  // Phi_L must avoid v1(Phi_M).
  RootSubsystem sub(rs, cd.delta_M);
  if (cd.phi_L.intersects(act(rs, v1, sub.phi_M())))
    throw std::logic_error("Phi_L meets v1(Phi_M)");

  // Phi^{+-}(V): positive roots gamma = alpha + beta with alpha in Phi_N
  // and beta in Phi_L^{+-}.
  cd.phi_V_plus = rs.empty_set();
  cd.phi_V_minus = rs.empty_set();
  for (int a : cd.phi_N.indices()) {
    for (int b : cd.phi_L.indices()) {
      int s = rs.index_of(rs.root(a) + rs.root(b));
      if (s < 0 || !rs.is_positive(s)) continue;
      if (rs.is_positive(b))
        cd.phi_V_plus.set(s);
      else
        cd.phi_V_minus.set(s);
    }
  }

  // Weight-2 positives split as Phi^-(V) | Phi_N | Phi^+(V), disjoint.
  RootSet weight2 = rs.empty_set();
  for (int i = 0; i < rs.size(); ++i)
    if (rs.is_positive(i) && cd.weights[i] == 2) weight2.set(i);
  if (cd.phi_V_minus.intersects(cd.phi_N) || cd.phi_V_plus.intersects(cd.phi_N) ||
      cd.phi_V_plus.intersects(cd.phi_V_minus))
    throw std::logic_error("weight-2 partition is not disjoint");
  if ((cd.phi_V_minus | cd.phi_N | cd.phi_V_plus) != weight2)
    throw std::logic_error("weight-2 partition does not cover g_2");

  cd.phi_script_V = orbit_roots(rs, cd);
  return cd;
}

RootSet orbit_roots(const RootSystem& rs, const CocharacterData& cd) {
  RootSet out = cd.phi_V_plus;
  for (int i = 0; i < rs.size(); ++i)
    if (cd.weights[i] >= 3) out.set(i);
  if (out.intersects(cd.phi_N))
    throw std::logic_error("Phi(script V) meets Phi_N");
  if (!rs.positive_set().contains(out))
    throw std::logic_error("Phi(script V) contains a negative root");
  return out;
}

}  // namespace hesspave
