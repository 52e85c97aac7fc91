#include "hesspave/weyl.hpp"

#include <algorithm>
#include <map>

namespace hesspave {

namespace {

std::vector<int> mat_key(const Eigen::MatrixXi& m) {
  return std::vector<int>(m.data(), m.data() + m.size());
}

}  // namespace

Eigen::MatrixXi reflection_matrix(const RootSystem& rs, int i) {
  const int n = rs.rank();
  Eigen::MatrixXi s = Eigen::MatrixXi::Identity(n, n);
  s.row(i) -= rs.cartan().row(i);
  return s;
}

WeylElement identity_element(const RootSystem& rs) {
  return WeylElement{Eigen::MatrixXi::Identity(rs.rank(), rs.rank()), {}, 0};
}

std::vector<int> reduced_word(const RootSystem& rs, const Eigen::MatrixXi& mat) {
  // Greedy descent: if v(alpha_i) < 0 then l(v s_i) = l(v) - 1.
  std::vector<int> rev;
  Eigen::MatrixXi v = mat;
  const int n = rs.rank();
  for (;;) {
    int i = -1;
    for (int j = 0; j < n; ++j) {
      if (v.col(j).sum() < 0) { i = j; break; }
    }
    if (i < 0) break;
    rev.push_back(i);
    v = v * reflection_matrix(rs, i);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

WeylElement element_from_word(const RootSystem& rs, const std::vector<int>& word) {
  Eigen::MatrixXi m = Eigen::MatrixXi::Identity(rs.rank(), rs.rank());
  for (int i : word) {
    if (i < 0 || i >= rs.rank())
      throw std::invalid_argument("simple index out of range in word");
    m = m * reflection_matrix(rs, i);
  }
  std::vector<int> w = reduced_word(rs, m);
  return WeylElement{std::move(m), w, static_cast<int>(w.size())};
}

int act(const RootSystem& rs, const WeylElement& w, int root_index) {
  int idx = rs.index_of(w.mat * rs.root(root_index));
  if (idx < 0) throw std::logic_error("Weyl action left the root system");
  return idx;
}

Root act(const RootSystem&, const WeylElement& w, const Root& gamma) {
  return w.mat * gamma;
}

RootSet act(const RootSystem& rs, const WeylElement& w, const RootSet& s) {
  RootSet out(rs.size());
  for (int i : s.indices()) out.set(act(rs, w, i));
  return out;
}

RootSet inversion_set(const RootSystem& rs, const WeylElement& w) {
  RootSet out(rs.size());
  for (int i = 0; i < rs.size(); ++i) {
    if (rs.is_positive(i)) continue;
    int img = act(rs, w, i);
    if (rs.is_positive(img)) out.set(img);
  }
  return out;
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> rev(w.word.rbegin(), w.word.rend());
  return element_from_word(rs, rev);
}

WeylElement compose(const RootSystem& rs, const WeylElement& a,
                    const WeylElement& b) {
  Eigen::MatrixXi m = a.mat * b.mat;
  std::vector<int> word = reduced_word(rs, m);
  return WeylElement{std::move(m), word, static_cast<int>(word.size())};
}

std::vector<WeylElement> enumerate(const RootSystem& rs, long long max_order) {
  if (!rs.type_label().empty()) {
    long long order = weyl_order(rs.type_label()[0], rs.rank());
    if (order > max_order)
      throw guard_error("Weyl group order " + std::to_string(order) +
                        " exceeds the enumeration guard " +
                        std::to_string(max_order));
  }
  std::vector<WeylElement> out;
  std::map<std::vector<int>, int> seen;
  out.push_back(identity_element(rs));
  seen[mat_key(out[0].mat)] = 0;
  for (std::size_t head = 0; head < out.size(); ++head) {
    // Copy: out may reallocate while we extend it.
    WeylElement w = out[head];
    for (int i = 0; i < rs.rank(); ++i) {
      Eigen::MatrixXi m = w.mat * reflection_matrix(rs, i);
      auto key = mat_key(m);
      if (seen.count(key)) continue;
      if (static_cast<long long>(out.size()) >= max_order)
        throw guard_error("Weyl enumeration exceeds the guard " +
                          std::to_string(max_order));
      std::vector<int> word = w.word;
      word.push_back(i);
      seen[key] = static_cast<int>(out.size());
      out.push_back(WeylElement{std::move(m), std::move(word), w.length + 1});
    }
  }
  return out;
}

std::pair<WeylElement, WeylElement> parabolic_decompose(
    const RootSystem& rs, const WeylElement& w,
    const std::vector<int>& delta_M) {
  std::vector<int> dm = delta_M;
  std::sort(dm.begin(), dm.end());
  std::vector<int> y_word;
  Eigen::MatrixXi v = w.mat;
  // Track v^{-1} exactly: v <- s_i v means vinv <- vinv s_i.
  Eigen::MatrixXi vinv = Eigen::MatrixXi::Identity(rs.rank(), rs.rank());
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
    vinv = vinv * reflection_matrix(rs, *it);
  for (;;) {
    // Lowest alpha_i in Delta_M with v^{-1}(alpha_i) negative.
    int found = -1;
    for (int i : dm) {
      if (vinv.col(i).sum() < 0) { found = i; break; }
    }
    if (found < 0) break;
    y_word.push_back(found);
    Eigen::MatrixXi s = reflection_matrix(rs, found);
    v = s * v;
    vinv = vinv * s;
  }
  std::vector<int> v_word = reduced_word(rs, v);
  WeylElement ve{std::move(v), v_word, static_cast<int>(v_word.size())};
  WeylElement ye = element_from_word(rs, y_word);
  return {ye, ve};
}

std::vector<WeylElement> minimal_reps(const RootSystem& rs,
                                      const std::vector<int>& delta_M,
                                      long long max_order) {
  RootSubsystem sub(rs, delta_M);
  std::vector<WeylElement> out;
  for (const auto& w : enumerate(rs, max_order)) {
    if (!inversion_set(rs, w).intersects(sub.phi_M()))
      out.push_back(w);
  }
  return out;
}

Rational coweight_pairing(const RootSystem& rs, const Root& gamma,
                          const Coweight& lambda) {
  Rational r(0);
  for (int j = 0; j < rs.rank(); ++j)
    r += lambda[j] * pairing(rs, gamma, j);
  return r;
}

Coweight reflect_coweight(const RootSystem& rs, const Coweight& lambda, int i) {
  // s_i(alpha_j^vee) = alpha_j^vee - A(j,i) alpha_i^vee, so only the i-th
  // coefficient moves: c_i -> c_i - <alpha_i, lambda>.
  Coweight out = lambda;
  Rational p(0);
  for (int j = 0; j < rs.rank(); ++j)
    p += lambda[j] * rs.cartan()(j, i);
  out[i] -= p;
  return out;
}

Coweight act_coweight(const RootSystem& rs, const WeylElement& w,
                      const Coweight& lambda) {
  Coweight out = lambda;
  // w = s_{j1} ... s_{jm}: apply the rightmost reflection first.
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
    out = reflect_coweight(rs, out, *it);
  return out;
}

std::pair<WeylElement, Coweight> make_dominant(const RootSystem& rs,
                                               const Coweight& input,
                                               TieBreak tie) {
  Coweight lam = input;
  std::vector<int> w1_rev;
  for (;;) {
    int found = -1;
    for (int k = 0; k < rs.rank(); ++k) {
      int i = (tie == TieBreak::kLowestIndex) ? k : rs.rank() - 1 - k;
      Root alpha = Root::Zero(rs.rank());
      alpha(i) = 1;
      if (coweight_pairing(rs, alpha, lam) < Rational(0)) { found = i; break; }
    }
    if (found < 0) break;
    lam = reflect_coweight(rs, lam, found);
    w1_rev.push_back(found);
  }
  // lambda = s_{ik} ... s_{i1} . input, so w1 reads the picks in reverse.
  std::vector<int> w1_word(w1_rev.rbegin(), w1_rev.rend());
  return {element_from_word(rs, w1_word), lam};
}

}  // namespace hesspave
