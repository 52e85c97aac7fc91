#include "hesspave/root_system.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hesspave {

namespace {

std::vector<int> to_key(const Root& r) {
  return std::vector<int>(r.data(), r.data() + r.size());
}

void validate_cartan(const Eigen::MatrixXi& a) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n) throw std::invalid_argument("Cartan matrix must be square");
  for (int i = 0; i < n; ++i) {
    if (a(i, i) != 2) throw std::invalid_argument("Cartan diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a(i, j) > 0) throw std::invalid_argument("Cartan off-diagonal must be <= 0");
      if ((a(i, j) == 0) != (a(j, i) == 0))
        throw std::invalid_argument("Cartan zero pattern must be symmetric");
    }
  }
}

bool root_less(const Root& a, const Root& b) {
  int ha = a.sum(), hb = b.sum();
  if (ha != hb) return ha < hb;
  return std::lexicographical_compare(a.data(), a.data() + a.size(),
                                      b.data(), b.data() + b.size());
}

}  // namespace

RootSystem::RootSystem(Eigen::MatrixXi cartan, std::string type_label)
    : type_label_(std::move(type_label)),
      rank_(static_cast<int>(cartan.rows())),
      cartan_(std::move(cartan)) {
  validate_cartan(cartan_);

  // Reflection closure, breadth-first from the simple roots.
  std::set<std::vector<int>> seen;
  std::deque<Root> queue;
  for (int i = 0; i < rank_; ++i) {
    Root a = Root::Zero(rank_);
    a(i) = 1;
    seen.insert(to_key(a));
    queue.push_back(a);
  }
  while (!queue.empty()) {
    Root g = queue.front();
    queue.pop_front();
    roots_.push_back(g);
    for (int i = 0; i < rank_; ++i) {
      Root h = g;
      h(i) -= cartan_.row(i).dot(g);
      if (seen.insert(to_key(h)).second) queue.push_back(h);
    }
  }
  std::sort(roots_.begin(), roots_.end(), root_less);

  positive_ = RootSet(size());
  for (int i = 0; i < size(); ++i) {
    index_[to_key(roots_[i])] = i;
    if (roots_[i].sum() > 0) positive_.set(i);
  }
  // Phi = Phi^+ disjoint-union -Phi^+ is implied by closure under s_i and
  // the mixed-sign check below; assert the split exactly.
  if (positive_.count() * 2 != size())
    throw std::logic_error("root system is not split evenly by sign");

  simple_idx_.resize(rank_);
  for (int i = 0; i < rank_; ++i) {
    Root a = Root::Zero(rank_);
    a(i) = 1;
    simple_idx_[i] = index_.at(to_key(a));
  }
  neg_idx_.resize(size());
  for (int i = 0; i < size(); ++i) {
    Root m = -roots_[i];
    neg_idx_[i] = index_.at(to_key(m));
    bool nonneg = (roots_[i].array() >= 0).all();
    bool nonpos = (roots_[i].array() <= 0).all();
    if (!nonneg && !nonpos)
      throw std::logic_error("root with mixed-sign coefficients");
  }
}

int RootSystem::index_of(const Root& r) const {
  auto it = index_.find(to_key(r));
  return it == index_.end() ? -1 : it->second;
}

RootSet RootSystem::full_set() const {
  RootSet s(size());
  for (int i = 0; i < size(); ++i) s.set(i);
  return s;
}

RootSet RootSystem::negative_set() const {
  return difference(full_set(), positive_);
}

Eigen::MatrixXi cartan_matrix(char type_label, int rank) {
  auto bad = [&] {
    throw std::invalid_argument(std::string("invalid root system type (") +
                                type_label + ", " + std::to_string(rank) + ")");
  };
  Eigen::MatrixXi a;
  auto chain = [&](int n) {
    a = Eigen::MatrixXi::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      a(i, i) = 2;
      if (i + 1 < n) a(i, i + 1) = a(i + 1, i) = -1;
    }
  };
  switch (type_label) {
    case 'A':
      if (rank < 1) bad();
      chain(rank);
      break;
    case 'B':
      if (rank < 2) bad();
      chain(rank);
      a(rank - 1, rank - 2) = -2;  // <alpha_{n-1}, alpha_n^vee> = -2
      break;
    case 'C':
      if (rank < 2) bad();
      chain(rank);
      a(rank - 2, rank - 1) = -2;  // <alpha_n, alpha_{n-1}^vee> = -1 kept; long alpha_n
      break;
    case 'D':
      if (rank < 3) bad();
      chain(rank);
      a(rank - 1, rank - 2) = a(rank - 2, rank - 1) = 0;
      a(rank - 1, rank - 3) = a(rank - 3, rank - 1) = -1;
      break;
    case 'E': {
      if (rank < 6 || rank > 8) bad();
      // Bourbaki: node 2 hangs off node 4; nodes 1-3-4-5-...-n form a chain.
      a = Eigen::MatrixXi::Zero(rank, rank);
      for (int i = 0; i < rank; ++i) a(i, i) = 2;
      auto link = [&](int i, int j) { a(i - 1, j - 1) = a(j - 1, i - 1) = -1; };
      link(1, 3);
      link(2, 4);
      link(3, 4);
      for (int i = 4; i < rank; ++i) link(i, i + 1);
      break;
    }
    case 'F': {
      if (rank != 4) bad();
      chain(4);
      a(2, 1) = -2;  // <alpha_2, alpha_3^vee> = -2 (alpha_3, alpha_4 short)
      break;
    }
    case 'G': {
      if (rank != 2) bad();
      a = Eigen::MatrixXi::Zero(2, 2);
      a << 2, -3, -1, 2;  // alpha_1 short, alpha_2 long
      break;
    }
    default:
      bad();
  }
  return a;
}

RootSystem build_root_system(char type_label, int rank) {
  RootSystem rs(cartan_matrix(type_label, rank), std::string(1, type_label));
  if (rs.size() != classical_root_count(type_label, rank))
    throw std::logic_error("root count does not match the classical table");
  return rs;
}

int classical_root_count(char type_label, int rank) {
  switch (type_label) {
    case 'A': return rank * (rank + 1);
    case 'B':
    case 'C': return 2 * rank * rank;
    case 'D': return 2 * rank * (rank - 1);
    case 'G': return 12;
    case 'F': return 48;
    case 'E':
      if (rank == 6) return 72;
      if (rank == 7) return 126;
      return 240;
  }
  throw std::invalid_argument("unknown type label");
}

long long weyl_order(char type_label, int rank) {
  auto fact = [](int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (type_label) {
    case 'A': return fact(rank + 1);
    case 'B':
    case 'C': return (1LL << rank) * fact(rank);
    case 'D': return (1LL << (rank - 1)) * fact(rank);
    case 'G': return 12;
    case 'F': return 1152;
    case 'E':
      if (rank == 6) return 51840;
      if (rank == 7) return 2903040;
      return 696729600;
  }
  throw std::invalid_argument("unknown type label");
}

int pairing(const RootSystem& rs, const Root& gamma, int i) {
  return rs.cartan().row(i).dot(gamma);
}

Root reflect(const RootSystem& rs, const Root& gamma, int i) {
  Root r = gamma;
  r(i) -= pairing(rs, gamma, i);
  return r;
}

std::string root_name(const RootSystem& rs, int index) {
  std::string out;
  const Root& r = rs.root(index);
  for (int j = 0; j < rs.rank(); ++j) {
    if (r(j) == 0) continue;
    if (!out.empty() && r(j) > 0) out += "+";
    if (r(j) == -1)
      out += "-";
    else if (r(j) != 1)
      out += std::to_string(r(j));
    out += "a" + std::to_string(j + 1);
  }
  return out.empty() ? "0" : out;
}

RootSubsystem::RootSubsystem(const RootSystem& parent, std::vector<int> delta_M)
    : parent_(&parent), delta_M_(std::move(delta_M)) {
  std::sort(delta_M_.begin(), delta_M_.end());
  for (int i : delta_M_)
    if (i < 0 || i >= parent.rank())
      throw std::invalid_argument("simple index out of range");
  const int m = static_cast<int>(delta_M_.size());
  cartan_M_.resize(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      cartan_M_(a, b) = parent.cartan()(delta_M_[a], delta_M_[b]);
  sub_ = std::make_shared<const RootSystem>(cartan_M_);

  // Phi_M = roots supported on Delta_M; a supported root's restricted
  // coefficient vector is a root of the abstract subsystem.
  std::vector<bool> in_M(parent.rank(), false);
  for (int i : delta_M_) in_M[i] = true;
  phi_M_ = RootSet(parent.size());
  phi_M_plus_ = RootSet(parent.size());
  sub_to_amb_.resize(sub_->size());
  for (int i = 0; i < parent.size(); ++i) {
    const Root& r = parent.root(i);
    bool supported = true;
    for (int j = 0; j < parent.rank(); ++j)
      if (r(j) != 0 && !in_M[j]) { supported = false; break; }
    if (!supported) continue;
    phi_M_.set(i);
    if (parent.is_positive(i)) phi_M_plus_.set(i);
    Root sub_r(m);
    for (int a = 0; a < m; ++a) sub_r(a) = r(delta_M_[a]);
    int si = sub_->index_of(sub_r);
    if (si < 0) throw std::logic_error("supported root missing from subsystem");
    amb_to_sub_[i] = si;
    sub_to_amb_[si] = i;
  }
  if (phi_M_.count() != sub_->size())
    throw std::logic_error("subsystem size mismatch");
}

RootSet RootSubsystem::phi_uQ() const {
  return difference(parent_->positive_set(), phi_M_plus_);
}

int RootSubsystem::to_sub(int ambient_index) const {
  auto it = amb_to_sub_.find(ambient_index);
  if (it == amb_to_sub_.end())
    throw std::invalid_argument("root not in Phi_M");
  return it->second;
}

int RootSubsystem::to_ambient(int sub_index) const {
  return sub_to_amb_.at(sub_index);
}

}  // namespace hesspave
