#include "hesspave/hessenberg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hesspave {

namespace {

// Returns a witness (gamma, alpha) violating closure, or (-1, -1).
std::pair<int, int> closure_witness(const RootSystem& rs, const RootSet& phi_H) {
  for (int g : phi_H.indices()) {
    for (int a = 0; a < rs.size(); ++a) {
      if (!rs.is_positive(a)) continue;
      int s = rs.index_of(rs.root(g) + rs.root(a));
      if (s >= 0 && !phi_H.test(s)) return {g, a};
    }
  }
  return {-1, -1};
}

}  // namespace

HessenbergSpace HessenbergSpace::from_negative_roots(const RootSystem& rs,
                                                     const RootSet& psi) {
  if (psi.intersects(rs.positive_set()))
    throw std::invalid_argument("Psi must consist of negative roots");
  RootSet phi_H = rs.positive_set() | psi;
  auto [g, a] = closure_witness(rs, phi_H);
  if (g >= 0)
    throw std::invalid_argument(
        "not a Hessenberg space: (" + root_name(rs, g) + ") + (" +
        root_name(rs, a) + ") is a root outside Phi_H");
  return HessenbergSpace(std::move(phi_H), psi);
}

HessenbergSpace HessenbergSpace::full(const RootSystem& rs) {
  return from_negative_roots(rs, rs.negative_set());
}

HessenbergSpace HessenbergSpace::borel(const RootSystem& rs) {
  return from_negative_roots(rs, rs.empty_set());
}

HessenbergSpace from_hessenberg_function(const RootSystem& rs,
                                         const std::vector<int>& h) {
  if (rs.type_label() != "A")
    throw std::invalid_argument("Hessenberg functions require type A");
  const int n = rs.rank() + 1;
  if (static_cast<int>(h.size()) != n)
    throw std::invalid_argument("Hessenberg function must have length rank+1");
  for (int i = 0; i < n; ++i) {
    if (h[i] < i + 1 || h[i] > n)
      throw std::invalid_argument("Hessenberg function needs i <= h(i) <= n");
    if (i > 0 && h[i] < h[i - 1])
      throw std::invalid_argument("Hessenberg function must be nondecreasing");
  }
  // e_i - e_j (i < j) = alpha_i + ... + alpha_{j-1}; include the negative
  // root e_i - e_j with i > j iff i <= h(j).
  RootSet psi = rs.empty_set();
  for (int j = 1; j <= n; ++j) {
    for (int i = j + 1; i <= std::min(h[j - 1], n); ++i) {
      Root r = Root::Zero(rs.rank());
      for (int k = j; k < i; ++k) r(k - 1) = -1;
      psi.set(rs.index_of(r));
    }
  }
  return HessenbergSpace::from_negative_roots(rs, psi);
}

RootSet transform(const RootSystem& rs, const WeylElement& w,
                  const HessenbergSpace& H) {
  return act(rs, w, H.phi_H());
}

HessenbergSpace restrict_to_levi(const RootSystem& rs, const HessenbergSpace& H,
                                 const WeylElement& v, const RootSubsystem& sub) {
  if (inversion_set(rs, v).intersects(sub.phi_M()))
    throw std::invalid_argument("v is not a minimal coset representative");
  RootSet image = transform(rs, v, H);
  image &= sub.phi_M();
  const RootSystem& srs = sub.sub_system();
  RootSet psi = srs.empty_set();
  for (int i : image.indices()) {
    int si = sub.to_sub(i);
    if (!srs.is_positive(si)) psi.set(si);
  }
  // Positives of the subsystem must all be present (Phi_M^+ subset of the
  // image is guaranteed when v is in W^M; re-check via from_negative_roots).
  for (int si = 0; si < srs.size(); ++si) {
    if (srs.is_positive(si) && !image.test(sub.to_ambient(si)))
      throw std::logic_error("restricted space is missing a positive root");
  }
  return HessenbergSpace::from_negative_roots(srs, psi);
}

std::vector<HessenbergSpace> enumerate_all(const RootSystem& rs) {
  if (rs.rank() > 4)
    throw guard_error("Hessenberg enumeration is limited to rank <= 4");
  std::vector<RootSet> found;
  std::set<RootSet> seen;
  const std::vector<int> negs = rs.negative_set().indices();

  if (rs.rank() <= 3) {
    // Filtered power-set sweep over Phi^-.
    const int m = static_cast<int>(negs.size());
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      RootSet psi = rs.empty_set();
      for (int b = 0; b < m; ++b)
        if (mask & (1u << b)) psi.set(negs[b]);
      try {
        HessenbergSpace H = HessenbergSpace::from_negative_roots(rs, psi);
        if (seen.insert(H.negatives()).second) found.push_back(H.negatives());
      } catch (const std::invalid_argument&) {
      }
    }
  } else {
    // Closure-growing search: add one negative root, then saturate.
    auto saturate = [&](RootSet psi) {
      RootSet phi_H = rs.positive_set() | psi;
      bool changed = true;
      while (changed) {
        changed = false;
        for (int g : phi_H.indices()) {
          for (int a = 0; a < rs.size(); ++a) {
            if (!rs.is_positive(a)) continue;
            int s = rs.index_of(rs.root(g) + rs.root(a));
            if (s >= 0 && !phi_H.test(s)) {
              phi_H.set(s);
              changed = true;
            }
          }
        }
      }
      return difference(phi_H, rs.positive_set());
    };
    std::vector<RootSet> frontier{rs.empty_set()};
    seen.insert(rs.empty_set());
    found.push_back(rs.empty_set());
    while (!frontier.empty()) {
      std::vector<RootSet> next;
      for (const RootSet& psi : frontier) {
        for (int g : negs) {
          if (psi.test(g)) continue;
          RootSet grown = psi;
          grown.set(g);
          RootSet closed = saturate(grown);
          if (seen.insert(closed).second) {
            found.push_back(closed);
            next.push_back(closed);
          }
        }
      }
      frontier = std::move(next);
    }
  }

  std::sort(found.begin(), found.end(), [](const RootSet& a, const RootSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a < b;
  });
  std::vector<HessenbergSpace> out;
  out.reserve(found.size());
  for (const RootSet& psi : found)
    out.push_back(HessenbergSpace::from_negative_roots(rs, psi));
  return out;
}

}  // namespace hesspave
