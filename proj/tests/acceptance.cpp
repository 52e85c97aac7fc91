// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is self-contained and timed.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hesspave/oracle.hpp"
#include "hesspave/paving.hpp"

using namespace hesspave;

namespace {

struct Failure {
  std::string detail;
};

void expect(bool ok, const std::string& detail) {
  if (!ok) throw Failure{detail};
}

HessenbergSpace peterson(const RootSystem& rs) {
  RootSet psi = rs.empty_set();
  for (int i = 0; i < rs.rank(); ++i)
    psi.set(rs.negate(rs.simple_index(i)));
  return HessenbergSpace::from_negative_roots(rs, psi);
}

std::vector<std::vector<int>> all_subsets(int rank) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << rank); ++mask) {
    std::vector<int> dm;
    for (int i = 0; i < rank; ++i)
      if (mask & (1u << i)) dm.push_back(i);
    out.push_back(dm);
  }
  return out;
}

std::vector<ElementSpec> all_kinds(int rank) {
  std::vector<ElementSpec> specs = {ElementSpec::regular_nilpotent()};
  for (const auto& dm : all_subsets(rank)) {
    specs.push_back(ElementSpec::semisimple(dm));
    specs.push_back(ElementSpec::regular(dm));
    if (!dm.empty()) specs.push_back(ElementSpec::nilpotent_levi(dm));
    for (const auto& di : all_subsets(rank)) {
      bool inside = true;
      for (int i : di)
        if (std::find(dm.begin(), dm.end(), i) == dm.end()) inside = false;
      if (inside) specs.push_back(ElementSpec::general(dm, di));
    }
  }
  return specs;
}

std::string fmt_betti(const std::vector<long long>& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(b[i]);
  }
  return s + ")";
}

using LL = std::vector<long long>;

// 1. Flag-variety identity on A2, B2, A3 for every element kind.
void criterion_flag_identity() {
  for (auto [t, r] : {std::pair{'A', 2}, {'B', 2}, {'A', 3}}) {
    RootSystem rs = build_root_system(t, r);
    HessenbergSpace H = HessenbergSpace::full(rs);
    LL flag;
    for (const auto& w : enumerate(rs)) {
      if (static_cast<int>(flag.size()) <= w.length)
        flag.resize(w.length + 1, 0);
      ++flag[w.length];
    }
    if (t == 'A' && r == 2)
      expect(flag == LL{1, 2, 2, 1}, "A2 flag polynomial is not 1+2q+2q^2+q^3");
    for (const auto& spec : all_kinds(rs.rank())) {
      auto rep = paving_report(rs, spec, H);
      expect(rep.betti == flag, std::string(1, t) + std::to_string(r) +
                                    " flag mismatch: got " + fmt_betti(rep.betti));
    }
  }
}

// 2. Springer degenerations at H = b in every supported type of rank <= 4.
void criterion_springer() {
  for (auto [t, r] :
       {std::pair{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3},
        {'B', 4}, {'C', 3}, {'C', 4}, {'D', 4}, {'G', 2}, {'F', 4}}) {
    RootSystem rs = build_root_system(t, r);
    HessenbergSpace H = HessenbergSpace::borel(rs);
    auto rn = paving_report(rs, ElementSpec::regular_nilpotent(), H);
    expect(rn.betti == LL{1} && rn.cells[0].w.is_identity(),
           std::string(1, t) + std::to_string(r) +
               ": regular nilpotent Springer fiber is not a point");
    auto ss = paving_report(rs, ElementSpec::semisimple({}), H);
    expect(ss.betti == LL{weyl_order(t, r)},
           std::string(1, t) + std::to_string(r) +
               ": regular semisimple fiber is not |W| points");
  }
}

// 3. A2 fixture suite.
void criterion_a2_fixtures() {
  RootSystem rs = build_root_system('A', 2);
  HessenbergSpace pet = peterson(rs);
  struct Fixture {
    ElementSpec spec;
    const HessenbergSpace& H;
    LL betti;
    const char* name;
  };
  HessenbergSpace borel = HessenbergSpace::borel(rs);
  std::vector<Fixture> fixtures = {
      {ElementSpec::regular_nilpotent(), pet, {1, 2, 1}, "Peterson/reg-nilp"},
      {ElementSpec::semisimple({}), pet, {1, 4, 1}, "Peterson/reg-ss"},
      {ElementSpec::semisimple({0}), pet, {1, 3, 2}, "Peterson/ss{1}"},
      {ElementSpec::regular({0}), pet, {1, 3, 1}, "Peterson/regular{1}"},
      {ElementSpec::nilpotent_levi({0}), borel, {1, 2}, "minimal-nilp/borel"},
  };
  for (const auto& f : fixtures) {
    auto rep = paving_report(rs, f.spec, f.H);
    expect(rep.betti == f.betti, std::string(f.name) + ": expected " +
                                     fmt_betti(f.betti) + ", got " +
                                     fmt_betti(rep.betti));
  }
  auto reg = paving_report(rs, ElementSpec::regular({0}), pet);
  expect(reg.euler == 5, "Peterson/regular{1}: expected 5 nonempty cells");
}

// 4. Peterson pattern (1+q)^rank.
void criterion_peterson() {
  for (auto [t, r] : {std::pair{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}, {'B', 3}}) {
    RootSystem rs = build_root_system(t, r);
    auto rep = paving_report(rs, ElementSpec::regular_nilpotent(), peterson(rs));
    LL binom(rs.rank() + 1, 1);
    for (int k = 1; k < rs.rank(); ++k)
      binom[k] = binom[k - 1] * (rs.rank() - k + 1) / k;
    expect(rep.betti == binom, std::string(1, t) + std::to_string(r) +
                                   ": Peterson betti " + fmt_betti(rep.betti) +
                                   " is not (1+q)^rank");
  }
}

// 5. Regular semisimple palindromicity over every Hessenberg space, rank <= 3.
void criterion_palindromic() {
  for (auto [t, r] : {std::pair{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3},
                      {'C', 3}, {'G', 2}}) {
    RootSystem rs = build_root_system(t, r);
    long long order = weyl_order(t, r);
    for (const auto& H : enumerate_all(rs)) {
      auto rep = paving_report(rs, ElementSpec::semisimple({}), H);
      expect(rep.euler == order, "euler != |W|");
      expect(static_cast<int>(rep.betti.size()) == H.negatives().count() + 1,
             "top degree != |Phi_H^-|");
      for (std::size_t k = 0; k < rep.betti.size(); ++k)
        expect(rep.betti[k] == rep.betti[rep.betti.size() - 1 - k],
               std::string(1, t) + std::to_string(r) +
                   ": non-palindromic betti " + fmt_betti(rep.betti));
    }
  }
}

// 6. Oracle equivalence sweep at rank <= 3.
void criterion_oracle_sweep() {
  for (auto [t, r] : {std::pair{'A', 1}, {'A', 2}, {'B', 2}, {'G', 2},
                      {'A', 3}, {'B', 3}, {'C', 3}}) {
    RootSystem rs = build_root_system(t, r);
    auto specs = all_kinds(rs.rank());
    for (const auto& H : enumerate_all(rs)) {
      for (const auto& spec : specs) {
        auto rep = paving_report(rs, spec, H);
        auto issues = oracle::verify_report(rs, spec, H, rep);
        expect(issues.empty(),
               std::string(1, t) + std::to_string(r) + ": " +
                   std::to_string(issues.size()) + " discrepancy(ies), first at " +
                   (issues.empty() ? "" : issues[0].field));
      }
    }
  }
}

// 7. Specialization square at rank <= 3.
void criterion_specialization() {
  for (auto [t, r] : {std::pair{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}, {'B', 3},
                      {'C', 3}}) {
    RootSystem rs = build_root_system(t, r);
    std::vector<int> all;
    for (int i = 0; i < rs.rank(); ++i) all.push_back(i);
    auto cells_equal = [&](const PavingReport& a, const PavingReport& b) {
      if (a.cells.size() != b.cells.size()) return false;
      for (std::size_t k = 0; k < a.cells.size(); ++k) {
        if (a.cells[k].nonempty != b.cells[k].nonempty) return false;
        if (a.cells[k].nonempty &&
            a.cells[k].dimension != b.cells[k].dimension)
          return false;
      }
      return true;
    };
    for (const auto& H : enumerate_all(rs)) {
      expect(cells_equal(
                 paving_report(rs, ElementSpec::regular(all), H),
                 paving_report(rs, ElementSpec::regular_nilpotent(), H)),
             "regular(Delta) != regular_nilpotent");
      expect(cells_equal(paving_report(rs, ElementSpec::regular({}), H),
                         paving_report(rs, ElementSpec::semisimple({}), H)),
             "regular(empty) != semisimple(empty)");
      for (const auto& dm : all_subsets(rs.rank())) {
        expect(cells_equal(paving_report(rs, ElementSpec::general(dm, dm), H),
                           paving_report(rs, ElementSpec::regular(dm), H)),
               "general(Delta_M, Delta_M) != regular(Delta_M)");
        if (!dm.empty())
          expect(cells_equal(
                     paving_report(rs, ElementSpec::general(all, dm), H),
                     paving_report(rs, ElementSpec::nilpotent_levi(dm), H)),
                 "general(Delta, Delta_m') != nilpotent_levi(Delta_m')");
      }
    }
  }
}

// 8. Structural lemmas at rank <= 4: inversion-set partition and the
// weight-2 partition.
void criterion_structural() {
  for (auto [t, r] : {std::pair{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}, {'B', 3},
                      {'C', 3}, {'A', 4}, {'B', 4}, {'C', 4}, {'D', 4},
                      {'F', 4}}) {
    RootSystem rs = build_root_system(t, r);
    auto group = enumerate(rs);
    for (const auto& dm : all_subsets(rs.rank())) {
      for (const auto& w : group) {
        auto [y, v] = parabolic_decompose(rs, w, dm);
        RootSet y_phi_v = act(rs, y, inversion_set(rs, v));
        RootSet phi_y = inversion_set(rs, y);
        expect(!y_phi_v.intersects(phi_y) &&
                   (y_phi_v | phi_y) == inversion_set(rs, w),
               "inversion-set partition failed");
      }
      if (dm.empty()) continue;
      CocharacterData cd = normalize(rs, dm);
      RootSet weight2 = rs.empty_set();
      for (int k = 0; k < rs.size(); ++k)
        if (rs.is_positive(k) && cd.weights[k] == 2) weight2.set(k);
      expect(!cd.phi_V_minus.intersects(cd.phi_N) &&
                 !cd.phi_V_minus.intersects(cd.phi_V_plus) &&
                 !cd.phi_N.intersects(cd.phi_V_plus) &&
                 (cd.phi_V_minus | cd.phi_N | cd.phi_V_plus) == weight2,
             "weight-2 partition failed");
    }
  }
}

// 9. Performance floor: F4 full report < 5 s, E6 enumeration < 60 s.
void criterion_performance() {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  RootSystem f4 = build_root_system('F', 4);
  auto rep = paving_report(f4, ElementSpec::regular_nilpotent(), peterson(f4));
  expect(rep.euler == 16, "F4 Peterson euler != 2^4");
  double f4_s = std::chrono::duration<double>(clock::now() - t0).count();
  expect(f4_s < 5.0, "F4 report took " + std::to_string(f4_s) + " s");

  t0 = clock::now();
  RootSystem e6 = build_root_system('E', 6);
  expect(enumerate(e6).size() == 51840, "|W(E6)| != 51840");
  double e6_s = std::chrono::duration<double>(clock::now() - t0).count();
  expect(e6_s < 60.0, "E6 enumeration took " + std::to_string(e6_s) + " s");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void()> fn;
  };
  std::vector<Criterion> criteria = {
      {"1 flag-variety identity (A2, B2, A3, all kinds)", criterion_flag_identity},
      {"2 Springer degenerations at H = b (rank <= 4)", criterion_springer},
      {"3 A2 fixture suite", criterion_a2_fixtures},
      {"4 Peterson pattern (1+q)^rank", criterion_peterson},
      {"5 regular semisimple palindromicity (rank <= 3)", criterion_palindromic},
      {"6 oracle equivalence sweep (rank <= 3)", criterion_oracle_sweep},
      {"7 specialization square (rank <= 3)", criterion_specialization},
      {"8 structural partitions (rank <= 4)", criterion_structural},
      {"9 performance floor (F4 report, E6 enumeration)", criterion_performance},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.fn();
      double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                     .count();
      std::printf("[PASS] %s (%.2f s)\n", c.name, s);
    } catch (const Failure& f) {
      ++failures;
      std::printf("[FAIL] %s: %s\n", c.name, f.detail.c_str());
    } catch (const std::exception& e) {
      ++failures;
      std::printf("[FAIL] %s: unexpected exception: %s\n", c.name, e.what());
    }
  }
  return failures == 0 ? 0 : 1;
}
