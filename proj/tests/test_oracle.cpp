#include <doctest.h>

#include "hesspave/oracle.hpp"

using namespace hesspave;

namespace {

HessenbergSpace peterson(const RootSystem& rs) {
  RootSet psi = rs.empty_set();
  for (int i = 0; i < rs.rank(); ++i)
    psi.set(rs.negate(rs.simple_index(i)));
  return HessenbergSpace::from_negative_roots(rs, psi);
}

void expect_clean(const RootSystem& rs, const ElementSpec& spec,
                  const HessenbergSpace& H) {
  auto rep = paving_report(rs, spec, H);
  auto d = oracle::verify_report(rs, spec, H, rep);
  CHECK(d.empty());
}

}  // namespace

TEST_CASE("flag case verifies for every element kind") {
  RootSystem rs = build_root_system('B', 2);
  HessenbergSpace H = HessenbergSpace::full(rs);
  expect_clean(rs, ElementSpec::regular_nilpotent(), H);
  expect_clean(rs, ElementSpec::nilpotent_levi({0}), H);
  expect_clean(rs, ElementSpec::semisimple({}), H);
  expect_clean(rs, ElementSpec::regular({1}), H);
  expect_clean(rs, ElementSpec::general({0, 1}, {0}), H);
}

TEST_CASE("A2 fixture reports verify") {
  RootSystem rs = build_root_system('A', 2);
  HessenbergSpace pet = peterson(rs);
  expect_clean(rs, ElementSpec::regular_nilpotent(), pet);        // 1+2q+q^2
  expect_clean(rs, ElementSpec::semisimple({}), pet);             // 1+4q+q^2
  expect_clean(rs, ElementSpec::semisimple({0}), pet);            // 1+3q+2q^2
  expect_clean(rs, ElementSpec::regular({0}), pet);               // 1+3q+q^2
  expect_clean(rs, ElementSpec::nilpotent_levi({0}),
               HessenbergSpace::borel(rs));                       // 1+2q
}

TEST_CASE("fault injection is detected and names the corrupted cell") {
  RootSystem rs = build_root_system('A', 2);
  HessenbergSpace H = peterson(rs);
  ElementSpec spec = ElementSpec::regular_nilpotent();
  auto rep = paving_report(rs, spec, H);

  SUBCASE("dimension bump") {
    int target = -1;
    for (size_t k = 0; k < rep.cells.size(); ++k)
      if (rep.cells[k].nonempty && rep.cells[k].w.length == 3)
        target = static_cast<int>(k);
    REQUIRE(target >= 0);
    rep.cells[target].dimension += 1;
    auto d = oracle::verify_report(rs, spec, H, rep);
    REQUIRE(d.size() == 1);
    CHECK(d[0].cell_index == target);
    CHECK(d[0].field == "dimension");
    CHECK(d[0].word == rep.cells[target].w.word);
    CHECK(d[0].expected + 1 == d[0].got);
  }

  SUBCASE("nonempty flip") {
    int target = -1;
    for (size_t k = 0; k < rep.cells.size(); ++k)
      if (!rep.cells[k].nonempty) target = static_cast<int>(k);
    REQUIRE(target >= 0);
    rep.cells[target].nonempty = true;
    rep.cells[target].dimension = 0;
    auto d = oracle::verify_report(rs, spec, H, rep);
    REQUIRE(!d.empty());
    CHECK(d[0].cell_index == target);
    CHECK(d[0].field == "nonempty");
  }
}

TEST_CASE("oracle sweep over every space, kind and support at rank 2") {
  for (auto [t, r] : {std::pair{'A', 2}, {'B', 2}, {'G', 2}}) {
    RootSystem rs = build_root_system(t, r);
    auto spaces = enumerate_all(rs);
    for (unsigned mask = 0; mask < 4u; ++mask) {
      std::vector<int> dm;
      for (int i = 0; i < 2; ++i)
        if (mask & (1u << i)) dm.push_back(i);
      for (const auto& H : spaces) {
        expect_clean(rs, ElementSpec::semisimple(dm), H);
        expect_clean(rs, ElementSpec::regular(dm), H);
        if (!dm.empty()) expect_clean(rs, ElementSpec::nilpotent_levi(dm), H);
        for (unsigned inner = 0; inner < 4u; ++inner) {
          if ((inner & mask) != inner) continue;
          std::vector<int> di;
          for (int i = 0; i < 2; ++i)
            if (inner & (1u << i)) di.push_back(i);
          expect_clean(rs, ElementSpec::general(dm, di), H);
        }
      }
    }
    for (const auto& H : spaces)
      expect_clean(rs, ElementSpec::regular_nilpotent(), H);
  }
}

TEST_CASE("oracle spot checks at rank 3") {
  for (auto [t, r] : {std::pair{'A', 3}, {'B', 3}, {'C', 3}}) {
    RootSystem rs = build_root_system(t, r);
    HessenbergSpace pet = peterson(rs);
    expect_clean(rs, ElementSpec::regular_nilpotent(), pet);
    expect_clean(rs, ElementSpec::semisimple({}), pet);
    expect_clean(rs, ElementSpec::regular({0, 2}), pet);
    expect_clean(rs, ElementSpec::nilpotent_levi({1}), HessenbergSpace::borel(rs));
    expect_clean(rs, ElementSpec::general({0, 1}, {0}), pet);
  }
}

TEST_CASE("known variety fixtures pass in A1 and A2") {
  for (int r : {1, 2}) {
    RootSystem rs = build_root_system('A', r);
    for (const auto& f : oracle::known_variety_checks(rs)) {
      INFO(f.name << ": " << f.detail);
      if (f.ran) CHECK(f.passed);
    }
  }
}

TEST_CASE("known variety fixtures pass in B2, G2, B3") {
  for (auto [t, r] : {std::pair{'B', 2}, {'G', 2}, {'B', 3}}) {
    RootSystem rs = build_root_system(t, r);
    for (const auto& f : oracle::known_variety_checks(rs)) {
      INFO(f.name << ": " << f.detail);
      if (f.ran) CHECK(f.passed);
    }
  }
}
