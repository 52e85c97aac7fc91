#include <doctest.h>

#include <string>

#include "hesspave/hessenberg.hpp"

using namespace hesspave;

namespace {

Root mk(std::initializer_list<int> c) {
  Root r(static_cast<int>(c.size()));
  int i = 0;
  for (int v : c) r(i++) = v;
  return r;
}

RootSet psi_of(const RootSystem& rs, std::initializer_list<Root> roots) {
  RootSet s = rs.empty_set();
  for (const Root& r : roots) s.set(rs.index_of(r));
  return s;
}

HessenbergSpace peterson(const RootSystem& rs) {
  RootSet psi = rs.empty_set();
  for (int i = 0; i < rs.rank(); ++i)
    psi.set(rs.negate(rs.simple_index(i)));
  return HessenbergSpace::from_negative_roots(rs, psi);
}

bool is_valid_space(const RootSystem& rs, const RootSet& phi_H) {
  if (!phi_H.contains(rs.positive_set())) return false;
  for (int g : phi_H.indices()) {
    for (int a : rs.positive_set().indices()) {
      Root sum = rs.root(g) + rs.root(a);
      int k = rs.index_of(sum);
      if (k >= 0 && !phi_H.test(k)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("Borel and full spaces") {
  RootSystem rs = build_root_system('A', 2);
  CHECK(HessenbergSpace::borel(rs).phi_H() == rs.positive_set());
  CHECK(HessenbergSpace::borel(rs).negatives().empty());
  CHECK(HessenbergSpace::full(rs).phi_H() == rs.full_set());
  CHECK(HessenbergSpace::full(rs).negatives() == rs.negative_set());
}

TEST_CASE("Peterson space in A2 is valid") {
  RootSystem rs = build_root_system('A', 2);
  HessenbergSpace H = peterson(rs);
  CHECK(H.phi_H().count() == 5);
  CHECK(H.negatives().count() == 2);
}

TEST_CASE("closure failure names a witness pair") {
  RootSystem rs = build_root_system('A', 2);
  RootSet psi = psi_of(rs, {mk({-1, -1})});
  try {
    HessenbergSpace::from_negative_roots(rs, psi);
    FAIL("expected invalid_argument");
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    CHECK(msg.find("-a1-a2") != std::string::npos);
  }
}

TEST_CASE("positive roots are rejected as Psi members") {
  RootSystem rs = build_root_system('A', 2);
  RootSet psi = psi_of(rs, {mk({1, 0})});
  CHECK_THROWS_AS(HessenbergSpace::from_negative_roots(rs, psi),
                  std::invalid_argument);
}

TEST_CASE("Hessenberg functions in type A, n = 3") {
  RootSystem rs = build_root_system('A', 2);
  CHECK(from_hessenberg_function(rs, {3, 3, 3}) == HessenbergSpace::full(rs));
  CHECK(from_hessenberg_function(rs, {1, 2, 3}) == HessenbergSpace::borel(rs));
  CHECK(from_hessenberg_function(rs, {2, 3, 3}) == peterson(rs));
}

TEST_CASE("malformed Hessenberg functions are rejected") {
  RootSystem rs = build_root_system('A', 2);
  CHECK_THROWS_AS(from_hessenberg_function(rs, {2, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(from_hessenberg_function(rs, {1, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(from_hessenberg_function(rs, {2, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(from_hessenberg_function(rs, {2, 3}), std::invalid_argument);
  RootSystem b2 = build_root_system('B', 2);
  CHECK_THROWS_AS(from_hessenberg_function(b2, {2, 3, 3}), std::invalid_argument);
}

TEST_CASE("transform examples") {
  RootSystem rs = build_root_system('A', 2);
  HessenbergSpace H = peterson(rs);
  CHECK(transform(rs, identity_element(rs), H) == H.phi_H());
  auto w0 = element_from_word(rs, {0, 1, 0});
  RootSet img = transform(rs, w0, H);
  RootSet expect = rs.negative_set();
  expect.set(rs.index_of(mk({1, 0})));
  expect.set(rs.index_of(mk({0, 1})));
  CHECK(img == expect);
  CHECK(transform(rs, w0, HessenbergSpace::full(rs)) == rs.full_set());
}

TEST_CASE("w0 maps negatives onto positives") {
  RootSystem rs = build_root_system('B', 2);
  auto group = enumerate(rs);
  const WeylElement* w0 = &group[0];
  for (const auto& w : group)
    if (w.length > w0->length) w0 = &w;
  for (const auto& H : enumerate_all(rs)) {
    RootSet img = transform(rs, *w0, H);
    img &= rs.positive_set();
    CHECK(img.count() == H.negatives().count());
  }
}

TEST_CASE("restrict_to_levi A2 Peterson examples") {
  RootSystem rs = build_root_system('A', 2);
  RootSubsystem sub(rs, {0});
  const RootSystem& m = sub.sub_system();
  HessenbergSpace H = peterson(rs);

  HessenbergSpace He = restrict_to_levi(rs, H, identity_element(rs), sub);
  CHECK(He.phi_H().count() == 2);  // {alpha_1, -alpha_1}

  HessenbergSpace Hs2 = restrict_to_levi(rs, H, element_from_word(rs, {1}), sub);
  CHECK(Hs2.phi_H().count() == 1);
  CHECK(Hs2.phi_H().test(m.simple_index(0)));

  HessenbergSpace Hs2s1 =
      restrict_to_levi(rs, H, element_from_word(rs, {1, 0}), sub);
  CHECK(Hs2s1.phi_H().count() == 2);
}

TEST_CASE("restrict_to_levi rejects v outside W^M") {
  RootSystem rs = build_root_system('A', 2);
  RootSubsystem sub(rs, {0});
  CHECK_THROWS_AS(
      restrict_to_levi(rs, peterson(rs), element_from_word(rs, {0}), sub),
      std::invalid_argument);
}

TEST_CASE("restriction is always a valid subsystem Hessenberg space") {
  for (auto [t, r] : {std::pair{'A', 3}, {'B', 3}, {'G', 2}}) {
    RootSystem rs = build_root_system(t, r);
    auto spaces = enumerate_all(rs);
    for (unsigned mask = 0; mask < (1u << rs.rank()); ++mask) {
      std::vector<int> dm;
      for (int i = 0; i < rs.rank(); ++i)
        if (mask & (1u << i)) dm.push_back(i);
      RootSubsystem sub(rs, dm);
      const RootSystem& m = sub.sub_system();
      for (const auto& v : minimal_reps(rs, dm)) {
        for (const auto& H : spaces) {
          HessenbergSpace Hv = restrict_to_levi(rs, H, v, sub);
          CHECK(is_valid_space(m, Hv.phi_H()));
        }
      }
    }
  }
}

TEST_CASE("enumerate_all counts") {
  CHECK(enumerate_all(build_root_system('A', 1)).size() == 2);
  CHECK(enumerate_all(build_root_system('A', 2)).size() == 5);   // Catalan(3)
  CHECK(enumerate_all(build_root_system('A', 3)).size() == 14);  // Catalan(4)
}

TEST_CASE("enumerate_all matches a brute-force subset filter") {
  for (auto [t, r] : {std::pair{'B', 2}, {'G', 2}, {'A', 3}, {'B', 3}}) {
    RootSystem rs = build_root_system(t, r);
    auto got = enumerate_all(rs);
    int expect = 0;
    std::vector<int> negs = rs.negative_set().indices();
    for (unsigned mask = 0; mask < (1u << negs.size()); ++mask) {
      RootSet phi_H = rs.positive_set();
      for (size_t i = 0; i < negs.size(); ++i)
        if (mask & (1u << i)) phi_H.set(negs[i]);
      if (is_valid_space(rs, phi_H)) ++expect;
    }
    CHECK(static_cast<int>(got.size()) == expect);
    for (size_t i = 0; i + 1 < got.size(); ++i)
      CHECK(!(got[i] == got[i + 1]));
    for (const auto& H : got) CHECK(is_valid_space(rs, H.phi_H()));
  }
}

TEST_CASE("enumerate_all at rank 4 agrees with the type-A Catalan count") {
  RootSystem rs = build_root_system('A', 4);
  CHECK(enumerate_all(rs).size() == 42);  // Catalan(5)
}

TEST_CASE("rank guard on enumerate_all") {
  CHECK_THROWS_AS(enumerate_all(build_root_system('A', 5)), guard_error);
}
