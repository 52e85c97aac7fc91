#include "hesspave/paving.hpp"

#include <algorithm>

namespace hesspave {

ElementSpec ElementSpec::regular_nilpotent() { return ElementSpec{}; }

ElementSpec ElementSpec::nilpotent_levi(std::vector<int> delta_M) {
  if (delta_M.empty())
    throw std::invalid_argument("nilpotent_levi requires a nonempty Delta_M");
  return ElementSpec{Kind::kNilpotentLevi, std::move(delta_M), {}};
}

ElementSpec ElementSpec::semisimple(std::vector<int> delta_M) {
  return ElementSpec{Kind::kSemisimple, std::move(delta_M), {}};
}

ElementSpec ElementSpec::regular(std::vector<int> delta_M) {
  return ElementSpec{Kind::kRegular, std::move(delta_M), {}};
}

ElementSpec ElementSpec::general(std::vector<int> delta_M,
                                 std::vector<int> delta_inner) {
  for (int i : delta_inner)
    if (std::find(delta_M.begin(), delta_M.end(), i) == delta_M.end())
      throw std::invalid_argument("general element needs Delta_m' within Delta_M");
  return ElementSpec{Kind::kGeneral, std::move(delta_M), std::move(delta_inner)};
}

std::string PavingReport::poincare_string() const {
  std::string out;
  for (std::size_t k = 0; k < betti.size(); ++k) {
    if (betti[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += std::to_string(betti[k]);
      continue;
    }
    if (betti[k] != 1) out += std::to_string(betti[k]) + "*";
    out += (k == 1) ? "q" : "q^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

namespace {

/// Delta as a root set.
RootSet simple_set(const RootSystem& rs) {
  RootSet s = rs.empty_set();
  for (int i = 0; i < rs.rank(); ++i) s.set(rs.simple_index(i));
  return s;
}

/// Re-index a W_M word (ambient simple indices) into the subsystem.
std::vector<int> word_to_sub(const RootSubsystem& sub, const std::vector<int>& word) {
  std::vector<int> out;
  out.reserve(word.size());
  for (int i : word) {
    auto it = std::find(sub.delta_M().begin(), sub.delta_M().end(), i);
    if (it == sub.delta_M().end())
      throw std::logic_error("W_M word uses an index outside Delta_M");
    out.push_back(static_cast<int>(it - sub.delta_M().begin()));
  }
  return out;
}

int crossing_term(const RootSystem& rs, const WeylElement& w,
                  const WeylElement& y, const WeylElement& v,
                  const HessenbergSpace& H) {
  RootSet yv = act(rs, y, inversion_set(rs, v));
  yv &= act(rs, w, H.negatives());
  return yv.count();
}

}  // namespace

CellReport cell_regular_nilpotent(const RootSystem& rs, const HessenbergSpace& H,
                                  const WeylElement& w) {
  CellReport r;
  r.w = w;
  r.y = w;
  r.v = identity_element(rs);
  RootSet wH = transform(rs, w, H);
  r.nonempty = wH.contains(simple_set(rs));
  if (r.nonempty) {
    RootSet d = inversion_set(rs, w);
    d &= act(rs, w, H.negatives());
    r.dimension = d.count();
  }
  return r;
}

CellReport cell_nilpotent_levi(const RootSystem& rs, const CocharacterData& cd,
                               const HessenbergSpace& H, const WeylElement& w) {
  CellReport r;
  r.w = w;
  r.y = w;
  r.v = identity_element(rs);
  RootSet wH = transform(rs, w, H);
  r.nonempty = wH.contains(cd.phi_N);
  if (r.nonempty) {
    RootSet missing = difference(cd.phi_script_V, wH);
    r.dimension = w.length - missing.count();
  }
  return r;
}

CellReport cell_semisimple(const RootSystem& rs, const std::vector<int>& delta_M,
                           const HessenbergSpace& H, const WeylElement& w) {
  CellReport r;
  r.w = w;
  auto [y, v] = parabolic_decompose(rs, w, delta_M);
  r.y = y;
  r.v = v;
  r.nonempty = true;
  r.dimension = y.length + crossing_term(rs, w, y, v, H);
  return r;
}

CellReport cell_regular(const RootSystem& rs, const std::vector<int>& delta_M,
                        const HessenbergSpace& H, const WeylElement& w) {
  if (delta_M.empty()) return cell_semisimple(rs, delta_M, H, w);
  CellReport r;
  r.w = w;
  auto [y, v] = parabolic_decompose(rs, w, delta_M);
  r.y = y;
  r.v = v;
  RootSubsystem sub(rs, delta_M);
  HessenbergSpace Hv = restrict_to_levi(rs, H, v, sub);
  const RootSystem& srs = sub.sub_system();
  WeylElement ys = element_from_word(srs, word_to_sub(sub, y.word));
  // y's inversion set inside Phi_M equals the ambient Phi_y.
  RootSet amb_inv = inversion_set(rs, y);
  RootSet sub_inv = inversion_set(srs, ys);
  if (amb_inv.count() != sub_inv.count())
    throw std::logic_error("W_M inversion sets disagree across embeddings");
  CellReport inner = cell_regular_nilpotent(srs, Hv, ys);
  r.nonempty = inner.nonempty;
  if (r.nonempty)
    r.dimension = inner.dimension + crossing_term(rs, w, y, v, H);
  return r;
}

CellReport cell_general(const RootSystem& rs, const std::vector<int>& delta_M,
                        const std::vector<int>& delta_inner,
                        const HessenbergSpace& H, const WeylElement& w,
                        TieBreak tie) {
  if (delta_inner.empty()) return cell_semisimple(rs, delta_M, H, w);
  CellReport r;
  r.w = w;
  auto [y, v] = parabolic_decompose(rs, w, delta_M);
  r.y = y;
  r.v = v;
  RootSubsystem sub(rs, delta_M);
  HessenbergSpace Hv = restrict_to_levi(rs, H, v, sub);
  const RootSystem& srs = sub.sub_system();
  WeylElement ys = element_from_word(srs, word_to_sub(sub, y.word));
  std::vector<int> inner_support = word_to_sub(sub, delta_inner);
  CocharacterData cd = normalize(srs, inner_support, tie);
  CellReport inner = cell_nilpotent_levi(srs, cd, Hv, ys);
  r.nonempty = inner.nonempty;
  if (r.nonempty)
    r.dimension = inner.dimension + crossing_term(rs, w, y, v, H);
  return r;
}

PavingReport paving_report(const RootSystem& rs, const ElementSpec& spec,
                           const HessenbergSpace& H, long long max_order,
                           TieBreak tie) {
  PavingReport rep;
  std::vector<WeylElement> group = enumerate(rs, max_order);

  std::vector<int> all;
  for (int i = 0; i < rs.rank(); ++i) all.push_back(i);

  // Shared per-report state for the Levi-based kinds.
  std::optional<CocharacterData> cd;
  if (spec.kind == ElementSpec::Kind::kNilpotentLevi)
    cd = normalize(rs, spec.delta_M, tie);

  rep.cells.reserve(group.size());
  for (const WeylElement& w : group) {
    switch (spec.kind) {
      case ElementSpec::Kind::kRegularNilpotent:
        rep.cells.push_back(cell_regular_nilpotent(rs, H, w));
        break;
      case ElementSpec::Kind::kNilpotentLevi:
        rep.cells.push_back(cell_nilpotent_levi(rs, *cd, H, w));
        break;
      case ElementSpec::Kind::kSemisimple:
        rep.cells.push_back(cell_semisimple(rs, spec.delta_M, H, w));
        break;
      case ElementSpec::Kind::kRegular:
        rep.cells.push_back(cell_regular(rs, spec.delta_M, H, w));
        break;
      case ElementSpec::Kind::kGeneral:
        rep.cells.push_back(cell_general(rs, spec.delta_M, spec.delta_inner, H, w, tie));
        break;
    }
  }

  int top = 0;
  for (const CellReport& c : rep.cells)
    if (c.nonempty) top = std::max(top, c.dimension);
  rep.betti.assign(top + 1, 0);
  for (const CellReport& c : rep.cells) {
    if (!c.nonempty) continue;
    ++rep.betti[c.dimension];
    ++rep.euler;
  }
  return rep;
}

}  // namespace hesspave
