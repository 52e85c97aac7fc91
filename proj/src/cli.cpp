#include "hesspave/cli.hpp"

#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

#include "hesspave/oracle.hpp"
#include "hesspave/paving.hpp"

namespace hesspave::cli {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// One token of the negroots grammar: a signed integer combination of the
// simple roots, e.g. "-a1", "-a1-a2", "-2a1-3a2".
Root parse_root_token(const RootSystem& rs, const std::string& token) {
  Root r = Root::Zero(rs.rank());
  std::size_t pos = 0;
  if (token.empty()) throw std::invalid_argument("empty root token");
  while (pos < token.size()) {
    int sign = 1;
    if (token[pos] == '+') {
      ++pos;
    } else if (token[pos] == '-') {
      sign = -1;
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("expected sign in root token '" + token + "'");
    }
    int coef = 0;
    bool have_digits = false;
    while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) {
      coef = coef * 10 + (token[pos] - '0');
      have_digits = true;
      ++pos;
    }
    if (!have_digits) coef = 1;
    if (pos >= token.size() || token[pos] != 'a')
      throw std::invalid_argument("expected 'a<index>' in root token '" + token + "'");
    ++pos;
    int idx = 0;
    bool have_idx = false;
    while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) {
      idx = idx * 10 + (token[pos] - '0');
      have_idx = true;
      ++pos;
    }
    if (!have_idx || idx < 1 || idx > rs.rank())
      throw std::invalid_argument("bad simple index in root token '" + token + "'");
    r(idx - 1) += sign * coef;
  }
  return r;
}

HessenbergSpace parse_hessenberg(const RootSystem& rs, const std::string& s) {
  if (s == "full") return HessenbergSpace::full(rs);
  if (s == "borel") return HessenbergSpace::borel(rs);
  if (s.rfind("function:", 0) == 0) {
    std::vector<int> h;
    for (const std::string& part : split(s.substr(9), ','))
      h.push_back(std::stoi(part));
    return from_hessenberg_function(rs, h);
  }
  if (s.rfind("negroots:", 0) == 0) {
    RootSet psi = rs.empty_set();
    std::string body = s.substr(9);
    if (!body.empty()) {
      for (const std::string& token : split(body, ',')) {
        int idx = rs.index_of(parse_root_token(rs, token));
        if (idx < 0)
          throw std::invalid_argument("'" + token + "' is not a root");
        psi.set(idx);
      }
    }
    return HessenbergSpace::from_negative_roots(rs, psi);
  }
  throw std::invalid_argument("unknown Hessenberg specification '" + s + "'");
}

ElementSpec parse_element(const RunConfig& cfg, int rank) {
  std::vector<int> levi = parse_levi(cfg.levi, rank);
  if (cfg.element == "regular-nilpotent") return ElementSpec::regular_nilpotent();
  if (cfg.element == "nilpotent-levi") return ElementSpec::nilpotent_levi(levi);
  if (cfg.element == "semisimple") return ElementSpec::semisimple(levi);
  if (cfg.element == "regular") return ElementSpec::regular(levi);
  if (cfg.element == "general")
    return ElementSpec::general(levi, parse_levi(cfg.levi_inner, rank));
  throw std::invalid_argument("unknown element kind '" + cfg.element + "'");
}

json word_json(const std::vector<int>& word) {
  json a = json::array();
  for (int i : word) a.push_back(i + 1);  // 1-based in all output
  return a;
}

json report_json(const PavingReport& rep) {
  json cells = json::array();
  for (const CellReport& c : rep.cells) {
    json cell;
    cell["word"] = word_json(c.w.word);
    cell["length"] = c.w.length;
    cell["y_word"] = word_json(c.y.word);
    cell["v_word"] = word_json(c.v.word);
    cell["nonempty"] = c.nonempty;
    cell["dim"] = c.nonempty ? json(c.dimension) : json(nullptr);
    cells.push_back(std::move(cell));
  }
  json out;
  out["cells"] = std::move(cells);
  out["betti"] = rep.betti;
  out["poincare"] = rep.poincare_string();
  out["euler"] = rep.euler;
  return out;
}

std::string join_word(const std::vector<int>& word) {
  std::string s;
  for (int i : word) {
    if (!s.empty()) s += " ";
    s += std::to_string(i + 1);
  }
  return s;
}

void write_csv(std::ostream& out, const PavingReport& rep) {
  out << "cell_index,word,length,y_word,v_word,nonempty,dim\n";
  for (std::size_t i = 0; i < rep.cells.size(); ++i) {
    const CellReport& c = rep.cells[i];
    out << i << ",\"" << join_word(c.w.word) << "\"," << c.w.length << ",\""
        << join_word(c.y.word) << "\",\"" << join_word(c.v.word) << "\","
        << (c.nonempty ? "true" : "false") << ",";
    if (c.nonempty) out << c.dimension;
    out << "\n";
  }
}

void write_table(std::ostream& out, const PavingReport& rep) {
  out << "cell  word          length  nonempty  dim\n";
  for (const CellReport& c : rep.cells) {
    std::string w = c.w.word.empty() ? "e" : join_word(c.w.word);
    out << "      " << w;
    for (std::size_t p = w.size(); p < 14; ++p) out << ' ';
    out << c.w.length << "       " << (c.nonempty ? "yes" : "no ") << "       ";
    if (c.nonempty)
      out << c.dimension;
    else
      out << "-";
    out << "\n";
  }
  out << "poincare: " << rep.poincare_string() << "\n";
  out << "euler:    " << rep.euler << "\n";
}

}  // namespace

std::vector<int> parse_levi(const std::string& s, int rank) {
  std::vector<int> out;
  if (s.empty()) return out;
  for (const std::string& part : split(s, ',')) {
    if (part.empty()) continue;
    int v = std::stoi(part);
    if (v < 1 || v > rank)
      throw std::invalid_argument("Levi index " + part + " out of range 1.." +
                                  std::to_string(rank));
    out.push_back(v - 1);
  }
  return out;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    RootSystem rs = build_root_system(cfg.type_label, cfg.rank);
    ElementSpec spec = parse_element(cfg, rs.rank());

    std::vector<std::pair<std::string, HessenbergSpace>> spaces;
    if (cfg.sweep) {
      for (const HessenbergSpace& H : enumerate_all(rs)) {
        std::string key;
        for (int i : H.negatives().indices()) {
          if (!key.empty()) key += ",";
          key += root_name(rs, i);
        }
        spaces.emplace_back(key, H);
      }
    } else {
      spaces.emplace_back(cfg.hessenberg, parse_hessenberg(rs, cfg.hessenberg));
    }

    json sweep_out = json::array();
    bool any_discrepancy = false;
    for (const auto& [key, H] : spaces) {
      PavingReport rep = paving_report(rs, spec, H, cfg.max_weyl);

      json verified = nullptr;
      if (cfg.verify) {
        auto issues = oracle::verify_report(rs, spec, H, rep);
        verified = issues.empty();
        for (const auto& d : issues) {
          err << "oracle discrepancy at cell " << d.cell_index << " (word "
              << join_word(d.word) << "): " << d.field << " expected "
              << d.expected << ", got " << d.got << "\n";
          any_discrepancy = true;
        }
      }

      if (cfg.output == "json") {
        json doc;
        doc["input"] = {{"type", std::string(1, cfg.type_label)},
                        {"rank", cfg.rank},
                        {"element", cfg.element},
                        {"levi", cfg.levi},
                        {"levi_inner", cfg.levi_inner},
                        {"hessenberg", cfg.sweep ? ("negroots:" + key) : key}};
        json body = report_json(rep);
        for (auto& [k, v] : body.items()) doc[k] = std::move(v);
        doc["verified"] = verified;
        if (cfg.sweep)
          sweep_out.push_back(std::move(doc));
        else
          out << doc.dump(2) << "\n";
      } else {
        if (cfg.sweep) out << "# psi: {" << key << "}\n";
        if (cfg.output == "csv")
          write_csv(out, rep);
        else
          write_table(out, rep);
      }
    }
    if (cfg.sweep && cfg.output == "json") out << sweep_out.dump(2) << "\n";
    return any_discrepancy ? kExitVerify : kExitOk;
  } catch (const guard_error& e) {
    err << "guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

}  // namespace hesspave::cli
