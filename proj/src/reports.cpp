#include "permclass/reports.hpp"

#include <initializer_list>
#include <optional>

namespace permclass::report {

namespace {

std::string csv_row(std::initializer_list<std::string> fields) {
  std::string out;
  bool first = true;
  for (const auto& f : fields) {
    if (!first) out.push_back(',');
    out += csv_field(f);
    first = false;
  }
  out.push_back('\n');
  return out;
}

template <class T>
std::string opt(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

template <class T>
Json opt_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::string flag(bool b) { return b ? "true" : "false"; }

Json pattern_list(const ReplacementSet& pi) {
  Json out = Json::array();
  for (const auto& p : pi.patterns()) out.push_back(p.to_string());
  return out;
}

std::string pattern_text(const ReplacementSet& pi) {
  // Canonical pattern text without the adjacency prefix; adjacency has its own column.
  const std::string s = pi.to_string();
  return pi.adjacency() ? s.substr(4) : s;
}

}  // namespace

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

Json to_json(const ClassPartition& p) {
  Json j;
  j["n"] = p.n;
  j["patterns"] = pattern_list(p.pi);
  j["adjacency"] = p.pi.adjacency();
  j["total_classes"] = p.class_count_total;
  j["nontrivial_classes"] = p.class_count_nontrivial;
  j["singleton_count"] = p.singleton_count;
  Json classes = Json::array();
  for (const auto& c : p.classes) {
    Json e;
    e["size"] = c.size;
    e["representative"] = c.representative.to_string();
    e["even_count"] = c.even_count;
    e["odd_count"] = c.odd_count;
    classes.push_back(std::move(e));
  }
  j["classes"] = std::move(classes);
  return j;
}

std::string to_csv(const ClassPartition& p) {
  std::string out = csv_row({"n", "patterns", "adjacency", "total_classes", "nontrivial_classes",
                             "singleton_count", "size", "representative", "even_count",
                             "odd_count"});
  const std::string n = std::to_string(p.n);
  const std::string pats = pattern_text(p.pi);
  const std::string adj = flag(p.pi.adjacency());
  const std::string total = std::to_string(p.class_count_total);
  const std::string nontrivial = std::to_string(p.class_count_nontrivial);
  const std::string singles = std::to_string(p.singleton_count);
  if (p.classes.empty()) return out + csv_row({n, pats, adj, total, nontrivial, singles, "", "", "", ""});
  for (const auto& c : p.classes) {
    out += csv_row({n, pats, adj, total, nontrivial, singles, std::to_string(c.size),
                    c.representative.to_string(), std::to_string(c.even_count),
                    std::to_string(c.odd_count)});
  }
  return out;
}

Json to_json(const RotationalProfile& p) {
  Json j;
  j["m"] = p.m.to_string();
  Json f = Json::object();
  for (const auto& [n, count] : p.f) f[std::to_string(n)] = count;
  j["f"] = std::move(f);
  j["t"] = opt_json(p.t);
  j["alternating"] = p.alternating;
  j["parity_split_expected"] = p.parity_split_expected;
  return j;
}

std::string to_csv(const RotationalProfile& p) {
  std::string out = csv_row({"m", "n", "f", "t", "alternating", "parity_split_expected"});
  for (const auto& [n, count] : p.f) {
    out += csv_row({p.m.to_string(), std::to_string(n), std::to_string(count), opt(p.t),
                    flag(p.alternating), flag(p.parity_split_expected)});
  }
  return out;
}

Json to_json(const PseudoPartition& p) {
  Json j;
  j["n"] = p.n;
  j["m"] = p.m.to_string();
  j["state_count"] = p.state_count;
  j["class_count"] = p.classes.size();
  Json classes = Json::array();
  for (const auto& c : p.classes) {
    Json e;
    e["size"] = c.size;
    e["representative"] = c.representative;
    e["even_count"] = c.even_count;
    e["odd_count"] = c.odd_count;
    e["parity_pure"] = c.parity_pure();
    classes.push_back(std::move(e));
  }
  j["classes"] = std::move(classes);
  return j;
}

std::string to_csv(const PseudoPartition& p) {
  std::string out = csv_row({"n", "m", "state_count", "class_count", "size", "representative",
                             "even_count", "odd_count", "parity_pure"});
  for (const auto& c : p.classes) {
    out += csv_row({std::to_string(p.n), p.m.to_string(), std::to_string(p.state_count),
                    std::to_string(p.classes.size()), std::to_string(c.size), c.representative,
                    std::to_string(c.even_count), std::to_string(c.odd_count),
                    flag(c.parity_pure())});
  }
  return out;
}

Json to_json(const EsReport& r) {
  Json j;
  j["k"] = r.k;
  j["n"] = r.n;
  j["classes_total"] = r.classes_total;
  j["classes_nontrivial"] = r.classes_nontrivial;
  j["singletons"] = r.singletons;
  j["predicted"] = r.regime == Regime::BelowThresholds ? Json(nullptr) : Json(r.predicted);
  j["regime"] = to_string(r.regime);
  j["parity_pure"] = r.parity_pure;
  j["no_avoiders"] = r.no_avoiders;
  j["leading_one"] = r.leading_one;
  j["pass"] = r.pass;
  return j;
}

std::string to_csv(const EsReport& r) {
  return csv_row({"k", "n", "classes_total", "classes_nontrivial", "singletons", "predicted",
                  "regime", "parity_pure", "no_avoiders", "leading_one", "pass"}) +
         csv_row({std::to_string(r.k), std::to_string(r.n), std::to_string(r.classes_total),
                  std::to_string(r.classes_nontrivial), std::to_string(r.singletons),
                  r.regime == Regime::BelowThresholds ? "" : std::to_string(r.predicted),
                  to_string(r.regime), flag(r.parity_pure), flag(r.no_avoiders),
                  flag(r.leading_one), flag(r.pass)});
}

Json to_json(const ExperimentReport& r, bool timing) {
  Json j;
  j["patterns"] = pattern_list(r.pi);
  j["adjacency"] = r.pi.adjacency();
  j["n_min"] = r.n_min;
  j["n_max"] = r.n_max;
  j["formula"] = r.formula ? Json(to_string(*r.formula)) : Json(nullptr);
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json e;
    e["n"] = row.n;
    e["nontrivial"] = opt_json(row.nontrivial);
    e["total"] = opt_json(row.total);
    e["singletons"] = opt_json(row.singletons);
    e["predicted"] = opt_json(row.predicted);
    e["verdict"] = to_string(row.verdict);
    if (!row.note.empty()) e["note"] = row.note;
    if (timing) {
      e["wall_ms"] = row.wall_ms;
      e["from_cache"] = row.from_cache;
    }
    rows.push_back(std::move(e));
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string to_csv(const ExperimentReport& r, bool timing) {
  std::string out = timing ? csv_row({"patterns", "adjacency", "formula", "n", "nontrivial",
                                      "total", "singletons", "predicted", "verdict", "note",
                                      "wall_ms", "from_cache"})
                           : csv_row({"patterns", "adjacency", "formula", "n", "nontrivial",
                                      "total", "singletons", "predicted", "verdict", "note"});
  const std::string formula = r.formula ? to_string(*r.formula) : "";
  for (const auto& row : r.rows) {
    std::string line = csv_row({pattern_text(r.pi), flag(r.pi.adjacency()), formula,
                                std::to_string(row.n), opt(row.nontrivial), opt(row.total),
                                opt(row.singletons), opt(row.predicted), to_string(row.verdict),
                                row.note});
    if (timing) {
      line.pop_back();
      line += "," + std::to_string(row.wall_ms) + "," + flag(row.from_cache) + "\n";
    }
    out += line;
  }
  return out;
}

Json to_json(const SubconjectureResult& r) {
  Json j;
  j["n"] = r.n;
  j["count"] = r.count;
  j["predicted"] = r.predicted;
  j["match"] = r.match;
  return j;
}

std::string to_csv(const SubconjectureResult& r) {
  return csv_row({"n", "count", "predicted", "match"}) +
         csv_row({std::to_string(r.n), std::to_string(r.count), std::to_string(r.predicted),
                  flag(r.match)});
}

}  // namespace permclass::report
