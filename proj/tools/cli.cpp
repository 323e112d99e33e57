#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "permclass/enumeration_harness.hpp"
#include "permclass/erdos_szekeres.hpp"
#include "permclass/errors.hpp"
#include "permclass/pseudo_rotational.hpp"
#include "permclass/reports.hpp"
#include "suites.hpp"

namespace permclass::cli {

namespace {

constexpr std::uint64_t kMiB = std::uint64_t{1} << 20;
constexpr std::uint64_t kMinBudget = 64 * kMiB;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Table, Json, Csv };

struct Settings {
  std::uint64_t memory_budget = std::uint64_t{4} << 30;
  int threads = std::max(1u, std::thread::hardware_concurrency());
  Format format = Format::Table;
  std::optional<std::string> cache_dir;
  std::uint64_t seed = 1;
  bool timing = true;
  bool cache = true;
};

std::uint64_t parse_bytes(const std::string& text) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    throw UsageError(fmt::format("bad byte count '{}'", text));
  }
  const std::string suffix = text.substr(used);
  std::uint64_t scale = 1;
  if (suffix == "K" || suffix == "KiB") {
    scale = 1024;
  } else if (suffix == "M" || suffix == "MiB") {
    scale = kMiB;
  } else if (suffix == "G" || suffix == "GiB") {
    scale = kMiB * 1024;
  } else if (!suffix.empty()) {
    throw UsageError(fmt::format("bad byte count '{}'", text));
  }
  return value * scale;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw UsageError(fmt::format("{}: expected true or false, got '{}'", key, v));
}

void apply(Settings& s, const std::string& key, const std::string& value) {
  try {
    if (key == "memory_budget") {
      s.memory_budget = parse_bytes(value);
    } else if (key == "threads") {
      s.threads = std::stoi(value);
    } else if (key == "format") {
      if (value == "table") {
        s.format = Format::Table;
      } else if (value == "json") {
        s.format = Format::Json;
      } else if (value == "csv") {
        s.format = Format::Csv;
      } else {
        throw UsageError(fmt::format("format must be table, json or csv, got '{}'", value));
      }
    } else if (key == "cache_dir") {
      s.cache_dir = value;
    } else if (key == "seed") {
      s.seed = std::stoull(value);
    } else if (key == "timing") {
      s.timing = parse_bool(key, value);
    } else if (key == "cache") {
      s.cache = parse_bool(key, value);
    } else {
      throw UsageError(fmt::format("unknown setting '{}'", key));
    }
  } catch (const std::invalid_argument&) {
    throw UsageError(fmt::format("{}: bad value '{}'", key, value));
  } catch (const std::out_of_range&) {
    throw UsageError(fmt::format("{}: value '{}' out of range", key, value));
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void apply_config_file(Settings& s, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError(fmt::format("cannot read config file {}", path));
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(fmt::format("{}:{}: expected key = value", path, line_no));
    }
    apply(s, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

// Left-aligned columns separated by two spaces.
std::string table(const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out += i + 1 < cells.size() ? fmt::format("{:<{}}  ", cells[i], width[i]) : cells[i];
    }
    return out + "\n";
  };
  std::string out = line(header);
  for (const auto& row : rows) out += line(row);
  return out;
}

template <class T>
std::string opt_text(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string("-");
}

struct Context {
  Settings settings;
  std::string command_line;
  std::ostream* err = nullptr;

  EngineOptions engine() const {
    EngineOptions o;
    o.memory_budget = settings.memory_budget;
    o.threads = settings.threads;
    return o;
  }

  ExperimentOptions experiment() const {
    ExperimentOptions o;
    o.engine = engine();
    if (settings.cache && settings.cache_dir) o.cache_dir = *settings.cache_dir;
    return o;
  }

  std::string header() const {
    const auto& s = settings;
    return fmt::format(
        "# permclass {}\n# command: permclass {}\n# settings: threads={} memory_budget={} "
        "cache={} seed={}\n",
        kEngineVersion, command_line, s.threads, s.memory_budget,
        s.cache && s.cache_dir ? *s.cache_dir : std::string("off"), s.seed);
  }
};

std::string render(const Context& ctx, const report::Json& json, const std::string& csv,
                   const std::string& text) {
  switch (ctx.settings.format) {
    case Format::Json:
      return json.dump(2) + "\n";
    case Format::Csv:
      return csv;
    case Format::Table:
      break;
  }
  return ctx.header() + text;
}

std::string cmd_classes(const Context& ctx, int n, const std::string& pattern_text) {
  const auto pi = ReplacementSet::parse(pattern_text);
  const auto part = enumerate_classes(n, pi, ctx.engine());
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : part.classes) {
    rows.push_back({std::to_string(c.size), c.representative.to_string(),
                    std::to_string(c.even_count), std::to_string(c.odd_count)});
  }
  std::string text = fmt::format(
      "n={} patterns={}\ntotal={} nontrivial={} singletons={}\n\n", n, pi.to_string(),
      part.class_count_total, part.class_count_nontrivial, part.singleton_count);
  text += table({"size", "representative", "even", "odd"}, rows);
  return render(ctx, report::to_json(part), report::to_csv(part), text);
}

std::string cmd_rotational(const Context& ctx, const std::string& m_text, std::optional<int> n_max) {
  const auto m = Permutation::parse(m_text);
  const int top = n_max.value_or(std::min(2 * m.size() - 1, kMaxLength));
  const auto profile = rotational_profile(m, top, ctx.engine());
  std::vector<std::vector<std::string>> rows;
  for (const auto& [n, f] : profile.f) rows.push_back({std::to_string(n), std::to_string(f)});
  std::string text = fmt::format("m={} alternating={} t={}{}\n\n", m.to_string(),
                                 profile.alternating ? "yes" : "no", opt_text(profile.t),
                                 profile.parity_split_expected
                                     ? " (odd length: two classes expected by parity)"
                                     : "");
  text += table({"n", "f(n)"}, rows);
  return render(ctx, report::to_json(profile), report::to_csv(profile), text);
}

std::string cmd_pseudo(const Context& ctx, const std::string& m_text, int n) {
  const auto part = enumerate_pseudo_classes(n, Permutation::parse(m_text), ctx.settings.memory_budget);
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : part.classes) {
    rows.push_back({std::to_string(c.size), c.representative, std::to_string(c.even_count),
                    std::to_string(c.odd_count), c.parity_pure() ? "yes" : "no"});
  }
  std::string text = fmt::format("n={} m={} states={} classes={}\n\n", n, part.m.to_string(),
                                 part.state_count, part.classes.size());
  text += table({"size", "representative", "even", "odd", "pure"}, rows);
  return render(ctx, report::to_json(part), report::to_csv(part), text);
}

std::string cmd_erdos(const Context& ctx, int k, int n_min, int n_max, bool& all_pass) {
  std::vector<EsReport> reports;
  for (int n = n_min; n <= n_max; ++n) reports.push_back(verify_es_theorem(k, n, ctx.engine()));
  all_pass = std::all_of(reports.begin(), reports.end(), [](const EsReport& r) { return r.pass; });

  report::Json json;
  std::string csv;
  if (reports.size() == 1) {
    json = report::to_json(reports.front());
    csv = report::to_csv(reports.front());
  } else {
    json = report::Json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
      json.push_back(report::to_json(reports[i]));
      const auto part = report::to_csv(reports[i]);
      csv += i == 0 ? part : part.substr(part.find('\n') + 1);
    }
  }
  const auto cfg = es_config(k, n_min);
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports) {
    rows.push_back({std::to_string(r.n), std::to_string(r.classes_total),
                    std::to_string(r.classes_nontrivial), std::to_string(r.singletons),
                    r.regime == Regime::BelowThresholds ? "-" : std::to_string(r.predicted),
                    to_string(r.regime), r.parity_pure ? "yes" : "no",
                    r.leading_one ? "yes" : "no", r.pass ? "pass" : "FAIL"});
  }
  std::string text = fmt::format(
      "k={} patterns={}\nthresholds: proven n >= {}, conjectured n >= {} (proven threshold is "
      "beyond exhaustive reach; the conjectured one stands in)\n\n",
      k, es_pattern_set(k).to_string(), cfg.threshold_proven, cfg.threshold_conjectured);
  text += table({"n", "classes", "nontrivial", "singletons", "predicted", "regime", "parity_pure",
                 "leading_1", "result"},
                rows);
  return render(ctx, json, csv, text);
}

struct SuiteEntry {
  std::string name;
  std::string patterns;
  FormulaId formula;
};

std::string cmd_oeis(const Context& ctx, const std::string& suite, int n_min, int n_max,
                     bool& all_pass) {
  static const std::vector<SuiteEntry> kSuites{
      {"thm1", "1234,3421", FormulaId::LinearPlus28},
      {"thm2", "1243,3421", FormulaId::SevenTimesPow2},
      {"conj1", "1234,3412", FormulaId::CubicConjecture}};
  const bool any = suite == "all";
  if (!any && suite != "conj2" &&
      std::none_of(kSuites.begin(), kSuites.end(), [&](const SuiteEntry& e) { return e.name == suite; })) {
    throw UsageError(fmt::format("unknown oeis suite '{}' (thm1, thm2, conj1, conj2, all)", suite));
  }

  std::vector<ExperimentReport> experiments;
  for (const auto& e : kSuites) {
    if (any || e.name == suite) {
      experiments.push_back(
          run_experiment(ReplacementSet::parse(e.patterns), n_min, n_max, e.formula, ctx.experiment()));
    }
  }
  std::vector<SubconjectureResult> subs;
  if (any || suite == "conj2") {
    for (int n = std::max(n_min, 8); n <= std::min(n_max, 10); ++n) {
      subs.push_back(subconjecture_check(n, ctx.engine()));
    }
  }

  all_pass = true;
  for (const auto& e : experiments) {
    all_pass = all_pass && !e.any_mismatch();
    for (const auto& w : e.warnings) *ctx.err << "warning: " << w << "\n";
  }
  for (const auto& s : subs) all_pass = all_pass && s.match;

  const bool timing = ctx.settings.timing;
  report::Json json;
  json["suite"] = suite;
  json["experiments"] = report::Json::array();
  for (const auto& e : experiments) json["experiments"].push_back(report::to_json(e, timing));
  json["subconjecture"] = report::Json::array();
  for (const auto& s : subs) json["subconjecture"].push_back(report::to_json(s));
  json["pass"] = all_pass;

  std::string csv;
  for (std::size_t i = 0; i < experiments.size(); ++i) {
    const auto part = report::to_csv(experiments[i], timing);
    csv += i == 0 ? part : part.substr(part.find('\n') + 1);
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const auto part = report::to_csv(subs[i]);
    if (i == 0 && !csv.empty()) csv += "\n";
    csv += i == 0 ? part : part.substr(part.find('\n') + 1);
  }

  std::string text;
  for (const auto& e : experiments) {
    text += fmt::format("patterns={} formula={}\n", e.pi.to_string(),
                        e.formula ? to_string(*e.formula) : "-");
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : e.rows) {
      std::vector<std::string> row{std::to_string(r.n), opt_text(r.nontrivial), opt_text(r.predicted),
                                   to_string(r.verdict)};
      if (timing) row.push_back(r.from_cache ? fmt::format("{} (cached)", r.wall_ms) : std::to_string(r.wall_ms));
      rows.push_back(std::move(row));
    }
    std::vector<std::string> head{"n", "nontrivial", "predicted", "verdict"};
    if (timing) head.push_back("wall_ms");
    text += table(head, rows) + "\n";
  }
  if (!subs.empty()) {
    text += "classes of 1234,3412 whose members do not begin with n; formula (n^2+3n-20)/2\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& s : subs) {
      rows.push_back({std::to_string(s.n), std::to_string(s.count), std::to_string(s.predicted),
                      s.match ? "match" : "MISMATCH"});
    }
    text += table({"n", "count", "predicted", "verdict"}, rows);
  }
  return render(ctx, json, csv, text);
}

std::string cmd_verify(const Context& ctx, const std::string& suite, bool& all_pass) {
  std::vector<std::string> todo;
  if (suite == "all") {
    todo = suites::names();
  } else {
    todo.push_back(suite);
  }
  std::vector<suites::SuiteResult> results;
  for (const auto& name : todo) results.push_back(suites::run(name, ctx.settings.seed, ctx.engine()));
  all_pass = std::all_of(results.begin(), results.end(),
                         [](const suites::SuiteResult& r) { return r.pass(); });

  report::Json json;
  json["seed"] = ctx.settings.seed;
  json["suites"] = report::Json::array();
  std::string csv = "seed,suite,checks,failures,pass,detail\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : results) {
    report::Json e;
    e["suite"] = r.name;
    e["checks"] = r.checks;
    e["failures"] = r.failures;
    e["pass"] = r.pass();
    e["detail"] = r.detail;
    json["suites"].push_back(std::move(e));
    csv += fmt::format("{},{},{},{},{},{}\n", ctx.settings.seed, r.name, r.checks, r.failures,
                       r.pass() ? "true" : "false", report::csv_field(r.detail));
    rows.push_back({r.name, std::to_string(r.checks), std::to_string(r.failures),
                    r.pass() ? "pass" : "FAIL", r.detail});
  }
  json["pass"] = all_pass;
  std::string text = fmt::format("seed={}\n\n", ctx.settings.seed);
  text += table({"suite", "checks", "failures", "result", "detail"}, rows);
  return render(ctx, json, csv, text);
}

std::string cmd_sweep(const Context& ctx, int n_min, int n_max) {
  const auto rows = sweep_length4_pairs(n_min, n_max, ctx.experiment());
  report::Json json = report::Json::array();
  std::string csv = "patterns,n,nontrivial\n";
  std::vector<std::string> head{"patterns"};
  for (int n = n_min; n <= n_max; ++n) head.push_back(fmt::format("n={}", n));
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    report::Json e;
    e["patterns"] = row.pi.to_string();
    report::Json counts = report::Json::object();
    std::vector<std::string> line{row.pi.to_string()};
    for (int n = n_min; n <= n_max; ++n) {
      const auto& v = row.nontrivial[static_cast<std::size_t>(n - n_min)];
      counts[std::to_string(n)] = v ? report::Json(*v) : report::Json(nullptr);
      csv += fmt::format("{},{},{}\n", report::csv_field(row.pi.to_string()), n,
                         v ? std::to_string(*v) : "");
      line.push_back(opt_text(v));
    }
    e["nontrivial"] = std::move(counts);
    json.push_back(std::move(e));
    cells.push_back(std::move(line));
  }
  return render(ctx, json, csv, table(head, cells));
}

std::string join(const std::vector<std::string>& args) {
  std::string out;
  for (const auto& a : args) {
    if (!out.empty()) out.push_back(' ');
    out += a;
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pattern-replacement equivalence classes on permutations", "permclass"};
  app.require_subcommand(1);

  // Raw flag values; resolved against config, environment and defaults below.
  std::string memory_budget, format, cache_dir, config_path, output_path;
  int threads = 0;
  std::uint64_t seed = 0;
  bool no_timing = false;
  bool no_cache = false;
  std::vector<CLI::Option*> flag_opts;
  auto common = [&](CLI::App* sub) {
    flag_opts.push_back(sub->add_option("--memory-budget", memory_budget,
                                        "Memory budget in bytes (suffix K, M or G allowed)"));
    flag_opts.push_back(sub->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber));
    flag_opts.push_back(sub->add_option("--format", format, "table, json or csv")
                            ->check(CLI::IsMember({"table", "json", "csv"})));
    flag_opts.push_back(sub->add_option("--cache-dir", cache_dir, "Result cache directory"));
    flag_opts.push_back(sub->add_option("--seed", seed, "Seed for randomized checks"));
    flag_opts.push_back(sub->add_flag("--no-timing", no_timing, "Omit timing fields"));
    flag_opts.push_back(sub->add_flag("--no-cache", no_cache, "Ignore the result cache"));
    sub->add_option("--config", config_path, "key = value settings file");
    sub->add_option("--output", output_path, "Write the report to a file");
  };

  int n = 0, n_min = 0, n_max = 0, k = 0;
  std::string patterns, m, suite = "all";

  auto* classes = app.add_subcommand("classes", "Partition S_n under a pattern set");
  classes->add_option("--n", n, "Permutation length")->required();
  classes->add_option("--patterns", patterns, "Pattern set, e.g. 1234,3421 or adj:123,321")->required();
  common(classes);

  auto* rot = app.add_subcommand("rotational", "Class counts of an m-rotational equivalence");
  rot->add_option("--m", m, "Pattern")->required();
  auto* rot_nmax = rot->add_option("--n-max", n_max, "Largest n (default 2c-1)");
  common(rot);

  auto* pseudo = app.add_subcommand("pseudo", "Pseudo-permutation classes");
  pseudo->add_option("--m", m, "Pattern (rotated to begin with 1)")->required();
  pseudo->add_option("--n", n, "Ambient length")->required();
  common(pseudo);

  auto* erdos = app.add_subcommand("erdos", "{12..k, k..21} class counts against predictions");
  erdos->add_option("--k", k, "Pattern length")->required();
  auto* erdos_n = erdos->add_option("--n", n, "Permutation length");
  auto* erdos_nmin = erdos->add_option("--n-min", n_min, "First n of a range");
  auto* erdos_nmax = erdos->add_option("--n-max", n_max, "Last n of a range");
  common(erdos);

  auto* oeis = app.add_subcommand("oeis", "Closed-form class counts for pairs of length-4 patterns");
  oeis->add_option("--suite", suite, "thm1, thm2, conj1, conj2 or all");
  auto* oeis_nmin = oeis->add_option("--n-min", n_min, "First n (default 7)");
  auto* oeis_nmax = oeis->add_option("--n-max", n_max, "Last n (default 9)");
  common(oeis);

  auto* verify = app.add_subcommand("verify", "Property suites");
  verify->add_option("--suite", suite, "pseudo-parity, shadowing, oracle, symmetry, certificates, prefix-chain, lexmin or all");
  common(verify);

  auto* sweep = app.add_subcommand("sweep", "Every pair of length-4 patterns");
  auto* sweep_nmin = sweep->add_option("--n-min", n_min, "First n (default 5)");
  auto* sweep_nmax = sweep->add_option("--n-max", n_max, "Last n (default 8)");
  common(sweep);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Context ctx;
  ctx.command_line = join(args);
  ctx.err = &err;
  try {
    // Defaults, then environment, then config file, then flags.
    Settings& s = ctx.settings;
    if (const char* env = std::getenv("PERMCLASS_CACHE_DIR"); env && *env) s.cache_dir = env;
    if (!config_path.empty()) apply_config_file(s, config_path);
    auto given = [&](const char* name) {
      return std::any_of(flag_opts.begin(), flag_opts.end(), [&](CLI::Option* o) {
        return o->get_name() == name && o->count() > 0;
      });
    };
    if (given("--memory-budget")) s.memory_budget = parse_bytes(memory_budget);
    if (given("--threads")) s.threads = threads;
    if (given("--format")) apply(s, "format", format);
    if (given("--cache-dir")) s.cache_dir = cache_dir;
    if (given("--seed")) s.seed = seed;
    if (no_timing) s.timing = false;
    if (no_cache) s.cache = false;
    if (s.memory_budget < kMinBudget) {
      throw UsageError(fmt::format("memory budget {} is below the minimum of {} bytes",
                                   s.memory_budget, kMinBudget));
    }
    if (s.threads < 1) throw UsageError("threads must be at least 1");

    const auto start = std::chrono::steady_clock::now();
    std::string body;
    bool pass = true;
    if (classes->parsed()) {
      body = cmd_classes(ctx, n, patterns);
    } else if (rot->parsed()) {
      body = cmd_rotational(ctx, m, rot_nmax->count() ? std::optional<int>(n_max) : std::nullopt);
    } else if (pseudo->parsed()) {
      body = cmd_pseudo(ctx, m, n);
    } else if (erdos->parsed()) {
      if (erdos_n->count() && (erdos_nmin->count() || erdos_nmax->count())) {
        throw UsageError("give either --n or --n-min/--n-max");
      }
      if (erdos_n->count()) {
        n_min = n_max = n;
      } else if (!erdos_nmin->count() || !erdos_nmax->count()) {
        throw UsageError("erdos needs --n or both --n-min and --n-max");
      }
      body = cmd_erdos(ctx, k, n_min, n_max, pass);
    } else if (oeis->parsed()) {
      if (!oeis_nmin->count()) n_min = 7;
      if (!oeis_nmax->count()) n_max = 9;
      body = cmd_oeis(ctx, suite, n_min, n_max, pass);
    } else if (verify->parsed()) {
      if (suite != "all" &&
          std::find(suites::names().begin(), suites::names().end(), suite) == suites::names().end()) {
        throw UsageError(fmt::format("unknown verify suite '{}'", suite));
      }
      body = cmd_verify(ctx, suite, pass);
    } else if (sweep->parsed()) {
      if (!sweep_nmin->count()) n_min = 5;
      if (!sweep_nmax->count()) n_max = 8;
      body = cmd_sweep(ctx, n_min, n_max);
    }
    if (s.format == Format::Table && s.timing) {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
      body += fmt::format("# elapsed: {} ms\n", ms);
    }

    if (output_path.empty()) {
      out << body;
    } else {
      std::ofstream file(output_path, std::ios::binary);
      file << body;
      if (!file) throw UsageError(fmt::format("cannot write {}", output_path));
    }
    if (!pass) {
      err << "permclass: one or more checks failed\n";
      return kFailed;
    }
    return kOk;
  } catch (const ResourceError& e) {
    err << "permclass: " << e.what() << "\n";
    return kResource;
  } catch (const UsageError& e) {
    err << "permclass: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidWord& e) {
    err << "permclass: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "permclass: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "permclass: " << e.what() << "\n";
    return kFailed;
  }
}

}  // namespace permclass::cli
