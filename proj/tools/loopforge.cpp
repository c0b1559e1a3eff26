// loopforge: validate, analyze, isotope, verify and generate finite loops.
//
// Exit status: 0 success (all selected checks pass), 1 a check failed,
// 2 invalid input or configuration.

#include <omp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "loopforge/catalog.hpp"
#include "loopforge/error.hpp"
#include "loopforge/report.hpp"
#include "loopforge/sbs.hpp"

namespace fs = std::filesystem;
using namespace loopforge;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInvalid = 2;

struct CliConfig {
  std::size_t search_cap = 10;
  int jobs = 1;
  bool json = false;
};

SearchConfig search_config(const CliConfig& cli) {
  return {cli.search_cap, cli.jobs > 1 ? Execution::Parallel : Execution::Serial};
}

std::vector<Element> parse_csv(const std::string& text) {
  std::vector<Element> out;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) {
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(field, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != field.size()) {
      throw Error(ErrorKind::Parse, "bad element '" + field + "' in --subgroup");
    }
    out.push_back(static_cast<Element>(value));
  }
  if (out.empty()) throw Error(ErrorKind::Parse, "empty --subgroup list");
  return out;
}

std::vector<SubgroupSet> chosen_subgroups(const LoopTable& loop,
                                          const std::optional<std::string>& subgroup) {
  if (subgroup) {
    for (Element x : parse_csv(*subgroup)) {
      if (x >= loop.order()) {
        throw Error(ErrorKind::OutOfRange, "--subgroup element " + std::to_string(x) +
                                               " out of range for order " +
                                               std::to_string(loop.order()));
      }
    }
    auto h = SubgroupSet::certify(loop, parse_csv(*subgroup));
    SLoopContext check(loop, h);  // rejects trivial or improper H
    return {h};
  }
  auto hs = s_subgroups(loop);
  if (hs.empty()) {
    throw Error(ErrorKind::NotSLoop, "not an S-loop: no non-trivial proper subgroup");
  }
  return hs;
}

std::vector<std::string> parse_selector(const std::string& selector) {
  if (selector == "all") return {kCheckKeys.begin(), kCheckKeys.end()};
  std::vector<std::string> keys;
  std::stringstream in(selector);
  std::string key;
  while (std::getline(in, key, ',')) {
    if (std::find(kCheckKeys.begin(), kCheckKeys.end(), key) == kCheckKeys.end()) {
      throw Error(ErrorKind::Parse, "unknown theorem selector '" + key + "'");
    }
    keys.push_back(key);
  }
  if (keys.empty()) throw Error(ErrorKind::Parse, "empty theorem selector");
  return keys;
}

std::string cardinality_line(const CardinalityReport& r) {
  std::ostringstream out;
  out << "order=" << r.order << " |H|=" << r.h << " |BS|=" << r.bs << " |SBS|=" << r.sbs
      << " |SSYM|=" << r.ssym << " |AUM|=" << r.aum << " |SA|=" << r.sa
      << " |AUT|=" << r.aut << " |Omega|=" << r.omega << " |Theta|=" << r.theta
      << " |N_mu|=" << r.n_mu << " |N_mu∩H|=" << r.n_mu_cap_h << " |ker Phi|=" << r.ker_phi;
  return out.str();
}

std::string subset_string(std::span<const Element> elems) {
  std::string out = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elems[i]);
  }
  return out + "}";
}

// ---- report cache (LOOPFORGE_CACHE) ---------------------------------------

std::optional<fs::path> cache_dir() {
  const char* dir = std::getenv("LOOPFORGE_CACHE");
  if (!dir || !*dir) return std::nullopt;
  return fs::path(dir);
}

ordered_json verification_json(const std::string& id, const LoopVerification& v,
                               bool with_aggregate) {
  ordered_json doc;
  doc["id"] = id;
  ordered_json reports = ordered_json::array();
  for (const auto& r : v.reports) {
    reports.push_back({{"subgroup", r.h_elements}, {"report", to_json(r)}});
  }
  doc["reports"] = std::move(reports);
  if (with_aggregate) doc["aggregate"] = to_json(v.aggregate);
  return doc;
}

std::optional<LoopVerification> load_cached(const fs::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const auto doc = nlohmann::json::parse(in);
    LoopVerification v;
    for (const auto& item : doc.at("reports")) {
      if (!matches_report_schema(item.at("report"))) return std::nullopt;
      auto r = report_from_json(item.at("report"));
      r.h_elements = item.at("subgroup").get<std::vector<Element>>();
      v.reports.push_back(std::move(r));
    }
    if (doc.contains("aggregate")) {
      const auto& a = doc.at("aggregate");
      v.aggregate.order = a.at("order").get<std::size_t>();
      v.aggregate.s_subgroups = a.at("s_subgroups").get<std::size_t>();
      v.aggregate.bs = a.at("bs").get<std::size_t>();
      v.aggregate.weighted_sum = a.at("weighted_sum").get<std::size_t>();
      const auto status = a.at("t14").at("status").get<std::string>();
      v.aggregate.t14 = {status == "pass"   ? CheckStatus::Pass
                         : status == "fail" ? CheckStatus::Fail
                                            : CheckStatus::NotApplicable,
                         a.at("t14").at("detail").get<std::string>()};
    }
    return v;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string cache_key(const LoopTable& loop, const std::optional<std::string>& subgroup,
                      const std::vector<SubgroupSet>& hs) {
  std::string key = content_id(loop);
  if (subgroup) {
    std::ostringstream mask;
    mask << std::hex << hs.front().mask();
    key += "-h" + mask.str();
  }
  return key + ".report.json";
}

LoopVerification compute(const LoopTable& loop, const std::optional<std::string>& subgroup,
                         const CliConfig& cli) {
  const auto hs = chosen_subgroups(loop, subgroup);
  std::optional<fs::path> cached;
  if (auto dir = cache_dir()) {
    cached = *dir / cache_key(loop, subgroup, hs);
    if (auto v = load_cached(*cached)) return *v;
  }

  LoopVerification v;
  if (subgroup) {
    v.reports.push_back(verify_context(SLoopContext(loop, hs.front()), search_config(cli)));
  } else {
    v = verify_theorems(loop, search_config(cli));
  }

  if (cached) {
    std::error_code ec;
    fs::create_directories(cached->parent_path(), ec);
    std::ofstream out(*cached);
    if (out) out << verification_json(content_id(loop), v, !subgroup).dump(2) << "\n";
  }
  return v;
}

// ---- commands ---------------------------------------------------------------

int cmd_validate(const std::string& file, const CliConfig& cli) {
  const auto loop = read_table(file);
  const auto hs = s_subgroups(loop);
  if (cli.json) {
    ordered_json doc;
    doc["file"] = file;
    doc["id"] = content_id(loop);
    doc["order"] = loop.order();
    doc["identity"] = loop.identity();
    doc["associative"] = loop.associative();
    ordered_json list = ordered_json::array();
    for (const auto& h : hs) list.push_back(std::vector<Element>(h.elements().begin(), h.elements().end()));
    doc["s_subgroups"] = std::move(list);
    std::cout << doc.dump(2) << "\n";
    return kOk;
  }
  std::cout << file << ": valid loop\n"
            << "id: " << content_id(loop) << "\n"
            << "order: " << loop.order() << "\n"
            << "identity element: " << loop.identity() << "\n"
            << "associative: " << (loop.associative() ? "yes" : "no") << "\n"
            << "S-subgroups:";
  if (hs.empty()) std::cout << " none";
  for (const auto& h : hs) std::cout << " " << h.to_string();
  std::cout << "\n";
  return kOk;
}

int cmd_analyze(const std::string& file, const std::optional<std::string>& subgroup,
                const CliConfig& cli) {
  const auto loop = read_table(file);
  const auto v = compute(loop, subgroup, cli);
  if (cli.json) {
    std::cout << verification_json(content_id(loop), v, !subgroup).dump(2) << "\n";
    return kOk;
  }
  std::cout << file << " (order " << loop.order() << ", identity " << loop.identity()
            << (loop.associative() ? ", associative" : ", non-associative") << ")\n";
  for (const auto& r : v.reports) {
    std::cout << "S-subgroup H=" << subset_string(r.h_elements) << "\n  "
              << cardinality_line(r) << "\n";
    for (std::size_t i = 0; i < kCheckKeys.size(); ++i) {
      std::cout << "  " << kCheckKeys[i] << " " << to_string(r.checks[i].status) << ": "
                << r.checks[i].detail << "\n";
    }
  }
  if (!subgroup) {
    std::cout << "aggregate over " << v.aggregate.s_subgroups << " S-subgroup(s): t14 "
              << to_string(v.aggregate.t14.status) << ": " << v.aggregate.t14.detail << "\n";
  }
  return kOk;
}

int cmd_isotope(const std::string& file, Element f, Element g,
                const std::optional<std::string>& out) {
  const auto loop = read_table(file);
  const auto record = principal_isotope(loop, f, g);
  if (out) write_table(record.result, *out);
  std::cout << format_isotope_record(record);
  return kOk;
}

// Prints the selected checks of one verification; returns true if all pass.
bool print_verification(std::ostream& os, const std::string& label, const LoopTable& loop,
                        const LoopVerification& v, const std::vector<std::string>& keys,
                        bool with_aggregate) {
  bool ok = true;
  for (const auto& r : v.reports) {
    os << label << " H=" << subset_string(r.h_elements) << ": " << cardinality_line(r) << "\n";
    for (const auto& key : keys) {
      const auto& c = r.check(key);
      os << "  " << key << " " << to_string(c.status) << ": " << c.detail << "\n";
      if (c.status == CheckStatus::Fail) ok = false;
    }
  }
  const bool wants_t14 = std::find(keys.begin(), keys.end(), "t14") != keys.end();
  if (with_aggregate && wants_t14) {
    os << label << " aggregate t14 " << to_string(v.aggregate.t14.status) << ": "
       << v.aggregate.t14.detail << "\n";
    if (v.aggregate.t14.status == CheckStatus::Fail) ok = false;
  }
  if (!ok) os << "counterexample table:\n" << format_table(loop);
  return ok;
}

int cmd_verify(const std::string& target, const std::string& selector,
               const std::optional<std::string>& subgroup, const CliConfig& cli) {
  const auto keys = parse_selector(selector);

  if (!fs::is_directory(target)) {
    const auto loop = read_table(target);
    const auto v = compute(loop, subgroup, cli);
    if (cli.json) {
      std::cout << verification_json(content_id(loop), v, !subgroup).dump(2) << "\n";
      bool ok = true;
      for (const auto& r : v.reports)
        for (const auto& k : keys) ok = ok && r.check(k).status != CheckStatus::Fail;
      return ok ? kOk : kCheckFailed;
    }
    return print_verification(std::cout, target, loop, v, keys, !subgroup) ? kOk : kCheckFailed;
  }

  // Catalog directory: entries verified concurrently, reports written and
  // printed afterwards in index order.
  const fs::path dir(target);
  const auto index = read_catalog_index(dir);
  std::vector<LoopTable> loops;
  for (const auto& row : index) loops.push_back(read_table(dir / (row.id + ".loop")));

  struct Outcome {
    std::optional<LoopVerification> verification;
    std::string error;
  };
  std::vector<Outcome> outcomes(loops.size());
  const SearchConfig inner{cli.search_cap, Execution::Serial};
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < loops.size(); ++i) {
    try {
      if (s_subgroups(loops[i]).empty()) continue;
      outcomes[i].verification = verify_theorems(loops[i], inner);
    } catch (const std::exception& e) {
      outcomes[i].error = e.what();
    }
  }

  std::size_t verified = 0, skipped = 0, failed = 0, errors = 0;
  for (std::size_t i = 0; i < loops.size(); ++i) {
    const auto& id = index[i].id;
    if (!outcomes[i].error.empty()) {
      std::cerr << id << ": " << outcomes[i].error << "\n";
      ++errors;
      continue;
    }
    if (!outcomes[i].verification) {
      ++skipped;
      continue;
    }
    const auto& v = *outcomes[i].verification;
    std::ofstream out(dir / (id + ".report.json"));
    out << verification_json(id, v, true).dump(2) << "\n";
    ++verified;
    std::ostringstream text;
    if (!print_verification(text, id, loops[i], v, keys, true)) {
      ++failed;
      if (!cli.json) std::cout << text.str();
    }
  }
  if (cli.json) {
    ordered_json doc{{"entries", loops.size()}, {"verified", verified}, {"skipped", skipped},
                     {"failed", failed}, {"errors", errors}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "verified " << verified << " of " << loops.size() << " entries ("
              << skipped << " without S-subgroup): " << failed << " with failing checks, "
              << errors << " errors\n";
  }
  if (errors) return kInvalid;
  return failed ? kCheckFailed : kOk;
}

int cmd_generate(std::size_t n, const GenerateFilters& filters, const std::string& out,
                 const CliConfig& cli) {
  const auto entries = generate_loops(n, filters);
  write_catalog(out, entries);
  if (cli.json) {
    std::cout << ordered_json{{"order", n}, {"entries", entries.size()}, {"out", out}}.dump(2)
              << "\n";
  } else {
    std::cout << "wrote " << entries.size() << " loops of order " << n << " to " << out << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"loopforge: finite loops, Bryant-Schneider groups and their Smarandache analogues"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cli;
  app.add_flag("--json", cli.json, "Emit JSON");
  app.add_option("--jobs", cli.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--search-cap", cli.search_cap, "Largest order for exhaustive searches")
      ->check(CLI::Range(std::size_t{2}, std::size_t{64}));

  std::string file;
  std::optional<std::string> subgroup;
  std::optional<std::string> out;
  std::string selector = "all";
  unsigned f = 0, g = 0;

  auto* validate = app.add_subcommand("validate", "Validate a Cayley table file");
  validate->add_option("file", file)->required();

  auto* analyze = app.add_subcommand("analyze", "Cardinality report per S-subgroup");
  analyze->add_option("file", file)->required();
  analyze->add_option("--subgroup", subgroup, "Comma-separated S-subgroup elements");

  auto* isotope = app.add_subcommand("isotope", "Build the f,g-principal isotope");
  isotope->add_option("file", file)->required();
  isotope->add_option("-f", f)->required();
  isotope->add_option("-g", g)->required();
  isotope->add_option("-o,--out", out, "Write the isotope table here");

  auto* verify = app.add_subcommand("verify", "Run theorem checks on a file or catalog directory");
  verify->add_option("target", file)->required();
  verify->add_option("--theorem", selector, "Check keys (comma-separated) or 'all'");
  verify->add_option("--subgroup", subgroup, "Comma-separated S-subgroup elements");

  std::size_t order = 0;
  GenerateFilters filters;
  std::size_t limit = 0;
  auto* generate = app.add_subcommand("generate", "Enumerate normalized loops into a catalog");
  generate->add_option("n", order)->required();
  generate->add_flag("--nonassociative", filters.nonassociative);
  generate->add_flag("--require-s-subgroup", filters.require_s_subgroup);
  auto* limit_opt = generate->add_option("--limit", limit);
  generate->add_flag("--allow-order-6", filters.allow_order_6, "Permit the 9408-table order-6 run");
  generate->add_option("-o,--out", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  omp_set_num_threads(cli.jobs);
  try {
    if (*validate) return cmd_validate(file, cli);
    if (*analyze) return cmd_analyze(file, subgroup, cli);
    if (*isotope) return cmd_isotope(file, f, g, out);
    if (*verify) return cmd_verify(file, selector, subgroup, cli);
    if (*generate) {
      if (*limit_opt) filters.limit = limit;
      filters.execution = cli.jobs > 1 ? Execution::Parallel : Execution::Serial;
      return cmd_generate(order, filters, *out, cli);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
