// Command-line surface for the tiered-trees library: table emission,
// bijection demos, and the verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 capacity
// refusal.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tiered/bijections.hpp"
#include "tiered/cnat.hpp"
#include "tiered/counting.hpp"
#include "tiered/json_io.hpp"
#include "tiered/parallel.hpp"
#include "tiered/permweight.hpp"
#include "tiered/verify.hpp"
#include "tiered/weight.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using tiered::ordered_json;

// ---- input parsing ----------------------------------------------------------

// A permutation argument is either the compact zero-based digit form the
// tables in this area are usually written in ("8594673201") or a
// comma-separated one-based word ("9,6,10,5,7,8,4,3,1,2").
tiered::Permutation parse_perm_arg(const std::string& arg) {
  if (arg.find(',') == std::string::npos) return tiered::parse_compact(arg);
  std::vector<int> word;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) word.push_back(std::stoi(item));
  return tiered::Permutation(std::move(word));
}

// Cycle letters are literal values: '1'..'9' then 'A' = 10, 'B' = 11, ...
int parse_cycle_letter(char c) {
  if (c >= '1' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  throw std::domain_error(std::string("unrecognized cycle letter '") + c + "'");
}

std::vector<std::vector<int>> parse_cycles(const std::string& arg) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> current;
  bool open = false;
  for (char c : arg) {
    if (c == '(') {
      if (open) throw std::domain_error("nested '(' in cycle notation");
      open = true;
      current.clear();
    } else if (c == ')') {
      if (!open || current.empty()) throw std::domain_error("empty or unopened cycle");
      open = false;
      cycles.push_back(current);
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      if (!open) throw std::domain_error("cycle letter outside parentheses");
      current.push_back(parse_cycle_letter(c));
    }
  }
  if (open) throw std::domain_error("unclosed cycle");
  if (cycles.empty()) throw std::domain_error("no cycles given");
  return cycles;
}

// Blocks like "25|6130|798|4", compact zero-based symbols.
std::vector<std::vector<int>> parse_partition_blocks(const std::string& arg) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> current;
  for (char c : arg) {
    if (c == '|') {
      if (current.empty()) throw std::domain_error("empty partition block");
      blocks.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current.push_back(tiered::symbol_to_value(c));
    }
  }
  if (current.empty()) throw std::domain_error("empty partition block");
  blocks.push_back(current);
  return blocks;
}

// JSON arguments may be given inline or as @path-to-file.
ordered_json parse_json_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw std::domain_error("cannot read file " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::domain_error("argument is not valid JSON");
  return j;
}

ordered_json perm_json(const tiered::Permutation& p) {
  ordered_json j;
  j["word"] = p.word();
  if (p.size() <= 36) j["compact"] = tiered::format_compact(p);
  return j;
}

// ---- tables -----------------------------------------------------------------

struct TableOptions {
  int max_n = 6;
  int rows = 4;
  int cols = 9;
  std::string format = "csv";
  std::string cache_dir;
  int threads = 0;  // 0: machine parallelism
};

int effective_threads(int requested) {
  return requested > 0 ? requested : tiered::hardware_threads();
}

// Tier types with up to max_n vertices in the reference order: grouped by n,
// then by the number of tiers, then lexicographically; the trivially-1 types
// {1, n-1} are omitted.
std::vector<std::vector<int>> qpoly_tier_types(int max_n) {
  std::vector<std::vector<int>> out;
  for (int n = 3; n <= max_n; ++n) {
    std::vector<std::vector<int>> rows;
    tiered::for_each_partition(n, [&](const std::vector<int>& parts) {
      if (parts.size() < 2) return;
      if (parts.size() == 2 && parts[1] == 1) return;  // {n-1,1}
      std::vector<int> increasing(parts.rbegin(), parts.rend());
      rows.push_back(increasing);
    });
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    out.insert(out.end(), rows.begin(), rows.end());
  }
  return out;
}

std::string render_qpolys(const TableOptions& opt) {
  if (opt.max_n > tiered::kDefaultTreeCapacity)
    throw tiered::capacity_error("table qpolys: --max-n " + std::to_string(opt.max_n) +
                                 " exceeds capacity " +
                                 std::to_string(tiered::kDefaultTreeCapacity));
  std::ostringstream os;
  int threads = effective_threads(opt.threads);
  auto types = qpoly_tier_types(opt.max_n);
  if (opt.format == "json") {
    ordered_json rows = ordered_json::array();
    for (const auto& parts : types) {
      tiered::IntPoly poly = tier_poly(tiered::TierType(parts), tiered::kDefaultTreeCapacity,
                                       threads);
      ordered_json row;
      row["tier_type"] = parts;
      row["poly"] = poly.str();
      rows.push_back(std::move(row));
    }
    os << rows.dump(2) << "\n";
  } else if (opt.format == "latex") {
    for (const auto& parts : types) {
      tiered::TierType p(parts);
      os << "$" << p.str() << "$&$"
         << tier_poly(p, tiered::kDefaultTreeCapacity, threads).str("q", true) << "$\\\\\n";
    }
  } else {
    os << "tier_type,poly\n";
    for (const auto& parts : types) {
      tiered::TierType p(parts);
      os << "\"" << p.str() << "\","
         << tier_poly(p, tiered::kDefaultTreeCapacity, threads).str() << "\n";
    }
  }
  return os.str();
}

std::string render_counts(const TableOptions& opt) {
  tiered::CountTable table = tiered::CountTable::build(opt.max_n);
  std::ostringstream os;
  if (opt.format == "json") {
    ordered_json rows = ordered_json::array();
    for (const auto& [key, val] : table.entries) {
      ordered_json row;
      row["n"] = key.first;
      row["m"] = key.second;
      row["T"] = val.first.str();
      row["P"] = val.second.str();
      rows.push_back(std::move(row));
    }
    os << rows.dump(2) << "\n";
  } else if (opt.format == "latex") {
    for (const auto& [key, val] : table.entries)
      os << key.first << "&" << key.second << "&" << val.first.str() << "&" << val.second.str()
         << "\\\\\n";
  } else {
    os << table.to_csv();
  }
  return os.str();
}

std::string render_triangle(const TableOptions& opt) {
  std::ostringstream os;
  if (opt.format == "json") {
    ordered_json rows = ordered_json::array();
    for (int k = 1; k <= opt.rows; ++k) {
      ordered_json row;
      row["k"] = k;
      ordered_json values = ordered_json::array();
      for (int n = k; n <= opt.cols; ++n)
        values.push_back(tiered::two_colored_triangle(n, k).str());
      row["values"] = std::move(values);
      rows.push_back(std::move(row));
    }
    os << rows.dump(2) << "\n";
  } else if (opt.format == "latex") {
    for (int k = 1; k <= opt.rows; ++k) {
      for (int n = 1; n <= opt.cols; ++n) {
        if (n > 1) os << "&";
        if (n >= k) os << tiered::two_colored_triangle(n, k).str();
      }
      os << "\\\\\n";
    }
  } else {
    os << "n,k,T\n";
    for (int k = 1; k <= opt.rows; ++k)
      for (int n = k; n <= opt.cols; ++n)
        os << n << "," << k << "," << tiered::two_colored_triangle(n, k).str() << "\n";
  }
  return os.str();
}

// The cache is an optimization only: keyed by operation, bounds, format, and
// code version; verification never reads it.
int emit_table(const std::string& kind, const TableOptions& opt) {
  std::string key;
  if (kind == "triangle")
    key = kind + "-r" + std::to_string(opt.rows) + "-c" + std::to_string(opt.cols);
  else
    key = kind + "-n" + std::to_string(opt.max_n);
  key += "-" + opt.format + "-v" + kVersion;

  if (!opt.cache_dir.empty()) {
    std::filesystem::path path = std::filesystem::path(opt.cache_dir) / key;
    if (std::ifstream in(path); in) {
      std::cout << in.rdbuf();
      return 0;
    }
  }

  std::string payload;
  if (kind == "qpolys")
    payload = render_qpolys(opt);
  else if (kind == "counts")
    payload = render_counts(opt);
  else
    payload = render_triangle(opt);

  if (!opt.cache_dir.empty()) {
    std::filesystem::create_directories(opt.cache_dir);
    std::ofstream out(std::filesystem::path(opt.cache_dir) / key);
    out << payload;
  }
  std::cout << payload;
  return 0;
}

// ---- bijections -------------------------------------------------------------

ordered_json tree_stats(const tiered::TieredTree& t) {
  ordered_json stats;
  stats["weight"] = tiered::tree_weight(t);
  stats["maxima"] =
      static_cast<int>(std::count(t.tiers.begin(), t.tiers.end(), 2));
  return stats;
}

int run_perm_tree(const std::string& input, bool inverse) {
  ordered_json out;
  if (inverse) {
    tiered::TieredTree t = tiered::tree_from_json(parse_json_arg(input));
    tiered::Permutation pi = tiered::tree_to_perm(t);
    out["tree"] = tiered::tree_to_json(t);
    out["permutation"] = perm_json(pi);
    ordered_json stats;
    stats["descents"] = tiered::descents(pi);
    stats["weight"] = tiered::perm_weight(pi);
    stats["blocks"] = tiered::block_count(pi);
    out["stats"] = std::move(stats);
  } else {
    tiered::Permutation pi = parse_perm_arg(input);
    tiered::TieredTree t = tiered::perm_to_tree(pi);
    out["permutation"] = perm_json(pi);
    out["tree"] = tiered::tree_to_json(t);
    ordered_json stats = tree_stats(t);
    stats["descents"] = tiered::descents(pi);
    stats["blocks"] = tiered::block_count(pi);
    out["stats"] = std::move(stats);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_partition_perm(const std::string& input, bool inverse) {
  ordered_json out;
  if (inverse) {
    tiered::Permutation pi = parse_perm_arg(input);
    tiered::SetPartition part = tiered::perm_to_partition(pi);
    out["permutation"] = perm_json(pi);
    out["partition"] = part.blocks;
    out["stats"] = {{"descents", tiered::descents(pi)},
                    {"blocks", static_cast<int>(part.blocks.size())}};
  } else {
    auto blocks = parse_partition_blocks(input);
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    tiered::SetPartition part = tiered::SetPartition::canonical(blocks, n);
    tiered::Permutation pi = tiered::partition_to_perm(part);
    out["partition"] = part.blocks;
    out["permutation"] = perm_json(pi);
    out["stats"] = {{"descents", tiered::descents(pi)},
                    {"weight", tiered::perm_weight(pi)},
                    {"blocks", static_cast<int>(part.blocks.size())}};
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_cycle_insert(const std::string& input, int after, bool own_cycle) {
  auto cycles = parse_cycles(input);
  int m = 0;
  for (const auto& c : cycles) m += static_cast<int>(c.size());
  if (own_cycle == (after > 0))
    throw std::domain_error("give exactly one of --after or --own-cycle");
  if (!own_cycle && (after < 1 || after > m))
    throw std::domain_error("--after must name one of the letters 1.." + std::to_string(m));
  int pos = own_cycle ? m + 1 : after;
  tiered::Permutation pi = tiered::cycle_insertion(cycles, pos);
  ordered_json out;
  out["cycles"] = cycles;
  out["insert"] = own_cycle ? "own-cycle" : "after " + std::to_string(after);
  out["permutation"] = perm_json(pi);
  out["stats"] = {{"cycles", static_cast<int>(cycles.size())},
                  {"blocks", tiered::block_count(pi)},
                  {"descents", tiered::descents(pi)}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_cnat_tiered(const std::string& input, bool inverse) {
  ordered_json out;
  if (inverse) {
    tiered::TieredTree t = tiered::tree_from_json(parse_json_arg(input));
    tiered::Cnat a = tiered::tiered_to_cnat(t);
    out["tree"] = tiered::tree_to_json(t);
    out["cnat"] = tiered::cnat_to_json(a);
    out["stats"] = {{"k", a.internal_count()}, {"weight", tiered::tree_weight(t)}};
  } else {
    tiered::Cnat a = tiered::cnat_from_json(parse_json_arg(input));
    tiered::TieredTree t = tiered::cnat_to_tiered(a);
    out["cnat"] = tiered::cnat_to_json(a);
    out["tree"] = tiered::tree_to_json(t);
    out["stats"] = {{"k", a.internal_count()}, {"weight", tiered::tree_weight(t)}};
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

// ---- verify -----------------------------------------------------------------

int run_verify(const std::string& scope, const std::string& profile, int threads,
               unsigned long long seed, const std::string& format) {
  tiered::verify::Options opt;
  opt.profile =
      profile == "quick" ? tiered::verify::Profile::quick : tiered::verify::Profile::full;
  opt.threads = effective_threads(threads);
  opt.seed = seed;
  if (scope != "all" && !scope.empty()) {
    std::stringstream ss(scope);
    std::string item;
    while (std::getline(ss, item, ',')) opt.scopes.push_back(item);
  }

  tiered::verify::Report report = tiered::verify::run(opt);
  if (format == "json") {
    ordered_json j;
    ordered_json checks = ordered_json::array();
    for (const auto& r : report.checks) {
      ordered_json c;
      c["name"] = r.name;
      c["scope"] = r.scope;
      if (r.criterion) c["criterion"] = r.criterion;
      c["status"] = r.passed ? "pass" : "fail";
      c["detail"] = r.detail;
      checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    j["passed"] = report.passed();
    j["failed"] = report.failed();
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : report.checks)
      std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << " [" << r.scope << "]: "
                << r.detail << "\n";
    std::cout << report.passed() << " passed, " << report.failed() << " failed\n";
  }
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tiered trees: enumeration, weights, and q-Eulerian polynomials"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // table
  auto* table = app.add_subcommand("table", "emit a computed table");
  std::string table_kind;
  table->add_option("kind", table_kind, "qpolys | counts | triangle")
      ->required()
      ->check(CLI::IsMember({"qpolys", "counts", "triangle"}));
  TableOptions topt;
  table->add_option("--max-n", topt.max_n, "largest vertex count")->envname("TIERED_MAX_N");
  table->add_option("--rows", topt.rows, "triangle rows");
  table->add_option("--cols", topt.cols, "triangle columns");
  table->add_option("--format", topt.format, "csv | json | latex")
      ->check(CLI::IsMember({"csv", "json", "latex"}))
      ->envname("TIERED_FORMAT");
  table->add_option("--cache-dir", topt.cache_dir, "cache computed tables here")
      ->envname("TIERED_CACHE_DIR");
  table->add_option("--threads", topt.threads, "worker threads (0 = machine parallelism)")
      ->envname("TIERED_THREADS");

  // bijection
  auto* bij = app.add_subcommand("bijection", "run one of the structural bijections");
  std::string bij_name, bij_input;
  bool bij_inverse = false;
  int bij_after = 0;
  bool bij_own = false;
  bij->add_option("name", bij_name, "perm-tree | partition-perm | cycle-insert | cnat-tiered")
      ->required()
      ->check(CLI::IsMember({"perm-tree", "partition-perm", "cycle-insert", "cnat-tiered"}));
  bij->add_option("input", bij_input,
                  "permutation, blocks, cycles, or JSON (@file reads from a file)")
      ->required();
  bij->add_flag("--inverse", bij_inverse, "apply the inverse direction");
  bij->add_option("--after", bij_after, "cycle-insert: put the new minimum after this letter");
  bij->add_flag("--own-cycle", bij_own, "cycle-insert: the new minimum forms its own cycle");

  // verify
  auto* ver = app.add_subcommand("verify", "run the verification suite");
  std::string ver_scope = "all";
  std::string ver_profile = "full";
  std::string ver_format = "text";
  int ver_threads = 0;
  unsigned long long ver_seed = 12345;
  ver->add_option("--scope", ver_scope, "all or comma-separated module list");
  ver->add_option("--profile", ver_profile, "quick | full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->envname("TIERED_PROFILE");
  ver->add_option("--threads", ver_threads, "worker threads (0 = machine parallelism)")
      ->envname("TIERED_THREADS");
  ver->add_option("--seed", ver_seed, "seed for randomized property sampling")
      ->envname("TIERED_SEED");
  ver->add_option("--format", ver_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("TIERED_FORMAT");

  try {
    app.parse(argc, argv);
    if (table->parsed()) return emit_table(table_kind, topt);
    if (bij->parsed()) {
      if (bij_name == "perm-tree") return run_perm_tree(bij_input, bij_inverse);
      if (bij_name == "partition-perm") return run_partition_perm(bij_input, bij_inverse);
      if (bij_name == "cycle-insert") return run_cycle_insert(bij_input, bij_after, bij_own);
      return run_cnat_tiered(bij_input, bij_inverse);
    }
    if (ver->parsed())
      return run_verify(ver_scope, ver_profile, ver_threads, ver_seed, ver_format);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const tiered::capacity_error& e) {
    std::cerr << "capacity refusal: " << e.what() << "\n";
    return 3;
  } catch (const tiered::verification_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
