#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hatperm/bijections.hpp"
#include "hatperm/eco_tree.hpp"
#include "hatperm/oracle.hpp"
#include "hatperm/paths.hpp"
#include "hatperm/pattern.hpp"
#include "hatperm/permutation.hpp"
#include "hatperm/verify.hpp"

namespace hatperm::cli {
namespace {

using json = nlohmann::json;

constexpr const char* kSizeEnv = "HATPERM_N";

// Size used by `verify` when neither --n nor the environment gives one.
int default_suite_size(const std::string& suite) {
  static const std::map<std::string, int> sizes = {
      {"cat", 9}, {"udu", 9},  {"fac", 9},    {"mot", 8},   {"equ", 7},    {"eco", 8},
      {"sta", 9}, {"ss", 8},   {"l132", 8},   {"theta", 9}, {"phi", 9},    {"counts", 10},
      {"hat1", 6}, {"hat2", 7}, {"embed", 4}};
  const auto it = sizes.find(suite);
  return it == sizes.end() ? 6 : it->second;
}

std::optional<int> size_from_env() {
  const char* v = std::getenv(kSizeEnv);
  if (!v || !*v) return std::nullopt;
  try {
    std::size_t used = 0;
    const int n = std::stoi(v, &used);
    if (used != std::string(v).size() || n < 0) throw std::invalid_argument(v);
    return n;
  } catch (const std::exception&) {
    throw InvalidInput(std::string(kSizeEnv) + " must be a non-negative integer");
  }
}

// --n if given, else the environment, else `fallback` (which may be empty,
// meaning the size is mandatory).
int resolve_size(const std::optional<int>& flag, std::optional<int> fallback) {
  if (flag) {
    if (*flag < 0) throw InvalidInput("--n must be >= 0");
    return *flag;
  }
  if (auto env = size_from_env()) return *env;
  if (fallback) return *fallback;
  throw InvalidInput(std::string("--n is required (or set ") + kSizeEnv + ")");
}

json node_json(const TreeNode& node) {
  json j;
  j["perm"] = to_string(node.perm);
  j["label"] = node.label;
  j["active_sites"] = node.active_sites;
  j["parent"] = node.parent ? json(*node.parent) : json(nullptr);
  return j;
}

void print_tree(const std::vector<std::vector<TreeNode>>& levels, std::size_t level,
                std::size_t index, std::ostream& out) {
  const auto& node = levels[level][index];
  out << std::string(2 * level, ' ') << to_string(node.perm) << " (" << node.label << ")\n";
  if (level + 1 >= levels.size()) return;
  const auto& next = levels[level + 1];
  for (std::size_t i = 0; i < next.size(); ++i) {
    if (next[i].parent == index) print_tree(levels, level + 1, i, out);
  }
}

struct Options {
  bool json = false;

  std::string class_spec;
  std::string paths;
  std::optional<int> n;

  std::string bijection;
  std::string input;

  std::string theorem;

  int depth = 0;
  bool csv = false;
};

int do_enumerate(const Options& o, std::ostream& out) {
  if (o.class_spec.empty() == o.paths.empty()) {
    throw InvalidInput("enumerate needs exactly one of --class or --paths");
  }
  const int n = resolve_size(o.n, std::nullopt);
  std::vector<std::string> items;
  if (!o.class_spec.empty()) {
    const auto constraints = parse_pattern_list(o.class_spec);
    for_each_in_class({n, constraints}, [&](std::span<const int> p) {
      items.push_back(to_string(p));
      return true;
    });
  } else if (o.paths == "dyck") {
    for (const auto& w : enumerate_dyck(n)) items.push_back(w.str());
  } else {
    for (const auto& w : enumerate_motzkin(n)) items.push_back(w.str());
  }
  if (o.json) {
    out << json{{"n", n}, {"count", items.size()}, {"items", items}}.dump() << '\n';
  } else {
    for (const auto& s : items) out << s << '\n';
  }
  return kOk;
}

std::string forward(const std::string& bijection, const std::string& input) {
  if (bijection == "phi") return phi(parse_permutation(input)).str();
  if (bijection == "theta") return theta(parse_permutation(input).values()).str();
  if (bijection == "ss") return to_string(simion_schmidt(parse_permutation(input)));
  return to_string(psi(MotzkinWord::parse(input)));
}

std::string backward(const std::string& bijection, const std::string& input) {
  if (bijection == "phi") return to_string(phi_inverse(DyckWord::parse(input)));
  if (bijection == "theta") {
    // Either a bare Dyck word or an indexed path whose labels must be the
    // ones theta would assign.
    if (input.find_first_of("0123456789") == std::string::npos) {
      std::string compact;
      for (char c : input) {
        if (c != ' ') compact += c;
      }
      return to_string(theta_inverse(DyckWord::parse(compact)));
    }
    const auto path = IndexedDyckPath::parse(input);
    const auto pi = theta_inverse(path.unlabeled());
    if (theta(pi.values()) != path) throw DomainError("labels are not those of a theta image");
    return to_string(pi);
  }
  if (bijection == "ss") return to_string(simion_schmidt_inverse(parse_permutation(input)));
  return psi_inverse(parse_permutation(input)).str();
}

int do_map(const Options& o, std::ostream& out, bool inverse) {
  const auto result = inverse ? backward(o.bijection, o.input) : forward(o.bijection, o.input);
  if (o.json) {
    out << json{{"bijection", o.bijection},
                {"direction", inverse ? "inverse" : "forward"},
                {"input", o.input},
                {"output", result}}
               .dump()
        << '\n';
  } else {
    out << result << '\n';
  }
  return kOk;
}

int do_verify(const Options& o, std::ostream& out) {
  const int n = resolve_size(o.n, default_suite_size(o.theorem));
  const auto results = run_suite(o.theorem, n);
  const bool ok = std::all_of(results.begin(), results.end(),
                              [](const CheckResult& r) { return r.passed; });
  if (o.json) {
    json arr = json::array();
    for (const auto& r : results) {
      arr.push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
    }
    out << json{{"theorem", o.theorem}, {"n", n}, {"passed", ok}, {"checks", arr}}.dump() << '\n';
  } else {
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << " [" << r.cases << " cases]";
      if (!r.passed) out << ": " << r.detail;
      out << '\n';
    }
  }
  return ok ? kOk : kDomain;
}

int do_tree(const Options& o, std::ostream& out) {
  if (o.depth < 1) throw InvalidInput("--depth must be >= 1");
  const auto levels = expand_tree(o.depth);
  if (o.json) {
    json jl = json::array();
    for (const auto& level : levels) {
      json nodes = json::array();
      for (const auto& node : level) nodes.push_back(node_json(node));
      jl.push_back(std::move(nodes));
    }
    out << json{{"depth", o.depth}, {"rule", "(2); (k) -> (k+1)(k-1)...(1)"}, {"levels", jl}}.dump()
        << '\n';
  } else {
    print_tree(levels, 0, 0, out);
  }
  return kOk;
}

int do_sequence(const Options& o, std::ostream& out) {
  const int n_max = resolve_size(o.n, std::nullopt);
  const auto constraints = parse_pattern_list(o.class_spec);
  std::vector<std::uint64_t> counts;
  for (int n = 1; n <= n_max; ++n) counts.push_back(count_class({n, constraints}));
  if (o.json) {
    out << json{{"class", o.class_spec}, {"counts", counts}}.dump() << '\n';
  } else if (o.csv) {
    out << "n,count\n";
    for (std::size_t i = 0; i < counts.size(); ++i) out << i + 1 << ',' << counts[i] << '\n';
  } else {
    for (std::size_t i = 0; i < counts.size(); ++i) out << (i ? " " : "") << counts[i];
    out << '\n';
  }
  return kOk;
}

int do_render(const Options& o, std::ostream& out) {
  const auto steps = parse_any_path(o.input);
  if (o.json) {
    std::string word;
    for (Step s : steps) word += static_cast<char>(s);
    const auto st = stats(steps);
    json peaks = json::array(), valleys = json::array();
    for (const auto& v : st.peaks) peaks.push_back({v.position, v.height});
    for (const auto& v : st.valleys) valleys.push_back({v.position, v.height});
    out << json{{"path", word}, {"render", render(steps)}, {"peaks", peaks},
                {"valleys", valleys}, {"max_height", st.max_height}}
               .dump()
        << '\n';
  } else {
    out << render(steps);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hatted and barred pattern avoidance, lattice path bijections and the Motzkin tree",
               "hatperm"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable JSON output");

  const std::string size_help = std::string("Size bound (default from ") + kSizeEnv + ")";
  const std::vector<std::string> bijections = {"phi", "theta", "ss", "psi"};

  auto* enumerate = app.add_subcommand("enumerate", "List a pattern class or a set of paths");
  enumerate->add_option("--class", o.class_spec, "Comma-separated patterns, e.g. 132,2^13");
  enumerate->add_option("--paths", o.paths, "dyck or motzkin")
      ->check(CLI::IsMember({"dyck", "motzkin"}));
  enumerate->add_option("--n", o.n, size_help);

  auto* map = app.add_subcommand("map", "Apply a bijection");
  auto* invert = app.add_subcommand("invert", "Apply the inverse of a bijection");
  for (auto* sub : {map, invert}) {
    sub->add_option("--bijection", o.bijection, "phi, theta, ss or psi")
        ->required()
        ->check(CLI::IsMember(bijections));
    sub->add_option("input", o.input, "Permutation or path")->required();
  }

  auto* verify = app.add_subcommand("verify", "Run an exhaustive verification suite");
  verify->add_option("--theorem", o.theorem, "Suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--n", o.n, size_help);

  auto* tree = app.add_subcommand("tree", "Expand the generating tree");
  tree->add_option("--depth", o.depth, "Number of levels")->required();

  auto* sequence = app.add_subcommand("sequence", "Class sizes for n = 1..N");
  sequence->add_option("--class", o.class_spec, "Comma-separated patterns")->required();
  sequence->add_option("--n", o.n, size_help);
  sequence->add_flag("--csv", o.csv, "Print n,count rows");

  auto* render_cmd = app.add_subcommand("render", "Draw a Dyck or Motzkin path");
  render_cmd->add_option("path", o.input, "Word over u, d, f")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (enumerate->parsed()) return do_enumerate(o, out);
    if (map->parsed()) return do_map(o, out, false);
    if (invert->parsed()) return do_map(o, out, true);
    if (verify->parsed()) return do_verify(o, out);
    if (tree->parsed()) return do_tree(o, out);
    if (sequence->parsed()) return do_sequence(o, out);
    return do_render(o, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
}

}  // namespace hatperm::cli
