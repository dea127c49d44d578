#include "cli.hpp"

#include <optional>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "starramsey/constructions.hpp"
#include "starramsey/error.hpp"
#include "starramsey/formulas.hpp"
#include "starramsey/io.hpp"
#include "starramsey/oracle.hpp"
#include "starramsey/selfcheck.hpp"
#include "starramsey/verifier.hpp"

namespace starramsey::cli {
namespace {

struct FamilyArgs {
  std::string family_path;
  std::string m;
  int s = 0;
  int t = 0;
};

struct Options {
  std::string format = "json";
  FamilyArgs family;
  std::string classical_m;
  std::string out_path;
  std::string coloring_path;
  std::uint64_t budget = 1'000'000'000;
  int parallel_width = 3;
  bool symmetry = false;
  std::string grid = "small";
};

BigInt parse_big(const std::string& text, const char* what) {
  static const std::regex digits("-?[0-9]+");
  if (!std::regex_match(text, digits)) {
    throw Error(ErrorCode::InvalidInput, std::string(what) + " must be an integer: " + text);
  }
  return BigInt(text);
}

std::int64_t parse_small(const std::string& text, const char* what) {
  const BigInt v = parse_big(text, what);
  if (v < 1 || v > std::numeric_limits<std::int64_t>::max()) {
    throw Error(ErrorCode::InvalidInput, std::string(what) + " out of range: " + text);
  }
  return static_cast<std::int64_t>(v);
}

void require_uniform_args(const FamilyArgs& f) {
  if (f.m.empty() || f.s == 0 || f.t == 0) {
    throw Error(ErrorCode::InvalidInput, "--m, --s and --t are required");
  }
}

StarFamily load_family(const FamilyArgs& f) {
  if (!f.family_path.empty()) {
    if (!f.m.empty()) {
      throw Error(ErrorCode::InvalidInput, "give either --family or --m/--s/--t, not both");
    }
    return star_family_from_json(read_json_file(f.family_path));
  }
  require_uniform_args(f);
  return StarFamily::uniform(parse_small(f.m, "--m"), f.s, f.t);
}

Json error_json(std::string_view code, const std::string& detail) {
  Json doc;
  doc["error"] = code;
  doc["detail"] = detail;
  return doc;
}

std::string cell(const Json& value) {
  return value.is_string() ? value.get<std::string>() : value.dump();
}

void emit(std::ostream& out, const Json& doc, const std::string& format) {
  if (format != "table" || !doc.is_object()) {
    out << doc.dump(2) << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& [key, _] : doc.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : doc.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << key << ":\n";
      for (const auto& row : value) {
        out << "  ";
        for (const auto& [k, v] : row.items()) out << k << "=" << cell(v) << "  ";
        out << '\n';
      }
      continue;
    }
    out << key << std::string(width - key.size() + 2, ' ') << cell(value) << '\n';
  }
}

SearchConfig search_config(const Options& o) {
  SearchConfig config;
  config.node_budget = o.budget;
  config.parallel_width = o.parallel_width;
  config.break_color_symmetry = o.symmetry;
  config.threads = default_thread_count();
  return config;
}

Json write_or_return(const ColoredGraph& g, const std::string& out_path) {
  Json doc = to_json(g);
  if (out_path.empty()) return doc;
  write_json_file(out_path, doc);
  Json summary;
  summary["out"] = out_path;
  summary["n"] = g.n();
  summary["t"] = g.t();
  summary["missing"] = g.missing().size();
  return summary;
}

void add_family_options(CLI::App* cmd, FamilyArgs& f, bool allow_file) {
  if (allow_file) cmd->add_option("--family", f.family_path, "StarFamily JSON file");
  cmd->add_option("--m", f.m, "uniform star size");
  cmd->add_option("--s", f.s, "colors per color set");
  cmd->add_option("--t", f.t, "number of colors");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  Options o;
  CLI::App app{"Star d-chromatic Ramsey numbers: formulas, constructions, verification, search"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "table"}));

  // The action runs after parsing and returns the JSON document and exit code.
  std::function<std::pair<Json, int>()> action;

  auto* formula = app.add_subcommand("formula", "closed-form values")->require_subcommand(1);
  auto* f_uniform = formula->add_subcommand("uniform", "r^{s,t}(K_{1,m})");
  add_family_options(f_uniform, o.family, false);
  f_uniform->callback([&] {
    action = [&] {
      require_uniform_args(o.family);
      return std::pair{to_json(ramsey_uniform(parse_big(o.family.m, "--m"), o.family.s,
                                              o.family.t)),
                       kExitOk};
    };
  });
  auto* f_general = formula->add_subcommand("general", "r^{s,t} for a star family");
  f_general->add_option("--family", o.family.family_path, "StarFamily JSON file")->required();
  f_general->callback([&] {
    action = [&] { return std::pair{to_json(ramsey_general(load_family(o.family))), kExitOk}; };
  });
  auto* f_classical = formula->add_subcommand("classical", "classical multicolor star values");
  f_classical->add_option("--m", o.classical_m, "comma-separated star sizes")->required();
  f_classical->callback([&] {
    action = [&] {
      std::vector<BigInt> ms;
      std::stringstream ss(o.classical_m);
      for (std::string item; std::getline(ss, item, ',');) ms.push_back(parse_big(item, "--m"));
      const auto r = ramsey_classical(ms);
      const auto c = star_critical_classical(ms);
      Json doc;
      doc["r"] = to_json(r.r);
      doc["rstar"] = to_json(c.rstar);
      doc["branch"] = r.branch;
      doc["star_critical_branch"] = c.branch;
      return std::pair{doc, kExitOk};
    };
  });
  auto* f_critical = formula->add_subcommand("star-critical", "r_*^{s,t}(K_{1,m})");
  add_family_options(f_critical, o.family, false);
  f_critical->callback([&] {
    action = [&] {
      require_uniform_args(o.family);
      return std::pair{to_json(star_critical_uniform(parse_big(o.family.m, "--m"),
                                                     o.family.s, o.family.t)),
                       kExitOk};
    };
  });

  auto* construct = app.add_subcommand("construct", "extremal colorings")->require_subcommand(1);
  auto* c_lower = construct->add_subcommand("lower", "star-free coloring of K_{r-1}");
  add_family_options(c_lower, o.family, true);
  c_lower->add_option("--out", o.out_path, "write the coloring here");
  c_lower->callback([&] {
    action = [&] {
      return std::pair{write_or_return(lower_bound_coloring(load_family(o.family)), o.out_path),
                       kExitOk};
    };
  });
  auto* c_critical = construct->add_subcommand("star-critical",
                                               "star-free coloring of K_N minus a star");
  add_family_options(c_critical, o.family, false);
  c_critical->add_option("--out", o.out_path, "write the coloring here");
  c_critical->callback([&] {
    action = [&] {
      require_uniform_args(o.family);
      const auto g = star_critical_lower_coloring(parse_big(o.family.m, "--m"), o.family.s,
                                                  o.family.t);
      return std::pair{write_or_return(g, o.out_path), kExitOk};
    };
  });

  auto* verify = app.add_subcommand("verify", "look for a target star in a coloring");
  add_family_options(verify, o.family, true);
  verify->add_option("--coloring", o.coloring_path, "ColoredGraph JSON file")->required();
  verify->callback([&] {
    action = [&] {
      const auto family = load_family(o.family);
      const auto g = colored_graph_from_json(read_json_file(o.coloring_path));
      const auto witness = find_star(g, family);
      Json doc;
      doc["ok"] = !witness.has_value();
      doc["witness"] = witness ? to_json(*witness) : Json(nullptr);
      return std::pair{doc, witness ? kExitViolation : kExitOk};
    };
  });

  auto* oracle = app.add_subcommand("oracle", "exhaustive search")->require_subcommand(1);
  oracle->add_option("--budget", o.budget, "search-tree node budget");
  oracle->add_option("--parallel-width", o.parallel_width, "tree levels split across workers");
  oracle->add_flag("--symmetry", o.symmetry, "break color symmetry (uniform families)");
  auto* o_ramsey = oracle->add_subcommand("ramsey", "least n with no avoidance coloring");
  add_family_options(o_ramsey, o.family, true);
  o_ramsey->callback([&] {
    action = [&] {
      return std::pair{to_json(brute_force_ramsey(load_family(o.family), search_config(o))),
                       kExitOk};
    };
  });
  auto* o_critical = oracle->add_subcommand("star-critical", "least surviving spoke count");
  add_family_options(o_critical, o.family, false);
  o_critical->callback([&] {
    action = [&] {
      require_uniform_args(o.family);
      return std::pair{to_json(brute_force_star_critical(parse_small(o.family.m, "--m"),
                                                         o.family.s, o.family.t,
                                                         search_config(o))),
                       kExitOk};
    };
  });

  auto* selfcheck = app.add_subcommand("selfcheck", "run the cross-validation grids");
  selfcheck->add_option("--grid", o.grid, "small or full")
      ->check(CLI::IsMember({"small", "full"}));
  selfcheck->callback([&] {
    action = [&] {
      auto config = search_config(o);
      const auto reports = run_selfcheck(
          o.grid == "full" ? SelfcheckGrid::Full : SelfcheckGrid::Small, config);
      bool ok = true;
      Json checks = Json::array();
      for (const auto& r : reports) {
        ok = ok && r.passed();
        Json entry;
        entry["name"] = r.name;
        entry["cases"] = r.cases;
        entry["passed"] = r.passed();
        entry["disagreements"] = r.disagreements;
        checks.push_back(std::move(entry));
      }
      Json doc;
      doc["ok"] = ok;
      doc["checks"] = std::move(checks);
      return std::pair{doc, ok ? kExitOk : kExitViolation};
    };
  });

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  for (auto* cmd : {formula, construct, oracle}) {
    for (auto* sub : cmd->get_subcommands({})) sub->fallthrough();
  }

  std::vector<std::string> argv_storage{"starramsey"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    emit(out, error_json("InvalidInput", e.what()), "json");
    return kExitInputError;
  }

  try {
    auto [doc, code] = action();
    emit(out, doc, o.format);
    return code;
  } catch (const Error& e) {
    emit(out, error_json(to_string(e.code()), e.what()), "json");
    return kExitInputError;
  }
}

}  // namespace starramsey::cli
