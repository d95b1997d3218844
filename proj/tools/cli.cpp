#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sccd/catalog.hpp"
#include "sccd/construct.hpp"
#include "sccd/design_io.hpp"
#include "sccd/difference.hpp"
#include "sccd/expansion.hpp"
#include "sccd/search.hpp"
#include "sccd/verify.hpp"

namespace sccd {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Design load(const std::string& path, std::istream& in) {
  if (path.rfind("catalog:", 0) == 0) return catalog_get(path.substr(8)).design;
  std::stringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    buf << f.rdbuf();
  }
  return parse_design(buf.str());
}

std::string set_text(const std::vector<Label>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

std::string rational_text(const Rational& r) {
  return r.integral() ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

nlohmann::ordered_json report_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(to_string(r.kind));
  j["v"] = r.v;
  j["k"] = r.k;
  j["b"] = r.b;
  j["valid_single_change"] = r.valid_single_change;
  auto bad = nlohmann::ordered_json::array();
  for (auto i : r.bad_adjacencies) bad.push_back(i + 1);
  j["bad_adjacencies"] = bad;
  j["covered_all_pairs"] = r.covered_all_pairs;
  auto missing = nlohmann::ordered_json::array();
  for (auto p : r.missing_pairs) missing.push_back({p.lo, p.hi});
  j["missing_pairs"] = missing;
  j["excess"] = r.excess;
  j["block_excesses"] = r.block_excesses;
  j["start"] = r.start + 1;
  j["tight"] = r.tight;
  j["economical"] = r.economical;
  j["bound"] = {{"g", {{"num", r.bound.g.num}, {"den", r.bound.g.den}}},
                {"g_ceiling", r.bound.g_ceiling},
                {"achieved_b", r.bound.achieved_b},
                {"meets_bound", r.bound.meets_bound}};
  return j;
}

void report_text(const VerificationReport& r, std::ostream& out) {
  auto yes = [](bool x) { return x ? "yes" : "no"; };
  out << to_string(r.kind) << " design v=" << r.v << " k=" << r.k << " b=" << r.b << '\n';
  out << "single change: " << yes(r.valid_single_change);
  for (auto i : r.bad_adjacencies) out << (i == r.bad_adjacencies.front() ? " (broken after block " : ", ") << i + 1;
  out << (r.bad_adjacencies.empty() ? "" : ")") << '\n';
  out << "all pairs covered: " << yes(r.covered_all_pairs);
  if (!r.missing_pairs.empty()) {
    out << " (missing";
    for (auto p : r.missing_pairs) out << " {" << p.lo << ',' << p.hi << '}';
    out << ')';
  }
  out << '\n';
  out << "excess: " << r.excess << '\n';
  out << "block excesses from block " << r.start + 1 << ':';
  for (auto e : r.block_excesses) out << ' ' << e;
  out << '\n';
  out << "bound: " << rational_text(r.bound.g) << " (ceiling " << r.bound.g_ceiling << ", "
      << (r.bound.meets_bound ? "met" : "not met") << ")\n";
  out << "economical: " << yes(r.economical) << '\n';
  out << "tight: " << yes(r.tight) << '\n';
}

void print_set(const ExpansionSet& e, std::ostream& out) {
  for (const auto& m : e.members) out << m.index << ':' << set_text(m.elements) << ' ';
  out << to_string(e.classification) << '\n';
}

void emit(const Design& d, const std::string& path, std::ostream& out) {
  const std::string text = serialize_design(d);
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::syntax_error:
    case ErrorCode::invariant_violation:
    case ErrorCode::unknown_name:
    case ErrorCode::bad_parameters: return kUsage;
    default: return kFailed;
  }
}

}  // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Single-change covering designs: verify, construct, search."};
  app.name("sccd");
  app.require_subcommand(1);
  int code = kOk;

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check a design and print its report");
  std::string verify_path;
  std::size_t start = 1;
  bool as_json = false;
  verify_cmd->add_option("file", verify_path, "Design file, '-' for stdin, or catalog:<name>")->required();
  verify_cmd->add_option("--start", start, "Initial block for per-block excess (circular, 1-based)")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--json", as_json, "Emit JSON");
  verify_cmd->callback([&] {
    const Design d = load(verify_path, in);
    if (start > d.b()) throw Error(ErrorCode::bad_parameters, "--start beyond the last block");
    const auto r = verify(d, start - 1);
    if (as_json)
      out << report_json(r).dump(2) << '\n';
    else
      report_text(r, out);
    code = r.valid_single_change && r.covered_all_pairs ? kOk : kFailed;
  });

  // expansion
  auto* exp_cmd = app.add_subcommand("expansion", "List expansion sets");
  std::string exp_path;
  std::string mode_name = "any";
  bool all = false;
  exp_cmd->add_option("file", exp_path)->required();
  exp_cmd->add_option("--mode", mode_name)->check(CLI::IsMember({"any", "inner", "outer", "both-ends"}));
  exp_cmd->add_flag("--all", all, "List every set instead of the first");
  exp_cmd->callback([&] {
    const Design d = load(exp_path, in);
    const ExpansionMode mode = mode_name == "inner"   ? ExpansionMode::inner
                               : mode_name == "outer" ? ExpansionMode::outer
                               : mode_name == "both-ends" ? ExpansionMode::both_ends
                                                          : ExpansionMode::any;
    const auto sets = find_expansion_sets(d, mode, all ? unlimited : 1);
    for (const auto& e : sets) print_set(e, out);
    if (sets.empty()) out << "no expansion set\n";
    code = sets.empty() ? kFailed : kOk;
  });

  // construct
  auto* con_cmd = app.add_subcommand("construct", "Build a design from one or two others");
  con_cmd->require_subcommand(1);
  con_cmd->fallthrough();
  std::string out_path;
  con_cmd->add_option("--out", out_path, "Write the result here instead of stdout");

  std::string v1_path;
  std::vector<Label> v1_labels;
  auto* v1 = con_cmd->add_subcommand("v1", "Add one label at every location of the first expansion set");
  v1->add_option("file", v1_path)->required();
  v1->add_option("--labels", v1_labels, "New label (default: largest + 1)")->expected(1);
  v1->callback([&] {
    const Design d = load(v1_path, in);
    const Label y = v1_labels.empty() ? d.max_label() + 1 : v1_labels[0];
    const auto sets = find_expansion_sets(d);
    if (sets.empty()) throw Error(ErrorCode::not_expansion_set, "design has no expansion set");
    emit(extend_v1(d, sets.front(), y), out_path, out);
  });

  std::string v2_path;
  std::vector<Label> v2_labels;
  auto* v2 = con_cmd->add_subcommand("v2", "Add two labels using an expansion set with U_b");
  v2->add_option("file", v2_path)->required();
  v2->add_option("--labels", v2_labels, "Two new labels (default: largest + 1, + 2)")->expected(2);
  v2->callback([&] {
    const Design d = load(v2_path, in);
    const Label y1 = v2_labels.empty() ? d.max_label() + 1 : v2_labels[0];
    const Label y2 = v2_labels.empty() ? d.max_label() + 2 : v2_labels[1];
    if (d.circular()) throw Error(ErrorCode::not_linear, "v2 needs a linear design");
    const auto sets = find_expansion_sets(d, ExpansionMode::any, 1, EndConstraints{{}, {}, false, true});
    if (sets.empty()) throw Error(ErrorCode::missing_ub, "design has no expansion set using U_b");
    emit(extend_v2(d, sets.front(), y1, y2), out_path, out);
  });

  std::string path_a, path_b;
  auto add_pair = [&](const char* name, const char* help, auto op) {
    auto* sub = con_cmd->add_subcommand(name, help);
    sub->add_option("first", path_a)->required();
    sub->add_option("second", path_b)->required();
    sub->callback([&, op] {
      const Design a = load(path_a, in);
      const Design b = load(path_b, in);
      emit(op(a, b), out_path, out);
    });
  };
  add_pair("join", "Linear join", [](const Design& a, const Design& b) { return join_linear(a, b); });
  add_pair("disjoint", "Linear join with a disjoint-capable result",
           [](const Design& a, const Design& b) { return build_disjoint_capable(a, b); });
  add_pair("circular", "Circular join of two linear designs",
           [](const Design& a, const Design& b) { return join_circular(a, b); });

  // generate
  auto* gen_cmd = app.add_subcommand("generate", "Generate a design family");
  gen_cmd->require_subcommand(1);
  std::size_t c = 0, gk = 0;
  auto* diff = gen_cmd->add_subcommand("difference", "Cyclic difference family, v = 2c(k-1)+1");
  diff->add_option("--c", c)->required();
  diff->add_option("--k", gk)->required();
  diff->callback([&] { out << serialize_design(difference_cscc(c, gk)); });

  // search
  auto* search_cmd = app.add_subcommand("search", "Backtracking search for a design");
  SearchConfig cfg;
  bool circular = false;
  bool no_symmetry = false;
  bool no_precheck = false;
  double seconds = 60;
  search_cmd->add_option("--v", cfg.v)->required();
  search_cmd->add_option("--k", cfg.k)->required();
  search_cmd->add_option("--b", cfg.b)->required();
  search_cmd->add_flag("--circular", circular);
  search_cmd->add_option("--time-limit", seconds, "Seconds")->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--node-limit", cfg.node_limit);
  search_cmd->add_flag("--no-symmetry", no_symmetry, "Disable symmetry breaking");
  search_cmd->add_flag("--no-precheck", no_precheck, "Search even below the block bound");
  search_cmd->callback([&] {
    cfg.kind = circular ? Kind::circular : Kind::linear;
    cfg.time_limit = std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
    cfg.symmetry_breaking = !no_symmetry;
    cfg.bound_precheck = !no_precheck;
    const auto r = search(cfg);
    out << to_string(r.status) << '\n';
    if (r.design) out << serialize_design(*r.design);
    code = r.status == SearchStatus::found ? kOk : kFailed;
  });

  // catalog
  auto* cat_cmd = app.add_subcommand("catalog", "Bundled designs");
  cat_cmd->require_subcommand(1);
  auto* list = cat_cmd->add_subcommand("list", "Names and parameters");
  list->callback([&] {
    for (const auto& name : catalog_list()) {
      const auto& e = catalog_get(name);
      out << name << ' ' << to_string(e.claimed.kind) << " v=" << e.claimed.v << " k=" << e.claimed.k
          << " b=" << e.claimed.b << " e=" << e.claimed.excess << '\n';
    }
  });
  std::string emit_name;
  auto* emit_cmd = cat_cmd->add_subcommand("emit", "Print one design");
  emit_cmd->add_option("name", emit_name)->required();
  emit_cmd->callback([&] {
    const auto& e = catalog_get(emit_name);
    out << serialize_design(e.design, e.name);
  });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  } catch (const Error& e) {
    err << "sccd: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const InputError& e) {
    err << "sccd: " << e.what() << '\n';
    return kUsage;
  }
  return code;
}

}  // namespace sccd
