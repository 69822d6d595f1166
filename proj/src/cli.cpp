#include "blocklat/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "blocklat/checks.hpp"
#include "blocklat/error.hpp"
#include "blocklat/ratfunc.hpp"
#include "blocklat/tags.hpp"

namespace blocklat
{

namespace
{

struct RunConfig
{
  std::string path;
  std::string property;
  std::string output;
  std::size_t omega = 1;
  std::string strategy = "auto";
  std::size_t cap = default_order_cap;
  std::string format = "text";
  bool exhaustive = false;
  bool regular = false;
};

std::size_t cap_from_env()
{
  char const *v = std::getenv("BLOCKLAT_ORDER_CAP");
  if (!v || !*v)
    return default_order_cap;
  char *end = nullptr;
  unsigned long long cap = std::strtoull(v, &end, 10);
  if (*end != '\0' || cap == 0)
    throw PreconditionError("BLOCKLAT_ORDER_CAP must be a positive integer");
  return static_cast<std::size_t>(cap);
}

IntervalStrategy parse_strategy(std::string const &s)
{
  if (s == "blocks")
    return IntervalStrategy::via_blocks;
  if (s == "subgroups")
    return IntervalStrategy::via_subgroups;
  return IntervalStrategy::automatic;
}

GroupTable load_group(RunConfig const &cfg)
{
  GroupSpec spec = read_group_file(cfg.path);
  GroupTable g = close(spec, cfg.cap);
  return cfg.regular ? regularize(g, cfg.cap) : g;
}

Point load_omega(RunConfig const &cfg, GroupTable const &g)
{
  if (cfg.omega < 1 || cfg.omega > g.degree())
    throw PreconditionError("--omega must be between 1 and the degree");
  return static_cast<Point>(cfg.omega - 1);
}

json header(std::string const &command)
{
  return {{"schema", json_schema}, {"command", command}};
}

json lengths_json(std::vector<std::size_t> const &v) { return json(v); }

std::string join_sizes(std::vector<std::size_t> const &v)
{
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

int cmd_info(RunConfig const &cfg, std::ostream &out)
{
  GroupTable g = load_group(cfg);
  GroupInfo info = group_info(g);

  if (cfg.format == "json") {
    json j = header("info");
    j["degree"] = info.degree;
    j["order"] = info.order;
    j["transitive"] = info.transitive;
    j["tag"] = info.tag;
    j["orbit_lengths"] = lengths_json(info.orbit_lengths);
    json gens = json::array();
    for (std::size_t i = 0; i < g.generators().size(); ++i)
      gens.push_back({{"cycles", format_cycles(g.generators()[i])},
                      {"orbit_lengths", info.generator_cycle_types[i]}});
    j["generators"] = gens;
    j["transitive_cyclic"] =
      info.transitive_cyclic ? json(format_cycles(*info.transitive_cyclic))
                             : json(nullptr);
    if (info.two_orbit) {
      j["two_orbit"] = {{"element", format_cycles(*info.two_orbit)},
                        {"orbit_lengths", info.two_orbit_lengths},
                        {"different_lengths",
                         info.two_orbit_different_lengths}};
    } else {
      j["two_orbit"] = nullptr;
    }
    out << j.dump(2) << '\n';
    return exit_ok;
  }

  out << "degree: " << info.degree << '\n'
      << "order: " << info.order << '\n'
      << "structure: " << info.tag << '\n'
      << "transitive: " << (info.transitive ? "yes" : "no") << '\n'
      << "orbit lengths: " << join_sizes(info.orbit_lengths) << '\n';
  for (std::size_t i = 0; i < g.generators().size(); ++i)
    out << "generator " << i + 1 << ": " << format_cycles(g.generators()[i])
        << " (orbit lengths " << join_sizes(info.generator_cycle_types[i])
        << ")\n";
  out << "transitive cyclic subgroup: "
      << (info.transitive_cyclic ? format_cycles(*info.transitive_cyclic)
                                 : std::string("none"))
      << '\n';
  if (info.two_orbit) {
    out << "two-orbit cyclic subgroup: " << format_cycles(*info.two_orbit)
        << " (orbit lengths " << join_sizes(info.two_orbit_lengths) << ")"
        << (info.two_orbit_different_lengths ? " different lengths" : "")
        << '\n';
  } else {
    out << "two-orbit cyclic subgroup: none\n";
  }
  return exit_ok;
}

int cmd_lattice(RunConfig const &cfg, std::ostream &out)
{
  GroupTable g = load_group(cfg);
  Point omega = load_omega(cfg, g);
  auto l = build_interval(g, omega, parse_strategy(cfg.strategy), cfg.cap);

  if (cfg.format == "dot") {
    out << to_dot(l);
    return exit_ok;
  }

  if (cfg.format == "json") {
    json j = header("lattice");
    j["omega"] = cfg.omega;
    j["size"] = l.size();
    json nodes = json::array();
    for (NodeId i = 0; i < l.size(); ++i) {
      json n = node_json(l, i);
      json gens = json::array();
      for (auto const &x : l.node(i).generators())
        gens.push_back(format_cycles(x));
      n["generators"] = gens;
      nodes.push_back(n);
    }
    j["nodes"] = nodes;
    json covers = json::array();
    for (auto [a, b] : l.covers())
      covers.push_back({a, b});
    j["covers"] = covers;
    j["bottom"] = l.bottom();
    j["top"] = l.top();
    out << j.dump(2) << '\n';
    return exit_ok;
  }

  out << "interval size: " << l.size() << '\n';
  for (NodeId i = 0; i < l.size(); ++i)
    out << "node " << i << ": " << structure_tag(l.node(i))
        << " order " << l.node(i).order() << '\n';
  for (auto [a, b] : l.covers())
    out << "cover " << a << " < " << b << '\n';
  return exit_ok;
}

int cmd_chains(RunConfig const &cfg, std::ostream &out)
{
  GroupTable g = load_group(cfg);
  Point omega = load_omega(cfg, g);
  auto l = build_interval(g, omega, parse_strategy(cfg.strategy), cfg.cap);
  auto classes = r_equivalence_classes(l.order(), l.bottom(), l.top());

  if (cfg.format == "json") {
    json j = header("chains");
    j["interval_size"] = l.size();
    json cls = json::array();
    std::size_t total = 0;
    for (auto const &c : classes) {
      json chains = json::array();
      for (auto const &m : c)
        chains.push_back(chain_json(l, m));
      total += c.size();
      cls.push_back(chains);
    }
    j["chain_count"] = total;
    j["class_count"] = classes.size();
    j["classes"] = cls;
    out << j.dump(2) << '\n';
    return exit_ok;
  }

  std::size_t total = 0;
  for (auto const &c : classes)
    total += c.size();
  out << "maximal chains: " << total << '\n'
      << "r-equivalence classes: " << classes.size() << '\n';
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out << "class " << i + 1 << ":\n";
    for (auto const &m : classes[i]) {
      out << " ";
      for (std::size_t k = 0; k < m.size(); ++k)
        out << (k ? " < " : " ") << structure_tag(l.node(m[k])) << "["
            << m[k] << "]";
      out << '\n';
    }
  }
  return exit_ok;
}

int cmd_check(RunConfig const &cfg, std::ostream &out)
{
  GroupTable g = load_group(cfg);
  Point omega = load_omega(cfg, g);

  CheckOptions opts;
  opts.strategy = parse_strategy(cfg.strategy);
  opts.cap = cfg.cap;
  opts.exhaustive = cfg.exhaustive;
  CheckReport r = run_check(g, omega, cfg.property, opts);

  if (cfg.format == "json") {
    json j = header("check");
    j["property"] = r.property;
    j["passed"] = r.passed;
    j["hypothesis"] = r.hypothesis;
    j["notes"] = r.notes;
    j["details"] = r.details;
    out << j.dump(2) << '\n';
  } else {
    out << r.property << ": " << (r.passed ? "PASS" : "FAIL")
        << (r.hypothesis ? "" : " (hypothesis not satisfied)") << '\n';
    for (auto const &n : r.notes)
      out << "note: " << n << '\n';
    out << r.details.dump(2) << '\n';
  }
  return r.passed ? exit_ok : exit_failed;
}

int cmd_ratfunc(RunConfig const &cfg, std::ostream &out)
{
  std::ifstream in(cfg.path);
  if (!in)
    throw Error("cannot open scenario file '" + cfg.path + "'");
  std::stringstream ss;
  ss << in.rdbuf();

  auto lines = run_scenario(ss.str());
  bool all = std::all_of(lines.begin(), lines.end(),
                         [](ScenarioLine const &l) { return l.passed; });

  if (cfg.format == "json") {
    json j = header("ratfunc");
    json items = json::array();
    for (auto const &l : lines)
      items.push_back({{"line", l.line},
                       {"text", l.text},
                       {"passed", l.passed},
                       {"detail", l.detail}});
    j["lines"] = items;
    j["passed"] = all;
    out << j.dump(2) << '\n';
  } else {
    for (auto const &l : lines) {
      out << "line " << l.line << ": " << (l.passed ? "PASS" : "FAIL");
      if (!l.detail.empty())
        out << " (" << l.detail << ")";
      out << '\n';
    }
    std::size_t passed = std::count_if(
      lines.begin(), lines.end(), [](ScenarioLine const &l) { return l.passed; });
    out << passed << "/" << lines.size() << " passed\n";
  }
  return all ? exit_ok : exit_failed;
}

int cmd_regularize(RunConfig const &cfg, std::ostream &out)
{
  GroupTable g = close(read_group_file(cfg.path), cfg.cap);
  GroupTable r = regularize(g, cfg.cap);

  std::string text = "# right regular action, order " +
                     std::to_string(r.order()) + "\n" +
                     format_group_file(r.spec());
  if (cfg.output.empty()) {
    out << text;
  } else {
    std::ofstream f(cfg.output);
    if (!f)
      throw Error("cannot write '" + cfg.output + "'");
    f << text;
  }
  return exit_ok;
}

} // anonymous namespace

int run_cli(std::vector<std::string> const &args, std::ostream &out,
            std::ostream &err)
{
  RunConfig cfg;
  try {
    cfg.cap = cap_from_env();
  } catch (Error const &e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  CLI::App app{"Interval lattices of permutation groups and rational "
               "function decompositions"};
  app.name("blocklat");
  app.require_subcommand(1);
  app.add_option("--cap", cfg.cap, "Largest group order to enumerate")
    ->check(CLI::PositiveNumber);

  auto group_options = [&](CLI::App *sub, bool lattice_flags) {
    sub->add_option("file", cfg.path, "Group file")->required();
    sub->add_flag("--regular", cfg.regular,
                  "Use the right regular action of the group");
    if (lattice_flags) {
      sub->add_option("--omega", cfg.omega, "Base point (1-based)")
        ->capture_default_str();
      sub->add_option("--strategy", cfg.strategy, "Interval construction")
        ->check(CLI::IsMember({"auto", "blocks", "subgroups"}))
        ->capture_default_str();
    }
  };

  auto *info = app.add_subcommand("info", "Group summary");
  group_options(info, false);
  info->add_option("--format", cfg.format)
    ->check(CLI::IsMember({"text", "json"}));

  auto *lattice = app.add_subcommand("lattice", "Interval lattice");
  group_options(lattice, true);
  lattice->add_option("--format", cfg.format)
    ->check(CLI::IsMember({"text", "json", "dot"}));

  auto *chains = app.add_subcommand("chains", "Maximal chains by r-class");
  group_options(chains, true);
  chains->add_option("--format", cfg.format)
    ->check(CLI::IsMember({"text", "json"}));

  auto *check = app.add_subcommand("check", "Check a lattice property");
  check->add_option("property", cfg.property, "Property to check")
    ->required()
    ->check(CLI::IsMember(check_properties()));
  group_options(check, true);
  check->add_flag("--exhaustive", cfg.exhaustive,
                  "Compare chains over every interval, not only bottom to top");
  check->add_option("--format", cfg.format)
    ->check(CLI::IsMember({"text", "json"}));

  auto *ratfunc = app.add_subcommand("ratfunc", "Verify a scenario file");
  ratfunc->add_option("file", cfg.path, "Scenario file")->required();
  ratfunc->add_option("--format", cfg.format)
    ->check(CLI::IsMember({"text", "json"}));

  auto *regular = app.add_subcommand("regularize",
                                     "Write the right regular action");
  regular->add_option("file", cfg.path, "Group file")->required();
  regular->add_option("-o,--output", cfg.output, "Output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (info->parsed())
      return cmd_info(cfg, out);
    if (lattice->parsed())
      return cmd_lattice(cfg, out);
    if (chains->parsed())
      return cmd_chains(cfg, out);
    if (check->parsed())
      return cmd_check(cfg, out);
    if (ratfunc->parsed())
      return cmd_ratfunc(cfg, out);
    return cmd_regularize(cfg, out);
  } catch (ParseError const &e) {
    err << "parse error: " << e.what() << '\n';
  } catch (Error const &e) {
    err << "error: " << e.what() << '\n';
  }
  return exit_usage;
}

} // namespace blocklat
