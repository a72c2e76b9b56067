// cfl: mine closed patterns of connected pattern families, list implication
// bases, validate families and run the brute-force oracle.
//
// Exit status: 0 success, 1 validation failure (witness on stderr),
// 2 unreadable or malformed input.

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "cfl/confluence.hpp"
#include "cfl/format.hpp"
#include "cfl/implications.hpp"
#include "cfl/io.hpp"
#include "cfl/miner.hpp"
#include "cfl/oracle.hpp"

namespace {

using namespace cfl;

constexpr const char* kGrammar = R"(Input formats ('#' starts a comment, blank lines are ignored):
  graph        v <name>                      one vertex
               e <name1> <name2> [label]     one edge (label defaults to name1-name2)
  family       <item> <item> ...             one pattern per line; {} is the empty pattern
  context      <object>: <item> <item> ...   one object per line
  abstraction  <object> <object> ...         one generator extent per line
  poset        <id>: [covers] <id> ...       the elements <id> covers)";

// Bad flag combinations that CLI11 cannot express; reported like other usage errors.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FamilyOptions {
  std::string graph;
  bool edge_mode = false;
  bool vertex_mode = false;
  std::size_t min_size = 1;
  std::string explicit_file;
  std::string kgap;
};

struct RunOptions {
  FamilyOptions family;
  std::string context;
  std::string abstraction;
  std::optional<std::size_t> min_support;
  std::string format = "tsv";
  bool sorted = false;
  bool emit_empty_support = false;
  bool trace = false;
  std::uint64_t seed = 0;
  std::size_t budget = oracle::kDefaultBudget;
  std::string poset_file;
};

void add_family_flags(CLI::App* cmd, FamilyOptions& f) {
  auto* g = cmd->add_option("--graph", f.graph, "graph file (connected subgraph families)");
  cmd->add_flag("--edge-mode", f.edge_mode, "items are edges; members are connected edge sets")->needs(g);
  cmd->add_flag("--vertex-mode", f.vertex_mode, "items are vertices (default)")->needs(g);
  cmd->add_option("--min-size", f.min_size, "vertex mode: minimum connected set size")->needs(g);
  cmd->add_option("--explicit", f.explicit_file, "family file listing every member");
  cmd->add_option("--kgap", f.kgap, "bounded-gap position sets: n,k");
}

void add_context_flags(CLI::App* cmd, RunOptions& o, bool with_abstraction) {
  cmd->add_option("--context", o.context, "context file")->required();
  if (!with_abstraction) return;
  auto* a = cmd->add_option("--abstraction", o.abstraction, "abstraction file (generator extents)");
  cmd->add_option("--min-support", o.min_support, "frequency threshold abstraction")->excludes(a);
}

// Family plus the item universe shared with the context.
struct Loaded {
  std::unique_ptr<Family> family;
  std::vector<Pattern> raw_members;  // explicit families only, as listed
  io::NameTable items;
  bool items_fixed = true;  // graph and gap families do not take new items from the context
};

Loaded load_family(const FamilyOptions& f, const io::ContextRows* ctx_rows) {
  const int kinds = !f.graph.empty() + !f.explicit_file.empty() + !f.kgap.empty();
  if (kinds != 1) throw UsageError("choose exactly one of --graph, --explicit, --kgap");
  if (f.edge_mode && f.vertex_mode) throw UsageError("--edge-mode and --vertex-mode are exclusive");

  Loaded out;
  if (!f.graph.empty()) {
    auto g = io::parse_graph(io::read_file(f.graph));
    if (f.edge_mode) {
      auto fam = std::make_unique<ConnectedEdgeFamily>(std::move(g));
      out.items = io::NameTable(fam->item_names());
      out.family = std::move(fam);
    } else {
      auto fam = std::make_unique<ConnectedVertexFamily>(std::move(g), f.min_size);
      out.items = io::NameTable(fam->item_names());
      out.family = std::move(fam);
    }
    return out;
  }
  if (!f.kgap.empty()) {
    std::size_t n = 0, k = 0;
    char comma = 0;
    std::istringstream in(f.kgap);
    if (!(in >> n >> comma >> k) || comma != ',' || n == 0 || k == 0)
      throw UsageError("--kgap expects n,k with n, k >= 1");
    auto fam = std::make_unique<KGapWordFamily>(n, k);
    out.items = io::NameTable(fam->item_names());
    out.family = std::move(fam);
    return out;
  }

  auto rows = io::parse_family(io::read_file(f.explicit_file));
  for (const auto& r : rows)
    for (const auto& name : r) out.items.intern(name);
  if (ctx_rows)
    for (const auto& r : ctx_rows->items)
      for (const auto& name : r) out.items.intern(name);
  out.items_fixed = false;
  for (const auto& r : rows) out.raw_members.push_back(io::resolve(r, out.items));
  return out;
}

ExplicitFamily& make_explicit(Loaded& l) {
  l.family = std::make_unique<ExplicitFamily>(l.raw_members, l.items.names());
  return static_cast<ExplicitFamily&>(*l.family);
}

ExtensionalAbstraction load_abstraction(const RunOptions& o, const ObjectContext& ctx) {
  if (o.min_support) return ExtensionalAbstraction::frequency(*o.min_support);
  if (!o.abstraction.empty()) return io::build_abstraction(io::parse_abstraction(io::read_file(o.abstraction)), ctx);
  return ExtensionalAbstraction::identity();
}

struct Problem {
  Loaded loaded;
  std::optional<ObjectContext> context;
};

Problem load_problem(const RunOptions& o, bool need_family_object) {
  auto ctx_rows = io::parse_context(io::read_file(o.context));
  Problem p;
  p.loaded = load_family(o.family, &ctx_rows);
  if (!p.loaded.family && need_family_object) make_explicit(p.loaded);
  p.context.emplace(io::build_context(ctx_rows, p.loaded.items));
  return p;
}

int run_mine(const RunOptions& o) {
  auto p = load_problem(o, true);
  const auto& ctx = *p.context;
  MinerConfig cfg;
  cfg.family = p.loaded.family.get();
  cfg.context = &ctx;
  cfg.abstraction = load_abstraction(o, ctx);
  cfg.emit_empty_support = o.emit_empty_support;
  cfg.order = o.sorted ? OutputOrder::sorted : OutputOrder::traversal;

  const auto items = ctx.item_names();
  const auto objects = ctx.object_names();
  std::function<void(const TraceEvent&)> trace;
  if (o.trace) trace = [&](const TraceEvent& ev) { std::cerr << format::trace_line(ev, items) << '\n'; };

  if (!cfg.family->strongly_accessible()) {
    // Explicit families that cannot be mined are scanned member by member.
    auto cc = build_concept_confluence(ctx, *cfg.family, cfg.abstraction);
    for (const auto& c : cc.concepts) {
      if (c.empty_support && !o.emit_empty_support) continue;
      std::cout << (o.format == "json" ? format::concept_json(c, items, objects) : format::concept_tsv(c, items, objects))
                << '\n';
    }
    std::cerr << "note: family is not strongly accessible; closed patterns were found by a member scan\n";
    return 0;
  }
  mine(
      cfg,
      [&](const MineEvent& ev) {
        std::cout << (o.format == "json" ? format::concept_json(ev.closed, items, objects)
                                         : format::concept_tsv(ev.closed, items, objects))
                  << '\n';
      },
      trace);
  return 0;
}

int run_basis(const RunOptions& o) {
  auto p = load_problem(o, true);
  const auto& ctx = *p.context;
  auto members = oracle::materialize(*p.loaded.family, o.budget);
  for (const auto& imp : minmax_basis(ctx, *p.loaded.family, members))
    std::cout << (o.format == "json" ? format::implication_json(imp, ctx.item_names())
                                     : format::implication_text(imp, ctx.item_names()))
              << '\n';
  return 0;
}

int run_check_family(const RunOptions& o) {
  Loaded l = load_family(o.family, nullptr);
  const auto names = l.items.names();
  if (!l.family) {
    auto v = ExplicitFamily::check_subconfluence(l.raw_members);
    if (!v) {
      const auto& w = *v.witness;
      std::cerr << "not a subconfluence: t=" << braced(w.t, names) << " x=" << braced(w.x, names)
                << " y=" << braced(w.y, names) << " but x ∪ y=" << braced(w.x | w.y, names) << " is not a member\n";
      std::cout << "subconfluence\tno\n";
      return 1;
    }
    make_explicit(l);
  }
  const auto& fam = *l.family;
  std::cout << "family\t" << fam.describe() << '\n';
  std::cout << "subconfluence\tyes\n";
  std::cout << "minimals\t" << fam.minimals().size() << '\n';
  if (const auto* members = fam.explicit_members()) {
    std::cout << "members\t" << members->size() << '\n';
    auto sa = is_strongly_accessible(static_cast<const ExplicitFamily&>(fam));
    std::cout << "strongly-accessible\t" << (sa ? "yes" : "no");
    if (!sa)
      std::cout << "\tstuck " << braced(sa.witness->from, names) << " -> " << braced(sa.witness->to, names);
    std::cout << '\n';
  } else {
    std::cout << "strongly-accessible\tyes\n";
  }
  return 0;
}

int run_check_confluence(const RunOptions& o) {
  auto np = order::parse_poset_text(io::read_file(o.poset_file));
  auto v = confluence::is_confluence(np.poset);
  if (v) {
    std::cout << "confluence\tyes\n";
    return 0;
  }
  const auto& w = *v.witness;
  std::cerr << "not a confluence: the up-set of " << np.names[w.minimal];
  if (w.pair)
    std::cerr << " has no meet for " << np.names[w.pair->first] << ", " << np.names[w.pair->second] << '\n';
  else
    std::cerr << " has no greatest element\n";
  std::cout << "confluence\tno\n";
  return 1;
}

int run_oracle(const RunOptions& o) {
  auto ctx_rows = io::parse_context(io::read_file(o.context));
  Loaded l = load_family(o.family, &ctx_rows);
  auto ctx = io::build_context(ctx_rows, l.items);
  auto abs = load_abstraction(o, ctx);
  oracle::OracleOptions opts;
  opts.seed = o.seed;
  opts.budget = o.budget;
  auto report = l.family ? oracle::verify_all(ctx, *l.family, abs, opts)
                         : oracle::verify_candidate(ctx, l.raw_members, abs, opts);
  std::cout << oracle::to_json(report, ctx.item_names(), ctx.object_names()) << '\n';
  if (report.first_counterexample) std::cerr << "counterexample: " << *report.first_counterexample << '\n';
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed patterns in connected pattern families", "cfl"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  RunOptions o;

  auto* mine_cmd = app.add_subcommand("mine", "list the (abstract) support-closed patterns");
  add_family_flags(mine_cmd, o.family);
  add_context_flags(mine_cmd, o, true);
  mine_cmd->add_option("--format", o.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
  mine_cmd->add_flag("--sorted", o.sorted, "sort output by intent instead of traversal order");
  mine_cmd->add_flag("--emit-empty-support", o.emit_empty_support, "include closed patterns with empty abstract support");
  mine_cmd->add_flag("--trace", o.trace, "write miner steps to stderr");

  auto* basis_cmd = app.add_subcommand("basis", "list the min-max implication basis");
  add_family_flags(basis_cmd, o.family);
  add_context_flags(basis_cmd, o, false);
  basis_cmd->add_option("--format", o.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
  basis_cmd->add_option("--budget", o.budget, "maximum family size to materialize");

  auto* check_cmd = app.add_subcommand("check", "validate a family, or a poset with `check confluence FILE`");
  add_family_flags(check_cmd, o.family);
  check_cmd->require_subcommand(0, 1);
  auto* conf_cmd = check_cmd->add_subcommand("confluence", "check that a poset file describes a confluence");
  conf_cmd->add_option("file", o.poset_file, "poset file")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "run every brute-force check and print a JSON report");
  add_family_flags(oracle_cmd, o.family);
  add_context_flags(oracle_cmd, o, true);
  oracle_cmd->add_option("--seed", o.seed, "seed for sampled subsets");
  oracle_cmd->add_option("--budget", o.budget, "maximum family size to materialize");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*mine_cmd) return run_mine(o);
    if (*basis_cmd) return run_basis(o);
    if (*conf_cmd) return run_check_confluence(o);
    if (*check_cmd) return run_check_family(o);
    if (*oracle_cmd) return run_oracle(o);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return 2;
  } catch (const io::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "invalid: " << e.what() << '\n';
    return 1;
  } catch (const BudgetExceeded& e) {
    std::cerr << "invalid: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
