#include "secpath/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <memory>
#include <optional>

#include "secpath/fpt.hpp"
#include "secpath/io.hpp"
#include "secpath/oracle.hpp"
#include "secpath/reductions.hpp"

namespace secpath::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string upper(std::string_view s) {
  std::string r(s);
  std::transform(r.begin(), r.end(), r.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return r;
}

std::shared_ptr<const Graph> load_graph(const std::string& path) {
  try {
    return std::make_shared<const Graph>(parse_graph(read_file(path)));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

InstanceDescriptor load_instance(const std::string& path) {
  try {
    return parse_instance(read_file(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  return f;
}

// Flags describing an instance on the command line, or a file holding one.
struct InstanceFlags {
  std::string instance_file;
  std::string variant;
  bool st = false;
  std::optional<int> s, t, k, l;

  void attach(CLI::App& app) {
    app.add_option("--instance", instance_file, "instance file (key=value lines)");
    app.add_option("--variant", variant, "ssp, lsp, sup or lup");
    app.add_flag("--st", st, "fix both endpoints");
    app.add_option("--s", s, "first terminal");
    app.add_option("--t", t, "second terminal");
    app.add_option("--k", k, "size bound");
    app.add_option("--l", l, "neighborhood bound");
  }

  InstanceDescriptor resolve() const {
    InstanceDescriptor desc;
    if (!instance_file.empty()) {
      if (!variant.empty() || st || s || t || k || l)
        throw UsageError("--instance cannot be combined with inline instance flags");
      return load_instance(instance_file);
    }
    const auto v = parse_variant(variant);
    if (!v) throw UsageError(variant.empty() ? "missing --variant" : "unknown variant '" + variant + "'");
    if (!k || !l) throw UsageError("--k and --l are required");
    desc.variant = *v;
    desc.k = *k;
    desc.l = *l;
    if (st != (s.has_value() && t.has_value()) || s.has_value() != t.has_value())
      throw UsageError("--s and --t are required exactly with --st");
    if (st) desc.terminals = Terminals{*s, *t};
    return desc;
  }
};

ProblemInstance bind_instance(const InstanceDescriptor& desc, std::shared_ptr<const Graph> g) {
  try {
    return desc.bind(std::move(g));
  } catch (const InstanceError& e) {
    throw UsageError(std::string("invalid instance: ") + e.what());
  }
}

void write_stats(const std::string& path, const std::string& algo, const Answer& ans, double millis) {
  auto f = open_out(path);
  const SolverStats& s = ans.stats;
  f << "algo=" << algo << '\n'
    << "decision=" << (ans.yes ? "yes" : "no") << '\n'
    << "paths_enumerated=" << s.paths_enumerated << '\n'
    << "branch_runs=" << s.branch_runs << '\n'
    << "branch_nodes_explored=" << s.branch_nodes_explored << '\n'
    << "branch_max_allowed_degree=" << s.branch_max_allowed_degree << '\n'
    << "flow_calls=" << s.flow_calls << '\n'
    << "candidate_pairs_tried=" << s.candidate_pairs_tried << '\n'
    << "wall_ms=" << millis << '\n';
}

int print_answer(std::ostream& out, const Answer& ans) {
  if (!ans.yes) {
    out << "NO\n";
    return exit_no;
  }
  out << "YES\n";
  if (ans.witness) write_certificate(out, canonical_orientation(*ans.witness));
  return exit_yes;
}

void write_reduction(const std::string& prefix, const ReductionOutput& r, std::ostream& out,
                     std::ostream& err) {
  {
    auto f = open_out(prefix + ".graph");
    write_graph(f, r.instance.graph());
  }
  {
    auto f = open_out(prefix + ".instance");
    write_instance(f, InstanceDescriptor::of(r.instance));
  }
  {
    auto f = open_out(prefix + ".groups");
    write_groups(f, r.groups);
  }
  for (const auto& w : r.warnings) err << "warning: " << w << '\n';
  out << "wrote " << prefix << ".graph (" << r.instance.graph().vertex_count() << " vertices, "
      << r.instance.graph().edge_count() << " edges), " << prefix << ".instance, " << prefix << ".groups\n";
}

template <typename Enum>
Enum lookup(const std::map<std::string, Enum>& table, const std::string& key, const char* what) {
  const auto it = table.find(key);
  if (it == table.end()) throw UsageError(std::string("unknown ") + what + " '" + key + "'");
  return it->second;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Short/long secluded and unsecluded path solvers and instance constructions", "secpath"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "decide an instance");
  std::string solve_graph, algo = "fpt", stats_file, network_prefix;
  InstanceFlags solve_inst;
  solve->add_option("--graph", solve_graph, "graph file")->required();
  solve_inst.attach(*solve);
  solve->add_option("--algo", algo, "fpt or oracle")->check(CLI::IsMember({"fpt", "oracle"}));
  solve->add_option("--stats", stats_file, "write solver statistics as key=value lines");
  solve->add_option("--dump-network", network_prefix,
                    "write every flow network of the SUP solver to PREFIX.<v>.arcs");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "exhaustive path enumeration");
  std::string oracle_graph, oracle_stats;
  InstanceFlags oracle_inst;
  bool list = false;
  std::optional<int> max_vertices;
  oracle->add_option("--graph", oracle_graph, "graph file")->required();
  oracle_inst.attach(*oracle);
  oracle->add_flag("--list", list, "print every simple path with its neighborhood size");
  oracle->add_option("--max-vertices", max_vertices, "with --list: only paths up to this size");
  oracle->add_option("--stats", oracle_stats, "write statistics as key=value lines");

  // verify
  auto* verify = app.add_subcommand("verify", "check a path certificate");
  std::string verify_graph, cert_file;
  InstanceFlags verify_inst;
  verify->add_option("--graph", verify_graph, "graph file")->required();
  verify_inst.attach(*verify);
  verify->add_option("--cert", cert_file, "certificate file")->required();

  // reduce
  auto* reduce = app.add_subcommand("reduce", "build a reduction instance");
  std::string from, reduce_graph, target, out_prefix;
  InstanceFlags reduce_inst;
  bool keep_trivial = false, printed_threshold = false;
  PchcParams pchc;
  std::vector<int> red;
  reduce->add_option("--from", from, "lemma3 (free-to-st lifting), pchp, pchc, clique or rbds")
      ->required()
      ->check(CLI::IsMember({"lemma3", "pchp", "pchc", "clique", "rbds"}));
  reduce->add_option("--graph", reduce_graph, "input graph file")->required();
  reduce->add_option("--out", out_prefix, "output prefix")->required();
  reduce->add_option("--target", target, "pchp/pchc: ssp, lsp, sup, lup-a or lup-d");
  reduce_inst.attach(*reduce);
  reduce->add_flag("--keep-trivial", keep_trivial,
                   "free-to-st lifting: always build the pair construction, even when one vertex is a solution");
  reduce->add_option("--x", pchc.x, "pchc: vertex joined to s");
  reduce->add_option("--y", pchc.y, "pchc: first neighbor of x joined to t");
  reduce->add_option("--z", pchc.z, "pchc: second neighbor of x joined to t");
  reduce->add_option("--c", pchc.c, "pchc: number of pendants on s");
  reduce->add_option("--k-prime", pchc.k_prime, "pchc lup-d: size bound of the output");
  reduce->add_option("--red", red, "rbds: red vertices")->expected(0, -1);
  reduce->add_flag("--printed-threshold", printed_threshold,
                   "rbds: use l = k n^2 + 2n - k instead of the exact neighborhood size");

  // compose
  auto* compose = app.add_subcommand("compose", "OR-compose st-instances");
  std::vector<std::string> compose_graphs, compose_instances;
  std::string compose_out;
  compose->add_option("--graph", compose_graphs, "graph file, once per instance")->required();
  compose->add_option("--instance", compose_instances, "instance file, once per instance")->required();
  compose->add_option("--out", compose_out, "output prefix")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    if (*solve) {
      const auto desc = solve_inst.resolve();
      const auto inst = bind_instance(desc, load_graph(solve_graph));
      const auto start = std::chrono::steady_clock::now();
      Answer ans;
      if (algo == "oracle") {
        ans = oracle_decide(inst);
      } else {
        if (!is_short(inst.variant()))
          throw UsageError("no FPT solver for " + upper(to_string(inst.variant())) + "; use --algo oracle");
        if (inst.variant() == Variant::sup && !network_prefix.empty()) {
          SupOptions opts;
          opts.on_network = [&](const FlowNetwork& net) {
            auto f = open_out(network_prefix + "." + std::to_string(net.through) + ".arcs");
            write_arc_list(f, net);
          };
          auto st_solver = [&](const ProblemInstance& i) { return st_sup_decide(i, opts); };
          ans = inst.st_mode() ? st_solver(inst) : free_variant_decide(inst, st_solver);
        } else {
          ans = fpt_decide(inst);
        }
      }
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      if (!stats_file.empty()) write_stats(stats_file, algo, ans, ms);
      return print_answer(out, ans);
    }

    if (*oracle) {
      const auto g = load_graph(oracle_graph);
      if (list) {
        PathQuery q;
        q.max_vertices = max_vertices;
        if (oracle_inst.s || oracle_inst.t) {
          if (!oracle_inst.s || !oracle_inst.t) throw UsageError("--list needs both --s and --t or neither");
          q.endpoints = Terminals{*oracle_inst.s, *oracle_inst.t};
          if (!g->contains(q.endpoints->s) || !g->contains(q.endpoints->t))
            throw UsageError("terminal out of range");
        }
        for_each_path(*g, q, [&](const PathView& p) {
          for (std::size_t i = 0; i < p.vertices.size(); ++i) out << (i ? " " : "") << p.vertices[i];
          out << " : " << p.neighbors << '\n';
          return true;
        });
        return exit_yes;
      }
      const auto inst = bind_instance(oracle_inst.resolve(), g);
      const auto start = std::chrono::steady_clock::now();
      const Answer ans = oracle_decide(inst);
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      if (!oracle_stats.empty()) write_stats(oracle_stats, "oracle", ans, ms);
      return print_answer(out, ans);
    }

    if (*verify) {
      const auto inst = bind_instance(verify_inst.resolve(), load_graph(verify_graph));
      PathCertificate cert;
      try {
        cert = parse_certificate(read_file(cert_file));
      } catch (const ParseError& e) {
        throw UsageError(cert_file + ": " + e.what());
      }
      const auto report = verify_certificate(inst, cert);
      if (report.accepted) {
        out << "ACCEPTED size=" << report.size << " neighbors=" << report.neighbors << '\n';
        return exit_yes;
      }
      out << "REJECTED " << to_string(report.violation) << ": " << report.detail << '\n';
      return exit_no;
    }

    if (*reduce) {
      const auto g = load_graph(reduce_graph);
      ReductionOutput r = [&] {
        if (from == "lemma3") {
          StLiftOptions opts;
          opts.shortcut_trivial = !keep_trivial;
          return reduce_to_st(bind_instance(reduce_inst.resolve(), g), opts);
        }
        if (from == "pchp") {
          static const std::map<std::string, PchpTarget> targets{
              {"ssp", PchpTarget::ssp},
              {"lsp", PchpTarget::lsp},
              {"sup", PchpTarget::sup},
              {"lup-a", PchpTarget::lup_full_length},
              {"lup-d", PchpTarget::lup_pendants}};
          return pchp_to_variant(*g, lookup(targets, target, "target"));
        }
        if (from == "pchc") {
          static const std::map<std::string, PchcTarget> targets{
              {"ssp", PchcTarget::ssp},
              {"lsp", PchcTarget::lsp},
              {"sup", PchcTarget::sup},
              {"lup-a", PchcTarget::lup_full_length},
              {"lup-d", PchcTarget::lup_pendants}};
          return pchc_to_st_variant(*g, lookup(targets, target, "target"), pchc);
        }
        if (!reduce_inst.k) throw UsageError("--from " + from + " needs --k");
        if (from == "clique") return clique_to_ssp(*g, *reduce_inst.k);
        RbdsParams params;
        params.k = *reduce_inst.k;
        params.threshold = printed_threshold ? RbdsThreshold::printed : RbdsThreshold::exact;
        return rbds_to_sup(*g, VertexSet(red), params);
      }();
      write_reduction(out_prefix, r, out, err);
      return exit_yes;
    }

    if (*compose) {
      if (compose_graphs.size() != compose_instances.size())
        throw UsageError("give one --instance per --graph");
      std::vector<ProblemInstance> parts;
      for (std::size_t i = 0; i < compose_graphs.size(); ++i)
        parts.push_back(bind_instance(load_instance(compose_instances[i]), load_graph(compose_graphs[i])));
      write_reduction(compose_out, or_compose(parts), out, err);
      return exit_yes;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    // Precondition failures of reductions, graphs and instances.
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace secpath::cli
