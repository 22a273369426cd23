// cdc: command-line front end for the subspace code library.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cdc/bounds.hpp"
#include "cdc/clique.hpp"
#include "cdc/codes.hpp"
#include "cdc/configurations.hpp"
#include "cdc/extension_graphs.hpp"
#include "cdc/grassmannian.hpp"
#include "cdc/group_action.hpp"
#include "cdc/kernels.hpp"
#include "cdc/models.hpp"
#include "cdc/plane_encoding.hpp"
#include "cdc/rank_code.hpp"

using json = nlohmann::ordered_json;
using namespace cdc;

namespace {

// FNV-1a, 64 bit.
struct Digest {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  void add(std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    h ^= 0xff;
    h *= 0x100000001b3ULL;
  }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Context {
  std::string format = "text";
  std::string command;
  Digest digest;
  json results = json::object();
  int exit_code = 0;
};

// Artifact sink: the --out path when given, stdout otherwise.
void write_artifact(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
  if (!f) throw std::runtime_error("write failed: " + out);
}

void emit_report(const Context& ctx, double seconds) {
  if (ctx.format == "json") {
    json r;
    r["command"] = ctx.command;
    r["inputs_digest"] = ctx.digest.hex();
    r["results"] = ctx.results;
    r["wall_time_s"] = seconds;
    std::cerr << r.dump(2) << '\n';
    return;
  }
  std::cerr << "command: " << ctx.command << '\n';
  std::cerr << "inputs: " << ctx.digest.hex() << '\n';
  for (const auto& [key, value] : ctx.results.items()) {
    std::cerr << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  std::cerr << "wall time: " << seconds << " s\n";
}

json histogram_json(const std::map<std::size_t, std::uint64_t>& h) {
  json out = json::object();
  for (const auto& [k, v] : h) out[std::to_string(k)] = v;
  return out;
}

json report_json(const CdcReport& r) {
  json j;
  j["v"] = r.v;
  j["k"] = r.k;
  j["size"] = r.size;
  j["declared_distance"] = r.declared_distance;
  j["min_distance"] = r.min_distance ? json(*r.min_distance) : json(nullptr);
  j["distance_histogram"] = histogram_json(r.distance_histogram);
  j["distance_ok"] = r.distance_ok;
  j["max_point_degree"] = r.max_point_degree;
  j["max_hyperplane_degree"] = r.max_hyperplane_degree;
  j["point_cap"] = r.point_cap ? json(*r.point_cap) : json(nullptr);
  j["hyperplane_cap"] = r.hyperplane_cap ? json(*r.hyperplane_cap) : json(nullptr);
  j["caps_ok"] = r.caps_ok;
  if (r.hyperplane_audit_run) {
    std::uint32_t weakest = UINT32_MAX;
    for (const auto& w : r.hyperplane_witnesses) weakest = std::min(weakest, w.degree);
    j["hyperplane_audit"] = {{"witnesses", r.hyperplane_witnesses.size()}, {"min_witness_degree", weakest},
                             {"ok", r.hyperplane_audit_ok}};
  }
  if (r.too_small()) j["note"] = "fewer than two codewords; distance undefined";
  j["ok"] = r.ok();
  return j;
}

ConstantDimensionCode construct(const std::string& variant) {
  if (variant == "lmrd") return lifted_gabidulin();
  if (variant == "extended-a") return extended_lmrd(ExtendedVariant::A);
  if (variant == "extended-b") return extended_lmrd(ExtendedVariant::B);
  throw std::invalid_argument("unknown variant " + variant);
}

json trace_json(const BoundTrace& t) {
  json levels = json::array();
  for (const auto& l : t.levels) {
    levels.push_back({{"v", l.v},
                      {"k", l.k},
                      {"numerator", l.numerator},
                      {"divisor", l.divisor},
                      {"floor", l.floor_value},
                      {"value", l.value},
                      {"residuals", l.residuals}});
  }
  return {{"base_v", t.base_v}, {"base_value", t.base_value}, {"levels", levels}};
}

// "fix-zero:<idx>" or "coverage:<idx>:<rhs>", idx a canonical solid index of F2^8.
void apply_cut(LinearModel& m, const Grassmannian& solids, const std::string& spec, json& log) {
  const auto fields = [&] {
    std::vector<std::string> out;
    std::stringstream ss(spec);
    for (std::string f; std::getline(ss, f, ':');) out.push_back(f);
    return out;
  }();
  const auto solid = [&](const std::string& s) -> const Subspace& {
    const auto idx = std::stoull(s);
    if (idx >= solids.size()) throw std::invalid_argument("cut: solid index out of range: " + s);
    return solids[idx];
  };
  if (fields.size() == 2 && fields[0] == "fix-zero") {
    add_fix_zero_cut(m, solid(fields[1]));
  } else if (fields.size() == 3 && fields[0] == "coverage") {
    add_coverage_cut(m, solid(fields[1]), std::stoll(fields[2]));
  } else {
    throw std::invalid_argument("bad cut '" + spec + "' (fix-zero:<idx> or coverage:<idx>:<rhs>)");
  }
  log.push_back(spec);
}

std::string cliques_text(const std::vector<Clique>& cliques) {
  std::ostringstream out;
  for (const auto& c : cliques) {
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i] + 1;
    out << '\n';
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary constant-dimension subspace codes: constructions, audits, search and ILP export"};
  app.require_subcommand(1);
  Context ctx;
  app.add_option("--format", ctx.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  std::string out;

  auto* c_construct = app.add_subcommand("construct", "Write an (8, N, 6; 4) code");
  std::string variant;
  c_construct->add_option("variant", variant)->required()->check(CLI::IsMember({"lmrd", "extended-a", "extended-b"}));
  c_construct->add_option("--out", out, "Code file (default stdout)");

  auto* c_verify = app.add_subcommand("verify", "Audit a code file");
  std::string in_path;
  std::size_t declared_d = 2;
  c_verify->add_option("file", in_path)->required();
  c_verify->add_option("--d", declared_d, "Declared minimum distance");

  auto* c_bounds = app.add_subcommand("bounds", "Johnson and improved bounds for A_q(v, d; k)");
  BoundQuery query;
  c_bounds->add_option("q", query.q)->required();
  c_bounds->add_option("v", query.v)->required();
  c_bounds->add_option("d", query.d)->required();
  c_bounds->add_option("k", query.k)->required();

  auto* c_table = app.add_subcommand("table", "Echo a hyperplane configuration");
  std::size_t index = 0;
  c_table->add_option("index", index)->required()->check(CLI::Range(std::size_t{1}, kConfigurationCount));

  auto* c_graph = app.add_subcommand("graph", "Extension graph of configuration <index>");
  c_graph->add_option("index", index)->required()->check(CLI::Range(std::size_t{1}, kConfigurationCount));
  c_graph->add_option("--out", out, "Adjacency file (default stdout)");

  auto* c_ilp = app.add_subcommand("ilp", "Export an LP model");
  int lemma = 6;
  std::int64_t f = 17;
  bool relax = false;
  std::vector<std::string> cuts;
  c_ilp->add_option("lemma", lemma)->required()->check(CLI::IsMember({6, 7}));
  c_ilp->add_option("index", index)->required()->check(CLI::Range(std::size_t{1}, kConfigurationCount));
  c_ilp->add_option("--f", f, "Point and hyperplane cap (model 6)");
  c_ilp->add_flag("--relax", relax, "Continuous variables");
  c_ilp->add_option("--cut", cuts, "fix-zero:<idx> or coverage:<idx>:<rhs> (model 6)");
  c_ilp->add_option("--out", out, "LP file (default stdout)");

  auto* c_clique = app.add_subcommand("clique", "Cliques of a graph file");
  std::size_t target = 0;
  std::string group_path;
  int workers = 0;
  std::vector<std::size_t> thresholds;
  bool reps_only = false;
  c_clique->add_option("graph", in_path)->required();
  c_clique->add_option("--target", target, "Clique size (default: clique number)");
  c_clique->add_option("--group", group_path, "Automorphism generators, one permutation per line");
  c_clique->add_option("--workers", workers, "Worker threads (0 = default)");
  c_clique->add_option("--split", thresholds, "Vertex thresholds for further trivial splits");
  c_clique->add_flag("--representatives", reps_only, "Only orbit representatives");
  c_clique->add_option("--out", out, "Clique list (default stdout)");

  auto* c_mrd = app.add_subcommand("mrd-extend", "Extensions of the 16-word Gabidulin subcode");
  std::optional<unsigned> last_row;
  c_mrd->add_option("--last-row", last_row, "Restrict to matrices with this last row (0..15)")
      ->check(CLI::Range(0U, 15U));
  c_mrd->add_option("--workers", workers, "Worker threads (0 = default)");
  c_mrd->add_option("--out", out, "Maximum cliques as packed matrices (default stdout)");

  CLI11_PARSE(app, argc, argv);

  for (int i = 1; i < argc; ++i) ctx.command += (i > 1 ? " " : "") + std::string(argv[i]);
  ctx.digest.add(ctx.command);
  const auto t0 = std::chrono::steady_clock::now();
  auto& res = ctx.results;

  try {
    if (*c_construct) {
      const auto code = construct(variant);
      const auto report = verify_cdc(code);
      std::ostringstream text;
      write_code(text, code);
      write_artifact(out, text.str());
      res["variant"] = variant;
      res["N"] = code.size();
      res["k"] = code.k();
      res["v"] = code.v();
      res["min_distance"] = report.min_distance ? json(*report.min_distance) : json(nullptr);
      res["distance_histogram"] = histogram_json(report.distance_histogram);
      if (variant != "lmrd") {
        const auto extra = code.words().back();
        const std::vector<Subspace> rest(code.words().begin(), code.words().end() - 1);
        res["extra_word_profile"] = histogram_json(distance_profile_to(extra, rest));
      }
    } else if (*c_verify) {
      const auto text = slurp(in_path);
      ctx.digest.add(text);
      std::istringstream in(text);
      const auto code = read_code(in, declared_d);
      const auto report = verify_cdc(code);
      res = report_json(report);
      ctx.exit_code = report.ok() && !report.too_small() ? 0 : 2;
    } else if (*c_bounds) {
      query.validate();
      const auto table = KnownValueTable::standard();
      BoundTrace jt;
      BoundTrace it;
      res["query"] = query.to_string();
      res["johnson"] = johnson_iterated(query, table, &jt);
      res["improved"] = improved_bound(query, table, &it);
      res["improved_trace"] = trace_json(it);
      if (const auto known = table.lookup(query)) res["exact"] = {{"value", known->value}, {"source", known->source}};
      std::cout << query.to_string() << ": johnson " << res["johnson"].get<std::uint64_t>() << ", improved "
                << res["improved"].get<std::uint64_t>() << '\n';
    } else if (*c_table) {
      const auto planes = load_configuration(index);
      std::ostringstream text;
      text << index << " &";
      for (const auto& p : planes) text << ' ' << format_plane_encoding(p);
      text << '\n';
      write_artifact("", text.str());
      res["index"] = index;
      res["type"] = configuration_type(index);
      res["planes"] = planes.size();
      res["pairwise_disjoint"] = pairwise_disjoint(planes);
    } else if (*c_graph) {
      const auto F = configuration_to_solids(load_configuration(index));
      const auto g = build_extension_graph(F);
      std::ostringstream text;
      g.graph.write_adjacency(text);
      write_artifact(out, text.str());
      res["index"] = index;
      res["vertices"] = g.graph.size();
      res["edges"] = g.graph.edge_count();
    } else if (*c_ilp) {
      LinearModel m;
      json applied = json::array();
      if (lemma == 6) {
        const auto F = configuration_to_solids(load_configuration(index));
        m = build_lemma6_model(F, f, relax);
        const Grassmannian solids(8, 4);
        for (const auto& c : cuts) apply_cut(m, solids, c, applied);
      } else {
        if (!cuts.empty()) throw std::invalid_argument("cuts apply to model 6 only");
        m = build_lemma7_model(dual_solids(load_configuration(index)));
        if (relax) m.relax();
      }
      write_artifact(out, to_lp_text(m));
      res["model"] = lemma;
      res["index"] = index;
      res["variables"] = m.num_vars();
      res["fixings"] = m.fixings().size();
      res["objective_constant"] = m.objective_constant();
      json census = json::object();
      for (const auto& [family, count] : m.census()) census[family] = count;
      res["census"] = census;
      res["nonzeros"] = m.nonzeros();
      res["cuts"] = applied;
      // Acceptance margin for external LP values (optimum must stay below N + 1 - eps).
      res["lp_epsilon"] = 0.1;
    } else if (*c_clique) {
      const auto text = slurp(in_path);
      ctx.digest.add(text);
      std::istringstream in(text);
      const auto g = SearchGraph::read_adjacency(in);
      GroupAction action = GroupAction::trivial(g.size());
      if (!group_path.empty()) {
        const auto perms_text = slurp(group_path);
        ctx.digest.add(perms_text);
        std::istringstream pin(perms_text);
        action = GroupAction(g.size(), read_permutations(pin));
      }
      if (target == 0) target = max_clique(g).size;
      SplitOptions opts;
      opts.thresholds = thresholds;
      opts.workers = workers;
      opts.expand_orbits = !reps_only;
      const auto r = target == 0 ? SplitResult{} : split_enumerate(g, action, target, opts);
      write_artifact(out, cliques_text(reps_only ? r.representatives : r.cliques));
      res["vertices"] = g.size();
      res["edges"] = g.edge_count();
      res["target"] = target;
      res["generators"] = action.generators().size();
      res["subproblems"] = r.subproblems;
      res["orbits"] = r.representatives.size();
      if (!reps_only) res["cliques"] = r.cliques.size();
    } else if (*c_mrd) {
      if (workers > 0) kernels::set_threads(workers);
      const auto base = last_row_subcode(gabidulin(), 0);
      std::optional<BitMatrix::Row> row;
      if (last_row) row = *last_row;
      const auto g = build_mrd_extension_graph(base, row);
      CliqueOptions opts;
      opts.ordering = VertexOrdering::Natural;
      const auto omega = max_clique(g.graph, opts).size;
      const auto cliques = enumerate_cliques(g.graph, omega, opts);
      std::ostringstream text;
      for (const auto& c : cliques) {
        for (std::size_t i = 0; i < c.size(); ++i) text << (i ? " " : "") << pack_4x4(g.vertices[c[i]]);
        text << '\n';
      }
      write_artifact(out, text.str());
      res["base_words"] = base.words.size();
      res["last_row"] = last_row ? json(*last_row) : json(nullptr);
      res["vertices"] = g.graph.size();
      res["edges"] = g.graph.edge_count();
      res["clique_number"] = omega;
      res["maximum_cliques"] = cliques.size();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  emit_report(ctx, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  return ctx.exit_code;
}
