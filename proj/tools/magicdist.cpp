#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "magicdist/automorphism.hpp"
#include "magicdist/graph.hpp"
#include "magicdist/labeling.hpp"
#include "magicdist/report.hpp"
#include "magicdist/search.hpp"
#include "magicdist/spectral.hpp"

namespace md = magicdist;
using md::ordered_json;

namespace {

struct GraphInput {
  std::string g6;
  std::string edges_path;
  std::string spec;
};

void add_graph_options(CLI::App* cmd, GraphInput& in) {
  auto* grp = cmd->add_option_group("graph", "graph source (choose one)");
  grp->add_option("--g6", in.g6, "graph6 string");
  grp->add_option("--edges", in.edges_path, "edge list file: 'n m' header then one 'u v' per line");
  grp->add_option("--construct", in.spec, "family spec, e.g. knm:6 or cone:cycle:4");
  grp->require_option(1);
}

md::Graph load_graph(const GraphInput& in) {
  if (!in.g6.empty()) return md::parse_graph6(in.g6);
  if (!in.edges_path.empty()) {
    std::ifstream f(in.edges_path);
    if (!f) throw std::invalid_argument("cannot open edge list file: " + in.edges_path);
    std::stringstream buf;
    buf << f.rdbuf();
    return md::parse_edge_list_text(buf.str());
  }
  return md::construct(in.spec);
}

ordered_json input_digest(const GraphInput& in, const md::Graph& g) {
  ordered_json j = md::graph_digest(g);
  if (!in.edges_path.empty()) j["edges_file"] = in.edges_path;
  if (!in.spec.empty()) j["construct"] = in.spec;
  return j;
}

void emit(const ordered_json& payload) { std::cout << md::payload_text(payload); }

int default_threads() {
  const char* env = std::getenv("MAGICDIST_THREADS");
  if (env == nullptr) return 1;
  int v = std::atoi(env);
  return v >= 1 ? v : 1;
}

int run_verify(const GraphInput& gin, const std::string& label, int mod) {
  md::Graph g = load_graph(gin);
  ordered_json input = input_digest(gin, g);
  input["label"] = label;

  bool embedded_p = label.rfind("p=", 0) == 0;
  if (embedded_p || mod > 0) {
    md::ModularLabeling f = embedded_p
                                ? md::parse_modular_labeling(label)
                                : md::parse_modular_labeling("p=" + std::to_string(mod) + ":" + label);
    if (mod > 0 && f.modulus() != mod)
      throw std::invalid_argument("--mod disagrees with the modulus in the labeling");
    md::VerifyResult r = md::verify_p_distance_magic(g, f);
    emit(md::report_envelope("verify", input, md::verify_report(g, f, r)));
    return r.ok() ? 0 : 1;
  }
  md::Labeling f = md::parse_labeling(label);
  md::VerifyResult r = md::verify_distance_magic(g, f);
  emit(md::report_envelope("verify", input, md::verify_report(g, f, r)));
  return r.ok() ? 0 : 1;
}

int run_search(const GraphInput& gin, int mod, long long limit, bool count_only,
               const md::SearchConfig& cfg) {
  md::Graph g = load_graph(gin);
  ordered_json input = input_digest(gin, g);
  if (mod > 0) input["mod"] = mod;
  if (limit >= 0) input["limit"] = limit;
  if (count_only) input["count"] = true;

  long long count = 0;
  ordered_json result;
  if (mod > 0) {
    std::vector<md::ModularLabeling> found = md::find_p_dm_labelings(g, mod, cfg);
    count = static_cast<long long>(found.size());
    result = count_only ? md::count_report(mod, count) : md::search_report(g, mod, found);
  } else if (count_only) {
    count = md::count_dm_labelings(g, cfg);
    result = md::count_report(count);
  } else {
    std::vector<md::Labeling> found = md::find_dm_labelings(g, cfg);
    count = static_cast<long long>(found.size());
    result = md::search_report(g, found);
  }
  emit(md::report_envelope("search", input, result));
  return count > 0 ? 0 : 1;
}

int run_spectral(const GraphInput& gin) {
  md::Graph g = load_graph(gin);
  emit(md::report_envelope("spectral", input_digest(gin, g), md::spectral_report(g)));
  return 0;
}

int run_aut(const GraphInput& gin, bool elements) {
  md::Graph g = load_graph(gin);
  md::AutGroup group = md::automorphisms(g);
  emit(md::report_envelope("aut", input_digest(gin, g), md::aut_report(g, group, elements)));
  return 0;
}

int run_crt(const GraphInput& gin, const std::string& fp, const std::string& fq) {
  md::Graph g = load_graph(gin);
  ordered_json input = input_digest(gin, g);
  input["fp"] = fp;
  input["fq"] = fq;
  md::CrtResult r = md::crt_combine(g, md::parse_modular_labeling(fp), md::parse_modular_labeling(fq));
  emit(md::report_envelope("crt", input, md::crt_report(r)));
  return r.consistent ? 0 : 1;
}

int run_construct(const std::string& spec) {
  md::Graph g = md::construct(spec);
  ordered_json input;
  input["construct"] = spec;
  emit(md::report_envelope("construct", input, md::construct_report(g)));
  return 0;
}

int run_census(int n, const std::string& corpus, const md::CensusOptions& opts) {
  std::vector<md::CensusRecord> records;
  if (!corpus.empty()) {
    std::ifstream file;
    std::istream* is = &std::cin;
    if (corpus != "-") {
      file.open(corpus);
      if (!file) throw std::invalid_argument("cannot open corpus file: " + corpus);
      is = &file;
    }
    std::vector<md::Graph> graphs;
    std::string line;
    while (std::getline(*is, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (!line.empty()) graphs.push_back(md::parse_graph6(line));
    }
    records = md::census_corpus(graphs, opts);
  } else {
    if (n == 0) throw std::invalid_argument("census needs an order or --corpus");
    records = md::census_dm_graphs(n, opts);
  }
  for (const md::CensusRecord& rec : records) std::cout << md::census_record_json(rec).dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distance magic and p-distance magic labeling toolkit"};
  app.require_subcommand(1);
  int threads = default_threads();

  GraphInput vg;
  std::string label;
  int vmod = 0;
  CLI::App* verify = app.add_subcommand("verify", "check a labeling against a graph");
  add_graph_options(verify, vg);
  verify->add_option("--label", label, "labeling: '1,3,2' or 'p=2:1,2,2,1'")->required();
  verify->add_option("--mod", vmod, "verify modulo p")->check(CLI::PositiveNumber);

  GraphInput sg;
  int smod = 0;
  long long limit = -1;
  bool count_only = false;
  md::SearchConfig cfg;
  CLI::App* search = app.add_subcommand("search", "enumerate magic labelings");
  add_graph_options(search, sg);
  search->add_option("--mod", smod, "search for p-distance magic labelings")->check(CLI::PositiveNumber);
  search->add_option("--limit", limit, "stop after this many labelings");
  search->add_flag("--count", count_only, "print only the number of labelings");
  search->add_option("--threads", threads, "worker threads (env MAGICDIST_THREADS)");
  search->add_flag("--most-constrained", cfg.most_constrained, "branch on the tightest vertex first");
  search->add_flag("--symmetry-reduction", cfg.symmetry_reduction,
                   "search orbit representatives, then expand");
  search->add_flag("--prune,!--no-prune", cfg.prune_filters, "structural pre-filters (on by default)");

  GraphInput pg;
  CLI::App* spectral = app.add_subcommand("spectral", "characteristic polynomial and spectrum report");
  add_graph_options(spectral, pg);

  int census_n = 0;
  std::string corpus;
  bool include_degenerate = false;
  CLI::App* census = app.add_subcommand("census", "list distance magic graphs as JSON lines");
  census->add_option("n", census_n, "enumerate all graphs of this order")->check(CLI::Range(1, 8));
  census->add_option("--corpus", corpus, "graph6 lines from a file, or - for stdin");
  census->add_option("--threads", threads, "worker threads (env MAGICDIST_THREADS)");
  census->add_flag("--include-degenerate", include_degenerate, "keep edgeless graphs");

  GraphInput ag;
  bool elements = false;
  CLI::App* aut = app.add_subcommand("aut", "automorphism group and vertex orbits");
  add_graph_options(aut, ag);
  aut->add_flag("--elements", elements, "list every group element");

  GraphInput cg;
  std::string fp_text, fq_text;
  CLI::App* crt = app.add_subcommand("crt", "combine two modular labelings");
  add_graph_options(crt, cg);
  crt->add_option("--fp", fp_text, "first labeling, 'p=2:1,2,2,1'")->required();
  crt->add_option("--fq", fq_text, "second labeling, 'p=3:2,1,3,1'")->required();

  std::string construct_spec;
  CLI::App* construct = app.add_subcommand("construct", "build a named graph family member");
  construct->add_option("spec", construct_spec, "family spec, e.g. singular_even:8")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto started = std::chrono::steady_clock::now();
  int rc = 2;
  std::string name;
  try {
    if (app.got_subcommand(verify)) {
      name = "verify";
      rc = run_verify(vg, label, vmod);
    } else if (app.got_subcommand(search)) {
      name = "search";
      cfg.limit = limit;
      cfg.threads = threads;
      rc = run_search(sg, smod, limit, count_only, cfg);
    } else if (app.got_subcommand(spectral)) {
      name = "spectral";
      rc = run_spectral(pg);
    } else if (app.got_subcommand(census)) {
      name = "census";
      if (census_n != 0 && !corpus.empty())
        throw std::invalid_argument("give either an order or --corpus, not both");
      rc = run_census(census_n, corpus, {threads, include_degenerate});
    } else if (app.got_subcommand(aut)) {
      name = "aut";
      rc = run_aut(ag, elements);
    } else if (app.got_subcommand(crt)) {
      name = "crt";
      rc = run_crt(cg, fp_text, fq_text);
    } else if (app.got_subcommand(construct)) {
      name = "construct";
      rc = run_construct(construct_spec);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
  std::cerr << "magicdist " << name << ": " << elapsed.count() << " ms\n";
  return rc;
}
