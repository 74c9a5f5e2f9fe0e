// Command-line front end for the gaugegraph shared library.
//
// Exit codes: 0 success, 1 verification checks failed, 2 input error,
// 3 enumeration cap exceeded.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "CLI11.hpp"
#include "gaugegraph.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

int exit_code_for(gg_status s) {
  switch (s) {
    case GG_OK:
      return kExitOk;
    case GG_ERR_CAP:
      return kExitCapExceeded;
    default:
      return kExitInputError;
  }
}

const char* prefix_for(gg_status s) {
  switch (s) {
    case GG_ERR_PARSE:
      return "error[parse]";
    case GG_ERR_CAP:
      return "error[cap]";
    case GG_ERR_IO:
      return "error[io]";
    default:
      return "error[input]";
  }
}

[[noreturn]] void die(gg_status s) {
  std::fprintf(stderr, "gaugegraph: %s: %s\n", prefix_for(s), gg_last_error());
  std::exit(exit_code_for(s));
}

struct Options {
  std::string graph_path, group_spec, field_path, action_path, output_path;
  std::string theorem = "b";
  std::string format = "human";
  unsigned long long cap = 0;  // 0 = library default
  unsigned long long seed = 0;
  bool full = false;
};

unsigned long long env_cap() {
  const char* v = std::getenv("GAUGEGRAPH_CAP");
  if (!v || !*v) return 0;
  char* end = nullptr;
  unsigned long long cap = std::strtoull(v, &end, 10);
  if (end && *end == '\0' && cap > 0) return cap;
  std::fprintf(stderr, "gaugegraph: error[input]: bad GAUGEGRAPH_CAP value '%s'\n", v);
  std::exit(kExitInputError);
}

gg_graph* load_graph(const Options& opt) {
  gg_graph* g = nullptr;
  gg_status s = gg_graph_load(opt.graph_path.c_str(), &g);
  if (s != GG_OK) die(s);
  return g;
}

gg_group* load_group(const Options& opt) {
  gg_group* g = nullptr;
  gg_status s = gg_group_parse(opt.group_spec.c_str(), &g);
  if (s != GG_OK) die(s);
  return g;
}

gg_field* load_field(const Options& opt, gg_graph* graph, gg_group* group) {
  gg_field* f = nullptr;
  gg_status s = gg_field_load(opt.field_path.c_str(), graph, group, &f);
  if (s != GG_OK) die(s);
  return f;
}

// prints the report, honoring --format and --output; returns pass/fail.
// Human output is the aligned table followed by the machine block; machine
// output is the block alone (byte-stable for identical invocations).
bool emit_report(const Options& opt, gg_report* rep) {
  std::string text;
  if (opt.format == "machine")
    text = gg_report_render(rep, 1);
  else
    text = std::string(gg_report_render(rep, 0)) + "\n" + gg_report_render(rep, 1);
  if (!opt.output_path.empty()) {
    std::ofstream out(opt.output_path, std::ios::binary);
    if (!out) {
      std::fprintf(stderr, "gaugegraph: error[io]: cannot write '%s'\n",
                   opt.output_path.c_str());
      std::exit(kExitInputError);
    }
    out << text;
  }
  std::fputs(text.c_str(), stdout);
  return gg_report_passed(rep) != 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice gauge fields on finite graphs: holonomy, gauge orbits, classification"};
  app.require_subcommand(1);

  Options opt;
  opt.cap = env_cap();

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--cap", opt.cap, "enumeration cap (default 1000000)");
    cmd->add_option("--seed", opt.seed, "seed for sampled checks");
    cmd->add_option("--format", opt.format, "report format: human|machine")
        ->check(CLI::IsMember({"human", "machine"}));
    cmd->add_option("--output", opt.output_path, "also write the report to this file");
  };

  CLI::App* classify = app.add_subcommand("classify", "count and list gauge orbit classes");
  classify->add_option("--graph", opt.graph_path, "graph file")->required();
  classify->add_option("--group", opt.group_spec, "group spec")->required();
  classify->add_flag("--full", opt.full, "classify up to the full gauge group");
  add_common(classify);

  CLI::App* holonomy = app.add_subcommand("holonomy", "holonomy vector of a field");
  holonomy->add_option("--graph", opt.graph_path, "graph file")->required();
  holonomy->add_option("--group", opt.group_spec, "group spec")->required();
  holonomy->add_option("--field", opt.field_path, "field file")->required();
  add_common(holonomy);

  CLI::App* normalize = app.add_subcommand("normalize", "tree gauge fixing of a field");
  normalize->add_option("--graph", opt.graph_path, "graph file")->required();
  normalize->add_option("--group", opt.group_spec, "group spec")->required();
  normalize->add_option("--field", opt.field_path, "field file")->required();
  normalize->add_option("--write-field", opt.output_path,
                        "write the normalized field to this file");
  normalize->add_option("--cap", opt.cap, "enumeration cap");
  normalize->add_option("--seed", opt.seed, "seed for sampled checks");
  normalize->add_option("--format", opt.format, "report format: human|machine")
      ->check(CLI::IsMember({"human", "machine"}));

  CLI::App* verify = app.add_subcommand("verify", "exhaustive structure-theorem checks");
  verify->add_option("--graph", opt.graph_path, "graph file")->required();
  verify->add_option("--group", opt.group_spec, "group spec")->required();
  verify->add_option("--theorem", opt.theorem, "which statement: a|b|c")
      ->check(CLI::IsMember({"a", "b", "c"}));
  add_common(verify);

  CLI::App* equivariant = app.add_subcommand("equivariant", "classify group actions on bundles");
  equivariant->add_option("--action", opt.action_path, "action file")->required();
  equivariant->add_option("--group", opt.group_spec, "group spec")->required();
  add_common(equivariant);

  CLI::App* reconstruct =
      app.add_subcommand("reconstruct", "rebuild the bundle from holonomy and compare");
  reconstruct->add_option("--graph", opt.graph_path, "graph file")->required();
  reconstruct->add_option("--group", opt.group_spec, "group spec")->required();
  reconstruct->add_option("--field", opt.field_path, "field file")->required();
  add_common(reconstruct);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::fprintf(stderr, "gaugegraph: error[input]: %s\n", e.what());
    return kExitInputError;
  }

  gg_report* rep = nullptr;
  gg_status s = GG_OK;
  bool pass_is_exit = false;

  if (classify->parsed()) {
    gg_graph* g = load_graph(opt);
    gg_group* G = load_group(opt);
    s = gg_classify(g, G, opt.full ? 1 : 0, opt.cap, &rep);
    gg_graph_free(g);
    gg_group_free(G);
  } else if (holonomy->parsed()) {
    gg_graph* g = load_graph(opt);
    gg_group* G = load_group(opt);
    gg_field* f = load_field(opt, g, G);
    s = gg_holonomy(f, &rep);
    gg_field_free(f);
    gg_graph_free(g);
    gg_group_free(G);
  } else if (normalize->parsed()) {
    gg_graph* g = load_graph(opt);
    gg_group* G = load_group(opt);
    gg_field* f = load_field(opt, g, G);
    gg_field* normalized = nullptr;
    s = gg_normalize(f, &normalized, &rep);
    if (s == GG_OK && !opt.output_path.empty()) {
      char* text = nullptr;
      gg_status rs = gg_field_render(normalized, opt.graph_path.c_str(), &text);
      if (rs != GG_OK) die(rs);
      std::ofstream out(opt.output_path, std::ios::binary);
      if (!out) {
        std::fprintf(stderr, "gaugegraph: error[io]: cannot write '%s'\n",
                     opt.output_path.c_str());
        return kExitInputError;
      }
      out << text;
      gg_string_free(text);
      opt.output_path.clear();  // report goes to stdout only
    }
    gg_field_free(normalized);
    gg_field_free(f);
    gg_graph_free(g);
    gg_group_free(G);
  } else if (verify->parsed()) {
    gg_graph* g = load_graph(opt);
    gg_group* G = load_group(opt);
    s = gg_verify(g, G, opt.theorem[0], opt.cap, opt.seed, &rep);
    pass_is_exit = true;
    gg_graph_free(g);
    gg_group_free(G);
  } else if (equivariant->parsed()) {
    gg_action* a = nullptr;
    gg_status as = gg_action_load(opt.action_path.c_str(), &a);
    if (as != GG_OK) die(as);
    gg_group* G = load_group(opt);
    s = gg_equivariant(a, G, opt.cap, &rep);
    pass_is_exit = true;
    gg_action_free(a);
    gg_group_free(G);
  } else if (reconstruct->parsed()) {
    gg_graph* g = load_graph(opt);
    gg_group* G = load_group(opt);
    gg_field* f = load_field(opt, g, G);
    s = gg_reconstruct(f, &rep);
    pass_is_exit = true;
    gg_field_free(f);
    gg_graph_free(g);
    gg_group_free(G);
  }

  if (s != GG_OK) die(s);
  bool passed = emit_report(opt, rep);
  gg_report_free(rep);
  if (pass_is_exit && !passed) return kExitVerifyFailed;
  return kExitOk;
}
