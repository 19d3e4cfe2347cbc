// stablecore-cli: analyze trees, generate corpora, run the claim harness,
// bond trees and export DOT.
//
// Exit codes: 0 success, 1 usage error, 2 parse or validation error,
// 3 a claim was refuted during `verify`, 4 internal or I/O failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "stablecore/stablecore.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitRefuted = 3;
constexpr int kExitFailure = 4;

struct TreeDeleter {
  void operator()(sc_tree* t) const { sc_tree_free(t); }
};
struct ReportDeleter {
  void operator()(sc_report* r) const { sc_report_free(r); }
};
struct CorpusDeleter {
  void operator()(sc_corpus* c) const { sc_corpus_free(c); }
};
using TreePtr = std::unique_ptr<sc_tree, TreeDeleter>;
using ReportPtr = std::unique_ptr<sc_report, ReportDeleter>;
using CorpusPtr = std::unique_ptr<sc_corpus, CorpusDeleter>;

// Carries a library failure up to main() with the exit code it maps to.
struct Failure {
  int exit_code;
  std::string message;
};

int ExitCodeFor(sc_status status) {
  switch (status) {
    case SC_ERR_NOT_A_TREE:
    case SC_ERR_OUT_OF_RANGE:
    case SC_ERR_TOO_SMALL:
    case SC_ERR_PARSE:
    case SC_ERR_NOT_STABLE:
    case SC_ERR_NOT_PENDANT:
    case SC_ERR_EMPTY_RESULT:
      return kExitInput;
    case SC_ERR_INVALID_ARGUMENT:
    case SC_ERR_TOO_LARGE:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

void Check(sc_status status, const std::string& context) {
  if (status == SC_OK) return;
  throw Failure{ExitCodeFor(status), context + ": " + sc_last_error()};
}

std::string TakeString(char* s) {
  std::string out(s);
  sc_string_free(s);
  return out;
}

TreePtr LoadTree(const std::string& path) {
  sc_tree* t = nullptr;
  Check(sc_tree_parse_file(path.c_str(), &t), path);
  return TreePtr(t);
}

std::string Serialize(const sc_tree* t) {
  char* s = nullptr;
  Check(sc_tree_serialize(t, &s), "serialize");
  return TakeString(s);
}

// "-" means standard output.
void WriteOutput(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Failure{kExitFailure, "cannot write '" + path + "'"};
}

std::string Dot(const sc_tree* tree) {
  sc_report* r = nullptr;
  Check(sc_analyze(tree, &r), "analyze");
  ReportPtr report(r);
  char* s = nullptr;
  Check(sc_export_dot(tree, report.get(), &s), "dot");
  return TakeString(s);
}

struct AnalyzeArgs {
  std::string file;
  std::string json;
  std::string dot;
};

int RunAnalyze(const AnalyzeArgs& args) {
  TreePtr tree = LoadTree(args.file);
  sc_report* r = nullptr;
  Check(sc_analyze(tree.get(), &r), "analyze");
  ReportPtr report(r);
  char* s = nullptr;
  Check(sc_report_to_json(report.get(), &s), "json");
  const std::string json = TakeString(s);
  if (args.json.empty() && args.dot.empty()) {
    WriteOutput("-", json);
    return kExitOk;
  }
  if (!args.json.empty()) WriteOutput(args.json, json);
  if (!args.dot.empty()) {
    Check(sc_export_dot(tree.get(), report.get(), &s), "dot");
    WriteOutput(args.dot, TakeString(s));
  }
  return kExitOk;
}

struct GenArgs {
  bool random = false;
  bool exhaustive = false;
  std::size_t n = 0;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  bool dedup = false;
  std::string out = "-";
};

int RunGen(const GenArgs& args) {
  sc_corpus_spec spec = sc_corpus_spec_default();
  spec.mode = args.random ? SC_CORPUS_RANDOM : SC_CORPUS_EXHAUSTIVE;
  spec.n_min = spec.n_max = args.n;
  spec.sample_size = args.count;
  spec.seed = args.seed;
  spec.dedup_isomorphism = args.dedup ? 1 : 0;
  sc_corpus* c = nullptr;
  Check(sc_corpus_generate(&spec, &c), "gen");
  CorpusPtr corpus(c);
  const std::size_t size = sc_corpus_size(corpus.get());

  if (args.out == "-") {
    std::string text;
    for (std::size_t i = 0; i < size; ++i) {
      text += "# tree " + std::to_string(i) + "\n";
      text += Serialize(sc_corpus_tree(corpus.get(), i));
    }
    WriteOutput("-", text);
    return kExitOk;
  }
  std::error_code ec;
  std::filesystem::create_directories(args.out, ec);
  if (ec) throw Failure{kExitFailure, "cannot create '" + args.out + "'"};
  const std::size_t width = std::max<std::size_t>(6, std::to_string(size).size());
  for (std::size_t i = 0; i < size; ++i) {
    std::string index = std::to_string(i);
    index.insert(0, width - index.size(), '0');
    WriteOutput((std::filesystem::path(args.out) / ("tree_" + index + ".txt")).string(),
                Serialize(sc_corpus_tree(corpus.get(), i)));
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string claims = "all";
  std::string mode = "exhaustive";
  std::size_t n_min = 2;
  std::size_t n_max = 2;
  std::size_t sample = 0;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  bool dedup = false;
  std::size_t witness_limit = 0;
  std::size_t scan_ceiling = 0;
  std::string out;
};

int RunVerify(const VerifyArgs& args) {
  sc_corpus_spec spec = sc_corpus_spec_default();
  spec.mode = args.mode == "random" ? SC_CORPUS_RANDOM : SC_CORPUS_EXHAUSTIVE;
  spec.n_min = args.n_min;
  spec.n_max = args.n_max;
  spec.sample_size = args.sample;
  spec.seed = args.seed;
  spec.dedup_isomorphism = args.dedup ? 1 : 0;
  sc_harness_options options = sc_harness_options_default();
  options.jobs = args.jobs;
  options.witness_limit = args.witness_limit;
  options.stable_scan_ceiling = args.scan_ceiling;

  char* s = nullptr;
  int refuted = 0;
  Check(sc_verify(args.claims.c_str(), &spec, &options, &s, &refuted), "verify");
  WriteOutput(args.out, TakeString(s));
  return refuted ? kExitRefuted : kExitOk;
}

struct BondArgs {
  std::string file1;
  std::uint32_t v1 = 0;
  std::string file2;
  std::uint32_t v2 = 0;
  std::string out = "-";
};

int RunBond(const BondArgs& args) {
  TreePtr t1 = LoadTree(args.file1);
  TreePtr t2 = LoadTree(args.file2);
  sc_tree* b = nullptr;
  std::uint32_t bond_vertex = 0;
  Check(sc_bond(t1.get(), args.v1, t2.get(), args.v2, &b, &bond_vertex), "bond");
  TreePtr bonded(b);
  WriteOutput(args.out, "# bond vertex " + std::to_string(bond_vertex) + "\n" +
                            Serialize(bonded.get()));
  return kExitOk;
}

struct ConvertArgs {
  std::string file;
  std::string dot;
};

int RunConvert(const ConvertArgs& args) {
  TreePtr tree = LoadTree(args.file);
  WriteOutput(args.dot, Dot(tree.get()));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stability structure of trees"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sc_version()));

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one tree");
  analyze_cmd->add_option("file", analyze.file, "Edge-list file")->required();
  analyze_cmd->add_option("--json", analyze.json, "Write the JSON report here ('-' for stdout)");
  analyze_cmd->add_option("--dot", analyze.dot, "Write a DOT rendering here ('-' for stdout)");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate trees");
  auto* random_flag = gen_cmd->add_flag("--random", gen.random, "Uniform random labeled trees");
  auto* exhaustive_flag =
      gen_cmd->add_flag("--exhaustive", gen.exhaustive, "Every labeled tree on n vertices");
  random_flag->excludes(exhaustive_flag);
  gen_cmd->add_option("--n", gen.n, "Number of vertices")->required()->check(CLI::Range(2, 1 << 30));
  auto* count_opt = gen_cmd->add_option("--count", gen.count, "Number of random trees");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_flag("--dedup-iso", gen.dedup, "Keep one tree per isomorphism class");
  gen_cmd->add_option("--out", gen.out, "Output directory, or '-' for stdout");
  count_opt->needs(random_flag);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run claims over a corpus");
  verify_cmd->add_option("--claims", verify.claims, "'all' or a list such as C1,C12a,E1");
  verify_cmd->add_option("--mode", verify.mode, "Corpus mode")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  verify_cmd->add_option("--n-min", verify.n_min, "Smallest order")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--n-max", verify.n_max, "Largest order")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--sample", verify.sample, "Random mode: total number of trees");
  verify_cmd->add_option("--seed", verify.seed, "Random mode: seed");
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads")->check(CLI::Range(1, 1024));
  verify_cmd->add_flag("--dedup-iso", verify.dedup, "Keep one tree per isomorphism class");
  verify_cmd->add_option("--witness-limit", verify.witness_limit, "Witnesses kept per claim");
  verify_cmd->add_option("--scan-ceiling", verify.scan_ceiling,
                         "Largest n for exhaustive stable-set scans");
  verify_cmd->add_option("--out", verify.out, "Report path, or '-' for stdout")->required();

  BondArgs bond;
  auto* bond_cmd = app.add_subcommand("bond", "Identify v1 in T1 with v2 in T2");
  bond_cmd->add_option("file1", bond.file1)->required();
  bond_cmd->add_option("v1", bond.v1)->required();
  bond_cmd->add_option("file2", bond.file2)->required();
  bond_cmd->add_option("v2", bond.v2)->required();
  bond_cmd->add_option("--out", bond.out, "Output file, or '-' for stdout");

  ConvertArgs convert;
  auto* convert_cmd = app.add_subcommand("convert", "Convert a tree to DOT");
  convert_cmd->add_option("file", convert.file)->required();
  convert_cmd->add_option("--dot", convert.dot, "DOT output, or '-' for stdout")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const sc_harness_options defaults = sc_harness_options_default();
  if (verify.witness_limit == 0) verify.witness_limit = defaults.witness_limit;
  if (verify.scan_ceiling == 0) verify.scan_ceiling = defaults.stable_scan_ceiling;

  try {
    if (*analyze_cmd) return RunAnalyze(analyze);
    if (*gen_cmd) {
      if (!gen.random && !gen.exhaustive) {
        std::cerr << "gen: choose --random or --exhaustive\n";
        return kExitUsage;
      }
      if (gen.random && gen.count == 0) {
        std::cerr << "gen: --random needs --count\n";
        return kExitUsage;
      }
      return RunGen(gen);
    }
    if (*verify_cmd) {
      if (verify.mode == "random" && verify.sample == 0) {
        std::cerr << "verify: random mode needs --sample\n";
        return kExitUsage;
      }
      return RunVerify(verify);
    }
    if (*bond_cmd) return RunBond(bond);
    if (*convert_cmd) return RunConvert(convert);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.exit_code;
  }
  return kExitUsage;
}
