#include "stablecore/stablecore.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "stablecore/bonding.hpp"
#include "stablecore/error.hpp"
#include "stablecore/generation.hpp"
#include "stablecore/harness.hpp"
#include "stablecore/independence.hpp"
#include "stablecore/report.hpp"

struct sc_tree {
  stablecore::Tree tree;
};

struct sc_report {
  stablecore::AnalysisReport report;
};

struct sc_corpus {
  std::vector<sc_tree> trees;
};

namespace {

using stablecore::Error;
using stablecore::ErrorCode;

thread_local std::string g_last_error;

sc_status Fail(sc_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
sc_status Guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    return SC_OK;
  } catch (const Error& e) {
    return Fail(static_cast<sc_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(SC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(SC_ERR_INTERNAL, e.what());
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void Require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

sc_status CopySet(const stablecore::VertexSet& s, uint32_t* out,
                  size_t capacity, size_t* length) {
  return Guard([&] {
    Require(length != nullptr, "length must not be null");
    const auto members = s.members();
    *length = members.size();
    Require(out != nullptr || capacity == 0, "null output buffer");
    for (size_t i = 0; i < members.size() && i < capacity; ++i) {
      out[i] = members[i];
    }
  });
}

stablecore::CorpusSpec ToCorpus(const sc_corpus_spec& spec) {
  stablecore::CorpusSpec c;
  Require(spec.mode == SC_CORPUS_EXHAUSTIVE || spec.mode == SC_CORPUS_RANDOM,
          "unknown corpus mode");
  c.mode = spec.mode == SC_CORPUS_EXHAUSTIVE ? stablecore::CorpusMode::kExhaustive
                                             : stablecore::CorpusMode::kRandom;
  c.n_min = spec.n_min;
  c.n_max = spec.n_max;
  c.sample_size = spec.sample_size;
  c.seed = spec.seed;
  c.dedup_isomorphism = spec.dedup_isomorphism != 0;
  return c;
}

stablecore::HarnessOptions ToOptions(const sc_harness_options* options) {
  stablecore::HarnessOptions o;
  if (options != nullptr) {
    o.jobs = options->jobs == 0 ? 1 : options->jobs;
    o.witness_limit = options->witness_limit;
    o.stable_scan_ceiling = options->stable_scan_ceiling;
  }
  return o;
}

}  // namespace

extern "C" {

const char* sc_version(void) { return "0.1.0"; }

const char* sc_status_name(sc_status status) {
  return stablecore::ErrorCodeName(static_cast<ErrorCode>(status));
}

const char* sc_last_error(void) { return g_last_error.c_str(); }

void sc_string_free(char* s) { std::free(s); }

sc_status sc_tree_from_edges(size_t n, const uint32_t* edges, size_t num_edges,
                             sc_tree** out) {
  return Guard([&] {
    Require(out != nullptr, "out must not be null");
    Require(edges != nullptr || num_edges == 0, "null edge buffer");
    std::vector<stablecore::Edge> list;
    list.reserve(num_edges);
    for (size_t i = 0; i < num_edges; ++i) {
      list.emplace_back(edges[2 * i], edges[2 * i + 1]);
    }
    *out = new sc_tree{stablecore::Tree::FromEdges(n, list)};
  });
}

sc_status sc_tree_parse(const char* text, sc_tree** out) {
  return Guard([&] {
    Require(text != nullptr && out != nullptr, "null argument");
    *out = new sc_tree{stablecore::ParseEdgeList(text)};
  });
}

sc_status sc_tree_parse_file(const char* path, sc_tree** out) {
  return Guard([&] {
    Require(path != nullptr && out != nullptr, "null argument");
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(ErrorCode::kIo, std::string("cannot open '") + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    *out = new sc_tree{stablecore::ParseEdgeList(buffer.str())};
  });
}

void sc_tree_free(sc_tree* tree) { delete tree; }

size_t sc_tree_order(const sc_tree* tree) {
  return tree == nullptr ? 0 : tree->tree.order();
}

sc_status sc_tree_edges(const sc_tree* tree, uint32_t* out, size_t capacity) {
  return Guard([&] {
    Require(tree != nullptr && out != nullptr, "null argument");
    const auto edges = tree->tree.edges();
    Require(capacity >= 2 * edges.size(), "edge buffer too small");
    for (size_t i = 0; i < edges.size(); ++i) {
      out[2 * i] = edges[i].first;
      out[2 * i + 1] = edges[i].second;
    }
  });
}

sc_status sc_tree_serialize(const sc_tree* tree, char** out) {
  return Guard([&] {
    Require(tree != nullptr && out != nullptr, "null argument");
    *out = CopyString(stablecore::SerializeEdgeList(tree->tree));
  });
}

sc_status sc_tree_canonical_form(const sc_tree* tree, char** out) {
  return Guard([&] {
    Require(tree != nullptr && out != nullptr, "null argument");
    *out = CopyString(stablecore::CanonicalForm(tree->tree));
  });
}

sc_status sc_tree_random(size_t n, uint64_t seed, sc_tree** out) {
  return Guard([&] {
    Require(out != nullptr, "out must not be null");
    *out = new sc_tree{stablecore::RandomTree(n, seed)};
  });
}

sc_status sc_tree_prufer_decode(const uint32_t* code, size_t length, size_t n,
                                sc_tree** out) {
  return Guard([&] {
    Require(out != nullptr, "out must not be null");
    Require(code != nullptr || length == 0, "null code buffer");
    stablecore::PruferCode c(code, code + length);
    *out = new sc_tree{stablecore::PruferDecode(c, n)};
  });
}

sc_status sc_tree_prufer_encode(const sc_tree* tree, uint32_t* out,
                                size_t capacity) {
  return Guard([&] {
    Require(tree != nullptr, "null tree");
    const auto code = stablecore::PruferEncode(tree->tree);
    Require(out != nullptr || code.empty(), "null output buffer");
    Require(capacity >= code.size(), "code buffer too small");
    std::copy(code.begin(), code.end(), out);
  });
}

sc_status sc_spider(size_t k, sc_tree** out) {
  return Guard([&] {
    Require(out != nullptr, "out must not be null");
    *out = new sc_tree{stablecore::Spider(k)};
  });
}

sc_status sc_bond(const sc_tree* t1, uint32_t v1, const sc_tree* t2,
                  uint32_t v2, sc_tree** out, uint32_t* bond_vertex) {
  return Guard([&] {
    Require(t1 != nullptr && t2 != nullptr && out != nullptr, "null argument");
    auto result = stablecore::VertexBond(t1->tree, v1, t2->tree, v2);
    if (bond_vertex != nullptr) *bond_vertex = result.bond_vertex;
    *out = new sc_tree{std::move(result.tree)};
  });
}

sc_status sc_analyze(const sc_tree* tree, sc_report** out) {
  return Guard([&] {
    Require(tree != nullptr && out != nullptr, "null argument");
    *out = new sc_report{stablecore::Analyze(tree->tree)};
  });
}

void sc_report_free(sc_report* report) { delete report; }

size_t sc_report_alpha(const sc_report* r) { return r ? r->report.alpha : 0; }
size_t sc_report_mu(const sc_report* r) { return r ? r->report.mu : 0; }
size_t sc_report_xi(const sc_report* r) { return r ? r->report.xi : 0; }

int sc_report_perfect_matching(const sc_report* r) {
  return r && r->report.has_perfect_matching ? 1 : 0;
}

int sc_report_strong_unique(const sc_report* r) {
  return r && r->report.strong_unique ? 1 : 0;
}

sc_status sc_report_core(const sc_report* report, uint32_t* out,
                         size_t capacity, size_t* length) {
  if (report == nullptr) return Fail(SC_ERR_INVALID_ARGUMENT, "null report");
  return CopySet(report->report.core, out, capacity, length);
}

sc_status sc_report_pendants(const sc_report* report, uint32_t* out,
                             size_t capacity, size_t* length) {
  if (report == nullptr) return Fail(SC_ERR_INVALID_ARGUMENT, "null report");
  return CopySet(report->report.pendants, out, capacity, length);
}

sc_status sc_report_num_maximum_stable_sets(const sc_report* report,
                                            char** out) {
  return Guard([&] {
    Require(report != nullptr && out != nullptr, "null argument");
    *out = CopyString(report->report.num_maximum_stable_sets.str());
  });
}

sc_status sc_report_to_json(const sc_report* report, char** out) {
  return Guard([&] {
    Require(report != nullptr && out != nullptr, "null argument");
    *out = CopyString(
        stablecore::DumpJson(stablecore::ReportToJson(report->report)));
  });
}

sc_status sc_export_dot(const sc_tree* tree, const sc_report* report,
                        char** out) {
  return Guard([&] {
    Require(tree != nullptr && report != nullptr && out != nullptr,
            "null argument");
    Require(report->report.n == tree->tree.order(),
            "report does not belong to this tree");
    *out = CopyString(stablecore::ExportDot(tree->tree, report->report));
  });
}

sc_corpus_spec sc_corpus_spec_default(void) {
  const stablecore::CorpusSpec d;
  sc_corpus_spec spec;
  spec.mode = SC_CORPUS_EXHAUSTIVE;
  spec.n_min = d.n_min;
  spec.n_max = d.n_max;
  spec.sample_size = d.sample_size;
  spec.seed = d.seed;
  spec.dedup_isomorphism = 0;
  return spec;
}

sc_harness_options sc_harness_options_default(void) {
  const stablecore::HarnessOptions d;
  sc_harness_options o;
  o.jobs = d.jobs;
  o.witness_limit = d.witness_limit;
  o.stable_scan_ceiling = d.stable_scan_ceiling;
  return o;
}

sc_status sc_corpus_generate(const sc_corpus_spec* spec, sc_corpus** out) {
  return Guard([&] {
    Require(spec != nullptr && out != nullptr, "null argument");
    auto trees = stablecore::MaterializeCorpus(ToCorpus(*spec));
    auto* corpus = new sc_corpus;
    corpus->trees.reserve(trees.size());
    for (auto& t : trees) corpus->trees.push_back(sc_tree{std::move(t)});
    *out = corpus;
  });
}

void sc_corpus_free(sc_corpus* corpus) { delete corpus; }

size_t sc_corpus_size(const sc_corpus* corpus) {
  return corpus == nullptr ? 0 : corpus->trees.size();
}

const sc_tree* sc_corpus_tree(const sc_corpus* corpus, size_t index) {
  if (corpus == nullptr || index >= corpus->trees.size()) return nullptr;
  return &corpus->trees[index];
}

sc_status sc_check_tree(const char* claim, const sc_tree* tree,
                        const sc_harness_options* options, char** json) {
  return Guard([&] {
    Require(claim != nullptr && tree != nullptr && json != nullptr,
            "null argument");
    const auto ids = stablecore::ParseClaimList(claim);
    Require(ids.size() == 1, "sc_check_tree takes exactly one claim");
    const auto result =
        stablecore::CheckTree(ids.front(), tree->tree, ToOptions(options));
    *json = CopyString(
        stablecore::DumpJson(stablecore::ClaimResultToJson(result)));
  });
}

sc_status sc_verify(const char* claims, const sc_corpus_spec* spec,
                    const sc_harness_options* options, char** json,
                    int* any_refuted) {
  return Guard([&] {
    Require(claims != nullptr && spec != nullptr && json != nullptr,
            "null argument");
    const auto ids = stablecore::ParseClaimList(claims);
    const auto verdicts =
        stablecore::RunSuite(ids, ToCorpus(*spec), ToOptions(options));
    bool refuted = false;
    for (const auto& v : verdicts) {
      if (v.refuted > 0 && !stablecore::IsReportOnly(v.claim)) refuted = true;
    }
    *json = CopyString(
        stablecore::DumpJson(stablecore::VerdictsToJson(verdicts)));
    if (any_refuted != nullptr) *any_refuted = refuted ? 1 : 0;
  });
}

}  // extern "C"
