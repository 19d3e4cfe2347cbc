#include <cstring>
#include <string>

#include "doctest.h"
#include "stablecore/stablecore.h"

namespace {

std::string Take(char* s) {
  std::string out(s);
  sc_string_free(s);
  return out;
}

sc_tree* Parse(const char* text) {
  sc_tree* t = nullptr;
  REQUIRE(sc_tree_parse(text, &t) == SC_OK);
  return t;
}

std::string ReportJson(const char* text) {
  sc_tree* t = Parse(text);
  sc_report* r = nullptr;
  REQUIRE(sc_analyze(t, &r) == SC_OK);
  char* s = nullptr;
  REQUIRE(sc_report_to_json(r, &s) == SC_OK);
  sc_report_free(r);
  sc_tree_free(t);
  return Take(s);
}

std::string DotOf(sc_tree* t) {
  sc_report* r = nullptr;
  REQUIRE(sc_analyze(t, &r) == SC_OK);
  char* s = nullptr;
  REQUIRE(sc_export_dot(t, r, &s) == SC_OK);
  sc_report_free(r);
  return Take(s);
}

std::size_t Occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (auto pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1)) {
    ++count;
  }
  return count;
}

const char* kP4 = "4\n0 1\n1 2\n2 3\n";
const char* kP5 = "5\n0 1\n1 2\n2 3\n3 4\n";
const char* kFig5 = "9\n0 1\n1 2\n3 4\n4 5\n5 6\n6 7\n7 8\n2 6\n";

}  // namespace

TEST_CASE("status names and version") {
  CHECK(std::string(sc_status_name(SC_ERR_PARSE)) == "ParseError");
  CHECK(std::string(sc_version()).size() > 0);
}

TEST_CASE("tree construction through the C API") {
  const uint32_t edges[] = {0, 1, 1, 2};
  sc_tree* t = nullptr;
  REQUIRE(sc_tree_from_edges(3, edges, 2, &t) == SC_OK);
  CHECK(sc_tree_order(t) == 3);
  uint32_t out[4] = {};
  CHECK(sc_tree_edges(t, out, 4) == SC_OK);
  CHECK(out[2] == 1);
  CHECK(sc_tree_edges(t, out, 3) == SC_ERR_INVALID_ARGUMENT);
  char* s = nullptr;
  REQUIRE(sc_tree_serialize(t, &s) == SC_OK);
  CHECK(Take(s) == "3\n0 1\n1 2\n");
  sc_tree_free(t);

  const uint32_t cycle[] = {0, 1, 1, 2, 0, 2};
  t = nullptr;
  CHECK(sc_tree_from_edges(3, cycle, 3, &t) == SC_ERR_NOT_A_TREE);
  CHECK(t == nullptr);
  CHECK(std::strlen(sc_last_error()) > 0);
  CHECK(sc_tree_from_edges(1, nullptr, 0, &t) == SC_ERR_TOO_SMALL);
  CHECK(sc_tree_from_edges(2, edges, 1, nullptr) == SC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("parse errors carry the line number") {
  sc_tree* t = nullptr;
  CHECK(sc_tree_parse("3\n0 1\n", &t) == SC_ERR_PARSE);
  CHECK(std::string(sc_last_error()).rfind("line 2", 0) == 0);
  CHECK(sc_tree_parse_file("/nonexistent/tree.txt", &t) == SC_ERR_IO);
  sc_tree* ok = Parse("2\n0 1\n");
  CHECK(std::string(sc_last_error()).empty());
  sc_tree_free(ok);
}

TEST_CASE("prufer, random and canonical forms") {
  const uint32_t code[] = {2, 2};
  sc_tree* star = nullptr;
  REQUIRE(sc_tree_prufer_decode(code, 2, 4, &star) == SC_OK);
  uint32_t back[2] = {};
  CHECK(sc_tree_prufer_encode(star, back, 2) == SC_OK);
  CHECK(back[0] == 2);
  CHECK(back[1] == 2);
  sc_tree* a = nullptr;
  sc_tree* b = nullptr;
  REQUIRE(sc_tree_random(30, 5, &a) == SC_OK);
  REQUIRE(sc_tree_random(30, 5, &b) == SC_OK);
  char* sa = nullptr;
  char* sb = nullptr;
  REQUIRE(sc_tree_canonical_form(a, &sa) == SC_OK);
  REQUIRE(sc_tree_canonical_form(b, &sb) == SC_OK);
  CHECK(Take(sa) == Take(sb));
  sc_tree_free(a);
  sc_tree_free(b);
  sc_tree_free(star);
}

TEST_CASE("analysis report JSON") {
  const std::string p4 = ReportJson(kP4);
  CHECK(p4.find("\"xi\": 0") != std::string::npos);
  CHECK(p4.find("\"perfect_matching\": true") != std::string::npos);
  const std::string p5 = ReportJson(kP5);
  CHECK(p5.find("\"core\": [\n    0,\n    2,\n    4\n  ]") != std::string::npos);
  // Fixed key order.
  const char* keys[] = {"\"n\"", "\"alpha\"", "\"mu\"", "\"xi\"", "\"core\"",
                        "\"pendants\"", "\"bipartition\"", "\"perfect_matching\"",
                        "\"strong_unique\"", "\"num_maximum_stable_sets\""};
  std::size_t last = 0;
  for (const char* k : keys) {
    const std::size_t pos = p5.find(k);
    REQUIRE(pos != std::string::npos);
    CHECK(pos >= last);
    last = pos;
  }
  CHECK(ReportJson(kP5) == p5);
}

TEST_CASE("report accessors") {
  sc_tree* t = Parse(kFig5);
  sc_report* r = nullptr;
  REQUIRE(sc_analyze(t, &r) == SC_OK);
  CHECK(sc_report_alpha(r) == 5);
  CHECK(sc_report_mu(r) == 4);
  CHECK(sc_report_xi(r) == 4);
  CHECK(sc_report_perfect_matching(r) == 0);
  uint32_t core[8] = {};
  size_t length = 0;
  CHECK(sc_report_core(r, core, 2, &length) == SC_OK);
  CHECK(length == 4);
  CHECK(core[0] == 0);
  CHECK(core[1] == 2);
  CHECK(sc_report_pendants(r, core, 8, &length) == SC_OK);
  CHECK(length == 3);
  char* count = nullptr;
  REQUIRE(sc_report_num_maximum_stable_sets(r, &count) == SC_OK);
  CHECK(Take(count) == "2");
  sc_report_free(r);
  sc_tree_free(t);
}

TEST_CASE("DOT export") {
  sc_tree* p2 = Parse("2\n0 1\n");
  const std::string d2 = DotOf(p2);
  CHECK(Occurrences(d2, " -- ") == 1);
  CHECK(d2.find("  0 -- 1;\n") != std::string::npos);
  CHECK(d2.rfind("graph T {", 0) == 0);

  sc_tree* p5 = Parse(kP5);
  const std::string d5 = DotOf(p5);
  CHECK(Occurrences(d5, "fillcolor") == 3);
  for (const char* node : {"  0 [style=filled", "  2 [style=filled", "  4 [style=filled"}) {
    CHECK(d5.find(node) != std::string::npos);
  }

  sc_tree* f5 = Parse(kFig5);
  const std::string d9 = DotOf(f5);
  CHECK(Occurrences(d9, "fillcolor=lightblue, shape=box") == 2);

  sc_report* r = nullptr;
  REQUIRE(sc_analyze(p5, &r) == SC_OK);
  char* s = nullptr;
  CHECK(sc_export_dot(p2, r, &s) == SC_ERR_INVALID_ARGUMENT);
  sc_report_free(r);
  sc_tree_free(p2);
  sc_tree_free(p5);
  sc_tree_free(f5);
}

TEST_CASE("bond and spider") {
  sc_tree* p3 = Parse("3\n0 1\n1 2\n");
  sc_tree* out = nullptr;
  uint32_t bond = 99;
  REQUIRE(sc_bond(p3, 1, p3, 1, &out, &bond) == SC_OK);
  CHECK(bond == 1);
  CHECK(sc_tree_order(out) == 5);
  sc_tree_free(out);
  CHECK(sc_bond(p3, 3, p3, 1, &out, &bond) == SC_ERR_OUT_OF_RANGE);
  CHECK(sc_spider(0, &out) == SC_ERR_TOO_SMALL);
  REQUIRE(sc_spider(2, &out) == SC_OK);
  CHECK(sc_tree_order(out) == 5);
  sc_tree_free(out);
  sc_tree_free(p3);
}

TEST_CASE("corpora and verification") {
  sc_corpus_spec spec = sc_corpus_spec_default();
  spec.n_min = 2;
  spec.n_max = 5;
  sc_corpus* corpus = nullptr;
  REQUIRE(sc_corpus_generate(&spec, &corpus) == SC_OK);
  CHECK(sc_corpus_size(corpus) == 1 + 3 + 16 + 125);
  CHECK(sc_corpus_tree(corpus, 0) != nullptr);
  CHECK(sc_corpus_tree(corpus, 1000) == nullptr);
  sc_corpus_free(corpus);

  sc_harness_options options = sc_harness_options_default();
  char* json = nullptr;
  int refuted = -1;
  REQUIRE(sc_verify("C3,C7", &spec, &options, &json, &refuted) == SC_OK);
  CHECK(refuted == 0);
  CHECK(Take(json).find("\"claim\": \"C3\"") != std::string::npos);

  REQUIRE(sc_verify("C12", &spec, &options, &json, &refuted) == SC_OK);
  CHECK(refuted == 1);
  sc_string_free(json);

  REQUIRE(sc_verify("C13", &spec, &options, &json, &refuted) == SC_OK);
  CHECK(refuted == 0);  // report-only
  sc_string_free(json);

  CHECK(sc_verify("nope", &spec, &options, &json, &refuted) == SC_ERR_INVALID_ARGUMENT);
  spec.n_max = 12;
  CHECK(sc_verify("C3", &spec, &options, &json, &refuted) == SC_ERR_TOO_LARGE);
  spec.mode = SC_CORPUS_RANDOM;
  CHECK(sc_verify("C3", &spec, &options, &json, &refuted) == SC_ERR_INVALID_ARGUMENT);
}

TEST_CASE("single-tree checks") {
  sc_tree* p5 = Parse(kP5);
  char* json = nullptr;
  REQUIRE(sc_check_tree("C12b", p5, nullptr, &json) == SC_OK);
  const std::string text = Take(json);
  CHECK(text.find("\"status\": \"refuted\"") != std::string::npos);
  CHECK(sc_check_tree("C12", p5, nullptr, &json) == SC_ERR_INVALID_ARGUMENT);
  sc_tree* big = nullptr;
  REQUIRE(sc_tree_random(40, 1, &big) == SC_OK);
  CHECK(sc_check_tree("C1", big, nullptr, &json) == SC_ERR_SCALE_EXCEEDED);
  sc_tree_free(big);
  sc_tree_free(p5);
}
