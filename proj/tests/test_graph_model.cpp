#include <map>
#include <set>

#include "doctest.h"
#include "stablecore/error.hpp"
#include "stablecore/generation.hpp"
#include "stablecore/tree.hpp"
#include "support/fixtures.hpp"

using namespace stablecore;
using fixtures::Make;

namespace {

ErrorCode CodeOf(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

}  // namespace

TEST_CASE("VertexSet basics") {
  VertexSet s(70, {0, 3, 69});
  CHECK(s.size() == 3);
  CHECK(s.contains(69));
  CHECK_FALSE(s.contains(70));
  s.erase(3);
  CHECK(s.members() == std::vector<VertexId>{0, 69});
  CHECK(s.complement().size() == 68);
  CHECK(CodeOf([&] { s.insert(70); }) == ErrorCode::kOutOfRange);
  VertexSet other(10);
  CHECK(CodeOf([&] { s &= other; }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("VertexSet canonical order is lexicographic on member lists") {
  CHECK(CanonicalLess(Make(4, {0, 2}), Make(4, {0, 3})));
  CHECK(CanonicalLess(Make(4, {0, 3}), Make(4, {1, 3})));
  CHECK(CanonicalLess(Make(4, {0, 2}), Make(4, {1})));
  CHECK(CanonicalLess(Make(4, {0}), Make(4, {0, 1})));
  CHECK_FALSE(CanonicalLess(Make(4, {1}), Make(4, {1})));
}

TEST_CASE("tree_from_edges accepts valid trees") {
  Tree p2 = Tree::FromEdges(2, std::vector<Edge>{{0, 1}});
  CHECK(p2.order() == 2);
  CHECK(p2 == Path(2));
  Tree p3 = Tree::FromEdges(3, std::vector<Edge>{{2, 1}, {1, 0}});
  CHECK(p3 == Path(3));
  CHECK(p3.edges()[0] == Edge{0, 1});
  auto n1 = p3.neighbors(1);
  CHECK(std::vector<VertexId>(n1.begin(), n1.end()) == std::vector<VertexId>{0, 2});
}

TEST_CASE("tree_from_edges error paths") {
  CHECK(CodeOf([] { Tree::FromEdges(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}}); }) ==
        ErrorCode::kNotATree);
  CHECK(CodeOf([] { Tree::FromEdges(3, std::vector<Edge>{{0, 1}}); }) ==
        ErrorCode::kNotATree);
  CHECK(CodeOf([] { Tree::FromEdges(3, std::vector<Edge>{{0, 1}, {0, 1}}); }) ==
        ErrorCode::kNotATree);
  CHECK(CodeOf([] { Tree::FromEdges(3, std::vector<Edge>{{0, 0}, {1, 2}}); }) ==
        ErrorCode::kNotATree);
  CHECK(CodeOf([] { Tree::FromEdges(4, std::vector<Edge>{{0, 1}, {0, 1}, {2, 3}}); }) ==
        ErrorCode::kNotATree);
  CHECK(CodeOf([] { Tree::FromEdges(3, std::vector<Edge>{{0, 1}, {1, 3}}); }) ==
        ErrorCode::kOutOfRange);
  CHECK(CodeOf([] { Tree::FromEdges(1, std::vector<Edge>{}); }) == ErrorCode::kTooSmall);
  CHECK(CodeOf([] { Tree::FromEdges(0, std::vector<Edge>{}); }) == ErrorCode::kTooSmall);
}

TEST_CASE("pendant_vertices") {
  CHECK(fixtures::ToSet(PendantVertices(Path(2))) == oracle::Set{0, 1});
  CHECK(fixtures::ToSet(PendantVertices(Star(3))) == oracle::Set{1, 2, 3});
  CHECK(fixtures::ToSet(PendantVertices(Path(5))) == oracle::Set{0, 4});
}

TEST_CASE("bipartition") {
  auto b2 = Bipartite(Path(2));
  CHECK(fixtures::ToSet(b2.a) == oracle::Set{0});
  CHECK(fixtures::ToSet(b2.b) == oracle::Set{1});
  auto b4 = Bipartite(Path(4));
  CHECK(fixtures::ToSet(b4.a) == oracle::Set{0, 2});
  CHECK(fixtures::ToSet(b4.b) == oracle::Set{1, 3});
  auto b5 = Bipartite(Path(5));
  CHECK(fixtures::ToSet(b5.a) == oracle::Set{0, 2, 4});
  CHECK(fixtures::ToSet(b5.b) == oracle::Set{1, 3});
  CHECK(&b5.side_of(3) == &b5.b);
}

TEST_CASE("distance") {
  CHECK(Distance(Path(5), 0, 4) == 4);
  CHECK(Distance(Path(5), 2, 2) == 0);
  CHECK(Distance(fixtures::Fig5(), 0, 3) == 6);
  CHECK(CodeOf([] { Distance(Path(3), 0, 3); }) == ErrorCode::kOutOfRange);
  CHECK(DistancesFrom(Path(4), 1) == std::vector<std::size_t>{1, 0, 1, 2});
}

TEST_CASE("delete_vertices") {
  Forest f = DeleteVertices(Path(3), Make(3, {1}));
  REQUIRE(f.components.size() == 2);
  CHECK(f.components[0].is_singleton());
  CHECK(f.components[0].vertices == std::vector<VertexId>{0});
  CHECK(f.components[1].vertices == std::vector<VertexId>{2});

  f = DeleteVertices(Path(5), Make(5, {0}));
  REQUIRE(f.components.size() == 1);
  CHECK(f.components[0].vertices == std::vector<VertexId>{1, 2, 3, 4});
  CHECK(f.components[0].as_tree() == Path(4));

  f = DeleteVertices(Path(5), Make(5, {2}));
  REQUIRE(f.components.size() == 2);
  CHECK(f.components[0].vertices == std::vector<VertexId>{0, 1});
  CHECK(f.components[1].vertices == std::vector<VertexId>{3, 4});
  CHECK(f.components[1].as_tree() == Path(2));

  CHECK(CodeOf([] { DeleteVertices(Path(2), VertexSet::Full(2)); }) ==
        ErrorCode::kEmptyResult);
}

TEST_CASE("prufer decode and encode") {
  CHECK(PruferDecode({}, 2) == Path(2));
  Tree star = PruferDecode({2, 2}, 4);
  CHECK(star == Tree::FromEdges(4, std::vector<Edge>{{0, 2}, {1, 2}, {2, 3}}));
  CHECK(PruferEncode(star) == PruferCode{2, 2});
  CHECK(CodeOf([] { PruferDecode({4, 0}, 4); }) == ErrorCode::kOutOfRange);
  CHECK(CodeOf([] { PruferDecode({0}, 4); }) == ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { PruferDecode({}, 1); }) == ErrorCode::kTooSmall);
}

TEST_CASE("canonical_form") {
  Tree p3 = Path(3);
  Tree p3_relabeled = Relabel(p3, {1, 0, 2});  // center becomes 0
  CHECK(CanonicalForm(p3) == CanonicalForm(p3_relabeled));
  CHECK(CanonicalForm(Path(4)) != CanonicalForm(Star(3)));

  std::set<std::string> forms;
  EnumerateLabeledTrees(4, [&](const Tree& t) { forms.insert(CanonicalForm(t)); });
  CHECK(forms.size() == 2);

  // Rooted forms distinguish the end and the middle of P3.
  CHECK(RootedCanonicalForm(p3, 0) != RootedCanonicalForm(p3, 1));
  CHECK(RootedCanonicalForm(p3, 0) == RootedCanonicalForm(p3, 2));
  CHECK(CodeOf([&] { RootedCanonicalForm(p3, 3); }) == ErrorCode::kOutOfRange);
}

TEST_CASE("random_tree") {
  CHECK(RandomTree(2, 12345) == Path(2));
  CHECK(RandomTree(50, 7) == RandomTree(50, 7));
  CHECK(RandomTree(50, 7) != RandomTree(50, 8));
  CHECK(CodeOf([] { RandomTree(1, 0); }) == ErrorCode::kTooSmall);
  CHECK(CodeOf([] { RandomTree(0, 0); }) == ErrorCode::kTooSmall);
}

TEST_CASE("random_tree is uniform over the 16 labeled trees on 4 vertices") {
  std::map<std::string, int> index;
  EnumerateLabeledTrees(4, [&](const Tree& t) {
    index.emplace(SerializeEdgeList(t), static_cast<int>(index.size()));
  });
  REQUIRE(index.size() == 16);
  std::vector<int> counts(16, 0);
  const int samples = 16000;
  for (int i = 0; i < samples; ++i) {
    ++counts[index.at(SerializeEdgeList(RandomTree(4, MixSeed(2024, i))))];
  }
  double chi2 = 0;
  const double expected = samples / 16.0;
  for (int c : counts) chi2 += (c - expected) * (c - expected) / expected;
  // Upper 1% point of chi-square with 15 degrees of freedom.
  CHECK(chi2 < 30.578);
}

TEST_CASE("enumerate_labeled_trees") {
  std::size_t count = 0;
  EnumerateLabeledTrees(2, [&](const Tree&) { ++count; });
  CHECK(count == 1);
  count = 0;
  EnumerateLabeledTrees(3, [&](const Tree&) { ++count; });
  CHECK(count == 3);
  count = 0;
  EnumerateLabeledTrees(4, [&](const Tree&) { ++count; });
  CHECK(count == 16);
  CHECK(CodeOf([] { EnumerateLabeledTrees(10, [](const Tree&) {}); }) ==
        ErrorCode::kTooLarge);
  CHECK(CodeOf([] { EnumerateLabeledTrees(5, [](const Tree&) {}, 4); }) ==
        ErrorCode::kTooLarge);
  CHECK(LabeledTreeCount(7) == 16807);
  CHECK(LabeledTreeAt(4, 0) == PruferDecode({0, 0}, 4));
  CHECK(LabeledTreeAt(4, 15) == PruferDecode({3, 3}, 4));
  CHECK(CodeOf([] { LabeledTreeAt(4, 16); }) == ErrorCode::kOutOfRange);
}

TEST_CASE("edge-list parsing") {
  CHECK(ParseEdgeList("2\n0 1\n") == Path(2));
  CHECK(ParseEdgeList("# comment\n3\n0 1\n1 2\n") == Path(3));
  CHECK(ParseEdgeList("\n# a\n3\n\n1 2\n# b\n0 1\n") == Path(3));
  CHECK(ParseEdgeList("3\r\n0 1\r\n1 2\r\n") == Path(3));

  auto parse_error_line = [](std::string_view text) -> std::size_t {
    try {
      ParseEdgeList(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(parse_error_line("3\n0 1\n") == 2);  // edge count mismatch
  CHECK(parse_error_line("x\n") == 1);
  CHECK(parse_error_line("2\n0 z\n") == 2);
  CHECK(parse_error_line("2\n0 1 2\n") == 2);
  CHECK(parse_error_line("2\n0 1\n1 0\n") == 3);  // too many edges
  CHECK(parse_error_line("") > 0);
  CHECK(CodeOf([] { ParseEdgeList("1\n"); }) == ErrorCode::kTooSmall);
  CHECK(CodeOf([] { ParseEdgeList("3\n0 1\n0 1\n"); }) == ErrorCode::kNotATree);
}

TEST_CASE("serialization round-trips") {
  Tree t = fixtures::Fig5();
  std::string text = SerializeEdgeList(t);
  CHECK(text.substr(0, 2) == "9\n");
  CHECK(ParseEdgeList(text) == t);
}
