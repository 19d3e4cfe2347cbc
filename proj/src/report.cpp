#include "stablecore/report.hpp"

#include <sstream>

namespace stablecore {

namespace {

Json Members(const VertexSet& s) {
  Json out = Json::array();
  for (VertexId v : s.members()) out.push_back(v);
  return out;
}

}  // namespace

Json CountToJson(const StableSetCount& count) {
  if (count <= std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::uint64_t>(count);
  }
  return count.str();
}

Json ReportToJson(const AnalysisReport& r) {
  return Json{{"n", r.n},
              {"alpha", r.alpha},
              {"mu", r.mu},
              {"xi", r.xi},
              {"core", Members(r.core)},
              {"pendants", Members(r.pendants)},
              {"bipartition",
               Json{{"a", Members(r.bipartition.a)},
                    {"b", Members(r.bipartition.b)}}},
              {"perfect_matching", r.has_perfect_matching},
              {"strong_unique", r.strong_unique},
              {"num_maximum_stable_sets", CountToJson(r.num_maximum_stable_sets)}};
}

Json CorpusToJson(const CorpusSpec& c) {
  Json out{{"mode", c.mode == CorpusMode::kExhaustive ? "exhaustive" : "random"},
           {"n_min", c.n_min},
           {"n_max", c.n_max}};
  if (c.mode == CorpusMode::kRandom) {
    out["sample_size"] = c.sample_size;
    out["seed"] = c.seed;
  }
  out["dedup_isomorphism"] = c.dedup_isomorphism;
  return out;
}

Json ClaimResultToJson(const ClaimResult& r) {
  return Json{{"claim", ClaimName(r.claim)},
              {"n", r.n},
              {"tree", r.tree},
              {"status", StatusName(r.status)},
              {"witness", r.witness}};
}

Json VerdictToJson(const Verdict& v) {
  Json witnesses = Json::array();
  for (const auto& w : v.witnesses) witnesses.push_back(ClaimResultToJson(w));
  Json out{{"claim", ClaimName(v.claim)},
           {"corpus", CorpusToJson(v.corpus)},
           {"checked", v.checked},
           {"held", v.held},
           {"refuted", v.refuted},
           {"skipped", v.skipped},
           {"witnesses", std::move(witnesses)}};
  if (v.claim == ClaimId::kE1) {
    out["measurements"] = Json(v.measurements);
    out["summary"] = v.summary;
  }
  return out;
}

Json VerdictsToJson(const std::vector<Verdict>& verdicts) {
  Json out = Json::array();
  for (const auto& v : verdicts) out.push_back(VerdictToJson(v));
  return out;
}

std::string DumpJson(const Json& json) { return json.dump(2) + "\n"; }

std::string ExportDot(const Tree& t, const AnalysisReport& report) {
  std::ostringstream out;
  out << "graph T {\n";
  out << "  node [shape=circle];\n";
  for (VertexId v = 0; v < t.order(); ++v) {
    const bool in_core = report.core.contains(v);
    const bool pendant = report.pendants.contains(v);
    out << "  " << v;
    if (in_core || pendant) {
      out << " [";
      if (in_core) out << "style=filled, fillcolor=lightblue";
      if (in_core && pendant) out << ", ";
      if (pendant) out << "shape=box";
      out << "]";
    }
    out << ";\n";
  }
  for (auto [a, b] : t.edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace stablecore
