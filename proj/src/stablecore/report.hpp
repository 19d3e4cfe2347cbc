#pragma once

#include <string>
#include <vector>

#include "stablecore/harness.hpp"
#include "stablecore/independence.hpp"

namespace stablecore {

// Counts that fit in 64 bits become JSON numbers, larger ones decimal
// strings.
Json CountToJson(const StableSetCount& count);

Json ReportToJson(const AnalysisReport& report);
Json CorpusToJson(const CorpusSpec& corpus);
Json ClaimResultToJson(const ClaimResult& result);
Json VerdictToJson(const Verdict& verdict);
Json VerdictsToJson(const std::vector<Verdict>& verdicts);

// Two-space indented JSON followed by a newline.
std::string DumpJson(const Json& json);

// Undirected DOT document. Core vertices are filled, pendant vertices drawn
// as boxes.
std::string ExportDot(const Tree& t, const AnalysisReport& report);

}  // namespace stablecore
