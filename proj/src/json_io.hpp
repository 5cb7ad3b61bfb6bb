#pragma once

#include "bipartite_hole.hpp"
#include "conditions.hpp"
#include "construct.hpp"
#include "extremal.hpp"
#include "ham_solver.hpp"
#include "harness.hpp"
#include "rewrite.hpp"

#include <json.hpp>

namespace hamfan {

// Keys keep insertion order so reports read top-down and diff cleanly.
using Json = nlohmann::ordered_json;

Json vertex_list(VertexSet s);
Json to_json(const AlphaTildeResult& r);
Json to_json(const ConditionReport& r);
Json to_json(const HamCertificate& c);
Json to_json(const HamConnectedResult& r);
Json to_json(const ConstructionTrace& t);
Json to_json(const RewriteRule& r);
Json to_json(const RewriteResult& r);
Json to_json(const NeighborSplit& s);
Json to_json(const FamilyReport& r);
Json to_json(const LemmaViolation& v);
Json to_json(const VerificationRecord& r);
Json to_json(const CorpusSummary& s);

/// Only the prior-condition comparison: hypothesis counts and implications.
Json comparison_json(const CorpusSummary& s);

} // namespace hamfan
