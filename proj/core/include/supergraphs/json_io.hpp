#pragma once

#include <nlohmann/json.hpp>
#include <string_view>

#include "supergraphs/closed_forms.hpp"
#include "supergraphs/graph.hpp"
#include "supergraphs/graph_expr.hpp"
#include "supergraphs/group.hpp"
#include "supergraphs/invariable.hpp"
#include "supergraphs/supergraph.hpp"
#include "supergraphs/universality.hpp"

namespace supergraphs {

using json = nlohmann::ordered_json;

// GroupSpec: {"kind":"dihedral","n":5}, {"kind":"product","of":[a,b]},
// {"kind":"permgens","degree":7,"gens":[[[1,2,3]],[[1,2],[3,4]]]},
// {"kind":"table","rows":[[...],...]}. Malformed input throws InvalidSpec.
void to_json(json& j, const GroupSpec& s);
void from_json(const json& j, GroupSpec& s);
GroupSpec parse_group_spec(std::string_view text);

// Graph: {"labels":[...],"edges":[[i,j],...]} with i < j.
void to_json(json& j, const Graph& g);
void from_json(const json& j, Graph& g);

void to_json(json& j, const GraphExpr& e);
GraphExpr expr_from_json(const json& j);

void to_json(json& j, const QuotientDecomposition& q);
void to_json(json& j, const HierarchyReport& r);
void to_json(json& j, const FamilyRecord& r);
void to_json(json& j, const FamilyReport& r);
void to_json(json& j, const ClassAdjacency& a);
void to_json(json& j, const Step3Result& s);
void to_json(json& j, const EmbeddingCertificate& c);
void to_json(json& j, const StrongProductCheck& c);
void to_json(json& j, const ContainmentReport& r);
void to_json(json& j, const EqualityScanReport& r);

}  // namespace supergraphs
