#pragma once

#include <json.hpp>

#include "wittext/oracle.hpp"

namespace wittext {

using json = nlohmann::ordered_json;

json to_json(const FieldElement& v);
FieldElement element_from_json(const json& j, const FieldCtx& ctx);

json to_json(const FieldCtx& ctx);
FieldCtx field_from_json(const json& j);

json to_json(const PCharacter& chi);
PCharacter character_from_json(const json& j, const FieldCtx& ctx);

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, const FieldCtx& ctx);

json to_json(const ModuleRep& rep);
ModuleRep module_from_json(const json& j);

/// The full table of Ext dimensions for one chi, with enough surrounding
/// data to re-check it.
json table_to_json(const ExtTable& t, const PCharacter& chi);
std::string table_to_csv(const ExtTable& t);
std::string table_to_markdown(const ExtTable& t);

json report_to_json(const std::string& labelM, const std::string& labelN,
                    Algebra alg, const CocycleReport& rep);
json report_to_json(const std::string& labelM, const std::string& labelN,
                    const ReducedReport& rep);

}  // namespace wittext
