#pragma once

#include <string>

#include <json.hpp>

#include "pivotminor/decomposition.hpp"
#include "pivotminor/driver.hpp"
#include "pivotminor/extraction.hpp"
#include "pivotminor/pivot.hpp"

namespace pivotminor {

using nlohmann::json;

/// A JSON document that does not match the expected shape.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// nlohmann hooks, found by ADL. Readers throw SchemaError naming the field.
//
// Witness      {"source": graph6, "k": int, "ops": [{"pivot": [u, v]} | {"delete": v}]}
// PurePair     {"a": [...], "b": [...], "kind": "complete" | "anticomplete"}
// Hole         {"order": [...]}
// Certificate  {"type": "pure_pair" | "witness" | "hole", ...fields of that type}
// Skeleton     {"root": v, "parent": [...], "rmap": [...]}
void to_json(json& j, const Step& s);
void from_json(const json& j, Step& s);
void to_json(json& j, const Witness& w);
void from_json(const json& j, Witness& w);
void to_json(json& j, const PurePair& p);
void from_json(const json& j, PurePair& p);
void to_json(json& j, const Hole& h);
void from_json(const json& j, Hole& h);
void to_json(json& j, const Certificate& c);
void from_json(const json& j, Certificate& c);
void to_json(json& j, const Skeleton& s);
void from_json(const json& j, Skeleton& s);
void to_json(json& j, const ConstantsBundle& c);
void from_json(const json& j, ConstantsBundle& c);
void to_json(json& j, const RunReport& r);
void from_json(const json& j, RunReport& r);

/// Parses text and converts it, turning every library error into SchemaError.
template <class T>
T parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text).get<T>();
  } catch (const SchemaError&) {
    throw;
  } catch (const json::exception& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  }
}

}  // namespace pivotminor
