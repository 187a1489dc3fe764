#pragma once

#include "spaces/spaces.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace cli {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr const char* kSchemaVersion = "1";

/// Serialization of the seven-invariant tuple. Rationals are "p/q" strings,
/// symbolic reals are {monomial: "p/q"} maps with keys like "pi^2" or "1",
/// matrix entries and orbit coordinates are decimal strings. Output key
/// order is fixed, so serialization is deterministic and documents
/// round-trip byte-identically through parse/serialize.
Json presentation_to_json(const spaces::SpacePresentation& p);

/// Full document with schema_version envelope; include_witness adds the
/// Seifert level-set invariant and the gluing description of the model
/// construction (only valid presentations have a witness).
Json document_for(const spaces::SpacePresentation& p, bool include_witness = false);

std::string serialize_document(const spaces::SpacePresentation& p, bool include_witness = false);

/// Parses a presentation document. Throws ParseError on malformed input,
/// unknown schema versions, or value syntax errors; the presentation is
/// returned unvalidated (validation is a separate, reportable step).
spaces::SpacePresentation parse_document(const std::string& text);

spaces::SpacePresentation presentation_from_json(const Json& j);

Json symbolic_to_json(const exactalg::SymbolicReal& x);
exactalg::SymbolicReal symbolic_from_json(const Json& j);

}  // namespace cli
