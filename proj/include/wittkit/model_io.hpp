#pragma once

#include <iosfwd>
#include <string>

#include "wittkit/model.hpp"

namespace wittkit {

// Parses the line-oriented model format:
//
//   # comment
//   model <name>
//   generators <id> <id> ...
//   minus_one <word>
//   symbol_rank <m>
//   q <generator> <generator> <m-bitstring>
//
// Unordered generator pairs; missing pairs default to 0, entries on
// non-generator elements follow by bilinearity. Throws ParseError with
// line/column, or ValidationError when an axiom fails.
ModelPtr load_model(const std::string& text);
ModelPtr load_model_file(const std::string& path);

// Parses without enforcing the axioms (the report carries failures).
ModelPtr parse_model(const std::string& text);

// Canonical text: generators verbatim, q lines only for nonzero generator
// pairs i <= j in generator order. load(serialize(m)) reproduces m.
std::string serialize_model(const ModelPtr& model);

std::string format_validation_report(const ModelPtr& model);

}  // namespace wittkit
