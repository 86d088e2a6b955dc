#pragma once

#include <string>
#include <vector>

#include "wittkit/model.hpp"

namespace wittkit {

// Built-in models:
//   minimal-real  G = {1,-1,2,-2}, H = GF(2), q(-1,-1) = 1
//   q3r           basis {-1,2,3}, symbol = (3-adic Hilbert, real sign)
//   q5r           basis {-1,2,5}, symbol = (5-adic Hilbert, real sign)
//   reals         G = {1,-1}, q(-1,-1) = 1
//   reals-st      reals extended by Laurent variables s, t
ModelPtr catalog_model(const std::string& name);

const std::vector<std::string>& catalog_names();

// Resolves `name` against the catalog, allowing `<base>((v1))((v2))...`
// to request Laurent extensions of a catalog model.
ModelPtr resolve_model(const std::string& name);

}  // namespace wittkit
