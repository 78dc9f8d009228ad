#pragma once

// JSON and CSV encodings.
//
//   composition / partition   [2,1,3]
//   thc                       {"kind":"thc","perm":[...],"shape":[...]}
//   srht                      {"hooks":[[[i,j],...],...],"kind":"srht","shape":[...]}
//   tableau                   {"kind":"tableau","rows":[[...],...],"shape":[...]}
//   pair                      {"left":...,"right":...,"setKind":"A"}
//   trace                     {"kind":"trace","steps":[{"indices":{},"map":"psi","pair":...}]}
//
// Keys are emitted in sorted order so dumps are canonical.

#include "kostka/involutions.hpp"
#include "kostka/matrices.hpp"
#include "kostka/rimhooks.hpp"
#include "kostka/tableaux.hpp"
#include "kostka/tunnelhooks.hpp"

#include <json.hpp>

#include <string>

namespace kostka {

using Json = nlohmann::json;

Json to_json(const Thc& t);
Json to_json(const Srht& r);
Json to_json(const Tableau& s);
Json to_json(SetKind kind, const Pair& x);
Json to_json(SetKind kind, const InvolutionTrace& trace);
Json to_json(const Matrix& m, const std::string& name);
Json to_json(const VerifyReport& r);

Sequence sequence_from_json(const Json& j);
Thc thc_from_json(const Json& j);
Srht srht_from_json(const Json& j);
Tableau tableau_from_json(const Json& j);
SetKind pair_kind_from_json(const Json& j);
Pair pair_from_json(const Json& j);
InvolutionTrace trace_from_json(const Json& j);

// Throws Parse on malformed text.
Json parse_json(const std::string& text);

// Header row of ';'-separated labels, then one comma-separated line per row.
std::string to_csv(const Matrix& m);

}  // namespace kostka
