#pragma once

// Serialization: graph JSON, character-table CSV, output documents and DOT.
//
// Integers that fit in a signed 64-bit value are written as JSON numbers and
// larger ones as decimal strings; readers accept both.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "mckay/groups.hpp"
#include "mckay/poincare.hpp"
#include "mckay/polyring.hpp"
#include "mckay/repgraph.hpp"
#include "mckay/verify.hpp"

namespace mckay::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json to_json(const BigInt& v);
BigInt bigint_from_json(const Json& j);
Json to_json(const IntPoly& p);
Json to_json(const std::vector<BigInt>& v);

/// {"v_dim", "nodes": [{"label","mark"}], "edges": [[from, to, mult]]}.
/// Symmetric graphs list each undirected edge once; otherwise the document
/// carries "directed": true and one entry per arc.
Json graph_to_json(const RepGraph& g);
/// Throws ParseError / InvalidParameter / DimensionMismatch.
RepGraph graph_from_json(const Json& j);
RepGraph read_graph_file(const std::string& path);

/// CSV: class labels row, class sizes row, then "irrep, v1, v2, ..." rows.
/// Entries are decimal "a", "bi" or "a+bi"/"a-bi". A "#V=<label>" line
/// selects V. A leading corner cell in the first two rows is optional.
CharacterTable parse_chartable_csv(const std::string& text);
CharacterTable read_chartable_file(const std::string& path);
std::string chartable_to_csv(const CharacterTable& table);

/// Parses "3", "-1.5", "0.5+0.866i", "-2i".
std::complex<double> parse_complex(const std::string& text);

Json series_document(const std::string& source, const SeriesResult& r, std::size_t terms);
Json bratteli_document(const std::string& source, const RepGraph& g, const std::vector<BratteliLevel>& levels);
Json descriptor_to_json(const GroupDescriptor& d);
Json catalog_document(const std::vector<GroupKind>& kinds);
Json verify_document(std::string_view suite, const VerifyReport& report);
std::string verify_to_text(const VerifyReport& report);

std::string graph_to_dot(const RepGraph& g, const std::string& name);
std::string bratteli_to_dot(const RepGraph& g, const std::vector<BratteliLevel>& levels, const std::string& name);
std::string bratteli_to_text(const RepGraph& g, const std::vector<BratteliLevel>& levels);

}  // namespace mckay::io
