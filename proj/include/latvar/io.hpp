#pragma once

// JSON file formats, report serialization, and the text exports (DOT,
// relations, polytope).
//
// Poset file: {"name": s, "elements": [s...], "covers": [[lo, hi]...],
// "root": s (optional)}. When "root" is given it must be the unique minimum
// and is removed, so a file can list J including the lattice minimum.
// A file may also wrap posets under "ji_poset" (join-irreducibles) and
// "hasse" (the lattice itself).

#include "latvar/classify.hpp"
#include "latvar/harness.hpp"
#include "latvar/lattice.hpp"
#include "latvar/polytope.hpp"
#include "latvar/smooth.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace latvar {

using nlohmann::json;

PosetSpec poset_spec_from_json(const json& j);
json to_json(const PosetSpec& spec);

/// Reads and parses a JSON file; ParseError / IoError carry the path.
json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Lattice from a J-poset file ("ji_poset" key or a bare poset).
Lattice load_from_ji(const std::filesystem::path& path, std::size_t cap);
/// Lattice from a Hasse-diagram file ("hasse" key or a bare poset).
Lattice load_from_lattice(const std::filesystem::path& path, std::size_t cap);

json lattice_summary_json(const Lattice& lattice);
/// J' spec, element member lists, |J| and codim. Readable by load_from_ji.
json lattice_export_json(const Lattice& lattice);
json to_json(const Lattice& lattice, const ClassificationReport& report);
json to_json(const Lattice& lattice, const SmoothnessReport& report);
json to_json(const Lattice& lattice, const PointVerdict& verdict);
json to_json(const Lattice& lattice, const ChainDecomposition& d);
json diamonds_json(const Lattice& lattice);
json to_json(const CampaignReport& report);
json to_json(const OrderPolytope& polytope, const ToricSmoothness& toric);

/// Hasse diagram of L, bottom to top, nodes in canonical order.
std::string lattice_dot(const Lattice& lattice);
/// Hasse diagram of J (root included).
std::string ji_dot(const Lattice& lattice);
/// One binomial per line: x[i]*x[j] - x[k]*x[l] with canonical indices.
std::string relations_text(const Lattice& lattice);
/// "# vertices N d", N rows of 0/1 entries, "# edges M", M lines "u v".
std::string polytope_text(const OrderPolytope& polytope);

}  // namespace latvar
