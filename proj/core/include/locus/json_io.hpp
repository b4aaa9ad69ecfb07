#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "locus/square.hpp"

namespace locus {

/// Frame document: {"name": str, "elements": [labels...], "leq": [[a, b], ...]}.
/// Element i is the i-th label; bottom and top are inferred.
FramePtr frame_from_json(const nlohmann::json& doc);
nlohmann::json frame_to_json(const FiniteFrame& frame);

using FrameTable = std::map<std::string, FramePtr, std::less<>>;
using MapTable = std::map<std::string, LocalicMap, std::less<>>;

/// Map document: {"source": frame-name, "target": frame-name, "table": {label: label}}
/// with an optional "name". Every source label must appear in the table.
LocalicMap map_from_json(const nlohmann::json& doc, const FrameTable& frames);
nlohmann::json map_to_json(const LocalicMap& map);

/// Sorted label array.
nlohmann::json sublocale_to_json(const Sublocale& s);
/// Sorted, lexicographically ordered array of label arrays.
nlohmann::json sublocales_to_json(const std::vector<Sublocale>& family);
/// Array of labels; the members must form a sublocale. Throws NotASublocale.
Sublocale sublocale_from_json(const FiniteFrame& frame, const nlohmann::json& labels);

enum class DocumentKind { Frame, Map, Square, Chain, Bundle };

std::string_view to_string(DocumentKind kind);

/// Any of the documents `locus validate` accepts, loaded and validated.
///
/// A frame or map document stands alone (a map document carries its frames
/// under "frames"). Squares and chains are bundles:
///   {"frames": [...], "maps": [...], "square": {"g", "f", "alpha", "omega"}}
///   {"frames": [...], "maps": [...], "chain": {"g", "f", "i", "k", "phi", "theta", "sigma"}}
/// where the square and chain fields name maps. A bundle without either is
/// checked frame by frame and map by map.
struct Document {
  DocumentKind kind = DocumentKind::Frame;
  FrameTable frames;
  MapTable maps;
  std::optional<DenseSquare> square;
  std::optional<SquareChain> chain;

  /// The only frame of a frame document, else the first frame listed.
  FramePtr primary_frame;
};

/// Throws LocusError; malformed JSON structure is InvalidInput.
Document load_document(const nlohmann::json& doc);
Document load_document_file(const std::string& path);

}  // namespace locus
