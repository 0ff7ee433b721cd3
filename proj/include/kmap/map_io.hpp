#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "kmap/cognitive_map.hpp"

namespace kmap {

enum class MapFormat { json, csv_edges };

/// Parses a map document.
///
/// json:      { "version": "1", "name": str, "concepts": [{"id": int, "label": str}],
///              "relations": [{"from": int, "to": int, "weight": number}] }
/// csv_edges: one `from,to,weight` triple per line, 1-based ids, no header.
///            Blank lines and lines starting with '#' are skipped. The concept
///            count is the largest id mentioned.
///
/// Syntax and schema problems throw ParseError with the line (when known)
/// and the offending field; structural problems throw InvalidMap.
CognitiveMap parse_map(std::string_view text, MapFormat format, std::string name = {});

/// Picks the format from the extension: ".csv" is an edge list, anything
/// else is JSON.
MapFormat format_for_path(const std::filesystem::path& path);

/// Reads and parses a file. Unreadable files throw ParseError with line 0.
CognitiveMap load_map(const std::filesystem::path& path,
                      std::optional<MapFormat> format = std::nullopt);

/// Canonical JSON document for a map; parse_map reads it back unchanged.
std::string write_map_json(const CognitiveMap& map);

std::string write_map_csv(const CognitiveMap& map);

}  // namespace kmap
