#ifndef TOPSKIT_CONFIG_HPP
#define TOPSKIT_CONFIG_HPP

#include "topskit/gifs.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string_view>

namespace topskit {

// Graph IFS configs:
//   {"vertices": ["v1", ...],
//    "edges": [{"label": 1, "source": "v1", "target": "v2", "a": "1/2", "b": "0"}, ...],
//    "field": {"poly": [c0, c1, ...], "interval": ["lo", "hi"]},   (optional)
//    "comment": "..."}                                              (optional)
// A number is a string accepted by ExactReal::parse, a JSON integer,
// {"poly": [...], "interval": [lo, hi]}, or {"field": [q0, q1, ...]} for
// q0 + q1 theta + ... with theta the root declared under "field".
GraphIFS parse_config(const nlohmann::json& doc);
GraphIFS parse_config_text(std::string_view text);
GraphIFS load_config(const std::filesystem::path& path);

ExactReal parse_number(const nlohmann::json& value, const std::optional<ExactReal>& theta = std::nullopt);

nlohmann::ordered_json config_to_json(const GraphIFS& g);

} // namespace topskit

#endif
