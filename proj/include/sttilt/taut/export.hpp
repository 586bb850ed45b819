#pragma once

#include <map>
#include <string>
#include <vector>

#include "sttilt/taut/enumerate.hpp"

namespace sttilt::taut {

/// Marker classes per node, e.g. "invariant" or "star".
using Markers = std::map<int, std::vector<std::string>>;

std::string to_dot(const Scope& s, const SttPoset& poset, const Markers& markers = {},
                   const std::string& title = "stt");
/// {"nodes":[{"id","summands","projPart","markers"}],"edges":[[from,to]]}
std::string to_json(const Scope& s, const SttPoset& poset, const Markers& markers = {});
std::string to_text(const Scope& s, const SttPoset& poset, const Markers& markers = {});

}  // namespace sttilt::taut
