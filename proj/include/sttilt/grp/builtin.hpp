#pragma once

#include <string>

#include "sttilt/grp/group.hpp"

namespace sttilt::grp {

/// cyclic, symmetric, alternating, dihedral (order 2n), klein4.
GroupPtr builtin(const std::string& name, int n, std::size_t cap = kDefaultOrderCap);

/// "builtin:<name>:<n>" or "perm:<degree>:<cycles>,<cycles>,...".
GroupPtr parse_group(const std::string& spec, std::size_t cap = kDefaultOrderCap);

}  // namespace sttilt::grp
