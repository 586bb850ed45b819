#pragma once

#include <iosfwd>

#include "sttilt/rep/module.hpp"

namespace sttilt::rep {

// Text format:
//   module perm:<degree>:<generator cycles>
//   GF(p^m) mod c0,...,cm
//   then one matrix body ("rows cols" and rows of element codes) per
//   group generator.

void write_module(std::ostream& os, const GModule& m);
/// Reads a module over g; the group line must list g's generators.
GModule read_module(std::istream& is, const GroupPtr& g);

/// "perm:<degree>:(..),(..)" for the group's generators.
std::string group_spec(const grp::Group& g);

}  // namespace sttilt::rep
