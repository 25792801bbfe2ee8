#pragma once

#include <string_view>
#include <vector>

#include "mvl/netlist.hpp"

namespace mvl {

/// Built-in example circuits: a 1-to-4 decoder (L[i] = EQ(S, i)), a
/// 1-to-4 demultiplexer (L[i] = AND(D, EQ(S, i))) and a 4x1 multiplexer
/// (F = OR-tree over AND(D[i], EQ(S, i))).
std::vector<std::string_view> example_names();

/// Source text of one example; throws Error for unknown names.
std::string_view example_source(std::string_view name);

QNetlist example_netlist(std::string_view name);

} // namespace mvl
