#pragma once

#include <optional>
#include <string>

#include "mvl/netlist.hpp"
#include "mvl/sim.hpp"

namespace mvl {

struct RenderOptions {
    enum class Format { Dot, Svg };

    // The library's native output is the graph description; Svg is
    // honored by the CLI by piping through an external layout tool.
    Format format = Format::Dot;
    bool show_slots = false;
    std::optional<QAssignment> values;     // annotate quaternary wires
    std::optional<BAssignment> bit_values; // annotate binary wires
};

/// Emits a deterministic graph description: one node per input,
/// constant, gate and output; one edge per connection (fan-out
/// expanded); nodes ranked left-to-right by timeslot.
std::string render_dot(const QNetlist& n, const RenderOptions& opts = {});
std::string render_dot(const BNetlist& n, const RenderOptions& opts = {});

} // namespace mvl
