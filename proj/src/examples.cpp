#include "mvl/examples.hpp"

#include <string>

namespace mvl {

namespace {

constexpr std::string_view decoder_src = R"(circuit decoder
input S
const C0 = 0
const C1 = 1
const C2 = 2
const C3 = 3
gate g0 = EQ(S, C0) @ 2
gate g1 = EQ(S, C1) @ 2
gate g2 = EQ(S, C2) @ 2
gate g3 = EQ(S, C3) @ 2
output L0 = g0
output L1 = g1
output L2 = g2
output L3 = g3
)";

constexpr std::string_view demux_src = R"(circuit demux
input S
input D
const C0 = 0
const C1 = 1
const C2 = 2
const C3 = 3
gate e0 = EQ(S, C0) @ 2
gate e1 = EQ(S, C1) @ 2
gate e2 = EQ(S, C2) @ 2
gate e3 = EQ(S, C3) @ 2
gate g0 = AND(D, e0) @ 4
gate g1 = AND(D, e1) @ 4
gate g2 = AND(D, e2) @ 4
gate g3 = AND(D, e3) @ 4
output L0 = g0
output L1 = g1
output L2 = g2
output L3 = g3
)";

constexpr std::string_view mux4_src = R"(circuit mux4
input S
input D0
input D1
input D2
input D3
const C0 = 0
const C1 = 1
const C2 = 2
const C3 = 3
gate e0 = EQ(S, C0) @ 2
gate e1 = EQ(S, C1) @ 2
gate e2 = EQ(S, C2) @ 2
gate e3 = EQ(S, C3) @ 2
gate a0 = AND(D0, e0) @ 4
gate a1 = AND(D1, e1) @ 4
gate a2 = AND(D2, e2) @ 4
gate a3 = AND(D3, e3) @ 4
gate m0 = OR(a0, a1) @ 6
gate m1 = OR(a2, a3) @ 6
gate m2 = OR(m0, m1) @ 8
output F = m2
)";

} // namespace

std::vector<std::string_view> example_names() {
    return {"decoder", "demux", "mux4"};
}

std::string_view example_source(std::string_view name) {
    if (name == "decoder")
        return decoder_src;
    if (name == "demux")
        return demux_src;
    if (name == "mux4")
        return mux4_src;
    throw Error("unknown example circuit: " + std::string(name));
}

QNetlist example_netlist(std::string_view name) {
    auto parsed = parse_qnetlist(example_source(name));
    if (!parsed.ok())
        throw Error("example circuit " + std::string(name) +
                    " failed to parse");
    return *parsed.netlist;
}

} // namespace mvl
