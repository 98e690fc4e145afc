#pragma once

#include <string>
#include <string_view>

#include "pathcover/graph.hpp"

namespace pathcover {

// graph6 text format, bit-exact per the de facto standard: the order header
// (63+n for n <= 62, '~'-prefixed 18- or 36-bit forms beyond), then the
// upper triangle in column order x(0,1), x(0,2), x(1,2), x(0,3), ...,
// zero-padded to a 6-bit boundary, each 6-bit group emitted as value+63.
// No isomorphism canonicalization: labels survive a round trip exactly.

Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

}  // namespace pathcover
