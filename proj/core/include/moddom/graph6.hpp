#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "moddom/graph.hpp"

namespace moddom {

/// Parse failure with the byte offset of the offending character.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// graph6 text form: upper triangle in column-major pair order
/// (0,1),(0,2),(1,2),(0,3),..., packed into 6-bit chunks offset by 63.
/// An optional ">>graph6<<" header is tolerated on input.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

}  // namespace moddom
