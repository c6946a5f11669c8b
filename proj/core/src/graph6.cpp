#include "moddom/graph6.hpp"

namespace moddom {

namespace {

constexpr int kLo = 63;   // printable offset
constexpr int kHi = 126;  // '~'

int payload_char(std::string_view text, std::size_t pos) {
    if (pos >= text.size()) throw Graph6Error("truncated graph6 data", text.size());
    const unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < kLo || c > kHi) throw Graph6Error("invalid graph6 character", pos);
    return c - kLo;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    std::size_t pos = 0;
    if (text.substr(0, header.size()) == header) pos = header.size();
    if (pos >= text.size()) throw Graph6Error("empty graph6 string", pos);

    // Order field: one byte for n <= 62, '~' + 3 bytes (18 bits) or
    // '~~' + 6 bytes (36 bits) above that.
    long long n = 0;
    if (static_cast<unsigned char>(text[pos]) != kHi) {
        n = payload_char(text, pos);
        ++pos;
    } else {
        ++pos;
        if (pos < text.size() && static_cast<unsigned char>(text[pos]) == kHi) {
            ++pos;
            for (int i = 0; i < 6; ++i) n = (n << 6) | payload_char(text, pos++);
        } else {
            for (int i = 0; i < 3; ++i) n = (n << 6) | payload_char(text, pos++);
        }
    }
    if (n < 1) throw Graph6Error("graph6 order below 1", 0);
    if (n > kMaxVertices) throw Graph6Error("graph6 order exceeds " + std::to_string(kMaxVertices), 0);

    const std::size_t order = static_cast<std::size_t>(n);
    const std::size_t pair_count = order * (order - 1) / 2;
    std::vector<Bitset> rows(order, Bitset(order));

    int buffer = 0, bits = 0;
    std::size_t pair = 0;
    for (std::size_t j = 1; j < order; ++j) {
        for (std::size_t i = 0; i < j; ++i, ++pair) {
            if (bits == 0) {
                buffer = payload_char(text, pos);
                ++pos;
                bits = 6;
            }
            --bits;
            if ((buffer >> bits) & 1) {
                rows[i].set(j);
                rows[j].set(i);
            }
        }
    }
    (void)pair_count;
    if (pos != text.size()) throw Graph6Error("trailing data after graph6 payload", pos);
    return Graph::from_adjacency(std::move(rows));
}

std::string emit_graph6(const Graph& g) {
    const std::size_t n = static_cast<std::size_t>(g.order());
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kLo));
    } else {
        out.push_back(static_cast<char>(kHi));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kLo));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kLo));
        out.push_back(static_cast<char>((n & 63) + kLo));
    }
    int buffer = 0, bits = 0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            buffer = (buffer << 1) | (g.adjacent(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(buffer + kLo));
                buffer = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((buffer << (6 - bits)) + kLo));
    return out;
}

}  // namespace moddom
