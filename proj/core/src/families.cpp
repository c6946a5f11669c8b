#include "moddom/families.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>
#include <utility>
#include <vector>

namespace moddom {

namespace {

int parse_int(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("bad integer in family spec: '" + std::string(s) + "'");
    return v;
}

[[noreturn]] void bad_spec(std::string_view text, const std::string& why) {
    throw std::invalid_argument("invalid family spec '" + std::string(text) + "': " + why);
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
    FamilySpec spec;
    std::string_view rest = text;
    while (rest.substr(0, 11) == "complement:") {
        ++spec.complements;
        rest = rest.substr(11);
    }
    std::vector<std::string_view> parts;
    while (!rest.empty()) {
        auto colon = rest.find(':');
        parts.push_back(rest.substr(0, colon));
        rest = colon == std::string_view::npos ? std::string_view{} : rest.substr(colon + 1);
    }
    if (parts.empty()) bad_spec(text, "empty");

    const std::string_view name = parts[0];
    auto want = [&](std::size_t params) {
        if (parts.size() != params + 1)
            bad_spec(text, "wrong parameter count for '" + std::string(name) + "'");
    };
    if (name == "path") {
        want(1);
        spec.kind = FamilyKind::Path;
        spec.a = parse_int(parts[1]);
        if (spec.a < 1) bad_spec(text, "path needs n >= 1");
    } else if (name == "cycle") {
        want(1);
        spec.kind = FamilyKind::Cycle;
        spec.a = parse_int(parts[1]);
        if (spec.a < 3) bad_spec(text, "cycle needs n >= 3");
    } else if (name == "complete") {
        want(1);
        spec.kind = FamilyKind::Complete;
        spec.a = parse_int(parts[1]);
        if (spec.a < 1) bad_spec(text, "complete needs n >= 1");
    } else if (name == "star") {
        want(1);
        spec.kind = FamilyKind::Star;
        spec.a = parse_int(parts[1]);
        if (spec.a < 1) bad_spec(text, "star needs n >= 1");
    } else if (name == "kbip") {
        want(2);
        spec.kind = FamilyKind::CompleteBipartite;
        spec.a = parse_int(parts[1]);
        spec.b = parse_int(parts[2]);
        if (spec.a < 1 || spec.b < 1) bad_spec(text, "kbip needs m,n >= 1");
    } else if (name == "kbipminus") {
        want(2);
        spec.kind = FamilyKind::CompleteBipartiteMinusEdge;
        spec.a = parse_int(parts[1]);
        spec.b = parse_int(parts[2]);
        if (spec.a < 2 || spec.b < 2) bad_spec(text, "kbipminus needs m,n > 1");
    } else if (name == "cube") {
        want(0);
        spec.kind = FamilyKind::Cube;
    } else if (name == "cubeminus") {
        want(0);
        spec.kind = FamilyKind::CubeMinusVertex;
    } else if (name == "petersen") {
        want(0);
        spec.kind = FamilyKind::Petersen;
    } else if (name == "kminusm") {
        want(1);
        spec.kind = FamilyKind::CompleteMinusMatching;
        spec.a = parse_int(parts[1]);
        if (spec.a < 1) bad_spec(text, "kminusm needs k >= 1");
    } else {
        bad_spec(text, "unknown family '" + std::string(name) + "'");
    }
    return spec;
}

std::string FamilySpec::to_string() const {
    std::string s;
    for (int i = 0; i < complements; ++i) s += "complement:";
    switch (kind) {
        case FamilyKind::Path: s += "path:" + std::to_string(a); break;
        case FamilyKind::Cycle: s += "cycle:" + std::to_string(a); break;
        case FamilyKind::Complete: s += "complete:" + std::to_string(a); break;
        case FamilyKind::Star: s += "star:" + std::to_string(a); break;
        case FamilyKind::CompleteBipartite:
            s += "kbip:" + std::to_string(a) + ":" + std::to_string(b);
            break;
        case FamilyKind::CompleteBipartiteMinusEdge:
            s += "kbipminus:" + std::to_string(a) + ":" + std::to_string(b);
            break;
        case FamilyKind::Cube: s += "cube"; break;
        case FamilyKind::CubeMinusVertex: s += "cubeminus"; break;
        case FamilyKind::Petersen: s += "petersen"; break;
        case FamilyKind::CompleteMinusMatching: s += "kminusm:" + std::to_string(a); break;
    }
    return s;
}

namespace {

Graph generate_base(const FamilySpec& spec) {
    using E = std::vector<std::pair<int, int>>;
    switch (spec.kind) {
        case FamilyKind::Path: {
            E edges;
            for (int i = 0; i + 1 < spec.a; ++i) edges.emplace_back(i, i + 1);
            return Graph::from_edges(spec.a, edges);
        }
        case FamilyKind::Cycle: {
            E edges;
            for (int i = 0; i < spec.a; ++i) edges.emplace_back(i, (i + 1) % spec.a);
            return Graph::from_edges(spec.a, edges);
        }
        case FamilyKind::Complete: {
            E edges;
            for (int i = 0; i < spec.a; ++i)
                for (int j = i + 1; j < spec.a; ++j) edges.emplace_back(i, j);
            return Graph::from_edges(spec.a, edges);
        }
        case FamilyKind::Star: {
            E edges;
            for (int i = 1; i <= spec.a; ++i) edges.emplace_back(0, i);
            return Graph::from_edges(spec.a + 1, edges);
        }
        case FamilyKind::CompleteBipartite:
        case FamilyKind::CompleteBipartiteMinusEdge: {
            E edges;
            for (int i = 0; i < spec.a; ++i)
                for (int j = 0; j < spec.b; ++j) {
                    if (spec.kind == FamilyKind::CompleteBipartiteMinusEdge && i == 0 && j == 0)
                        continue;
                    edges.emplace_back(i, spec.a + j);
                }
            return Graph::from_edges(spec.a + spec.b, edges);
        }
        case FamilyKind::Cube:
        case FamilyKind::CubeMinusVertex: {
            const int n = spec.kind == FamilyKind::Cube ? 8 : 7;
            E edges;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (std::popcount(static_cast<unsigned>(i ^ j)) == 1) edges.emplace_back(i, j);
            return Graph::from_edges(n, edges);
        }
        case FamilyKind::Petersen: {
            E edges;
            for (int i = 0; i < 5; ++i) {
                edges.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
                edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
                edges.emplace_back(i, 5 + i);                // spokes
            }
            return Graph::from_edges(10, edges);
        }
        case FamilyKind::CompleteMinusMatching: {
            const int n = 2 * spec.a;
            E edges;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (!(j == i + 1 && i % 2 == 0)) edges.emplace_back(i, j);
            return Graph::from_edges(n, edges);
        }
    }
    throw std::logic_error("unreachable family kind");
}

}  // namespace

Graph generate(const FamilySpec& spec) {
    Graph g = generate_base(spec);
    for (int i = 0; i < spec.complements; ++i) g = g.complement();
    return g;
}

Graph graph_from_pair_mask(int n, std::uint64_t mask) {
    std::vector<Bitset> rows(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((mask >> bit) & 1) {
                rows[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(j));
                rows[static_cast<std::size_t>(j)].set(static_cast<std::size_t>(i));
            }
    return Graph::from_adjacency(std::move(rows));
}

LabeledGraphStream::LabeledGraphStream(int n, bool connected_only)
    : n_(n), connected_only_(connected_only) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("labeled enumeration supports 1 <= n <= 7, got " +
                                    std::to_string(n));
    total_ = std::uint64_t{1} << (n * (n - 1) / 2);
}

std::optional<Graph> LabeledGraphStream::next() {
    while (mask_ < total_) {
        Graph g = graph_from_pair_mask(n_, mask_++);
        if (!connected_only_ || g.is_connected()) return g;
    }
    return std::nullopt;
}

Graph random_graph(std::mt19937_64& rng, int n) {
    std::vector<Bitset> rows(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
    std::uint64_t word = 0;
    int bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (bits == 0) {
                word = rng();
                bits = 64;
            }
            if (word & 1) {
                rows[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(j));
                rows[static_cast<std::size_t>(j)].set(static_cast<std::size_t>(i));
            }
            word >>= 1;
            --bits;
        }
    return Graph::from_adjacency(std::move(rows));
}

Graph random_connected_graph(std::mt19937_64& rng, int n) {
    while (true) {
        Graph g = random_graph(rng, n);
        if (g.is_connected()) return g;
    }
}

}  // namespace moddom
