#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "moddom/graph.hpp"

namespace moddom {

enum class FamilyKind {
    Path,                       // path:n          P_n, 0-1-...-(n-1)
    Cycle,                      // cycle:n         C_n, consecutive labels
    Complete,                   // complete:n      K_n
    Star,                       // star:n          K_{1,n}, center 0
    CompleteBipartite,          // kbip:m:n        parts {0..m-1},{m..m+n-1}
    CompleteBipartiteMinusEdge, // kbipminus:m:n   edge (0,m) removed, m,n > 1
    Cube,                       // cube            Q3, binary labels
    CubeMinusVertex,            // cubeminus       Q3 minus vertex 7
    Petersen,                   // petersen        outer 0..4, inner 5..9, spokes i<->i+5
    CompleteMinusMatching,      // kminusm:k       K_{2k} minus matching {2i,2i+1}
};

/// A named generator instance. "complement:" prefixes (which may nest) are
/// folded into a wrapper count.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Path;
    int a = 0;
    int b = 0;
    int complements = 0;

    /// Canonical text form, e.g. "path:10", "petersen", "kminusm:3",
    /// "complement:path:8". Throws std::invalid_argument on bad input.
    static FamilySpec parse(std::string_view text);
    std::string to_string() const;
};

Graph generate(const FamilySpec& spec);

/// All labeled graphs on n vertices (1 <= n <= 7), in ascending order of the
/// pair mask over (0,1),(0,2),(1,2),(0,3),... Single-consumer stream.
class LabeledGraphStream {
public:
    explicit LabeledGraphStream(int n, bool connected_only = false);
    std::optional<Graph> next();
    std::uint64_t total() const { return total_; }

private:
    int n_;
    bool connected_only_;
    std::uint64_t mask_ = 0;
    std::uint64_t total_;
};

Graph graph_from_pair_mask(int n, std::uint64_t mask);

/// Uniform labeled graph on n vertices (each pair independently with p=1/2).
Graph random_graph(std::mt19937_64& rng, int n);
Graph random_connected_graph(std::mt19937_64& rng, int n);

}  // namespace moddom
