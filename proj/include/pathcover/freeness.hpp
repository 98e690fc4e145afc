#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pathcover/graph.hpp"

namespace pathcover {

// Witness of an induced copy: mapping[u] is the image in the host graph of
// pattern vertex u; the map is injective and preserves both edges and
// non-edges.
struct Embedding {
    std::vector<int> mapping;
};

// Searches for an induced copy of h in g by backtracking over vertex maps,
// assigning pattern vertices 0,1,2,... in order and trying host candidates
// in ascending label, so the returned witness is the lexicographically least
// mapping in that search order.  Returns nullopt when no copy exists.
std::optional<Embedding> find_induced(const Graph& g, const Graph& h);

// True iff g contains no induced copy of any member of hs.
bool is_family_free(const Graph& g, std::span<const Graph> hs);

// The family order relation: true iff every member of h2s contains some
// member of h1s as an induced subgraph.  Throws InputError on an empty list.
bool family_leq(std::span<const Graph> h1s, std::span<const Graph> h2s);

// Labeled-graph isomorphism test at desk scale (equal order, equal size,
// induced embedding exists).
bool is_isomorphic(const Graph& g, const Graph& h);

enum class CharacterizationMode { A1, A2, APrime };

// Target family of the boundedness characterizations at parameter n:
//   A1     -> {K_{1,n}, K*_n, F1(n,n), F2(n,n)}
//   A2     -> A1 plus F3(n,n), F4(n,n)
//   APrime -> {K_{1,n}, K*_n, P_n}
std::vector<Graph> target_family(CharacterizationMode mode, int n);

// Least n in 2..n_max with family_leq(hs, target_family(mode, n)), or
// nullopt if none.  The characterizations quantify over all n >= 2, so a
// nullopt is a semi-decision: no certificate below n_max.
std::optional<int> matches_characterization(std::span<const Graph> hs, CharacterizationMode mode,
                                            int n_max);

}  // namespace pathcover
