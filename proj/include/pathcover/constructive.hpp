#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <utility>
#include <vector>

#include "pathcover/freeness.hpp"
#include "pathcover/graph.hpp"
#include "pathcover/solvers.hpp"

namespace pathcover {

using BigInt = boost::multiprecision::cpp_int;

// Upper bound on the Ramsey number R(n1, n2).  Only an upper bound is ever
// needed: the neighborhood-independence and greedy-cycle arguments survive
// substituting any R' >= R.  The value follows the Erdos-Szekeres recursion
// R'(m,n) = R'(m-1,n) + R'(m,n-1) with R'(1,k) = R'(k,1) = 1, i.e.
// binomial(n1+n2-2, n1-1).  `exact` marks the entries this artifact can
// brute-verify: the R(2,k) = k line, its transpose, and R(3,3) = 6.
struct RamseyBound {
    BigInt n1;
    BigInt n2;
    BigInt value;
    bool exact;
};

RamseyBound ramsey_upper(const BigInt& n1, const BigInt& n2);

// Brute-force certificate for R(3,3) = 6: every one of the 2^15 labeled
// graphs of order 6 has a triangle or an independent 3-set, and C_5 has
// neither.
bool verify_ramsey_33();

// n0 = max(ceil((n^2 - n - 2) / 2), n); requires n >= 2.
int layer_constant(int n);

// [alpha_0 .. alpha_{2 n0 - 1}] with alpha_0 = 2 ceil(n0 / 2) and
// alpha_i = (n-1) R'(n, alpha_{i-1} + 1) - 1.
std::vector<BigInt> alpha_sequence(int n);

// A maximum-length induced path.  Ties: every candidate is compared against
// its own reversal (keeping the lexicographically smaller reading) and the
// least such sequence wins.  Requires order >= 1.
std::vector<int> longest_induced_path(const Graph& g);

// The spine decomposition behind the bounded-cover construction: a longest
// induced path u_1..u_m, the protected prefix/suffix X_0 of n0 vertices on
// each side, the attachment set Y hanging off the middle of the spine, its
// slots Y_i (keyed by 1-based spine position of the leftmost neighbor) with
// the split Y_{i,1} = {y : y u_{i+1} in E}, and the BFS-like layers
// X_1, X_2, ... growing from X_0.  The three structural predicates are evaluated,
// not assumed; on inputs violating the freeness hypothesis they may be
// false, and the flags say which.
struct LayerDecomposition {
    std::vector<int> spine;  // u_1..u_m as vertex labels
    int n0 = 0;
    std::vector<VertexSet> x_layers;  // X_0 .. X_{2 n0 - 1}
    VertexSet x_overflow;             // X_{2 n0}
    VertexSet y;
    std::map<int, VertexSet> y_slots;                        // i -> Y_i
    std::map<int, std::pair<VertexSet, VertexSet>> y_split;  // i -> (Y_{i,1}, Y_{i,2})
    bool layers_terminate = false;  // X_{2 n0} empty
    bool coverage = false;          // V = V(P) u N(V(P)) u X_2..X_{2 n0 - 1}
    bool last_slot_empty = false;   // Y_{m - n0} empty
};

// Requires g connected and n >= 2.  The caller is responsible for the
// freeness hypothesis; the decomposition itself only reports the predicate
// flags.
LayerDecomposition decompose(const Graph& g, int n);

// Path cover of G[V(P) u Y] with at most max{3n-6, 1} paths: the spine alone
// when Y is empty, otherwise the three connector families R^(t)_1..R^(t)_3
// for t = 1..n-2, threading greedy partitions of each Y_{i,j} between the
// spine vertices u_i and u_{i+j}.  Raises HypothesisViolation when a step
// the construction depends on fails (doubling as a freeness sanity check).
PathSystem spine_cover(const Graph& g, const LayerDecomposition& d, int n);

// Hamiltonian path of G[V(P) u Y]: each spine edge u_i u_{i+1} in the middle
// window is replaced by a walk through the clique {u_i, u_{i+1}} u Y_i,
// visiting Y_i in ascending label order.  Raises HypothesisViolation when
// the clique certificate fails.
std::vector<int> spine_hamiltonian(const Graph& g, const LayerDecomposition& d, int n);

struct CoverCertificate {
    int n = 0;
    int n0 = 0;
    std::vector<BigInt> alpha_bounds;    // alpha_0 .. alpha_{2 n0 - 1}
    int spine_part_count = 0;            // paths covering V(P) u Y
    std::vector<int> layer_part_counts;  // greedy part counts for X_1..X_{2 n0 - 1}
    BigInt spine_bound;                  // max{3n-6,1} for covers, 1 for partitions
    BigInt total_bound;                  // spine_bound + sum of alpha_1..alpha_{2 n0 - 1}
};

struct BoundedCoverResult {
    PathSystem system;
    CoverCertificate certificate;
};

// {K_{1,n}, K*_n, F1(n,n), F2(n,n)}, plus F3/F4(n,n) when include_f34.
std::vector<Graph> forbidden_family(int n, bool include_f34);

// The full constructive pipeline: decompose, re-check the structural predicates,
// cover V(P) u Y via spine_cover (resp. one Hamiltonian spine path), and
// finish each layer X_i with a greedy partition.  When check_freeness is
// set, the forbidden family is searched first and a violation reported with
// its witness.
BoundedCoverResult bounded_path_cover(const Graph& g, int n, bool check_freeness = false);
BoundedCoverResult bounded_path_partition(const Graph& g, int n, bool check_freeness = false);

}  // namespace pathcover
