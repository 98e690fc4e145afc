#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "pathcover/graph.hpp"

namespace pathcover {

// Parameterized graph families.  Vertex labelings are frozen so tests and
// reports can address named vertices by formula:
//
//   Complete(n), Path(n), Cycle(n): vertices 0..n-1, paths/cycles in label
//       order.
//   Star(n): the star of order n+1; center 0, leaves 1..n.
//   KStar(m): clique x_1..x_m with a pendant y_i on each x_i;
//       x_i -> i-1, y_i -> m+i-1.
//   F1..F4(m,n): the two-chain gadgets on {x_1,x_2} with chains y_1..y_m and
//       z_1..z_n; x_1 -> 0, x_2 -> 1, y_i -> 1+i, z_i -> 1+m+i.
//       F1: edges x1x2, x1y1, x1z1 plus the two chains.
//       F2: F1 plus y1z1.
//       F3: edges x1y1, x1z1, x2y1, x2z1 plus the two chains (no x1x2).
//       F4: F3 plus y1z1.
//   H1..H4(s,t): s disjoint t-vertex paths Q_i = u^(1)_i..u^(t)_i joined by
//       connector pairs v_i, w_i (1 <= i <= s-1);
//       u^(j)_i -> (i-1)t + (j-1), v_i -> st + 2(i-1), w_i -> st + 2(i-1)+1.
//       H1: edges v_i w_i, v_i u^(t)_i, v_i u^(1)_{i+1}.
//       H2: H1 plus u^(t)_i u^(1)_{i+1}.
//       H3: edges v_i u^(t)_i, v_i u^(1)_{i+1}, w_i u^(t)_i, w_i u^(1)_{i+1}.
//       H4: H3 plus u^(t)_i u^(1)_{i+1}.
enum class FamilyKind { Complete, Path, Cycle, Star, KStar, F1, F2, F3, F4, H1, H2, H3, H4 };

struct FamilySpec {
    FamilyKind kind;
    int a = 0;  // n for one-parameter kinds, m for F*, s for H*
    int b = 0;  // n for F*, t for H*; unused otherwise

    // Text syntax: K(n), P(n), C(n), S(n), Kstar(m), F1(m,n)..F4(m,n),
    // H1(s,t)..H4(s,t).  Case-insensitive, whitespace-tolerant.
    static FamilySpec parse(std::string_view text);

    std::string to_string() const;

    // Throws InputError naming the failed constraint.
    void validate() const;
};

Graph generate(const FamilySpec& spec);

// Closed-form (|V|, |E|) for a valid spec.
std::pair<int, int> order_and_size(const FamilySpec& spec);

}  // namespace pathcover
