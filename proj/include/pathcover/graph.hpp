#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "pathcover/errors.hpp"

namespace pathcover {

// Subset of the vertex range 0..capacity-1 of some graph, stored as a
// word-packed bitset so that set algebra is bit-parallel.  Capacity is fixed
// at construction; binary operations require both operands to refer to the
// same vertex range.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int capacity);
    VertexSet(int capacity, std::initializer_list<int> members);

    static VertexSet full(int capacity);

    int capacity() const noexcept { return capacity_; }

    bool contains(int v) const;
    void add(int v);
    void erase(int v);

    int count() const noexcept;
    bool empty() const noexcept;
    // Smallest member, or -1 when empty.
    int lowest() const noexcept;

    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;

    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& other) const = default;

    std::vector<int> to_vector() const;

    // Visits members in ascending order.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                int b = std::countr_zero(bits);
                fn(static_cast<int>(w * 64) + b);
                bits &= bits - 1;
            }
        }
    }

private:
    void check_range(int v) const;
    void check_same_capacity(const VertexSet& other) const;

    int capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

// Finite simple undirected graph on vertices 0..order-1.  Adjacency rows are
// VertexSets, giving O(1) adjacency queries and word-parallel neighborhood
// unions.  Intended usage is build-then-read: construct, add edges, then
// share freely across threads (all queries are const).
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);
    Graph(int order, std::initializer_list<std::pair<int, int>> edges);

    int order() const noexcept { return order_; }
    int size() const noexcept { return edge_count_; }

    bool adjacent(int u, int v) const;
    void add_edge(int u, int v);

    const VertexSet& neighbors(int v) const;
    int degree(int v) const;

    VertexSet vertices() const { return VertexSet::full(order_); }

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int v) const;

    int order_ = 0;
    int edge_count_ = 0;
    std::vector<VertexSet> adj_;
};

// N_G(X): union of neighborhoods of members of x, minus x itself.
VertexSet neighborhood(const Graph& g, const VertexSet& x);

// Subgraph induced on x, relabeled 0..|x|-1 by ascending original label.
Graph induced_subgraph(const Graph& g, const VertexSet& x);

// The order-0 graph counts as disconnected; order 1 is connected.
bool is_connected(const Graph& g);

// Connected components as vertex sets, ordered by minimum vertex label.
std::vector<VertexSet> components(const Graph& g);

}  // namespace pathcover
