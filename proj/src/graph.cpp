#include "pathcover/graph.hpp"

#include <algorithm>
#include <deque>

namespace pathcover {

namespace {
std::size_t words_for(int capacity) {
    return static_cast<std::size_t>((capacity + 63) / 64);
}
}  // namespace

VertexSet::VertexSet(int capacity) : capacity_(capacity), words_(words_for(capacity), 0) {
    if (capacity < 0) throw InputError("VertexSet capacity must be nonnegative");
}

VertexSet::VertexSet(int capacity, std::initializer_list<int> members) : VertexSet(capacity) {
    for (int v : members) add(v);
}

VertexSet VertexSet::full(int capacity) {
    VertexSet s(capacity);
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
    int tail = capacity % 64;
    if (tail != 0 && !s.words_.empty())
        s.words_.back() = (std::uint64_t{1} << tail) - 1;
    return s;
}

void VertexSet::check_range(int v) const {
    if (v < 0 || v >= capacity_)
        throw InputError("vertex index " + std::to_string(v) + " out of range [0," +
                         std::to_string(capacity_) + ")");
}

void VertexSet::check_same_capacity(const VertexSet& other) const {
    if (capacity_ != other.capacity_)
        throw InputError("vertex sets refer to different vertex ranges (" +
                         std::to_string(capacity_) + " vs " + std::to_string(other.capacity_) + ")");
}

bool VertexSet::contains(int v) const {
    check_range(v);
    return (words_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1;
}

void VertexSet::add(int v) {
    check_range(v);
    words_[static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(int v) {
    check_range(v);
    words_[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
}

int VertexSet::count() const noexcept {
    int total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

bool VertexSet::empty() const noexcept {
    for (std::uint64_t w : words_)
        if (w != 0) return false;
    return true;
}

int VertexSet::lowest() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] != 0) return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
    return -1;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    check_same_capacity(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
    check_same_capacity(other);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if ((words_[w] & other.words_[w]) != 0) return true;
    return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    check_same_capacity(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    check_same_capacity(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    check_same_capacity(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
    return *this;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
}

Graph::Graph(int order) : order_(order) {
    if (order < 0) throw InputError("graph order must be nonnegative");
    adj_.assign(static_cast<std::size_t>(order), VertexSet(order));
}

Graph::Graph(int order, std::initializer_list<std::pair<int, int>> edges) : Graph(order) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= order_)
        throw InputError("vertex index " + std::to_string(v) + " out of range [0," +
                         std::to_string(order_) + ")");
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    return adj_[static_cast<std::size_t>(u)].contains(v);
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("loops are not allowed");
    if (adj_[static_cast<std::size_t>(u)].contains(v)) return;
    adj_[static_cast<std::size_t>(u)].add(v);
    adj_[static_cast<std::size_t>(v)].add(u);
    ++edge_count_;
}

const VertexSet& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const { return neighbors(v).count(); }

VertexSet neighborhood(const Graph& g, const VertexSet& x) {
    if (x.capacity() != g.order())
        throw InputError("vertex set does not match the graph's vertex range");
    VertexSet result(g.order());
    x.for_each([&](int v) { result |= g.neighbors(v); });
    result -= x;
    return result;
}

Graph induced_subgraph(const Graph& g, const VertexSet& x) {
    if (x.capacity() != g.order())
        throw InputError("vertex set does not match the graph's vertex range");
    std::vector<int> verts = x.to_vector();
    Graph h(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (g.adjacent(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet seen(g.order());
    for (int start = 0; start < g.order(); ++start) {
        if (seen.contains(start)) continue;
        VertexSet comp(g.order());
        std::deque<int> queue{start};
        comp.add(start);
        seen.add(start);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            g.neighbors(v).for_each([&](int u) {
                if (!seen.contains(u)) {
                    seen.add(u);
                    comp.add(u);
                    queue.push_back(u);
                }
            });
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    return components(g).size() == 1;
}

}  // namespace pathcover
