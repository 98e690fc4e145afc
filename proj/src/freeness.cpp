#include "pathcover/freeness.hpp"

#include "pathcover/families.hpp"

namespace pathcover {

namespace {

struct InducedSearch {
    const Graph& g;
    const Graph& h;
    std::vector<int> map;        // h vertex -> g vertex, -1 unassigned
    std::vector<bool> used;      // g vertex already an image
    std::vector<int> h_degrees;

    InducedSearch(const Graph& g_, const Graph& h_)
        : g(g_), h(h_), map(static_cast<std::size_t>(h_.order()), -1),
          used(static_cast<std::size_t>(g_.order()), false),
          h_degrees(static_cast<std::size_t>(h_.order())) {
        for (int u = 0; u < h.order(); ++u) h_degrees[static_cast<std::size_t>(u)] = h.degree(u);
    }

    bool consistent(int hu, int gv) const {
        if (g.degree(gv) < h_degrees[static_cast<std::size_t>(hu)]) return false;
        for (int prev = 0; prev < hu; ++prev) {
            bool he = h.adjacent(prev, hu);
            bool ge = g.adjacent(map[static_cast<std::size_t>(prev)], gv);
            if (he != ge) return false;
        }
        return true;
    }

    bool extend(int hu) {
        if (hu == h.order()) return true;
        for (int gv = 0; gv < g.order(); ++gv) {
            if (used[static_cast<std::size_t>(gv)]) continue;
            if (!consistent(hu, gv)) continue;
            map[static_cast<std::size_t>(hu)] = gv;
            used[static_cast<std::size_t>(gv)] = true;
            if (extend(hu + 1)) return true;
            used[static_cast<std::size_t>(gv)] = false;
            map[static_cast<std::size_t>(hu)] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<Embedding> find_induced(const Graph& g, const Graph& h) {
    if (h.order() > g.order()) return std::nullopt;
    InducedSearch search(g, h);
    if (!search.extend(0)) return std::nullopt;
    return Embedding{std::move(search.map)};
}

bool is_family_free(const Graph& g, std::span<const Graph> hs) {
    for (const Graph& h : hs)
        if (find_induced(g, h).has_value()) return false;
    return true;
}

bool family_leq(std::span<const Graph> h1s, std::span<const Graph> h2s) {
    if (h1s.empty() || h2s.empty()) throw InputError("family_leq requires nonempty families");
    for (const Graph& h2 : h2s) {
        bool contains_some = false;
        for (const Graph& h1 : h1s) {
            if (find_induced(h2, h1).has_value()) {
                contains_some = true;
                break;
            }
        }
        if (!contains_some) return false;
    }
    return true;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    return find_induced(g, h).has_value();
}

std::vector<Graph> target_family(CharacterizationMode mode, int n) {
    if (n < 2) throw InputError("target_family requires n >= 2");
    std::vector<Graph> family;
    family.push_back(generate({FamilyKind::Star, n}));
    family.push_back(generate({FamilyKind::KStar, n}));
    if (mode == CharacterizationMode::APrime) {
        family.push_back(generate({FamilyKind::Path, n}));
        return family;
    }
    family.push_back(generate({FamilyKind::F1, n, n}));
    family.push_back(generate({FamilyKind::F2, n, n}));
    if (mode == CharacterizationMode::A2) {
        family.push_back(generate({FamilyKind::F3, n, n}));
        family.push_back(generate({FamilyKind::F4, n, n}));
    }
    return family;
}

std::optional<int> matches_characterization(std::span<const Graph> hs, CharacterizationMode mode,
                                            int n_max) {
    if (n_max < 2) throw InputError("matches_characterization requires n_max >= 2");
    if (hs.empty()) throw InputError("matches_characterization requires a nonempty family");
    for (int n = 2; n <= n_max; ++n) {
        std::vector<Graph> target = target_family(mode, n);
        if (family_leq(hs, target)) return n;
    }
    return std::nullopt;
}

}  // namespace pathcover
