#include "pathcover/families.hpp"

#include <algorithm>
#include <cctype>

namespace pathcover {

namespace {

struct KindInfo {
    const char* name;
    FamilyKind kind;
    int arity;
};

constexpr KindInfo kKinds[] = {
    {"kstar", FamilyKind::KStar, 1},  // before "k": longest match first
    {"k", FamilyKind::Complete, 1},
    {"p", FamilyKind::Path, 1},
    {"c", FamilyKind::Cycle, 1},
    {"s", FamilyKind::Star, 1},
    {"f1", FamilyKind::F1, 2},
    {"f2", FamilyKind::F2, 2},
    {"f3", FamilyKind::F3, 2},
    {"f4", FamilyKind::F4, 2},
    {"h1", FamilyKind::H1, 2},
    {"h2", FamilyKind::H2, 2},
    {"h3", FamilyKind::H3, 2},
    {"h4", FamilyKind::H4, 2},
};

const KindInfo& kind_info(FamilyKind kind) {
    for (const auto& info : kKinds)
        if (info.kind == kind) return info;
    throw InputError("unknown family kind");
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));

    std::size_t open = s.find('(');
    if (open == std::string::npos || s.back() != ')')
        throw ParseError("family spec must look like Kind(params)", 0);
    std::string name = s.substr(0, open);
    std::string params = s.substr(open + 1, s.size() - open - 2);

    const KindInfo* info = nullptr;
    for (const auto& k : kKinds)
        if (name == k.name) {
            info = &k;
            break;
        }
    if (info == nullptr) throw ParseError("unknown family kind '" + name + "'", 0);

    FamilySpec spec{info->kind, 0, 0};
    std::size_t comma = params.find(',');
    auto to_int = [&](const std::string& part, std::size_t at) {
        if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            }))
            throw ParseError("family parameter must be a nonnegative integer", at);
        if (part.size() > 7) throw ParseError("family parameter too large", at);
        return std::stoi(part);
    };
    if (info->arity == 1) {
        if (comma != std::string::npos)
            throw ParseError("family '" + name + "' takes one parameter", open + 1 + comma);
        spec.a = to_int(params, open + 1);
    } else {
        if (comma == std::string::npos)
            throw ParseError("family '" + name + "' takes two parameters", open + 1);
        spec.a = to_int(params.substr(0, comma), open + 1);
        spec.b = to_int(params.substr(comma + 1), open + 2 + comma);
    }
    spec.validate();
    return spec;
}

std::string FamilySpec::to_string() const {
    const KindInfo& info = kind_info(kind);
    std::string name = info.name;
    if (kind == FamilyKind::KStar) {
        name = "Kstar";
    } else {
        name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    }
    std::string out = name + "(" + std::to_string(a);
    if (info.arity == 2) out += "," + std::to_string(b);
    return out + ")";
}

void FamilySpec::validate() const {
    switch (kind) {
        case FamilyKind::Complete:
        case FamilyKind::Path:
        case FamilyKind::Star:
        case FamilyKind::KStar:
            if (a < 1) throw InputError(to_string() + ": parameter must be >= 1");
            break;
        case FamilyKind::Cycle:
            if (a < 3) throw InputError(to_string() + ": cycle order must be >= 3");
            break;
        case FamilyKind::F1:
        case FamilyKind::F2:
        case FamilyKind::F3:
        case FamilyKind::F4:
            if (a < 1 || b < 1) throw InputError(to_string() + ": requires m >= 1 and n >= 1");
            break;
        case FamilyKind::H1:
        case FamilyKind::H2:
        case FamilyKind::H3:
        case FamilyKind::H4:
            if (a < 2) throw InputError(to_string() + ": requires s >= 2");
            if (b < 3) throw InputError(to_string() + ": requires t >= 3");
            break;
    }
}

namespace {

Graph generate_f(const FamilySpec& spec) {
    int m = spec.a, n = spec.b;
    Graph g(m + n + 2);
    const int x1 = 0, x2 = 1;
    auto y = [&](int i) { return 1 + i; };      // y_i, 1-based
    auto z = [&](int i) { return 1 + m + i; };  // z_i, 1-based
    bool through_x2 = spec.kind == FamilyKind::F3 || spec.kind == FamilyKind::F4;
    if (through_x2) {
        g.add_edge(x1, y(1));
        g.add_edge(x1, z(1));
        g.add_edge(x2, y(1));
        g.add_edge(x2, z(1));
    } else {
        g.add_edge(x1, x2);
        g.add_edge(x1, y(1));
        g.add_edge(x1, z(1));
    }
    for (int i = 1; i < m; ++i) g.add_edge(y(i), y(i + 1));
    for (int i = 1; i < n; ++i) g.add_edge(z(i), z(i + 1));
    if (spec.kind == FamilyKind::F2 || spec.kind == FamilyKind::F4) g.add_edge(y(1), z(1));
    return g;
}

Graph generate_h(const FamilySpec& spec) {
    int s = spec.a, t = spec.b;
    Graph g(s * t + 2 * (s - 1));
    auto u = [&](int i, int j) { return (i - 1) * t + (j - 1); };  // u^(j)_i, 1-based
    auto v = [&](int i) { return s * t + 2 * (i - 1); };
    auto w = [&](int i) { return s * t + 2 * (i - 1) + 1; };
    for (int i = 1; i <= s; ++i)
        for (int j = 1; j < t; ++j) g.add_edge(u(i, j), u(i, j + 1));
    bool vw_pendant = spec.kind == FamilyKind::H1 || spec.kind == FamilyKind::H2;
    for (int i = 1; i < s; ++i) {
        g.add_edge(v(i), u(i, t));
        g.add_edge(v(i), u(i + 1, 1));
        if (vw_pendant) {
            g.add_edge(v(i), w(i));
        } else {
            g.add_edge(w(i), u(i, t));
            g.add_edge(w(i), u(i + 1, 1));
        }
    }
    if (spec.kind == FamilyKind::H2 || spec.kind == FamilyKind::H4)
        for (int i = 1; i < s; ++i) g.add_edge(u(i, t), u(i + 1, 1));
    return g;
}

}  // namespace

Graph generate(const FamilySpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case FamilyKind::Complete: {
            Graph g(spec.a);
            for (int u = 0; u < spec.a; ++u)
                for (int v = u + 1; v < spec.a; ++v) g.add_edge(u, v);
            return g;
        }
        case FamilyKind::Path: {
            Graph g(spec.a);
            for (int v = 0; v + 1 < spec.a; ++v) g.add_edge(v, v + 1);
            return g;
        }
        case FamilyKind::Cycle: {
            Graph g(spec.a);
            for (int v = 0; v + 1 < spec.a; ++v) g.add_edge(v, v + 1);
            g.add_edge(spec.a - 1, 0);
            return g;
        }
        case FamilyKind::Star: {
            Graph g(spec.a + 1);
            for (int v = 1; v <= spec.a; ++v) g.add_edge(0, v);
            return g;
        }
        case FamilyKind::KStar: {
            int m = spec.a;
            Graph g(2 * m);
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) g.add_edge(i, j);
            for (int i = 0; i < m; ++i) g.add_edge(i, m + i);
            return g;
        }
        case FamilyKind::F1:
        case FamilyKind::F2:
        case FamilyKind::F3:
        case FamilyKind::F4:
            return generate_f(spec);
        case FamilyKind::H1:
        case FamilyKind::H2:
        case FamilyKind::H3:
        case FamilyKind::H4:
            return generate_h(spec);
    }
    throw InputError("unknown family kind");
}

std::pair<int, int> order_and_size(const FamilySpec& spec) {
    spec.validate();
    int a = spec.a, b = spec.b;
    switch (spec.kind) {
        case FamilyKind::Complete: return {a, a * (a - 1) / 2};
        case FamilyKind::Path: return {a, a - 1};
        case FamilyKind::Cycle: return {a, a};
        case FamilyKind::Star: return {a + 1, a};
        case FamilyKind::KStar: return {2 * a, a * (a - 1) / 2 + a};
        case FamilyKind::F1: return {a + b + 2, a + b + 1};
        case FamilyKind::F2: return {a + b + 2, a + b + 2};
        case FamilyKind::F3: return {a + b + 2, a + b + 2};
        case FamilyKind::F4: return {a + b + 2, a + b + 3};
        case FamilyKind::H1: return {a * b + 2 * (a - 1), a * (b - 1) + 3 * (a - 1)};
        case FamilyKind::H2: return {a * b + 2 * (a - 1), a * (b - 1) + 4 * (a - 1)};
        case FamilyKind::H3: return {a * b + 2 * (a - 1), a * (b - 1) + 4 * (a - 1)};
        case FamilyKind::H4: return {a * b + 2 * (a - 1), a * (b - 1) + 5 * (a - 1)};
    }
    throw InputError("unknown family kind");
}

}  // namespace pathcover
