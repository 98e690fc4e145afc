#include "pathcover/graph6.hpp"

#include <cstdint>

namespace pathcover {

namespace {

constexpr std::int64_t kMaxOrder = (std::int64_t{1} << 36) - 1;

void check_byte(std::string_view text, std::size_t pos) {
    if (pos >= text.size())
        throw ParseError("graph6 string truncated", text.size());
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
        throw ParseError("graph6 byte outside printable range 63..126", pos);
}

// Reads the order header, advancing pos past it.
std::int64_t decode_order(std::string_view text, std::size_t& pos) {
    check_byte(text, pos);
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c != 126) {
        ++pos;
        return c - 63;
    }
    ++pos;
    check_byte(text, pos);
    int groups = 3;
    if (static_cast<unsigned char>(text[pos]) == 126) {  // '~~' prefix: 36-bit order
        ++pos;
        groups = 6;
    }
    std::int64_t n = 0;
    for (int i = 0; i < groups; ++i, ++pos) {
        check_byte(text, pos);
        n = (n << 6) | (static_cast<unsigned char>(text[pos]) - 63);
    }
    return n;
}

void encode_order(std::string& out, std::int64_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
}

}  // namespace

Graph from_graph6(std::string_view text) {
    std::size_t pos = 0;
    std::int64_t n64 = decode_order(text, pos);
    if (n64 < 0 || n64 > kMaxOrder)
        throw ParseError("graph6 order out of range", 0);
    int n = static_cast<int>(n64);
    Graph g(n);

    std::int64_t bits_needed = n64 * (n64 - 1) / 2;
    std::size_t bytes_needed = static_cast<std::size_t>((bits_needed + 5) / 6);
    if (text.size() - pos < bytes_needed)
        throw ParseError("graph6 string truncated", text.size());
    if (text.size() - pos > bytes_needed)
        throw ParseError("trailing bytes after graph6 data", pos + bytes_needed);

    std::int64_t bit_index = 0;
    for (std::size_t i = 0; i < bytes_needed; ++i) {
        check_byte(text, pos + i);
        int group = static_cast<unsigned char>(text[pos + i]) - 63;
        for (int b = 5; b >= 0; --b, ++bit_index) {
            bool bit = (group >> b) & 1;
            if (bit_index >= bits_needed) {
                if (bit) throw ParseError("nonzero padding bit in graph6 data", pos + i);
                continue;
            }
            if (bit) {
                // bit order: column v, rows u = 0..v-1
                std::int64_t k = bit_index;
                int v = 1;
                while (k >= v) {
                    k -= v;
                    ++v;
                }
                g.add_edge(static_cast<int>(k), v);
            }
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    std::string out;
    encode_order(out, g.order());
    int group = 0;
    int filled = 0;
    for (int v = 1; v < g.order(); ++v) {
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled != 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
    return out;
}

}  // namespace pathcover
