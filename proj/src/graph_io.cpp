#include "jc/graph_io.hpp"

#include <sstream>

namespace jc {

namespace {

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw error("edge list: missing header line");
    std::istringstream header(line);
    long long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0)
        throw error("edge list: malformed header, expected \"n m\"");
    std::string trailing;
    if (header >> trailing)
        throw error("edge list: malformed header, expected \"n m\"");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!std::getline(in, line))
            throw error("edge list: expected " + std::to_string(m) + " edge lines, got " + std::to_string(i));
        std::istringstream es(line);
        long long u = -1, v = -1;
        if (!(es >> u >> v))
            throw error("edge list: malformed edge line \"" + line + "\"");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw error("edge list: index out of range on line \"" + line + "\"");
        if (u == v)
            throw error("edge list: self-loop on line \"" + line + "\"");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

// graph6 upper-triangle column order: (0,1),(0,2),(1,2),(0,3),...
Graph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
        s.pop_back();
    if (s.empty())
        throw error("graph6: empty input");
    std::size_t pos = 0;
    long long n;
    if (static_cast<unsigned char>(s[0]) == 126) {
        if (s.size() < 4)
            throw error("graph6: truncated order field");
        if (static_cast<unsigned char>(s[1]) == 126)
            throw error("graph6: order exceeds the supported range");
        n = 0;
        for (int i = 1; i <= 3; ++i) {
            int b = static_cast<unsigned char>(s[static_cast<std::size_t>(i)]) - 63;
            if (b < 0 || b > 63)
                throw error("graph6: invalid byte in order field");
            n = (n << 6) | b;
        }
        pos = 4;
    } else {
        n = static_cast<unsigned char>(s[0]) - 63;
        if (n < 0 || n > 62)
            throw error("graph6: invalid order byte");
        pos = 1;
    }
    Graph g(static_cast<int>(n));
    const long long bits = n * (n - 1) / 2;
    const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (s.size() - pos < need)
        throw error("graph6: truncated payload");
    if (s.size() - pos > need)
        throw error("graph6: trailing bytes after payload");
    long long idx = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++idx) {
            int byte = static_cast<unsigned char>(s[pos + static_cast<std::size_t>(idx / 6)]) - 63;
            if (byte < 0 || byte > 63)
                throw error("graph6: invalid payload byte");
            if ((byte >> (5 - idx % 6)) & 1)
                g.add_edge(u, v);
        }
    }
    return g;
}

std::string serialize_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0)
        out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::edge_list ? parse_edge_list(text) : parse_graph6(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::edge_list ? serialize_edge_list(g) : serialize_graph6(g);
}

}  // namespace jc
