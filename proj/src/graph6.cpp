#include "rigidity/graph6.hpp"

#include <istream>
#include <sstream>

namespace rigidity {

namespace {
constexpr char kBias = 63;  // graph6 printable range is 63..126
constexpr const char* kHeader = ">>graph6<<";
}  // namespace

Graph parse_graph6(const std::string& line) {
    if (line.empty()) throw ParseError("empty graph6 line", 0);
    const unsigned char first = static_cast<unsigned char>(line[0]);
    if (first < 63 || first > 126) throw ParseError("graph6 byte out of range", 0);
    if (first == 126) throw ParseError("long-form graph6 (n > 62) not supported", 0);
    const unsigned n = first - kBias;
    const std::size_t nbits = std::size_t(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (line.size() != 1 + nbytes)
        throw ParseError("graph6 length " + std::to_string(line.size()) + ", expected " +
                             std::to_string(1 + nbytes) + " for n=" + std::to_string(n),
                         line.size() < 1 + nbytes ? line.size() : 1 + nbytes);

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (unsigned v = 1; v < n; ++v) {
        for (unsigned u = 0; u < v; ++u, ++bit) {
            const std::size_t byte = 1 + bit / 6;
            const unsigned char c = static_cast<unsigned char>(line[byte]);
            if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", byte);
            if ((c - kBias) >> (5 - bit % 6) & 1) edges.emplace_back(u, v);
        }
    }
    // Padding bits beyond the n*(n-1)/2 data bits must be zero.
    for (std::size_t pad = nbits; pad < nbytes * 6; ++pad) {
        const std::size_t byte = 1 + pad / 6;
        const unsigned char c = static_cast<unsigned char>(line[byte]);
        if (c < 63 || c > 126) throw ParseError("graph6 byte out of range", byte);
        if ((c - kBias) >> (5 - pad % 6) & 1)
            throw ParseError("nonzero graph6 padding bit", byte);
    }
    return Graph(n, std::move(edges));
}

std::string serialize_graph6(const Graph& g) {
    const unsigned n = g.vertex_count();
    if (n > 62) throw ScopeError("graph6 short form supports n <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + kBias));
    const std::size_t nbits = std::size_t(n) * (n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    std::vector<unsigned char> bytes(nbytes, 0);
    std::size_t bit = 0;
    for (unsigned v = 1; v < n; ++v)
        for (unsigned u = 0; u < v; ++u, ++bit)
            if (g.has_edge(u, v)) bytes[bit / 6] |= static_cast<unsigned char>(1 << (5 - bit % 6));
    for (unsigned char b : bytes) out.push_back(static_cast<char>(b + kBias));
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw ParseError("edge list must start with \"n m\"", 0);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v))
            throw ParseError("expected " + std::to_string(m) + " edges, got " + std::to_string(i),
                             static_cast<std::size_t>(in.tellg() < 0 ? 0 : in.tellg()));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge endpoint out of range", 0);
        edges.emplace_back(static_cast<unsigned>(u), static_cast<unsigned>(v));
    }
    return Graph(static_cast<unsigned>(n), std::move(edges));
}

std::string serialize_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

void for_each_graph6(std::istream& in,
                     const std::function<bool(Graph&&, const std::string&)>& fn) {
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (first && line.rfind(kHeader, 0) == 0) line = line.substr(std::string(kHeader).size());
        first = false;
        if (line.empty()) continue;
        if (!fn(parse_graph6(line), line)) return;
    }
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> graphs;
    for_each_graph6(in, [&](Graph&& g, const std::string&) {
        graphs.push_back(std::move(g));
        return true;
    });
    return graphs;
}

}  // namespace rigidity
