#include "gnorm/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace gnorm {

namespace {

constexpr int kBias = 63;

void append_6bit_group(std::string& out, std::int64_t value, int groups) {
    for (int k = groups - 1; k >= 0; --k)
        out.push_back(static_cast<char>(((value >> (6 * k)) & 63) + kBias));
}

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        append_6bit_group(out, n, 3);
    } else {
        throw GraphParseError("graph6: vertex count too large to encode");
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        const auto& nb = g.neighbors(j);
        size_t k = 0;
        for (int i = 0; i < j; ++i) {
            while (k < nb.size() && nb[k] < i) ++k;
            const bool bit = k < nb.size() && nb[k] == i;
            acc = (acc << 1) | (bit ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
    return out;
}

Graph from_graph6(std::string_view line) {
    // Strip optional header and trailing whitespace.
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
        line.remove_suffix(1);
    if (line.empty()) throw GraphParseError("graph6: empty line");

    size_t pos = 0;
    auto take = [&]() -> int {
        if (pos >= line.size()) throw GraphParseError("graph6: truncated input");
        const int c = static_cast<unsigned char>(line[pos++]);
        if (c < kBias || c > 126) throw GraphParseError("graph6: byte out of range");
        return c - kBias;
    };

    std::int64_t n = take();
    if (n == 63) {  // long form
        n = 0;
        if (pos < line.size() && static_cast<unsigned char>(line[pos]) == 126) {
            ++pos;
            for (int k = 0; k < 6; ++k) n = (n << 6) | take();
        } else {
            for (int k = 0; k < 3; ++k) n = (n << 6) | take();
        }
    }
    if (n > 2'000'000) throw GraphParseError("graph6: vertex count too large");

    std::vector<Edge> edges;
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (nbits == 0) {
                acc = take();
                nbits = 6;
            }
            if ((acc >> (nbits - 1)) & 1) edges.emplace_back(i, j);
            --nbits;
        }
    if (pos != line.size()) throw GraphParseError("graph6: trailing bytes");
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph from_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::int64_t n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0) throw GraphParseError("edge list: bad header");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (std::int64_t k = 0; k < m; ++k) {
        std::int64_t u, v;
        if (!(in >> u >> v)) throw GraphParseError("edge list: truncated");
        if (u < 0 || v < 0 || u >= n || v >= n) throw GraphParseError("edge list: vertex out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string rest;
    if (in >> rest) throw GraphParseError("edge list: trailing tokens");
    try {
        return Graph::from_edges(static_cast<int>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw GraphParseError(e.what());
    }
}

namespace {

GraphFormat resolve_format(const std::string& path, const std::string& override_name) {
    if (override_name == "g6") return GraphFormat::Graph6;
    if (override_name == "el") return GraphFormat::EdgeList;
    if (!override_name.empty()) throw GraphParseError("unknown format: " + override_name);
    if (path.size() >= 3 && path.substr(path.size() - 3) == ".g6") return GraphFormat::Graph6;
    if (path.size() >= 3 && path.substr(path.size() - 3) == ".el") return GraphFormat::EdgeList;
    throw GraphParseError("cannot infer graph format from extension: " + path);
}

}  // namespace

Graph read_graph_file(const std::string& path, const std::string& format_override) {
    const GraphFormat fmt = resolve_format(path, format_override);
    std::ifstream in(path);
    if (!in) throw GraphParseError("cannot open: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (fmt == GraphFormat::Graph6) {
        // First non-empty line.
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line))
            if (!line.empty()) return from_graph6(line);
        throw GraphParseError("graph6 file has no content: " + path);
    }
    return from_edge_list(text);
}

void write_graph_file(const Graph& g, const std::string& path, const std::string& format_override) {
    const GraphFormat fmt = resolve_format(path, format_override);
    std::ofstream out(path);
    if (!out) throw GraphParseError("cannot open for write: " + path);
    if (fmt == GraphFormat::Graph6)
        out << to_graph6(g) << '\n';
    else
        out << to_edge_list(g);
}

}  // namespace gnorm
