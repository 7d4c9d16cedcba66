#include "cagex/graph_io.hpp"

#include "cagex/errors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace cagex {

namespace {

struct Line {
    std::string text;
    int number;  // 1-based
};

std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string line(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                                       : nl - pos));
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::size_t first = line.find_first_not_of(" \t");
        if (first != std::string::npos && line[first] != '#')
            out.push_back({line, number});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

int parse_int_field(std::istringstream& in, int line_number, const char* what) {
    long long value = 0;
    if (!(in >> value))
        throw parse_error("line " + std::to_string(line_number) + ": expected " + what);
    if (value < 0 || value > 1000000000)
        throw parse_error("line " + std::to_string(line_number) + ": " + what + " out of range");
    return static_cast<int>(value);
}

void expect_line_end(std::istringstream& in, int line_number) {
    std::string rest;
    if (in >> rest)
        throw parse_error("line " + std::to_string(line_number) + ": unexpected token '" + rest + "'");
}

}  // namespace

Graph parse_adjacency_text(std::string_view text) {
    const auto lines = significant_lines(text);
    if (lines.empty()) throw parse_error("empty input: missing the 'n m' header line");

    std::istringstream header(lines[0].text);
    const int n = parse_int_field(header, lines[0].number, "vertex count");
    const int m = parse_int_field(header, lines[0].number, "edge count");
    expect_line_end(header, lines[0].number);

    if (static_cast<std::size_t>(m) + 1 != lines.size())
        throw parse_error("header announces " + std::to_string(m) + " edges but " +
                          std::to_string(lines.size() - 1) + " edge lines follow");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const Line& line = lines[static_cast<std::size_t>(i) + 1];
        std::istringstream in(line.text);
        const int u = parse_int_field(in, line.number, "edge endpoint");
        const int v = parse_int_field(in, line.number, "edge endpoint");
        expect_line_end(in, line.number);
        if (u >= n || v >= n)
            throw parse_error("line " + std::to_string(line.number) + ": endpoint out of range (n=" +
                              std::to_string(n) + ")");
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

std::string write_adjacency_text(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

namespace {

// Packs bits most-significant-first into 6-bit groups, each stored as
// byte value group+63.
class BitWriter {
public:
    void push(bool bit) {
        current_ = (current_ << 1) | (bit ? 1 : 0);
        if (++filled_ == 6) flush_group();
    }
    std::string finish() {
        if (filled_ > 0) {
            current_ <<= (6 - filled_);
            filled_ = 6;
            flush_group();
        }
        return out_;
    }

private:
    void flush_group() {
        out_.push_back(static_cast<char>(current_ + 63));
        current_ = 0;
        filled_ = 0;
    }
    std::string out_;
    int current_ = 0;
    int filled_ = 0;
};

class BitReader {
public:
    BitReader(std::string_view data, std::size_t offset) : data_(data), byte_(offset) {}

    bool pop() {
        if (byte_ >= data_.size())
            throw parse_error("graph6: truncated at byte " + std::to_string(byte_));
        const int value = static_cast<unsigned char>(data_[byte_]) - 63;
        if (value < 0 || value > 63)
            throw parse_error("graph6: invalid byte at position " + std::to_string(byte_));
        const bool bit = (value >> (5 - bit_)) & 1;
        if (++bit_ == 6) {
            bit_ = 0;
            ++byte_;
        }
        return bit;
    }

    std::size_t byte_position() const { return byte_; }

private:
    std::string_view data_;
    std::size_t byte_;
    int bit_ = 0;
};

int graph6_order(std::string_view s, std::size_t& offset) {
    if (s.empty()) throw parse_error("graph6: empty line");
    const auto value_at = [&](std::size_t i) {
        if (i >= s.size()) throw parse_error("graph6: truncated order field");
        const int v = static_cast<unsigned char>(s[i]) - 63;
        if (v < 0 || v > 63)
            throw parse_error("graph6: invalid byte at position " + std::to_string(i));
        return v;
    };
    const int first = value_at(0);
    if (first < 63) {
        offset = 1;
        return first;
    }
    // 126 starts a 3-byte (or, doubled, a 6-byte) order field.
    if (value_at(1) < 63) {
        long long n = 0;
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | value_at(i);
        offset = 4;
        if (n < 63) throw parse_error("graph6: non-canonical order encoding");
        return static_cast<int>(n);
    }
    long long n = 0;
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | value_at(i);
    offset = 8;
    if (n > 1000000) throw parse_error("graph6: order too large");
    return static_cast<int>(n);
}

}  // namespace

Graph graph6_decode(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.rfind(">>graph6<<", 0) == 0) line.remove_prefix(10);

    std::size_t offset = 0;
    const int n = graph6_order(line, offset);
    BitReader bits(line, offset);

    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (bits.pop()) edges.emplace_back(u, v);

    const std::size_t expected = offset + (n < 2 ? 0 : (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6);
    if (line.size() != expected)
        throw parse_error("graph6: expected " + std::to_string(expected) + " bytes, got " +
                          std::to_string(line.size()));
    return Graph(n, edges);
}

std::string graph6_encode(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        throw hypothesis_error("graph6 writer supports at most 258047 vertices");
    }
    BitWriter bits;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            bits.push(g.has_edge(u, v));
    out += bits.finish();
    return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
    switch (format) {
        case GraphFormat::adjacency_text: return parse_adjacency_text(text);
        case GraphFormat::graph6: return graph6_decode(text);
    }
    throw parse_error("unknown graph format");
}

std::string write_graph(const Graph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::adjacency_text: return write_adjacency_text(g);
        case GraphFormat::graph6: return graph6_encode(g) + "\n";
    }
    throw parse_error("unknown graph format");
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

GraphFormat detect_format(const std::string& path, const std::string& text) {
    if (path.size() >= 3 && path.compare(path.size() - 3, 3, ".g6") == 0)
        return GraphFormat::graph6;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '#')
            return GraphFormat::adjacency_text;
        return GraphFormat::graph6;
    }
    return GraphFormat::adjacency_text;
}

}  // namespace

Graph load_graph(const std::string& path, GraphFormat format) {
    return parse_graph(read_file(path), format);
}

Graph load_graph(const std::string& path) {
    const std::string text = read_file(path);
    return parse_graph(text, detect_format(path, text));
}

}  // namespace cagex
