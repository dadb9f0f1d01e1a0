#include "distsketch/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "distsketch/errors.hpp"

namespace distsketch {
namespace io {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    int number = 0;
    std::istringstream stream(text);
    std::string raw;
    while (std::getline(stream, raw)) {
        ++number;
        if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
        Line line;
        line.number = number;
        std::istringstream ls(raw);
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

[[noreturn]] void fail(int line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

long long parse_int(const std::string& tok, int line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        fail(line, "expected an integer, got '" + tok + "'");
    return value;
}

double parse_real(const std::string& tok, int line) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        fail(line, "expected a number, got '" + tok + "'");
    return value;
}

std::vector<std::string> split_csv(const std::string& raw) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ls(raw);
    while (std::getline(ls, field, ',')) {
        field.erase(0, field.find_first_not_of(" \t\r"));
        field.erase(field.find_last_not_of(" \t\r") + 1);
        out.push_back(field);
    }
    return out;
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

Graph parse_edge_list(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError("line 1: empty edge list");
    std::size_t start = 0;
    int declared_n = -1;
    if (lines[0].tokens.size() == 2) {
        declared_n = static_cast<int>(parse_int(lines[0].tokens[0], lines[0].number));
        parse_int(lines[0].tokens[1], lines[0].number);  // edge count, advisory
        if (declared_n < 1) fail(lines[0].number, "node count must be positive");
        start = 1;
    }
    std::vector<Edge> edges;
    int max_id = -1;
    for (std::size_t i = start; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.tokens.size() != 3) fail(line.number, "expected 'u v w'");
        long long u = parse_int(line.tokens[0], line.number);
        long long v = parse_int(line.tokens[1], line.number);
        double w = parse_real(line.tokens[2], line.number);
        if (u < 0 || v < 0) fail(line.number, "node ids must be nonnegative");
        if (w < 0.0)
            throw NegativeWeight("line " + std::to_string(line.number) +
                                 ": negative edge weight " + line.tokens[2]);
        max_id = std::max<long long>(max_id, std::max(u, v));
        edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), w});
    }
    int n = declared_n > 0 ? declared_n : max_id + 1;
    if (n < 1) throw ParseError("line 1: no nodes");
    if (max_id >= n) fail(lines[0].number, "edge endpoint exceeds declared node count");
    return Graph(n, std::move(edges));
}

hardness::SignedGraph parse_signed_edge_list(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError("line 1: empty edge list");
    std::size_t start = 0;
    int declared_n = -1;
    if (lines[0].tokens.size() == 2) {
        declared_n = static_cast<int>(parse_int(lines[0].tokens[0], lines[0].number));
        parse_int(lines[0].tokens[1], lines[0].number);
        start = 1;
    }
    std::vector<hardness::SignedEdge> edges;
    int max_id = -1;
    for (std::size_t i = start; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.tokens.size() != 3) fail(line.number, "expected 'u v w'");
        long long u = parse_int(line.tokens[0], line.number);
        long long v = parse_int(line.tokens[1], line.number);
        long long w = parse_int(line.tokens[2], line.number);
        if (u < 0 || v < 0) fail(line.number, "node ids must be nonnegative");
        max_id = std::max<long long>(max_id, std::max(u, v));
        edges.push_back({static_cast<NodeId>(u), static_cast<NodeId>(v), w});
    }
    int n = declared_n > 0 ? declared_n : max_id + 1;
    if (n < 1) throw ParseError("line 1: no nodes");
    return hardness::SignedGraph(n, std::move(edges));
}

PointSet parse_points(const std::string& text) {
    // Matrix mode is detected from the first non-comment line.
    std::istringstream probe(text);
    std::string raw;
    bool matrix_mode = false;
    while (std::getline(probe, raw)) {
        if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
        std::istringstream ls(raw);
        std::string first;
        if (ls >> first) {
            matrix_mode = (first == "matrix");
            break;
        }
    }
    if (matrix_mode) {
        auto lines = tokenize(text);
        if (lines[0].tokens.size() != 2 || lines[0].tokens[0] != "matrix")
            fail(lines[0].number, "expected 'matrix n'");
        int n = static_cast<int>(parse_int(lines[0].tokens[1], lines[0].number));
        if (n < 1) fail(lines[0].number, "matrix size must be positive");
        if (lines.size() != static_cast<std::size_t>(n) + 1)
            throw ParseError("line " + std::to_string(lines.back().number) + ": expected " +
                             std::to_string(n) + " matrix rows");
        std::vector<double> m;
        m.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const auto& line = lines[static_cast<std::size_t>(i) + 1];
            if (static_cast<int>(line.tokens.size()) != n)
                fail(line.number, "expected " + std::to_string(n) + " entries");
            for (const auto& tok : line.tokens) m.push_back(parse_real(tok, line.number));
        }
        return PointSet::from_matrix(n, std::move(m));
    }

    std::istringstream stream(text);
    std::vector<double> coords;
    int dim = -1;
    int number = 0;
    while (std::getline(stream, raw)) {
        ++number;
        if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
        if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto fields = split_csv(raw);
        if (dim < 0)
            dim = static_cast<int>(fields.size());
        else if (static_cast<int>(fields.size()) != dim)
            fail(number, "inconsistent coordinate dimension");
        for (const auto& f : fields) coords.push_back(parse_real(f, number));
    }
    if (dim <= 0) throw ParseError("line 1: no points");
    return PointSet::from_coordinates(dim, std::move(coords));
}

WeightedSample parse_sample(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty() || lines[0].tokens.size() != 4 || lines[0].tokens[0] != "sample")
        throw ParseError("line 1: expected header 'sample k seed n'");
    WeightedSample s;
    s.k = parse_real(lines[0].tokens[1], lines[0].number);
    s.seed = static_cast<std::uint64_t>(parse_int(lines[0].tokens[2], lines[0].number));
    int n = static_cast<int>(parse_int(lines[0].tokens[3], lines[0].number));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.tokens.size() != 2) fail(line.number, "expected 'v p'");
        long long v = parse_int(line.tokens[0], line.number);
        double p = parse_real(line.tokens[1], line.number);
        if (v < 0 || v >= n) fail(line.number, "node id out of range");
        if (!(p > 0.0 && p <= 1.0)) fail(line.number, "probability must be in (0,1]");
        s.entries.push_back({static_cast<NodeId>(v), p});
    }
    return s;
}

std::string serialize_edge_list(const Graph& g) {
    std::string out = std::to_string(g.size()) + " " + std::to_string(g.edges().size()) + "\n";
    for (const auto& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + format_double(e.w) + "\n";
    return out;
}

std::string serialize_points(const PointSet& p) {
    std::string out;
    if (p.mode() == PointSet::Mode::Matrix) {
        out = "matrix " + std::to_string(p.size()) + "\n";
        for (int i = 0; i < p.size(); ++i) {
            for (int j = 0; j < p.size(); ++j) {
                if (j) out += " ";
                out += format_double(p.data()[static_cast<std::size_t>(i) * p.size() + j]);
            }
            out += "\n";
        }
    } else {
        for (int i = 0; i < p.size(); ++i) {
            for (int d = 0; d < p.dim(); ++d) {
                if (d) out += ",";
                out += format_double(p.data()[static_cast<std::size_t>(i) * p.dim() + d]);
            }
            out += "\n";
        }
    }
    return out;
}

std::string serialize_sample(const WeightedSample& s, int n) {
    std::string out = "sample " + format_double(s.k) + " " + std::to_string(s.seed) + " " +
                      std::to_string(n) + "\n";
    for (const auto& e : s.entries)
        out += std::to_string(e.v) + " " + format_double(e.p) + "\n";
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

}  // namespace io
}  // namespace distsketch
