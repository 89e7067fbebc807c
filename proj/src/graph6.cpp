#include "mf/graph6.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace mf {

namespace {

// Printable range used by the formats: bytes 63..126 encode 6-bit groups.
constexpr int kBias = 63;

struct BitReader {
    std::string_view data;
    size_t pos;        // next byte
    int bit = 0;       // next bit within the current byte, 0 = MSB of the 6

    size_t bits_left() const { return (data.size() - pos) * 6 - bit; }

    int read_bit() {
        if (pos >= data.size()) throw ParseError("truncated payload", pos);
        unsigned char c = static_cast<unsigned char>(data[pos]);
        if (c < kBias || c > 126) throw ParseError("byte outside graph6 alphabet", pos);
        int v = ((c - kBias) >> (5 - bit)) & 1;
        if (++bit == 6) {
            bit = 0;
            ++pos;
        }
        return v;
    }

    long read_bits(int k) {
        long v = 0;
        for (int i = 0; i < k; ++i) v = (v << 1) | read_bit();
        return v;
    }
};

long read_number(std::string_view s, size_t& pos) {
    if (pos >= s.size()) throw ParseError("truncated: missing vertex count", pos);
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < kBias || c > 126) throw ParseError("malformed header byte", pos);
    if (c != 126) {
        ++pos;
        return c - kBias;
    }
    ++pos;
    int groups = 3;
    if (pos < s.size() && static_cast<unsigned char>(s[pos]) == 126) {
        ++pos;
        groups = 6;
    }
    long n = 0;
    for (int i = 0; i < groups; ++i, ++pos) {
        if (pos >= s.size()) throw ParseError("truncated vertex count", pos);
        unsigned char b = static_cast<unsigned char>(s[pos]);
        if (b < kBias || b > 126) throw ParseError("malformed vertex count byte", pos);
        n = (n << 6) | (b - kBias);
    }
    return n;
}

void append_number(std::string& out, long n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(126));
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
}

int bits_for(long n) {  // number of bits needed to write n in binary, >= 1
    int k = 1;
    while ((1L << k) < n + 1) ++k;
    return k;
}

Multigraph parse_plain_graph6(std::string_view s, size_t base) {
    size_t pos = 0;
    long n = read_number(s, pos);
    BitReader r{s, pos};
    std::vector<std::pair<int, int>> edges;
    try {
        for (long j = 1; j < n; ++j)
            for (long i = 0; i < j; ++i)
                if (r.read_bit())
                    edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    } catch (const ParseError& e) {
        throw ParseError("truncated graph6 payload", base + e.offset());
    }
    // Remaining bits of the last byte must be zero padding.
    while (r.bits_left() > 0)
        if (r.read_bit()) throw ParseError("nonzero padding bits", base + r.pos);
    return Multigraph(static_cast<int>(n), edges);
}

Multigraph parse_sparse6(std::string_view s, size_t base) {
    size_t pos = 0;
    long n = read_number(s, pos);
    std::vector<std::pair<int, int>> edges;
    if (n > 1) {
        int k = bits_for(n - 1);
        BitReader r{s, pos};
        long v = 0;
        while (r.bits_left() >= static_cast<size_t>(k) + 1) {
            int b = r.read_bit();
            long x = r.read_bits(k);
            if (b) ++v;
            if (v >= n || x >= n) break;  // padding
            if (x > v) {
                v = x;
            } else {
                if (x == v)
                    throw ParseError("self-loop in sparse6 input rejected", base + r.pos);
                edges.push_back({static_cast<int>(x), static_cast<int>(v)});
            }
        }
    }
    return Multigraph(static_cast<int>(n), edges);
}

bool strip_prefix(std::string_view& s, std::string_view prefix) {
    if (s.substr(0, prefix.size()) == prefix) {
        s.remove_prefix(prefix.size());
        return true;
    }
    return false;
}

}  // namespace

Multigraph parse_graph6(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw ParseError("truncated: empty input", 0);
    size_t base = text.size() - s.size();  // zero; offsets count from the start
    (void)base;
    size_t skipped = 0;
    if (strip_prefix(s, ">>graph6<<")) skipped = 10;
    else if (strip_prefix(s, ">>sparse6<<")) skipped = 11;
    if (s.empty()) throw ParseError("truncated: header only", skipped);
    if (s.front() == ':') {
        s.remove_prefix(1);
        return parse_sparse6(s, skipped + 1);
    }
    return parse_plain_graph6(s, skipped);
}

std::string emit_graph6(const Multigraph& g) {
    if (g.has_parallel_edges())
        throw std::invalid_argument("graph6 cannot encode parallel edges; use emit_sparse6");
    long n = g.vertex_count();
    std::string out;
    append_number(out, n);
    std::vector<char> adj(static_cast<size_t>(n) * n, 0);
    for (auto [u, v] : g.edge_pairs()) {
        adj[static_cast<size_t>(u) * n + v] = 1;
        adj[static_cast<size_t>(v) * n + u] = 1;
    }
    int acc = 0, nbits = 0;
    for (long j = 1; j < n; ++j)
        for (long i = 0; i < j; ++i) {
            acc = (acc << 1) | adj[static_cast<size_t>(i) * n + j];
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
    return out;
}

std::string emit_sparse6(const Multigraph& g) {
    long n = g.vertex_count();
    std::string out = ":";
    append_number(out, n);
    std::vector<int> bits;
    if (n > 1) {
        int k = bits_for(n - 1);
        // Edges sorted by (max endpoint, min endpoint).
        std::vector<std::pair<int, int>> es;
        for (auto [u, v] : g.edge_pairs()) es.push_back({std::max(u, v), std::min(u, v)});
        std::sort(es.begin(), es.end());
        long v = 0;
        auto push_group = [&](int b, long x) {
            bits.push_back(b);
            for (int i = k - 1; i >= 0; --i) bits.push_back(static_cast<int>((x >> i) & 1));
        };
        for (auto [hi, lo] : es) {
            if (hi == v) {
                push_group(0, lo);
            } else if (hi == v + 1) {
                ++v;
                push_group(1, lo);
            } else {
                v = hi;
                push_group(0, hi);
                push_group(0, lo);
            }
        }
        // Pad to a byte boundary with 1-bits; when n is a power of two and
        // k or more padding bits are needed while the current vertex is not
        // yet n-1, lead with a single 0 so the padding cannot decode as an
        // edge.
        int pad = static_cast<int>((6 - bits.size() % 6) % 6);
        if (k < 6 && n == (1L << k) && pad >= k && v < n - 1) bits.push_back(0);
        while (bits.size() % 6 != 0) bits.push_back(1);
    }
    for (size_t i = 0; i < bits.size(); i += 6) {
        int acc = 0;
        for (int j = 0; j < 6; ++j) acc = (acc << 1) | bits[i + j];
        out.push_back(static_cast<char>(acc + kBias));
    }
    return out;
}

Multigraph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    long n = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long a, b;
        if (!(ls >> a)) continue;  // blank
        if (!(ls >> b)) {
            if (n < 0 && edges.empty()) {
                n = a;  // leading single integer = vertex count
                continue;
            }
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": expected \"u v\"");
        }
        edges.push_back({static_cast<int>(a), static_cast<int>(b)});
    }
    if (n < 0) {
        n = 0;
        for (auto [u, v] : edges) n = std::max({n, static_cast<long>(u) + 1,
                                                static_cast<long>(v) + 1});
    }
    return Multigraph(static_cast<int>(n), edges);
}

namespace {

bool looks_like_graph6_line(const std::string& line) {
    if (line.empty()) return false;
    if (line[0] == ':' || line[0] == '>') return true;
    for (unsigned char c : line)
        if (c < kBias || c > 126) return false;
    return true;
}

}  // namespace

std::vector<CatalogueEntry> read_catalogue_text(std::string_view content) {
    // The first content line decides the mode: graph6/sparse6 lines, or one
    // whole-file edge list. In line mode a malformed line is an error, not a
    // format switch.
    std::vector<CatalogueEntry> out;
    std::istringstream in{std::string(content)};
    std::string line;
    int lineno = 0;
    int mode = 0;  // 0 undecided, 1 graph6 lines, 2 edge list
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (mode == 0) mode = looks_like_graph6_line(line) ? 1 : 2;
        if (mode == 2) break;
        try {
            out.push_back({parse_graph6(line), lineno, line});
        } catch (const std::exception& e) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (mode == 2) out.push_back({parse_edge_list(content), 1, "edge-list"});
    return out;
}

std::vector<CatalogueEntry> read_catalogue_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return read_catalogue_text(buf.str());
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

}  // namespace mf
