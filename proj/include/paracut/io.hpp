#pragma once

// Input and output formats.
//
// Graph files are line oriented; '#' starts a comment, blank lines are
// skipped, and the node-count directive must come first:
//
//     nodes 4
//     node 2 3/2          # optional node weight, default 1
//     edge 1 2 5          # numerator weight w, denominator weight w' = w
//     edge 2 3 5 1/4      # explicit w'
//
// Images are PGM, text (P2) or binary (P5), up to 16-bit samples.
// grid_graph() turns an image into a lattice whose edge weights are the
// quantized Gaussian similarity of the endpoint intensities, and
// mask_image() renders a node set back into a black-and-white image.

#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "paracut/ratio_solver.hpp"

namespace paracut {

inline WeightedGraph parse_graph(std::istream& in) {
    WeightedGraph g;
    bool have_nodes = false;
    std::vector<bool> node_seen;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream line(raw);
        std::string word;
        if (!(line >> word)) continue;

        auto fail = [&](const std::string& what) -> void { throw ParseError(what, line_no); };
        auto next_int = [&](const char* what) {
            std::string tok;
            if (!(line >> tok)) fail(std::string("missing ") + what);
            try {
                size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                return v;
            } catch (const std::exception&) {
                fail(std::string("bad ") + what + " '" + tok + "'");
            }
            return 0;  // unreachable
        };
        auto next_rational = [&](const char* what) {
            std::string tok;
            if (!(line >> tok)) fail(std::string("missing ") + what);
            auto r = Rational::try_parse(tok);
            if (!r) fail(std::string("bad ") + what + " '" + tok + "'");
            return *r;
        };
        auto check_done = [&]() {
            std::string extra;
            if (line >> extra) fail("unexpected token '" + extra + "'");
        };

        if (word == "nodes") {
            if (have_nodes) fail("duplicate nodes directive");
            int n = next_int("node count");
            check_done();
            if (n < 1) fail("node count must be at least 1");
            g = make_graph(n);
            node_seen.assign(static_cast<size_t>(n) + 1, false);
            have_nodes = true;
        } else if (word == "node") {
            if (!have_nodes) fail("node line before nodes directive");
            int id = next_int("node id");
            Rational weight = next_rational("node weight");
            check_done();
            if (id < 1 || id > g.node_count) fail("node id out of range");
            if (node_seen[static_cast<size_t>(id)]) fail("duplicate node line");
            node_seen[static_cast<size_t>(id)] = true;
            g.node_weights[static_cast<size_t>(id)] = weight;
        } else if (word == "edge") {
            if (!have_nodes) fail("edge line before nodes directive");
            int i = next_int("edge endpoint");
            int j = next_int("edge endpoint");
            Rational w = next_rational("edge weight");
            Rational wp = w;
            std::string tok;
            if (line >> tok) {
                auto r = Rational::try_parse(tok);
                if (!r) fail("bad denominator weight '" + tok + "'");
                wp = *r;
                check_done();
            }
            if (i < 1 || i > g.node_count || j < 1 || j > g.node_count)
                fail("edge endpoint out of range");
            if (i == j) fail("self loops are not allowed");
            if (w < 0 || wp < 0) fail("edge weights must be nonnegative");
            if (find_edge(g, i, j) >= 0) fail("duplicate edge");
            add_edge(g, i, j, std::move(w), std::move(wp));
        } else {
            fail("unknown directive '" + word + "'");
        }
    }
    if (!have_nodes) throw ParseError("graph file has no nodes directive");
    return g;
}

inline WeightedGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file '" + path + "'");
    return parse_graph(in);
}

inline void format_graph(const WeightedGraph& g, std::ostream& out) {
    out << "nodes " << g.node_count << "\n";
    for (int v = 1; v <= g.node_count; ++v)
        if (g.node_weights[static_cast<size_t>(v)] != 1)
            out << "node " << v << " " << g.node_weights[static_cast<size_t>(v)].str() << "\n";
    for (const Edge& e : g.edges) {
        out << "edge " << e.i << " " << e.j << " " << e.w.str();
        if (e.w_prime != e.w) out << " " << e.w_prime.str();
        out << "\n";
    }
}

struct GrayImage {
    int width = 0, height = 0;
    int maxval = 255;
    std::vector<int> pixels;  // row-major, top to bottom

    int at(int r, int c) const { return pixels[static_cast<size_t>(r) * width + c]; }
    int& at(int r, int c) { return pixels[static_cast<size_t>(r) * width + c]; }
};

namespace detail {
// Header fields may be separated by whitespace and '#' comments.
inline int pgm_header_int(std::istream& in, const char* what) {
    for (;;) {
        int c = in.peek();
        if (c == '#') {
            std::string comment;
            std::getline(in, comment);
        } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            in.get();
        } else {
            break;
        }
    }
    int value = 0;
    if (!(in >> value)) throw ParseError(std::string("image header: missing ") + what);
    return value;
}
}  // namespace detail

inline GrayImage parse_pgm(std::istream& in) {
    char p = 0, kind = 0;
    in >> p >> kind;
    if (p != 'P' || (kind != '2' && kind != '5')) throw ParseError("not a P2/P5 PGM image");
    GrayImage img;
    img.width = detail::pgm_header_int(in, "width");
    img.height = detail::pgm_header_int(in, "height");
    img.maxval = detail::pgm_header_int(in, "maxval");
    if (img.width < 1 || img.height < 1) throw ParseError("image dimensions must be positive");
    if (img.maxval < 1 || img.maxval > 65535) throw ParseError("image maxval out of range");
    size_t count = static_cast<size_t>(img.width) * static_cast<size_t>(img.height);
    img.pixels.resize(count);
    if (kind == '2') {
        for (size_t k = 0; k < count; ++k)
            if (!(in >> img.pixels[k])) throw ParseError("image data ends early");
    } else {
        in.get();  // single whitespace after maxval
        bool wide = img.maxval > 255;
        for (size_t k = 0; k < count; ++k) {
            int hi = wide ? in.get() : 0;
            int lo = in.get();
            if (lo < 0 || (wide && hi < 0)) throw ParseError("image data ends early");
            img.pixels[k] = wide ? (hi << 8) | lo : lo;
        }
    }
    for (int v : img.pixels)
        if (v < 0 || v > img.maxval) throw ParseError("pixel value exceeds maxval");
    return img;
}

inline GrayImage load_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open image file '" + path + "'");
    return parse_pgm(in);
}

inline void write_pgm(const GrayImage& img, std::ostream& out) {
    out << "P5\n" << img.width << " " << img.height << "\n" << img.maxval << "\n";
    bool wide = img.maxval > 255;
    for (int v : img.pixels) {
        if (wide) out.put(static_cast<char>((v >> 8) & 0xff));
        out.put(static_cast<char>(v & 0xff));
    }
}

inline void save_pgm(const GrayImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open output file '" + path + "'");
    write_pgm(img, out);
}

// Pixel (row, col) becomes node row*width + col + 1.
inline int grid_node(const GrayImage& img, int r, int c) { return r * img.width + c + 1; }

// Lattice graph over the pixels with unit node weights.  Edge weights are
// exp(-(dI/sigma)^2) for the intensity difference dI, rounded to the nearest
// multiple of 2^-16 so they stay exact rationals; both weight roles get the
// same value.  `neighborhood` is 4 (axis neighbors) or 8 (plus diagonals).
inline WeightedGraph grid_graph(const GrayImage& img, const Rational& sigma,
                                int neighborhood = 4) {
    if (!(sigma > 0)) throw ParseError("sigma must be positive");
    if (neighborhood != 4 && neighborhood != 8) throw ParseError("neighborhood must be 4 or 8");
    WeightedGraph g = make_graph(img.width * img.height);
    double s = sigma.to_double();
    auto weight = [&](int a, int b) {
        double d = (a - b) / s;
        long long k = std::llround(std::exp(-d * d) * 65536.0);
        if (k < 0) k = 0;
        if (k > 65536) k = 65536;
        return Rational(BigInt(k), BigInt(65536));
    };
    auto join = [&](int r0, int c0, int r1, int c1) {
        add_edge(g, grid_node(img, r0, c0), grid_node(img, r1, c1),
                 weight(img.at(r0, c0), img.at(r1, c1)));
    };
    for (int r = 0; r < img.height; ++r)
        for (int c = 0; c < img.width; ++c) {
            if (c + 1 < img.width) join(r, c, r, c + 1);
            if (r + 1 < img.height) join(r, c, r + 1, c);
            if (neighborhood == 8 && r + 1 < img.height) {
                if (c + 1 < img.width) join(r, c, r + 1, c + 1);
                if (c > 0) join(r, c, r + 1, c - 1);
            }
        }
    return g;
}

// White where the node is in the set, black elsewhere.
inline GrayImage mask_image(const NodeSet& set, int width, int height) {
    GrayImage img;
    img.width = width;
    img.height = height;
    img.maxval = 255;
    img.pixels.assign(static_cast<size_t>(width) * static_cast<size_t>(height), 0);
    for (size_t k = 0; k < img.pixels.size(); ++k)
        if (set.test(k + 1)) img.pixels[k] = 255;
    return img;
}

// One row per piece, ascending lambda; `lambda` is the piece's lower end,
// `ratio` is empty when the piece's set has no defined ratio.
inline void write_nested_csv(const NestedSolutions& nested, std::ostream& out) {
    out << "lambda,set_size,ratio,members\n";
    for (const NestedPiece& piece : nested.pieces) {
        out << piece.lambda_lo.str() << "," << piece.set.count() << ",";
        if (piece.den > 0) out << (piece.num / piece.den).str();
        out << ",";
        bool first = true;
        for (int v : set_members(piece.set)) {
            if (!first) out << " ";
            out << v;
            first = false;
        }
        out << "\n";
    }
}

}  // namespace paracut
