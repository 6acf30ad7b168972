#include "tnet/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace tnet::io {

namespace {

bool data_line(const std::string& line, std::string& out) {
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') return false;
    std::size_t e = line.find_last_not_of(" \t\r");
    out = line.substr(b, e - b + 1);
    return true;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": expected " +
                                    what + ", got \"" + tok + "\"");
    }
}

}  // namespace

TNet parse_tnet(std::istream& in) {
    std::string line, data;
    int line_no = 0;
    int m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        if (!data_line(line, data)) continue;
        std::istringstream ls(data);
        if (m < 0) {
            std::string tok;
            ls >> tok;
            m = parse_int(tok, line_no, "the node count m");
            std::string extra;
            if (ls >> extra)
                throw std::invalid_argument("line " + std::to_string(line_no) +
                                            ": trailing token \"" + extra + "\"");
            if (m < 1) throw std::invalid_argument("line " + std::to_string(line_no) +
                                                   ": m must be >= 1");
            continue;
        }
        std::string t, h, extra;
        if (!(ls >> t >> h) || (ls >> extra))
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": expected \"tail head\"");
        edges.emplace_back(parse_int(t, line_no, "a tail node id"),
                           parse_int(h, line_no, "a head node id"));
        if (static_cast<int>(edges.size()) > 2 * m)
            throw std::invalid_argument("line " + std::to_string(line_no) + ": more than " +
                                        std::to_string(2 * m) + " edges");
    }
    if (m < 0) throw std::invalid_argument("empty input: missing the node count m");
    if (static_cast<int>(edges.size()) != 2 * m)
        throw std::invalid_argument("expected " + std::to_string(2 * m) + " edges, got " +
                                    std::to_string(edges.size()));
    return core::validate_tnet(m, edges);
}

TNet parse_tnet(const std::string& text) {
    std::istringstream is(text);
    return parse_tnet(is);
}

TNet load_tnet(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open " + path);
    return parse_tnet(f);
}

std::string format_tnet(const TNet& n) {
    std::ostringstream os;
    os << n.m << "\n";
    for (int e = 0; e < n.edge_count(); ++e) os << n.tail[e] << " " << n.head[e] << "\n";
    return os.str();
}

EulerCycle parse_cycle(const std::string& line) {
    std::istringstream ls(line);
    EulerCycle c;
    std::string tok;
    while (ls >> tok) c.ids.push_back(parse_int(tok, 1, "an edge id"));
    if (c.ids.empty()) throw std::invalid_argument("empty cycle line");
    return c;
}

std::string format_cycle(const EulerCycle& c) {
    std::ostringstream os;
    for (std::size_t j = 0; j < c.ids.size(); ++j) {
        if (j) os << " ";
        os << c.ids[j];
    }
    return os.str();
}

}  // namespace tnet::io
