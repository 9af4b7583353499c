#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gordian/diagram.hpp"

namespace gordian::testing {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::vector<TableEntry> knot_fixtures() {
    return read_knot_table(read_file(std::string(GORDIAN_DATA_DIR) + "/fixtures.csv"));
}

inline std::vector<TableEntry> marked_fixtures() {
    return read_knot_table(read_file(std::string(GORDIAN_DATA_DIR) + "/marked.csv"));
}

inline MarkedDiagram marked_of(const TableEntry& e) {
    MarkedDiagram m;
    m.diagram = parse_pd(e.pd);
    m.mark_a = std::stoi(e.expected.at("mark_a"));
    m.mark_b = std::stoi(e.expected.at("mark_b"));
    return m;
}

inline std::vector<std::int64_t> coefficients_of(const std::string& text) {
    std::vector<std::int64_t> out;
    std::istringstream is(text);
    for (std::int64_t v; is >> v;) out.push_back(v);
    return out;
}

// Every diagram of both tables.
inline std::vector<Diagram> corpus() {
    std::vector<Diagram> out;
    for (const auto& e : knot_fixtures()) out.push_back(parse_pd(e.pd));
    for (const auto& e : marked_fixtures()) out.push_back(parse_pd(e.pd));
    return out;
}

}  // namespace gordian::testing
