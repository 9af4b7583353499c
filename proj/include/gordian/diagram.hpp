#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gordian {

class DiagramError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One crossing of a PD code. x lists the edge labels starting with the
// incoming under-strand and then going counterclockwise, so the under
// strand runs x[0] -> x[2] and the over strand joins x[1] and x[3].
struct Crossing {
    int id = 0;
    std::array<int, 4> x{};
    int sign = 0;
    int over_in = 0;  // port (1 or 3) where the over strand enters

    bool operator==(const Crossing&) const = default;
};

class Diagram {
public:
    // The crossingless one-component diagram.
    Diagram() = default;

    // Validates and derives orientation, signs and components. free_loops
    // counts crossingless components. Throws DiagramError.
    Diagram(std::vector<Crossing> crossings, int free_loops);

    static Diagram unknot() { return Diagram{}; }
    static Diagram unlink(int components);

    const std::vector<Crossing>& crossings() const { return crossings_; }
    const Crossing& crossing(int id) const;
    bool has_crossing(int id) const;
    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int free_loops() const { return free_loops_; }
    int component_count() const { return orbit_count_ + free_loops_; }
    int max_id() const;

    // Edge labels in increasing order.
    std::vector<int> labels() const;
    bool has_label(int label) const { return succ_.count(label) != 0; }
    int successor(int label) const;
    int predecessor(int label) const;
    // Component index of an edge; components are ordered by their smallest label.
    int component_of(int label) const;

    // Where an edge ends: the crossing it enters and the port index.
    std::pair<int, int> head(int label) const;
    std::pair<int, int> tail(int label) const;

    bool operator==(const Diagram& o) const {
        return crossings_ == o.crossings_ && free_loops_ == o.free_loops_;
    }

private:
    void derive();

    std::vector<Crossing> crossings_;
    int free_loops_ = 1;
    int orbit_count_ = 0;
    std::map<int, int> succ_;
    std::map<int, int> pred_;
    std::map<int, int> comp_;
    std::map<int, std::pair<int, int>> head_;  // label -> (crossing index, port)
    std::map<int, std::pair<int, int>> tail_;
};

struct GaussVisit {
    int crossing = 0;
    bool over = false;
    int sign = 0;

    bool operator==(const GaussVisit&) const = default;
};

struct GaussCode {
    std::vector<std::vector<GaussVisit>> components;
    int basepoint = 0;

    bool operator==(const GaussCode&) const = default;
};

struct MarkedDiagram {
    Diagram diagram;
    int mark_a = 0;
    int mark_b = 0;
    std::optional<int> mark_c;

    void validate() const;
};

Diagram parse_pd(const std::string& text);
std::string emit_pd(const Diagram& d);

GaussCode to_gauss_code(const Diagram& d, int basepoint);
GaussCode to_gauss_code(const Diagram& d);
std::string emit_gauss(const GaussCode& g);
GaussCode parse_gauss(const std::string& text);
// Rebuilds the planar diagram of a signed Gauss code. Throws if the code is
// not realizable in the plane.
Diagram from_gauss_code(const GaussCode& g);

std::map<int, int> component_labels(const Diagram& d);

// Removes Reidemeister I kinks and Reidemeister II bigons until none remain.
Diagram simplify(const Diagram& d);

// The same crossing with over and under exchanged; the sign flips.
Crossing flip_crossing(const Crossing& c);

// Mirror image: every crossing changed.
Diagram mirror(const Diagram& d);

// Crossing ids become 1..c in their current order.
Diagram renumber_ids(const Diagram& d);

struct TableEntry {
    std::string name;
    std::string pd;
    int row = 0;
    // Optional expected values, as written: key -> value text.
    std::map<std::string, std::string> expected;
};

// Rows "name,pd_text". A quoted pd_text may be followed by expectations
// ",key=value" such as a2=1, v3=-1 or conway=1 0 1. Blank lines and lines
// starting with '#' are skipped, as is a leading "name,..." header.
std::vector<TableEntry> read_knot_table(const std::string& csv_text);

}  // namespace gordian
