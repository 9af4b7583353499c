#pragma once

#include <vector>

#include "gordian/planar.hpp"

namespace gordian {

// Builds a tangle top to bottom inside a PlanarGraph. Positions are counted
// from the left; the tangle starts with `top` strands hanging from the top
// boundary and whatever is left open at the end reaches the bottom boundary.
class TangleBuilder {
public:
    TangleBuilder(PlanarGraph& g, int top, int first_id);

    // Crossing between positions p and p+1; id 0 takes the next fresh id.
    int cross(int p, bool left_over, int id = 0);
    // Current open slot at each position (invalid for untouched top strands).
    std::vector<Dart> open_darts() const;
    // New arc whose two ends sit at positions p and p+1.
    void cup(int p);
    // Joins positions p and p+1.
    void cap(int p);

    int width() const { return static_cast<int>(cur_.size()); }
    int next_id() const { return next_id_; }
    const std::vector<int>& vertices() const { return vertices_; }

    // Ends for PlanarGraph::replace_disk, in counterclockwise boundary order:
    // top points right to left, then bottom points left to right.
    std::vector<PlanarGraph::TangleEnd> finish();

private:
    struct Open {
        Dart dart{};
        int boundary = -1;
    };
    void attach(const Open& o, Dart d);

    PlanarGraph& g_;
    int top_;
    int next_id_;
    std::vector<Open> cur_;
    std::vector<PlanarGraph::TangleEnd> top_ends_;
    std::vector<int> top_pair_;
    std::vector<int> vertices_;
};

}  // namespace gordian
