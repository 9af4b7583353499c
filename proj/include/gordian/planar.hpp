#pragma once

#include <array>
#include <compare>
#include <vector>

#include "gordian/diagram.hpp"

namespace gordian {

// Half-edge: slot s of vertex v.
struct Dart {
    int v = -1;
    int s = -1;

    auto operator<=>(const Dart&) const = default;
    bool valid() const { return v >= 0; }
};

// A vertex is a 4-valent crossing or a 2-valent bead. Slots are in
// counterclockwise order. Beads only subdivide edges; a free loop is a bead
// whose two slots are joined to each other.
struct Vertex {
    int deg = 4;
    std::array<Dart, 4> adj{};
    std::array<int, 4> dir{};  // +1 strand leaves through the slot, -1 enters, 0 unknown
    int over = 1;              // slots over and over+2 carry the over strand
    int id = 0;                // crossing id, 0 for beads
    bool alive = true;
};

class PlanarGraph {
public:
    static PlanarGraph from_diagram(const Diagram& d);
    // Drops beads, orients every component (using dir hints where present)
    // and labels edges along the orientation.
    // labels, if given, receives the edge label at every crossing slot.
    Diagram to_diagram(std::vector<std::array<int, 4>>* labels = nullptr) const;

    int add_crossing(int id, int over);
    int add_bead();
    void link(Dart a, Dart b);
    void kill(int v) { vs[v].alive = false; }

    Dart partner(Dart a) const { return vs[a.v].adj[a.s]; }
    int degree(int v) const { return vs[v].deg; }
    // Slot on the far side of the vertex along the same strand.
    int opposite(Dart a) const { return vs[a.v].deg == 4 ? (a.s + 2) % 4 : 1 - a.s; }
    // The dart leaving the next vertex when walking out through a.
    Dart strand_next(Dart out) const {
        Dart in = partner(out);
        return {in.v, opposite(in)};
    }
    // Face walk: leaving through a, the face on the left continues here.
    Dart face_next(Dart out) const {
        Dart in = partner(out);
        int dg = vs[in.v].deg;
        return {in.v, (in.s + dg - 1) % dg};
    }

    int vertex_of(int crossing_id) const;
    int max_id() const;
    bool over_at(Dart a) const { return vs[a.v].deg == 4 && (a.s % 2) == (vs[a.v].over % 2); }

    // Face id of every dart (the face on the left of the dart).
    std::vector<std::array<int, 4>> face_ids(int* face_count = nullptr) const;

    // Subdivides the edge that leaves through a; returns the bead. Slot 0 of
    // the bead faces a.
    int subdivide(Dart a);

    // Replaces the disk holding the vertices `inside` by a tangle. boundary
    // lists the inside darts where the diagram crosses the disk boundary, in
    // counterclockwise order. ends[i] says what boundary point i connects to
    // inside the new tangle, whose vertices must already be in the graph.
    struct TangleEnd {
        Dart dart{};  // open slot of a tangle vertex, or
        int to = -1;  // another boundary index joined by a plain arc
    };
    void replace_disk(const std::vector<int>& inside, const std::vector<Dart>& boundary,
                      const std::vector<TangleEnd>& ends);

    std::vector<Vertex> vs;
};

}  // namespace gordian
