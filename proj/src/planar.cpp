#include "gordian/planar.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gordian {

PlanarGraph PlanarGraph::from_diagram(const Diagram& d) {
    PlanarGraph g;
    std::map<int, std::vector<Dart>> occ;
    for (const auto& c : d.crossings()) {
        int v = g.add_crossing(c.id, 1);
        auto& vx = g.vs[v];
        vx.dir = {-1, 0, 1, 0};
        vx.dir[c.over_in] = -1;
        vx.dir[c.over_in ^ 2] = 1;
        for (int p = 0; p < 4; ++p) occ[c.x[p]].push_back({v, p});
    }
    for (const auto& [label, w] : occ) g.link(w[0], w[1]);
    for (int k = 0; k < d.free_loops(); ++k) {
        int b = g.add_bead();
        g.link({b, 0}, {b, 1});
        g.vs[b].dir = {1, -1, 0, 0};
    }
    return g;
}

int PlanarGraph::add_crossing(int id, int over) {
    Vertex v;
    v.deg = 4;
    v.id = id;
    v.over = over % 2;
    vs.push_back(v);
    return static_cast<int>(vs.size()) - 1;
}

int PlanarGraph::add_bead() {
    Vertex v;
    v.deg = 2;
    v.id = 0;
    vs.push_back(v);
    return static_cast<int>(vs.size()) - 1;
}

void PlanarGraph::link(Dart a, Dart b) {
    vs[a.v].adj[a.s] = b;
    vs[b.v].adj[b.s] = a;
}

int PlanarGraph::vertex_of(int crossing_id) const {
    for (int v = 0; v < static_cast<int>(vs.size()); ++v)
        if (vs[v].alive && vs[v].deg == 4 && vs[v].id == crossing_id) return v;
    return -1;
}

int PlanarGraph::max_id() const {
    int m = 0;
    for (const auto& v : vs)
        if (v.alive) m = std::max(m, v.id);
    return m;
}

std::vector<std::array<int, 4>> PlanarGraph::face_ids(int* face_count) const {
    std::vector<std::array<int, 4>> f(vs.size(), std::array<int, 4>{-1, -1, -1, -1});
    int count = 0;
    for (int v = 0; v < static_cast<int>(vs.size()); ++v) {
        if (!vs[v].alive) continue;
        for (int s = 0; s < vs[v].deg; ++s) {
            if (f[v][s] >= 0) continue;
            Dart d{v, s};
            while (f[d.v][d.s] < 0) {
                f[d.v][d.s] = count;
                d = face_next(d);
            }
            ++count;
        }
    }
    if (face_count) *face_count = count;
    return f;
}

int PlanarGraph::subdivide(Dart a) {
    Dart b = partner(a);
    int bead = add_bead();
    link(a, {bead, 0});
    link({bead, 1}, b);
    int da = vs[a.v].dir[a.s];
    vs[bead].dir = {-da, da, 0, 0};
    return bead;
}

void PlanarGraph::replace_disk(const std::vector<int>& inside, const std::vector<Dart>& boundary,
                               const std::vector<TangleEnd>& ends) {
    const int m = static_cast<int>(boundary.size());
    std::set<int> in(inside.begin(), inside.end());
    std::map<Dart, int> index;
    for (int j = 0; j < m; ++j) index[boundary[j]] = j;

    // Outer side of boundary point j: a real dart, or another boundary point.
    std::vector<Dart> outer(m);
    std::vector<int> outer_link(m, -1);
    for (int j = 0; j < m; ++j) {
        Dart o = partner(boundary[j]);
        if (in.count(o.v)) {
            outer_link[j] = index.at(o);
        } else {
            outer[j] = o;
        }
    }
    for (int v : inside) kill(v);

    std::vector<bool> done(m, false);
    // Walks from boundary point j entering from the given side; returns the
    // real dart reached at the other end of the chain.
    auto walk = [&](int j, bool from_outer) -> Dart {
        for (;;) {
            done[j] = true;
            if (from_outer) {
                if (ends[j].dart.valid()) return ends[j].dart;
                j = ends[j].to;
            } else {
                if (outer[j].valid()) return outer[j];
                j = outer_link[j];
            }
            from_outer = !from_outer;
        }
    };
    for (int j = 0; j < m; ++j) {
        if (done[j]) continue;
        if (outer[j].valid()) {
            Dart a = outer[j];
            Dart b = walk(j, true);
            link(a, b);
        } else if (ends[j].dart.valid()) {
            Dart a = ends[j].dart;
            Dart b = walk(j, false);
            link(a, b);
        }
    }
    for (int j = 0; j < m; ++j) {
        if (done[j]) continue;
        // A closed loop made only of plain arcs.
        int k = j;
        bool from_outer = true;
        do {
            done[k] = true;
            k = from_outer ? ends[k].to : outer_link[k];
            from_outer = !from_outer;
        } while (!(k == j && from_outer));
        int b = add_bead();
        link({b, 0}, {b, 1});
    }
}

Diagram PlanarGraph::to_diagram(std::vector<std::array<int, 4>>* labels) const {
    const int n = static_cast<int>(vs.size());
    std::vector<std::array<bool, 4>> used(n, std::array<bool, 4>{});
    // Oriented strand cycles, as lists of darts through which the strand leaves a vertex.
    std::vector<std::vector<Dart>> cycles;
    for (int v = 0; v < n; ++v) {
        if (!vs[v].alive) continue;
        for (int s = 0; s < vs[v].deg; ++s) {
            if (used[v][s]) continue;
            std::vector<Dart> cyc;
            Dart d{v, s};
            int hint = 0;
            while (!used[d.v][d.s]) {
                used[d.v][d.s] = true;
                Dart p = partner(d);
                used[p.v][p.s] = true;
                if (hint == 0) {
                    if (vs[d.v].dir[d.s] != 0)
                        hint = vs[d.v].dir[d.s];
                    else if (vs[p.v].dir[p.s] != 0)
                        hint = -vs[p.v].dir[p.s];
                }
                cyc.push_back(d);
                d = strand_next(d);
            }
            if (hint < 0) {
                // Reverse: leave through the partner darts in reverse order.
                std::vector<Dart> rev;
                for (auto it = cyc.rbegin(); it != cyc.rend(); ++it) rev.push_back(partner(*it));
                cyc = std::move(rev);
            }
            cycles.push_back(std::move(cyc));
        }
    }

    // Arrival flag and owning cycle of every crossing slot.
    std::vector<std::array<int, 4>> arriving(n, std::array<int, 4>{});
    std::vector<std::array<int, 4>> owner(n, std::array<int, 4>{-1, -1, -1, -1});
    int free_loops = 0;
    for (int k = 0; k < static_cast<int>(cycles.size()); ++k) {
        bool any = false;
        for (Dart d : cycles[k]) {
            Dart p = partner(d);
            if (vs[d.v].deg == 4) any = true;
            owner[d.v][d.s] = owner[p.v][p.s] = k;
            arriving[p.v][p.s] = 1;
        }
        if (!any) ++free_loops;
    }

    std::vector<int> order;
    for (int v = 0; v < n; ++v)
        if (vs[v].alive && vs[v].deg == 4) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return vs[a].id < vs[b].id; });

    auto under_in = [&](int v) {
        int u = (vs[v].over + 1) % 4;
        return arriving[v][u] ? u : (u + 2) % 4;
    };
    auto over_in = [&](int v) {
        int o = vs[v].over;
        return arriving[v][o] ? o : (o + 2) % 4;
    };

    // The two incoming slots of a crossing are adjacent; start with the one
    // whose counterclockwise neighbour is the other. This ignores which strand
    // is over, so a crossing change keeps every label.
    auto first_in = [&](int v) {
        int u = under_in(v), o = over_in(v);
        return (u + 1) % 4 == o ? std::pair{u, o} : std::pair{o, u};
    };

    std::vector<std::array<int, 4>> lab(n, std::array<int, 4>{});
    std::vector<bool> labelled(cycles.size(), false);
    int next = 1;
    for (int v : order) {
        auto [s0, s1] = first_in(v);
        for (int slot : {s0, s1}) {
            int k = owner[v][slot];
            if (labelled[k]) continue;
            labelled[k] = true;
            // Crossing passages of the cycle, each given by its arrival dart.
            const auto& cyc = cycles[k];
            std::vector<Dart> arrivals;
            for (Dart d : cyc) {
                Dart p = partner(d);
                if (vs[p.v].deg == 4) arrivals.push_back(p);
            }
            int m = static_cast<int>(arrivals.size());
            int j = 0;
            while (!(arrivals[j] == Dart{v, slot})) ++j;
            // Edge t runs from passage t-1 to passage t; the edge into passage j is first.
            for (int t = 0; t < m; ++t) {
                Dart a = arrivals[(j + t) % m];
                Dart prev = arrivals[(j + t - 1 + m) % m];
                lab[a.v][a.s] = next;
                lab[prev.v][opposite(prev)] = next;
                ++next;
            }
        }
    }

    std::vector<Crossing> cs;
    for (int v : order) {
        Crossing c;
        c.id = vs[v].id;
        int u = under_in(v);
        for (int k = 0; k < 4; ++k) c.x[k] = lab[v][(u + k) % 4];
        c.sign = over_in(v) == (u + 3) % 4 ? 1 : -1;
        cs.push_back(c);
    }
    if (cs.empty() && free_loops == 0) free_loops = 1;
    if (labels) *labels = lab;
    return Diagram(std::move(cs), free_loops);
}

Diagram simplify(const Diagram& d) {
    std::map<int, int> sign;
    for (const auto& c : d.crossings()) sign[c.id] = c.sign;
    PlanarGraph g = PlanarGraph::from_diagram(d);
    using End = PlanarGraph::TangleEnd;
    for (;;) {
        bool changed = false;
        std::vector<int> order;
        for (int v = 0; v < static_cast<int>(g.vs.size()); ++v)
            if (g.vs[v].alive && g.vs[v].deg == 4) order.push_back(v);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return g.vs[a].id < g.vs[b].id; });
        for (int v : order) {
            for (int s = 0; s < 4 && !changed; ++s) {
                if (g.partner({v, s}) == Dart{v, (s + 1) % 4}) {
                    g.replace_disk({v}, {{v, (s + 2) % 4}, {v, (s + 3) % 4}}, {End{{}, 1}, End{{}, 0}});
                    changed = true;
                }
            }
            if (changed) break;
        }
        if (changed) continue;

        auto fid = g.face_ids();
        std::map<int, std::vector<Dart>> faces;
        for (int v : order)
            for (int s = 0; s < 4; ++s) faces[fid[v][s]].push_back({v, s});
        for (const auto& [f, darts] : faces) {
            if (darts.size() != 2) continue;
            Dart d1 = darts[0];
            Dart d2 = g.face_next(d1);
            if (d1.v == d2.v) continue;
            int v = d1.v, w = d2.v;
            Dart t1 = g.partner(d1);  // on w
            Dart t2 = g.partner(d2);  // on v
            if (g.over_at(d1) != g.over_at(t1)) continue;
            if (sign[g.vs[v].id] == sign[g.vs[w].id]) continue;
            std::vector<Dart> boundary{{v, (d1.s + 2) % 4}, {w, (t1.s + 2) % 4}, {w, (d2.s + 2) % 4},
                                       {v, (t2.s + 2) % 4}};
            g.replace_disk({v, w}, boundary, {End{{}, 1}, End{{}, 0}, End{{}, 3}, End{{}, 2}});
            changed = true;
            break;
        }
        if (!changed) break;
    }
    return g.to_diagram();
}

}  // namespace gordian
