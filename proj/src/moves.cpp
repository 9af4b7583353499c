#include "gordian/moves.hpp"

#include <algorithm>
#include <set>

#include "gordian/planar.hpp"
#include "gordian/tangle.hpp"

namespace gordian {

namespace {

// The site strands cut open by beads; boundary is counterclockwise, ready
// for replace_disk with a TangleBuilder of the same width.
struct Tube {
    PlanarGraph g;
    std::vector<int> beads;
    std::vector<Dart> boundary;
    std::vector<Dart> outer_top;     // darts outside the tube, per strand
    std::vector<Dart> outer_bottom;
};

Tube open_tube(const Diagram& d, const std::vector<int>& strands, const std::vector<bool>& downward) {
    Tube t;
    t.g = PlanarGraph::from_diagram(d);
    const int w = static_cast<int>(strands.size());
    std::vector<Dart> tails;
    for (int l : strands) {
        auto [ci, port] = d.tail(l);
        tails.push_back({ci, port});
    }
    std::vector<Dart> top(w), bottom(w);
    for (int i = 0; i < w; ++i) {
        int b = t.g.subdivide(tails[i]);
        t.beads.push_back(b);
        // slot 0 of the bead faces the tail of the edge
        top[i] = downward[i] ? Dart{b, 0} : Dart{b, 1};
        bottom[i] = downward[i] ? Dart{b, 1} : Dart{b, 0};
    }
    for (int i = w - 1; i >= 0; --i) t.boundary.push_back(top[i]);
    for (int i = 0; i < w; ++i) t.boundary.push_back(bottom[i]);
    for (int i = 0; i < w; ++i) {
        t.outer_top.push_back(t.g.partner(top[i]));
        t.outer_bottom.push_back(t.g.partner(bottom[i]));
    }
    return t;
}

int label_at(const std::vector<std::array<int, 4>>& lab, Dart a) { return lab[a.v][a.s]; }

std::vector<std::array<int, 4>> diagram_faces(const Diagram& d, PlanarGraph& g) {
    g = PlanarGraph::from_diagram(d);
    return g.face_ids();
}

int left_face(const Diagram& d, const std::vector<std::array<int, 4>>& f, int label) {
    auto [ci, port] = d.tail(label);
    return f[ci][port];
}

int right_face(const Diagram& d, const std::vector<std::array<int, 4>>& f, int label) {
    auto [ci, port] = d.head(label);
    return f[ci][port];
}

// Faces on the west side of each strand and east of each strand.
bool site_fits(const Diagram& d, const std::vector<std::array<int, 4>>& f, const std::vector<int>& strands,
               const std::vector<bool>& downward) {
    std::vector<int> visited;
    for (std::size_t i = 0; i < strands.size(); ++i) {
        int west = downward[i] ? right_face(d, f, strands[i]) : left_face(d, f, strands[i]);
        int east = downward[i] ? left_face(d, f, strands[i]) : right_face(d, f, strands[i]);
        if (i == 0)
            visited.push_back(west);
        else if (visited.back() != west)
            return false;
        visited.push_back(east);
    }
    std::set<int> distinct(visited.begin(), visited.end());
    return distinct.size() == visited.size();
}

void check_strands(const Diagram& d, const std::vector<int>& strands) {
    if (strands.size() < 2) throw MoveError("a move site needs at least two strands");
    if (d.component_count() != 1 || d.free_loops() != 0) throw MoveError("move sites are defined on knot diagrams");
    std::set<int> seen;
    for (int l : strands) {
        if (!d.has_label(l)) throw MoveError("edge " + std::to_string(l) + " is not in the diagram");
        if (!seen.insert(l).second) throw MoveError("edge " + std::to_string(l) + " appears twice in the site");
    }
}

}  // namespace

Permutation entry_permutation(const Diagram& d, const MoveSite& site) {
    Permutation p;
    const int start = site.strands.at(0);
    for (int l = d.successor(start); l != start; l = d.successor(l)) {
        auto it = std::find(site.strands.begin(), site.strands.end(), l);
        if (it != site.strands.end()) p.push_back(static_cast<int>(it - site.strands.begin()) + 1);
    }
    return p;
}

void check_site(const Diagram& d, const MoveSite& site) {
    check_strands(d, site.strands);
    if (site.downward.size() != site.strands.size()) throw MoveError("site needs one direction flag per strand");
    PlanarGraph g;
    auto f = diagram_faces(d, g);
    if (!site_fits(d, f, site.strands, site.downward))
        throw MoveError("no disk crosses the site strands in order through distinct faces");
}

MoveSite make_site(const Diagram& d, std::vector<int> strands, std::vector<bool> downward) {
    MoveSite s{std::move(strands), std::move(downward), {}};
    check_site(d, s);
    s.entry_permutation = entry_permutation(d, s);
    return s;
}

MoveSite find_site(const Diagram& d, const std::vector<int>& strands) {
    check_strands(d, strands);
    PlanarGraph g;
    auto f = diagram_faces(d, g);
    const int w = static_cast<int>(strands.size());
    for (int mask = 0; mask < (1 << w); ++mask) {
        std::vector<bool> down(w);
        for (int i = 0; i < w; ++i) down[i] = (mask >> i) & 1;
        if (site_fits(d, f, strands, down)) return make_site(d, strands, down);
    }
    throw MoveError("no disk crosses the given strands in order");
}

Diagram crossing_change(const Diagram& d, int x) {
    if (!d.has_crossing(x)) throw MoveError("no crossing with id " + std::to_string(x));
    std::vector<Crossing> cs;
    for (const auto& c : d.crossings()) cs.push_back(c.id == x ? flip_crossing(c) : c);
    return Diagram(std::move(cs), d.free_loops());
}

Diagram smooth(const Diagram& d, int x) {
    if (!d.has_crossing(x)) throw MoveError("no crossing with id " + std::to_string(x));
    PlanarGraph g = PlanarGraph::from_diagram(d);
    int v = g.vertex_of(x);
    const Crossing& c = d.crossing(x);
    int over_in = c.over_in, over_out = c.over_in ^ 2;
    // Each incoming port is joined to the neighbouring outgoing port of the
    // other strand.
    std::vector<Dart> boundary{{v, 0}, {v, over_out}, {v, 2}, {v, over_in}};
    std::vector<PlanarGraph::TangleEnd> ends(4);
    ends[0].to = 1;
    ends[1].to = 0;
    ends[2].to = 3;
    ends[3].to = 2;
    g.replace_disk({v}, boundary, ends);
    return g.to_diagram();
}

Diagram insert_kink(const Diagram& d, int label, bool right_side, bool over_first) {
    if (!d.has_label(label)) throw MoveError("edge " + std::to_string(label) + " is not in the diagram");
    Tube t = open_tube(d, {label}, {true});
    TangleBuilder tb(t.g, 1, d.max_id() + 1);
    // The strand runs down the picture, so its right side is the picture's left.
    if (right_side) {
        tb.cup(0);
        tb.cross(1, !over_first);
        tb.cap(0);
    } else {
        tb.cup(1);
        tb.cross(0, over_first);
        tb.cap(1);
    }
    t.g.replace_disk(t.beads, t.boundary, tb.finish());
    return t.g.to_diagram();
}

namespace {

// Applies a braid word inside the tube. tags[i] >= 0 marks letter i as a
// clasp of that index. If mid_after >= 0 the open darts after that many
// letters are kept.
struct BraidRun {
    CnResult result;
    std::vector<Dart> mid;
    std::vector<std::array<int, 4>> labels;
    Tube tube;
};

BraidRun run_braid(const Diagram& d, const MoveSite& site, const std::vector<BraidLetter>& word,
                   const std::vector<int>& tags, int mid_after) {
    const int w = static_cast<int>(site.strands.size());
    BraidRun r;
    r.tube = open_tube(d, site.strands, site.downward);
    TangleBuilder tb(r.tube.g, w, d.max_id() + 1);
    std::vector<std::vector<int>> clasps;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (static_cast<int>(i) == mid_after) r.mid = tb.open_darts();
        const auto& b = word[i];
        if (b.gen < 1 || b.gen >= w || (b.exp != 1 && b.exp != -1)) throw MoveError("braid letter outside the site");
        int id = tb.cross(b.gen - 1, b.exp > 0);
        if (!tags.empty() && tags[i] >= 0) {
            if (static_cast<int>(clasps.size()) <= tags[i]) clasps.resize(tags[i] + 1);
            clasps[tags[i]].push_back(id);
        }
    }
    if (static_cast<int>(word.size()) == mid_after) r.mid = tb.open_darts();
    auto ends = tb.finish();
    r.tube.g.replace_disk(r.tube.beads, r.tube.boundary, ends);
    for (int v : tb.vertices())
        if (r.tube.g.vs[v].deg == 4) r.result.applied.inner.push_back(r.tube.g.vs[v].id);
    r.result.diagram = r.tube.g.to_diagram(&r.labels);
    for (int i = 0; i < w; ++i) {
        r.result.applied.top.push_back(label_at(r.labels, r.tube.outer_top[i]));
        r.result.applied.bottom.push_back(label_at(r.labels, r.tube.outer_bottom[i]));
    }
    r.result.applied.clasps = clasps;
    return r;
}

}  // namespace

CnResult insert_braid(const Diagram& d, const MoveSite& site, const std::vector<BraidLetter>& word) {
    check_site(d, site);
    return run_braid(d, site, word, {}, -1).result;
}

TranspositionResult strand_transposition(const Diagram& d, const MoveSite& site, int s1, int s2) {
    check_site(d, site);
    const int w = static_cast<int>(site.strands.size());
    int p = std::min(s1, s2), q = std::max(s1, s2);
    if (p < 2 || q > w || p == q) throw MoveError("transposed strands must be two distinct strands 2..n+1");
    std::vector<BraidLetter> word;
    for (int g = p; g < q; ++g) word.push_back({g, 1});
    for (int g = q - 2; g >= p; --g) word.push_back({g, 1});
    const int half = static_cast<int>(word.size());
    for (int i = half - 1; i >= 0; --i) word.push_back({word[i].gen, -1});
    BraidRun r = run_braid(d, site, word, {}, half);

    std::vector<int> strands(w);
    std::vector<bool> down(w);
    for (int i = 0; i < w; ++i) {
        int from = i == p - 1 ? q - 1 : i == q - 1 ? p - 1 : i;
        down[i] = site.downward[from];
        Dart m = r.mid[i];
        strands[i] = m.valid() ? label_at(r.labels, m) : r.result.applied.top[i];
    }
    TranspositionResult out{r.result.diagram, {}};
    out.site = make_site(out.diagram, strands, down);
    return out;
}

namespace {

struct FreeLetter {
    int strand;  // 2..n+1
    int exp;
};

// Nested commutator [[x_2, x_3], ..., x_{n+1}] with exponents per generator.
std::vector<FreeLetter> nested_commutator(const std::vector<int>& exps) {
    std::vector<FreeLetter> w{{2, exps[0]}};
    for (std::size_t j = 1; j < exps.size(); ++j) {
        std::vector<FreeLetter> next = w;
        next.push_back({static_cast<int>(j) + 2, exps[j]});
        for (auto it = w.rbegin(); it != w.rend(); ++it) next.push_back({it->strand, -it->exp});
        next.push_back({static_cast<int>(j) + 2, -exps[j]});
        w = std::move(next);
    }
    return w;
}

}  // namespace

CnResult special_cn_move_tracked(const Diagram& d, const MoveSite& site, const SignVector& signs) {
    check_site(d, site);
    const int n = site.order();
    if (static_cast<int>(signs.size()) != n) throw MoveError("need one clasp sign per strand 2..n+1");
    for (int s : signs)
        if (s != 1 && s != -1) throw MoveError("clasp signs must be +1 or -1");
    auto o = [&](int i) { return site.downward[i] ? 1 : -1; };
    // A left-over crossing between two strands running the same way down
    // the picture is negative.
    std::vector<int> exps(n);
    for (int j = 0; j < n; ++j) exps[j] = -signs[j] * o(0) * o(j + 1);

    // Strand 1 loops around strand j: A_{1j} = s_{j-1} .. s_2 s_1^2 s_2^-1 .. s_{j-1}^-1.
    std::vector<BraidLetter> word;
    std::vector<int> tags;
    // The word is read along the orientation of strand 1.
    auto letters = nested_commutator(exps);
    if (!site.downward[0]) std::reverse(letters.begin(), letters.end());
    for (const auto& f : letters) {
        const int j = f.strand;
        const int e = f.exp;
        auto push = [&](int g, int x, int tag) {
            if (!word.empty() && tags.back() < 0 && tag < 0 && word.back().gen == g && word.back().exp == -x) {
                word.pop_back();
                tags.pop_back();
                return;
            }
            word.push_back({g, x});
            tags.push_back(tag);
        };
        for (int g = j - 1; g >= 2; --g) push(g, 1, -1);
        push(1, e, j - 2);
        push(1, e, -1);
        for (int g = 2; g <= j - 1; ++g) push(g, -1, -1);
    }
    CnResult r = run_braid(d, site, word, tags, -1).result;
    if (!site.downward[0])
        for (auto& c : r.applied.clasps) std::reverse(c.begin(), c.end());
    return r;
}

Diagram special_cn_move(const Diagram& d, const MoveSite& site, const SignVector& signs) {
    return special_cn_move_tracked(d, site, signs).diagram;
}

Diagram change_clasp(const Diagram& d, const CnApplication& applied, int j) {
    if (j < 1 || j > static_cast<int>(applied.clasps.size())) throw MoveError("no clasp " + std::to_string(j));
    Diagram out = d;
    for (int id : applied.clasps[j - 1]) out = crossing_change(out, id);
    return out;
}

Diagram inverse_special_cn_move(const Diagram& d, const CnApplication& applied) {
    const int w = static_cast<int>(applied.top.size());
    if (static_cast<int>(applied.bottom.size()) != w) throw MoveError("move record has mismatched strand lists");
    PlanarGraph g = PlanarGraph::from_diagram(d);
    std::set<int> inner_v;
    for (int id : applied.inner) {
        int v = g.vertex_of(id);
        if (v < 0) throw MoveError("crossing " + std::to_string(id) + " of the move record is gone");
        inner_v.insert(v);
    }
    // The dart of an edge that lies inside the move region.
    auto inside_dart = [&](int label) -> Dart {
        Dart found{};
        for (std::size_t ci = 0; ci < d.crossings().size(); ++ci)
            for (int p = 0; p < 4; ++p)
                if (d.crossings()[ci].x[p] == label && inner_v.count(static_cast<int>(ci))) {
                    if (found.valid()) throw MoveError("edge " + std::to_string(label) + " does not leave the move region");
                    found = {static_cast<int>(ci), p};
                }
        return found;
    };
    std::vector<Dart> tops, bottoms;
    for (int i = 0; i < w; ++i) {
        if (!d.has_label(applied.top[i]) || !d.has_label(applied.bottom[i]))
            throw MoveError("move record names an edge that is not in the diagram");
        Dart t = inside_dart(applied.top[i]);
        Dart b = inside_dart(applied.bottom[i]);
        if (t.valid() != b.valid()) throw MoveError("move record does not match the diagram");
        tops.push_back(t);
        bottoms.push_back(b);
    }
    std::vector<Dart> boundary;
    for (int i = w - 1; i >= 0; --i)
        if (tops[i].valid()) boundary.push_back(tops[i]);
    const int half = static_cast<int>(boundary.size());
    for (int i = 0; i < w; ++i)
        if (bottoms[i].valid()) boundary.push_back(bottoms[i]);
    std::vector<PlanarGraph::TangleEnd> ends(boundary.size());
    for (int k = 0; k < half; ++k) {
        int j = 2 * half - 1 - k;
        ends[k].to = j;
        ends[j].to = k;
    }
    std::vector<int> inside(inner_v.begin(), inner_v.end());
    g.replace_disk(inside, boundary, ends);
    return g.to_diagram();
}

MarkedDiagram insert_twist_region(const MarkedDiagram& m, int k) {
    m.validate();
    if (m.mark_c) throw MoveError("the marked diagram already carries a third mark");
    PlanarGraph g = PlanarGraph::from_diagram(m.diagram);
    const int va = g.vertex_of(m.mark_a), vb = g.vertex_of(m.mark_b);
    int bi = -1, aj = -1;
    bool joined = false;
    for (int i = 0; i < 4 && bi < 0; ++i) {
        Dart o = g.partner({vb, i});
        if (o.v != va) continue;
        joined = true;
        if (g.over_at({vb, i}) == g.over_at(o)) {
            bi = i;
            aj = o.s;
        }
    }
    if (!joined) throw MoveError("marks A and B are not joined by an edge");
    if (bi < 0) throw MoveError("marks A and B share only edges that are over at one end and under at the other");
    const bool over = g.over_at({vb, bi});
    const int e = over ? 1 : -1;

    // Around the pair, counterclockwise: one end at A, three at B, two at A.
    std::vector<Dart> boundary{{va, (aj + 3) % 4}, {vb, (bi + 1) % 4}, {vb, (bi + 2) % 4},
                               {vb, (bi + 3) % 4}, {va, (aj + 1) % 4}, {va, (aj + 2) % 4}};
    TangleBuilder tb(g, 3, g.max_id() + 1);
    const int t = k * e;
    for (int i = 0; i < 2 * std::abs(k); ++i) tb.cross(1, t > 0);
    tb.cross(0, e > 0, m.mark_b);
    const int c = tb.cross(1, e < 0);
    for (int i = 0; i < 2 * std::abs(k); ++i) tb.cross(0, t < 0);
    g.replace_disk({va, vb}, boundary, tb.finish());

    MarkedDiagram out;
    out.diagram = g.to_diagram();
    out.mark_a = c;
    out.mark_b = m.mark_b;
    out.mark_c = c;
    return out;
}

}  // namespace gordian
