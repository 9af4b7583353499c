#include "gordian/generate.hpp"

#include "gordian/planar.hpp"
#include "gordian/tangle.hpp"

namespace gordian {

Diagram braid_closure(int strands, const std::vector<BraidLetter>& word) {
    if (strands < 1) throw std::invalid_argument("a braid needs at least one strand");
    PlanarGraph g;
    std::vector<int> beads;
    std::vector<Dart> boundary;
    for (int i = 0; i < strands; ++i) {
        int b = g.add_bead();
        g.link({b, 0}, {b, 1});
        beads.push_back(b);
    }
    // Each closing arc runs from the bottom of the braid back to the top.
    for (int i = strands - 1; i >= 0; --i) boundary.push_back({beads[i], 0});
    for (int i = 0; i < strands; ++i) boundary.push_back({beads[i], 1});
    TangleBuilder tb(g, strands, 1);
    for (const auto& b : word) {
        if (b.gen < 1 || b.gen >= strands) throw std::invalid_argument("braid generator out of range");
        int id = tb.cross(b.gen - 1, b.exp > 0);
        auto& v = g.vs[g.vertex_of(id)];
        v.dir = {-1, 1, 1, -1};
    }
    g.replace_disk(beads, boundary, tb.finish());
    return g.to_diagram();
}

Diagram random_knot(std::mt19937& rng, const RandomKnotOptions& opt) {
    std::uniform_int_distribution<int> strands_d(2, std::max(2, opt.max_strands));
    std::uniform_int_distribution<int> coin(0, 1);
    const int body = std::max(opt.min_crossings, opt.max_crossings - opt.kinks);
    for (;;) {
        int w = strands_d(rng);
        std::uniform_int_distribution<int> len_d(std::min(opt.min_crossings, body), body);
        std::uniform_int_distribution<int> gen_d(1, w - 1);
        int len = len_d(rng);
        std::vector<BraidLetter> word;
        for (int i = 0; i < len; ++i) word.push_back({gen_d(rng), coin(rng) ? 1 : -1});
        Diagram d = braid_closure(w, word);
        if (d.component_count() != 1 || d.crossing_count() == 0) continue;
        for (int k = 0; k < opt.kinks; ++k) {
            auto labels = d.labels();
            std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
            d = insert_kink(d, labels[pick(rng)], coin(rng), coin(rng));
        }
        return d;
    }
}

std::optional<MoveSite> random_site(const Diagram& d, int n, std::mt19937& rng, int attempts) {
    if (d.crossing_count() == 0) return std::nullopt;
    PlanarGraph g = PlanarGraph::from_diagram(d);
    int faces = 0;
    auto f = g.face_ids(&faces);
    // face -> (edge label, face across that edge)
    std::vector<std::vector<std::pair<int, int>>> dual(faces);
    for (int l : d.labels()) {
        auto [tc, tp] = d.tail(l);
        auto [hc, hp] = d.head(l);
        int left = f[tc][tp], right = f[hc][hp];
        dual[left].push_back({l, right});
        dual[right].push_back({l, left});
    }
    std::uniform_int_distribution<int> face_d(0, faces - 1);
    for (int a = 0; a < attempts; ++a) {
        int cur = face_d(rng);
        std::vector<bool> seen(faces, false);
        seen[cur] = true;
        std::vector<int> strands;
        while (static_cast<int>(strands.size()) < n + 1) {
            std::vector<std::pair<int, int>> options;
            for (auto [l, nf] : dual[cur])
                if (!seen[nf]) options.push_back({l, nf});
            if (options.empty()) break;
            std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
            auto [l, nf] = options[pick(rng)];
            strands.push_back(l);
            seen[nf] = true;
            cur = nf;
        }
        if (static_cast<int>(strands.size()) == n + 1) return find_site(d, strands);
    }
    return std::nullopt;
}

}  // namespace gordian
