#include "gordian/construction.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "json.hpp"

#include "gordian/planar.hpp"

namespace gordian {

std::string ConstructionReport::to_json() const {
    nlohmann::json j;
    j["k"] = solved_k;
    j["a2"] = achieved_a2;
    j["lk0"] = lk_intercept;
    j["slope"] = lk_slope;
    j["verified"] = {{"K0", verification.k0_ok}, {"K1", verification.k1_ok}};
    return j.dump();
}

Diagram derive_k1(const MarkedDiagram& m) {
    m.validate();
    return crossing_change(crossing_change(m.diagram, m.mark_a), m.mark_b);
}

int lk_of(const MarkedDiagram& m, int k) {
    MarkedDiagram kp = insert_twist_region(m, k);
    Diagram l = smooth(kp.diagram, *kp.mark_c);
    if (l.component_count() != 2) throw ContractError("C4", "smoothing C does not give a two-component link");
    return linking_number(l);
}

Construction construct_between(const MarkedDiagram& m, std::int64_t target) {
    m.validate();
    const int sign_a = m.diagram.crossing(m.mark_a).sign;
    const int lk0 = lk_of(m, 0);
    const int slope = lk_of(m, 1) - lk0;
    if (slope != 1 && slope != -1)
        throw ContractError("C4", "linking number slope " + std::to_string(slope) + " is not +-1");
    const int sign_c = -sign_a;
    const std::int64_t a2_k0 = a2(m.diagram);
    // a2(K') = a2(K_0) + sign_c * (lk0 + slope * k)
    const std::int64_t k = slope * (sign_c * (target - a2_k0) - lk0);

    Construction out;
    out.k_prime = insert_twist_region(m, static_cast<int>(k));
    const Diagram& kp = out.k_prime.diagram;
    const int c = *out.k_prime.mark_c;
    if (kp.crossing(c).sign != sign_c) throw ContractError("C3", "C does not have the opposite sign of A");

    ConstructionReport& r = out.report;
    r.solved_k = static_cast<int>(k);
    r.lk_intercept = lk0;
    r.lk_slope = slope;
    r.achieved_a2 = a2(kp);
    if (r.achieved_a2 != target)
        throw ContractError("C4", "a2(K') = " + std::to_string(r.achieved_a2) + ", wanted " + std::to_string(target));

    Verification& v = r.verification;
    v.k_prime = invariant_suite(kp);
    v.at_c = invariant_suite(simplify(crossing_change(kp, c)));
    v.k0 = invariant_suite(m.diagram);
    v.at_b = invariant_suite(crossing_change(kp, out.k_prime.mark_b));
    v.k1 = invariant_suite(derive_k1(m));
    v.k0_ok = v.at_c == v.k0;
    v.k1_ok = v.at_b == v.k1;
    v.k0_distinct = v.k_prime.conway != v.k0.conway || v.k_prime.v3 != v.k0.v3;
    v.k1_distinct = v.k_prime.conway != v.k1.conway || v.k_prime.v3 != v.k1.v3;
    if (!v.k0_ok) throw ContractError("C1", "crossing change at C does not reproduce K_0");
    if (!v.k1_ok) throw ContractError("C2", "crossing change at B does not reproduce K_1");
    return out;
}

MoveSite prepare_cn_site(const MarkedDiagram& m, int n) {
    if (n < 2) throw std::invalid_argument("prepare_cn_site needs n >= 2");
    m.validate();
    const Diagram& d = m.diagram;
    PlanarGraph g = PlanarGraph::from_diagram(d);
    int faces = 0;
    auto f = g.face_ids(&faces);
    // face -> (edge label, face across), edges in label order
    std::vector<std::vector<std::pair<int, int>>> dual(faces);
    std::map<int, std::pair<int, int>> sides;
    for (int l : d.labels()) {
        auto [tc, tp] = d.tail(l);
        auto [hc, hp] = d.head(l);
        int left = f[tc][tp], right = f[hc][hp];
        sides[l] = {left, right};
        dual[left].push_back({l, right});
        dual[right].push_back({l, left});
    }
    auto touches = [&](int label, int id) {
        const Crossing& c = d.crossing(id);
        return std::find(std::begin(c.x), std::end(c.x), label) != std::end(c.x);
    };
    std::vector<int> strands;
    std::vector<bool> seen(faces, false);
    // Depth-first over face paths, smallest labels first: strand 1 at A,
    // strand 2 at B, then any edges through unvisited faces.
    auto dfs = [&](auto&& self, int face) -> bool {
        if (static_cast<int>(strands.size()) == n + 1) return true;
        for (auto [l, nf] : dual[face]) {
            if (seen[nf]) continue;
            if (strands.size() == 1 && !touches(l, m.mark_b)) continue;
            seen[nf] = true;
            strands.push_back(l);
            if (self(self, nf)) return true;
            strands.pop_back();
            seen[nf] = false;
        }
        return false;
    };
    for (int l : d.labels()) {
        if (!touches(l, m.mark_a)) continue;
        for (auto [from, to] : {sides[l], std::pair{sides[l].second, sides[l].first}}) {
            if (from == to) continue;
            std::fill(seen.begin(), seen.end(), false);
            seen[from] = seen[to] = true;
            strands = {l};
            if (dfs(dfs, to)) return find_site(d, strands);
        }
    }
    throw MoveError("no site of order " + std::to_string(n) + " fits next to the marks");
}

PermutedSite realize_permutation(const Diagram& d, const MoveSite& site, const Permutation& target) {
    Permutation start = entry_permutation(d, site);
    Permutation sorted_t = target, sorted_s = start;
    std::sort(sorted_t.begin(), sorted_t.end());
    std::sort(sorted_s.begin(), sorted_s.end());
    if (sorted_t != sorted_s) throw std::invalid_argument("target is not a permutation of the site strands");
    // Breadth-first search over orders; a transposition of strands s1, s2
    // swaps their values in the entry permutation.
    std::map<Permutation, std::pair<Permutation, std::pair<int, int>>> parent;
    std::deque<Permutation> queue{start};
    parent[start] = {start, {0, 0}};
    while (!queue.empty() && !parent.count(target)) {
        Permutation p = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j) {
                Permutation q = p;
                std::swap(q[i], q[j]);
                if (parent.count(q)) continue;
                parent[q] = {p, {p[i], p[j]}};
                queue.push_back(q);
            }
    }
    std::vector<std::pair<int, int>> steps;
    for (Permutation p = target; p != start; p = parent.at(p).first) steps.push_back(parent.at(p).second);
    std::reverse(steps.begin(), steps.end());

    PermutedSite out{d, site, 0};
    for (auto [s1, s2] : steps) {
        auto t = strand_transposition(out.diagram, out.site, s1, s2);
        out.diagram = std::move(t.diagram);
        out.site = std::move(t.site);
        ++out.transpositions;
    }
    if (out.site.entry_permutation != target) throw std::logic_error("transpositions did not reach the target order");
    return out;
}

CnDeltaRecord measure_cn_delta(const Diagram& d, const MoveSite& site, const SignVector& signs) {
    CnDeltaRecord r;
    r.n = site.order();
    r.sigma = entry_permutation(d, site);
    for (int s : signs) r.sign_product *= s;
    Diagram after = special_cn_move(d, site, signs);
    const std::int64_t a2_before = a2(d), a2_after = a2(after);
    const std::int64_t v3_before = v3_gauss(to_gauss_code(d));
    const std::int64_t v3_after = v3_gauss(to_gauss_code(after));
    if (r.n > 2 && a2_before != a2_after) throw ContractError("order", "a C_n-move with n > 2 changed a2");
    if (r.n > 3 && v3_before != v3_after) throw ContractError("order", "a C_n-move with n > 3 changed v3");
    if (r.n == 2) r.delta = a2_after - a2_before;
    if (r.n == 3) r.delta = v3_after - v3_before;
    return r;
}

}  // namespace gordian
