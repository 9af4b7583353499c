// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "gordian/construction.hpp"
#include "gordian/generate.hpp"
#include "gordian/invariants.hpp"
#include "gordian/moves.hpp"
#include "support/fixtures.hpp"

using namespace gordian;
namespace fx = gordian::testing;

namespace {

using Coeffs = std::vector<std::int64_t>;

// Collects the first few failures of a criterion.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        if (ok) return;
        if (failures_.size() < 3) failures_.push_back(what);
        ++count_;
    }
    bool ok() const { return count_ == 0; }
    std::string detail() const {
        std::string s;
        for (const auto& f : failures_) s += (s.empty() ? "" : "; ") + f;
        if (count_ > static_cast<int>(failures_.size())) s += "; +" + std::to_string(count_ - failures_.size()) + " more";
        return s;
    }

private:
    std::vector<std::string> failures_;
    int count_ = 0;
};

std::string str(const Coeffs& c) { return ConwayPolynomial{c}.str(); }

SignVector random_signs(int n, std::mt19937& rng) {
    SignVector s;
    for (int j = 0; j < n; ++j) s.push_back(rng() % 2 ? 1 : -1);
    return s;
}

Diagram with_kink(const Diagram& d, std::mt19937& rng) {
    auto labels = d.labels();
    if (labels.empty()) return parse_pd("X(1,1,2,2)");
    return insert_kink(d, labels[rng() % labels.size()], rng() % 2, rng() % 2);
}

// Adds kinks until a site of order n exists; the knot type is unchanged.
std::pair<Diagram, MoveSite> host_with_site(Diagram d, int n, std::mt19937& rng) {
    for (;;) {
        if (auto s = random_site(d, n, rng, 20)) return {d, *s};
        d = with_kink(d, rng);
    }
}

void table_exactness(Check& c) {
    const std::vector<std::pair<std::string, Coeffs>> table = {
        {"components=1", {1}},
        {"X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)", {1, 0, 1}},
        {"X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)", {1, 0, -1}},
        {"X(1,6,2,7) X(3,8,4,9) X(5,10,6,1) X(7,2,8,3) X(9,4,10,5)", {1, 0, 3, 0, 1}},
        {"X(1,4,2,5) X(3,8,4,9) X(5,10,6,1) X(9,6,10,7) X(7,2,8,3)", {1, 0, 2}},
    };
    for (const auto& [pd, want] : table) {
        Diagram d = parse_pd(pd);
        Coeffs got = conway(d).coefficients;
        c.expect(got == want, pd + " gave " + str(got));
        const std::int64_t z2 = want.size() > 2 ? want[2] : 0;
        c.expect(v2_gauss(to_gauss_code(d)) == z2, pd + " v2 disagrees with the z^2 coefficient");
    }
}

void skein_identity(Check& c) {
    std::mt19937 rng(1008);
    int checked = 0;
    for (int i = 0; i < 400 && checked < 100; ++i) {
        Diagram d = random_knot(rng, {12, 3, 4, i % 2});
        for (const auto& x : d.crossings()) {
            if (x.sign != 1) continue;
            Diagram l = smooth(d, x.id);
            if (l.component_count() != 2) continue;
            c.expect(a2(d) - a2(crossing_change(d, x.id)) == linking_number(l), emit_pd(d) + " at " + std::to_string(x.id));
            ++checked;
            break;
        }
    }
    c.expect(checked >= 100, "only " + std::to_string(checked) + " diagrams");
}

void oracle_agreement(Check& c) {
    std::vector<Diagram> ds;
    for (const auto& d : fx::corpus()) ds.push_back(d);
    std::mt19937 rng(1003);
    for (int i = 0; i < 100; ++i) ds.push_back(random_knot(rng, {12, 3, 4, i % 3}));
    for (const auto& d : ds) {
        const auto want = a2(d);
        auto labels = d.labels();
        if (labels.empty()) c.expect(v2_gauss(to_gauss_code(d)) == want, "unknot");
        for (int b : labels) c.expect(v2_gauss(to_gauss_code(d, b)) == want, emit_pd(d) + " basepoint " + std::to_string(b));
    }
}

void between_grid(Check& c) {
    int fixtures = 0;
    for (const auto& e : fx::marked_fixtures()) {
        MarkedDiagram m = fx::marked_of(e);
        auto k0 = invariant_suite(m.diagram);
        auto k1 = invariant_suite(derive_k1(m));
        ++fixtures;
        for (int n = -5; n <= 5; ++n) {
            const std::string tag = e.name + " N=" + std::to_string(n);
            Construction k = construct_between(m, n);
            const Diagram& kp = k.k_prime.diagram;
            c.expect(a2(kp) == n, tag + " a2");
            c.expect(invariant_suite(crossing_change(kp, *k.k_prime.mark_c)) == k0, tag + " witness C");
            c.expect(invariant_suite(crossing_change(kp, k.k_prime.mark_b)) == k1, tag + " witness B");
        }
    }
    c.expect(fixtures >= 3, "fewer than 3 marked fixtures");
}

void move_contracts(Check& c) {
    for (const auto& e : fx::marked_fixtures()) {
        MarkedDiagram m = fx::marked_of(e);
        auto k0 = invariant_suite(m.diagram);
        auto k1 = invariant_suite(derive_k1(m));
        const int sign_a = m.diagram.crossing(m.mark_a).sign;
        std::vector<int> lks;
        for (int k = -6; k <= 6; ++k) {
            const std::string tag = e.name + " k=" + std::to_string(k);
            MarkedDiagram kp = insert_twist_region(m, k);
            const int x = *kp.mark_c;
            c.expect(invariant_suite(crossing_change(kp.diagram, x)) == k0, tag + " C1");
            c.expect(invariant_suite(crossing_change(kp.diagram, kp.mark_b)) == k1, tag + " C2");
            c.expect(kp.diagram.crossing(x).sign == -sign_a, tag + " C3");
            lks.push_back(linking_number(smooth(kp.diagram, x)));
        }
        const int slope = lks[1] - lks[0];
        c.expect(slope == 1 || slope == -1, e.name + " C4 slope");
        for (std::size_t i = 1; i < lks.size(); ++i) c.expect(lks[i] - lks[i - 1] == slope, e.name + " C4 constant");
    }
    std::mt19937 rng(1005);
    for (int n = 1; n <= 3; ++n) {
        int sites = 0;
        for (int i = 0; i < 200 && sites < 6; ++i) {
            Diagram d = random_knot(rng, {8});
            auto s = random_site(d, n, rng);
            if (!s) continue;
            ++sites;
            auto suite = invariant_suite(d);
            SignVector signs = random_signs(n, rng);
            auto r = special_cn_move_tracked(d, *s, signs);
            c.expect(invariant_suite(inverse_special_cn_move(r.diagram, r.applied)) == suite, "cn inverse " + emit_pd(d));
            for (int s1 = 2; n >= 2 && s1 <= n + 1; ++s1)
                for (int s2 = s1 + 1; s2 <= n + 1; ++s2) {
                    auto t = strand_transposition(d, *s, s1, s2);
                    c.expect(invariant_suite(t.diagram) == suite, "T1 " + emit_pd(d));
                    Permutation expect = s->entry_permutation;
                    for (int& v : expect) v = v == s1 ? s2 : v == s2 ? s1 : v;
                    c.expect(entry_permutation(t.diagram, t.site) == expect, "T2 " + emit_pd(d));
                    auto after = special_cn_move_tracked(t.diagram, t.site, signs);
                    for (int j = 1; j <= n; ++j)
                        c.expect(invariant_suite(simplify(change_clasp(after.diagram, after.applied, j))) ==
                                     invariant_suite(simplify(change_clasp(r.diagram, r.applied, j))),
                                 "T3 " + emit_pd(d));
                }
        }
        c.expect(sites == 6, "not enough sites of order " + std::to_string(n));
    }
}

void lower_orders_kept(Check& c) {
    std::mt19937 rng(1006);
    for (const auto& d : fx::corpus())
        for (int n : {3, 4}) {
            auto [host, site] = host_with_site(d, n, rng);
            const auto a2_0 = a2(host);
            const auto v3_0 = v3_gauss(to_gauss_code(host));
            for (int t = 0; t < 10; ++t) {
                Diagram after = special_cn_move(host, site, random_signs(n, rng));
                c.expect(a2(after) == a2_0, "C_" + std::to_string(n) + " changed a2 on " + emit_pd(d));
                if (n == 4) c.expect(v3_gauss(to_gauss_code(after)) == v3_0, "C_4 changed v3 on " + emit_pd(d));
            }
        }
}

void permutation_dependence(Check& c) {
    std::mt19937 rng(1007);
    for (int n : {2, 3}) {
        std::map<std::pair<Permutation, int>, std::vector<std::int64_t>> seen;
        for (int i = 0; i < 400; ++i) {
            Diagram d = random_knot(rng, {8});
            auto s = random_site(d, n, rng);
            if (!s) continue;
            CnDeltaRecord r = measure_cn_delta(d, *s, random_signs(n, rng));
            seen[{r.sigma, r.sign_product}].push_back(*r.delta);
        }
        int full = 0;
        for (const auto& [key, deltas] : seen) {
            for (auto v : deltas) c.expect(v == deltas[0], "n=" + std::to_string(n) + " deltas differ within a class");
            if (deltas.size() >= 5) ++full;
        }
        c.expect(full >= 2, "n=" + std::to_string(n) + ": too few classes with 5 configurations");
    }
}

void neutrality(Check& c) {
    std::mt19937 rng(1009);
    for (const auto& d : fx::corpus()) {
        auto suite = invariant_suite(d);
        c.expect(invariant_suite(simplify(d)) == suite, "simplify " + emit_pd(d));
        Diagram k = d;
        for (int i = 0; i < 4; ++i) {
            k = with_kink(k, rng);
            c.expect(invariant_suite(k) == suite, "kink " + emit_pd(k));
        }
        c.expect(invariant_suite(simplify(k)) == suite, "simplify after kinks " + emit_pd(k));
    }
}

struct Criterion {
    int number;
    std::string title;
    std::function<void(Check&)> run;
    double limit_s = 0;  // 0: no time limit
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Conway table exactness", table_exactness, 1.0},
        {2, "order-two skein identity on random diagrams", skein_identity, 30.0},
        {3, "v2 Gauss formula equals a2 at every basepoint", oracle_agreement},
        {4, "a2(K') = N on marked fixtures for N in [-5,5]", between_grid, 60.0},
        {5, "twist region, transposition and C_n inverse contracts", move_contracts},
        {6, "C_3 keeps a2, C_4 keeps a2 and v3", lower_orders_kept},
        {7, "v_n jump depends only on permutation and sign product", permutation_dependence},
        {8, "simplify and kink neutrality on the corpus", neutrality},
    };
    bool all = true;
    for (const auto& cr : criteria) {
        Check c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (cr.limit_s > 0) {
            std::ostringstream lim;
            lim << "took " << secs << " s, limit " << cr.limit_s << " s";
            c.expect(secs < cr.limit_s, lim.str());
        }
        std::ostringstream line;
        line.precision(3);
        line << "criterion " << cr.number << ": " << (c.ok() ? "PASS" : "FAIL") << "  " << cr.title << " ("
             << std::fixed << secs << " s)";
        if (!c.ok()) line << ": " << c.detail();
        std::cout << line.str() << std::endl;
        all = all && c.ok();
    }
    return all ? 0 : 1;
}
