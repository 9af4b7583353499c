#include "gordian/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "gordian/moves.hpp"

namespace gordian {

namespace {

using Poly = std::vector<std::int64_t>;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Conway coefficient overflow");
    return r;
}

void trim(Poly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    if (p.empty()) p.push_back(0);
}

std::string key_of(const Diagram& d) {
    std::string k = std::to_string(d.free_loops());
    for (const auto& c : d.crossings()) {
        k += ';';
        k += std::to_string(c.id);
        for (int v : c.x) {
            k += ',';
            k += std::to_string(v);
        }
    }
    return k;
}

// First crossing met on its under-strand, walking the components from their
// basepoints in order; 0 if the diagram is descending.
int first_bad(const Diagram& d, const SkeinOrder& order) {
    int orbits = d.component_count() - d.free_loops();
    std::vector<std::vector<int>> comps(orbits);
    for (int l : d.labels()) comps[d.component_of(l)].push_back(l);
    if (order.reverse_components) std::reverse(comps.begin(), comps.end());
    std::set<int> seen;
    for (const auto& labels : comps) {
        int start = labels[static_cast<std::size_t>(order.basepoint_shift) % labels.size()];
        int l = start;
        do {
            auto [ci, port] = d.head(l);
            int id = d.crossings()[ci].id;
            if (seen.insert(id).second && port == 0) return id;
            l = d.successor(l);
        } while (l != start);
    }
    return 0;
}

class Skein {
public:
    explicit Skein(SkeinOrder order) : order_(order) {}

    Poly run(const Diagram& input, int budget) {
        Diagram d = simplify(input);
        if (budget <= 0) return {d.component_count() == 1 ? 1 : 0};
        std::string key = std::to_string(budget) + "|" + key_of(d);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        Poly result;
        int x = first_bad(d, order_);
        if (x == 0) {
            result = {d.component_count() == 1 ? 1 : 0};
        } else {
            int sign = d.crossing(x).sign;
            result = run(crossing_change(d, x), budget);
            Poly sm = run(smooth(d, x), budget - 1);
            if (result.size() < sm.size() + 1) result.resize(sm.size() + 1, 0);
            for (std::size_t i = 0; i < sm.size(); ++i)
                result[i + 1] = checked_add(result[i + 1], sign > 0 ? sm[i] : -sm[i]);
        }
        if (static_cast<int>(result.size()) > budget + 1) result.resize(budget + 1);
        trim(result);
        memo_.emplace(std::move(key), result);
        return result;
    }

private:
    SkeinOrder order_;
    std::unordered_map<std::string, Poly> memo_;
};

struct Chord {
    int over_pos = -1;
    int under_pos = -1;
    int sign = 0;
};

std::vector<Chord> chords_of(const GaussCode& g) {
    if (g.components.size() != 1) throw DiagramError("Gauss-diagram formulas need a one-component code");
    std::map<int, Chord> by_id;
    const auto& seq = g.components[0];
    for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
        auto& c = by_id[seq[i].crossing];
        (seq[i].over ? c.over_pos : c.under_pos) = i;
        c.sign = seq[i].sign;
    }
    std::vector<Chord> out;
    for (const auto& [id, c] : by_id) {
        if (c.over_pos < 0 || c.under_pos < 0) throw DiagramError("crossing " + std::to_string(id) + " lacks a visit");
        out.push_back(c);
    }
    return out;
}

struct PatternPoint {
    int arrow = 0;
    bool over = false;
};

std::vector<PatternPoint> parse_pattern(const std::string& text, int& arrows) {
    std::vector<PatternPoint> pts;
    std::istringstream is(text);
    std::string t;
    std::map<int, int> seen;
    while (is >> t) {
        if (t.size() < 2 || (t[0] != 'O' && t[0] != 'U')) throw std::invalid_argument("bad pattern token " + t);
        int a = std::stoi(t.substr(1));
        pts.push_back({a, t[0] == 'O'});
        seen[a] += t[0] == 'O' ? 1 : 10;
    }
    arrows = 0;
    for (const auto& [a, v] : seen) {
        if (v != 11 || a != arrows + 1) throw std::invalid_argument("pattern arrows must be 1..k, each once over and once under");
        ++arrows;
    }
    return pts;
}

}  // namespace

std::string ConwayPolynomial::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coefficients.size(); ++i) os << (i ? "," : "") << coefficients[i];
    os << ']';
    return os.str();
}

ConwayPolynomial conway_truncated(const Diagram& d, int max_degree, const SkeinOrder& order) {
    Skein sk(order);
    return {sk.run(d, max_degree)};
}

ConwayPolynomial conway(const Diagram& d, const SkeinOrder& order) {
    return conway_truncated(d, d.crossing_count() + 1, order);
}

std::int64_t a2(const Diagram& d) {
    if (d.component_count() != 1) throw DiagramError("a2 is defined for knots only");
    return conway_truncated(d, 2)[2];
}

int linking_number(const Diagram& d) {
    if (d.component_count() != 2) throw DiagramError("linking number needs exactly two components");
    int sum = 0;
    for (const auto& c : d.crossings())
        if (d.component_of(c.x[0]) != d.component_of(c.x[1])) sum += c.sign;
    if (sum % 2 != 0) throw DiagramError("odd inter-component sign sum");
    return sum / 2;
}

int writhe(const Diagram& d) {
    int w = 0;
    for (const auto& c : d.crossings()) w += c.sign;
    return w;
}

std::int64_t count_pattern(const GaussCode& g, const std::string& pattern) {
    int k = 0;
    auto pts = parse_pattern(pattern, k);
    auto chords = chords_of(g);
    const int n = static_cast<int>(chords.size());
    std::vector<int> pick(k, -1);
    std::int64_t total = 0;
    auto check = [&]() {
        int last = -1;
        for (const auto& p : pts) {
            const auto& c = chords[pick[p.arrow - 1]];
            int pos = p.over ? c.over_pos : c.under_pos;
            if (pos <= last) return false;
            last = pos;
        }
        return true;
    };
    auto rec = [&](auto&& self, int depth, int weight) -> void {
        if (depth == k) {
            if (check()) total += weight;
            return;
        }
        for (int i = 0; i < n; ++i) {
            if (std::find(pick.begin(), pick.begin() + depth, i) != pick.begin() + depth) continue;
            pick[depth] = i;
            self(self, depth + 1, weight * chords[i].sign);
        }
    };
    rec(rec, 0, 1);
    return total;
}

std::int64_t v2_gauss(const GaussCode& g) {
    return count_pattern(g, "U1 O2 O1 U2");
}

std::int64_t count_circle_pattern(const GaussCode& g, const std::string& pattern) {
    std::vector<std::string> tokens;
    std::istringstream is(pattern);
    for (std::string t; is >> t;) tokens.push_back(t);
    std::set<std::string> based;
    for (std::size_t r = 0; r < tokens.size(); ++r) {
        std::map<std::string, int> relabel;
        std::string text;
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            const std::string& t = tokens[(r + i) % tokens.size()];
            auto [it, fresh] = relabel.emplace(t.substr(1), static_cast<int>(relabel.size()) + 1);
            text += (i ? " " : "") + t.substr(0, 1) + std::to_string(it->second);
        }
        based.insert(text);
    }
    std::int64_t total = 0;
    for (const auto& b : based) total += count_pattern(g, b);
    return total;
}

std::int64_t v3_gauss(const GaussCode& g) {
    std::int64_t twice = count_circle_pattern(g, "O1 O2 U3 U1 O3 U2") + 2 * count_circle_pattern(g, "O1 U2 O3 U1 O2 U3");
    if (twice % 2 != 0) throw std::logic_error("order-3 Gauss sum is odd");
    return twice / 2;
}

InvariantSuite invariant_suite(const Diagram& knot) {
    InvariantSuite s;
    s.conway = conway(knot);
    s.v3 = v3_gauss(to_gauss_code(knot));
    return s;
}

}  // namespace gordian
