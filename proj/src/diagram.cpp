#include "gordian/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

namespace gordian {

namespace {

std::string record_text(const Crossing& c) {
    std::ostringstream os;
    os << "X(" << c.x[0] << "," << c.x[1] << "," << c.x[2] << "," << c.x[3] << ")";
    return os.str();
}

int find_root(std::vector<int>& p, int a) {
    while (p[a] != a) a = p[a] = p[p[a]];
    return a;
}

}  // namespace

Diagram::Diagram(std::vector<Crossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
    if (free_loops_ < 0) throw DiagramError("negative free loop count");
    derive();
}

Diagram Diagram::unlink(int components) {
    if (components < 1) throw DiagramError("an unlink needs at least one component");
    return Diagram({}, components);
}

const Crossing& Diagram::crossing(int id) const {
    for (const auto& c : crossings_)
        if (c.id == id) return c;
    throw DiagramError("unknown crossing id " + std::to_string(id));
}

bool Diagram::has_crossing(int id) const {
    return std::any_of(crossings_.begin(), crossings_.end(), [&](const Crossing& c) { return c.id == id; });
}

int Diagram::max_id() const {
    int m = 0;
    for (const auto& c : crossings_) m = std::max(m, c.id);
    return m;
}

std::vector<int> Diagram::labels() const {
    std::vector<int> out;
    for (const auto& [l, s] : succ_) out.push_back(l);
    return out;
}

int Diagram::successor(int label) const {
    auto it = succ_.find(label);
    if (it == succ_.end()) throw DiagramError("no edge labelled " + std::to_string(label));
    return it->second;
}

int Diagram::predecessor(int label) const {
    auto it = pred_.find(label);
    if (it == pred_.end()) throw DiagramError("no edge labelled " + std::to_string(label));
    return it->second;
}

int Diagram::component_of(int label) const {
    auto it = comp_.find(label);
    if (it == comp_.end()) throw DiagramError("no edge labelled " + std::to_string(label));
    return it->second;
}

std::pair<int, int> Diagram::head(int label) const {
    auto it = head_.find(label);
    if (it == head_.end()) throw DiagramError("no edge labelled " + std::to_string(label));
    return it->second;
}

std::pair<int, int> Diagram::tail(int label) const {
    auto it = tail_.find(label);
    if (it == tail_.end()) throw DiagramError("no edge labelled " + std::to_string(label));
    return it->second;
}

void Diagram::derive() {
    const int n = crossing_count();
    std::set<int> ids;
    std::map<int, std::vector<std::pair<int, int>>> occ;
    for (int i = 0; i < n; ++i) {
        const auto& c = crossings_[i];
        if (c.id <= 0 || !ids.insert(c.id).second)
            throw DiagramError("crossing ids must be distinct and positive");
        for (int p = 0; p < 4; ++p) {
            if (c.x[p] <= 0) throw DiagramError("non-positive edge label in " + record_text(c));
            occ[c.x[p]].push_back({i, p});
        }
    }
    for (const auto& [label, where] : occ)
        if (where.size() != 2)
            throw DiagramError("label " + std::to_string(label) + " appears " + std::to_string(where.size()) +
                               " times (expected 2)");
    for (int l = 1; l <= 2 * n; ++l)
        if (!occ.count(l)) throw DiagramError("label-coverage violation: label " + std::to_string(l) + " unused");

    auto other = [&](int i, int p) {
        const auto& w = occ.at(crossings_[i].x[p]);
        return (w[0] == std::pair{i, p}) ? w[1] : w[0];
    };

    // io[i][p] = +1 if the strand enters crossing i through port p, -1 if it leaves.
    std::vector<std::array<int, 4>> io(n, std::array<int, 4>{0, 0, 0, 0});
    std::deque<std::pair<int, int>> queue;
    auto assign = [&](int i, int p, int v) {
        if (io[i][p] == 0) {
            io[i][p] = v;
            queue.push_back({i, p});
        } else if (io[i][p] != v) {
            throw DiagramError("inconsistent orientation at " + record_text(crossings_[i]));
        }
    };
    auto drain = [&]() {
        while (!queue.empty()) {
            auto [i, p] = queue.front();
            queue.pop_front();
            auto [j, q] = other(i, p);
            assign(j, q, -io[i][p]);
            if (p % 2 == 1) assign(i, p ^ 2, -io[i][p]);
        }
    };
    for (int i = 0; i < n; ++i) {
        assign(i, 0, +1);
        assign(i, 2, -1);
    }
    drain();
    // Annotated signs fix the direction of strands that only pass over.
    for (int i = 0; i < n; ++i) {
        if (crossings_[i].sign == 0 || io[i][1] != 0) continue;
        assign(i, crossings_[i].sign > 0 ? 3 : 1, +1);
        drain();
    }
    // Otherwise labels should increase along the strand at its first crossing.
    for (int i = 0; i < n; ++i) {
        if (io[i][1] != 0) continue;
        int p = crossings_[i].x[1], q = crossings_[i].x[3];
        bool b_first = (p < q) == (std::max(p, q) == std::min(p, q) + 1);
        assign(i, b_first ? 1 : 3, +1);
        drain();
    }

    succ_.clear();
    pred_.clear();
    head_.clear();
    tail_.clear();
    for (int i = 0; i < n; ++i) {
        auto& c = crossings_[i];
        int over_in = io[i][1] == 1 ? 1 : 3;
        int sign = over_in == 3 ? 1 : -1;
        if (c.sign != 0 && c.sign != sign)
            throw DiagramError("annotated sign disagrees with derived sign at " + record_text(c));
        c.sign = sign;
        c.over_in = over_in;
        for (int p = 0; p < 4; ++p) {
            if (io[i][p] == 1) {
                head_[c.x[p]] = {i, p};
                succ_[c.x[p]] = c.x[(p + 2) % 4];
                pred_[c.x[(p + 2) % 4]] = c.x[p];
            } else {
                tail_[c.x[p]] = {i, p};
            }
        }
    }

    comp_.clear();
    orbit_count_ = 0;
    for (const auto& [label, s] : succ_) {
        if (comp_.count(label)) continue;
        int l = label;
        do {
            comp_[l] = orbit_count_;
            l = succ_.at(l);
        } while (l != label);
        ++orbit_count_;
    }
    if (n == 0 && free_loops_ == 0) throw DiagramError("a diagram needs at least one component");

    // Planarity: each connected piece with V crossings must bound V + 2 faces.
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& [label, where] : occ)
        parent[find_root(parent, where[0].first)] = find_root(parent, where[1].first);
    std::vector<std::array<bool, 4>> seen(n, std::array<bool, 4>{});
    std::map<int, int> faces, verts;
    for (int i = 0; i < n; ++i) ++verts[find_root(parent, i)];
    for (int i = 0; i < n; ++i)
        for (int p = 0; p < 4; ++p) {
            if (seen[i][p]) continue;
            ++faces[find_root(parent, i)];
            int a = i, b = p;
            while (!seen[a][b]) {
                seen[a][b] = true;
                auto [j, q] = other(a, b);
                a = j;
                b = (q + 3) % 4;
            }
        }
    for (const auto& [root, v] : verts)
        if (faces[root] != v + 2) throw DiagramError("diagram is not planar");
}

void MarkedDiagram::validate() const {
    if (diagram.component_count() != 1) throw DiagramError("a marked diagram must be a knot");
    if (mark_a == mark_b) throw DiagramError("marks A and B must differ");
    if (!diagram.has_crossing(mark_a)) throw DiagramError("mark A is not a crossing");
    if (!diagram.has_crossing(mark_b)) throw DiagramError("mark B is not a crossing");
    if (mark_c && !diagram.has_crossing(*mark_c)) throw DiagramError("mark C is not a crossing");
}

Diagram parse_pd(const std::string& text) {
    std::string body;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        body += line;
        body += '\n';
    }
    std::optional<int> components;
    static const std::regex annot(R"(components\s*=\s*(\d+))");
    std::smatch m;
    while (std::regex_search(body, m, annot)) {
        if (components) throw DiagramError("duplicate components annotation");
        components = std::stoi(m[1]);
        body = m.prefix().str() + " " + m.suffix().str();
    }

    static const std::regex rec(R"(^X\s*[\(\[]\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*[\)\]])");
    std::vector<Crossing> cs;
    std::size_t pos = 0;
    while (pos < body.size()) {
        char ch = body[pos];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == ';') {
            ++pos;
            continue;
        }
        auto rest = body.substr(pos);
        if (!std::regex_search(rest, m, rec)) {
            auto end = rest.find_first_of(" \t\n");
            throw DiagramError("malformed record '" + rest.substr(0, end) + "'");
        }
        Crossing c;
        c.id = static_cast<int>(cs.size()) + 1;
        for (int k = 0; k < 4; ++k) c.x[k] = std::stoi(m[k + 1]);
        cs.push_back(c);
        pos += m.length(0);
    }

    Diagram probe(cs, 0 + (cs.empty() ? 1 : 0));
    int free = 0;
    if (components) {
        int orbits = probe.component_count() - probe.free_loops();
        if (*components < orbits || *components < 1)
            throw DiagramError("components annotation smaller than the number of strands");
        free = *components - orbits;
    } else if (cs.empty()) {
        free = 1;
    }
    return Diagram(std::move(cs), free);
}

std::string emit_pd(const Diagram& d) {
    std::ostringstream os;
    bool first = true;
    for (const auto& c : d.crossings()) {
        if (!first) os << ' ';
        os << record_text(c);
        first = false;
    }
    if (d.free_loops() > 0) {
        if (!first) os << '\n';
        os << "components=" << d.component_count();
    }
    return os.str();
}

GaussCode to_gauss_code(const Diagram& d, int basepoint) {
    GaussCode g;
    g.basepoint = basepoint;
    if (!d.has_label(basepoint)) throw DiagramError("basepoint " + std::to_string(basepoint) + " is not an edge");
    std::vector<int> starts(d.component_count() - d.free_loops(), 0);
    for (int l : d.labels())
        if (starts[d.component_of(l)] == 0) starts[d.component_of(l)] = l;
    int first = d.component_of(basepoint);
    starts[first] = basepoint;
    std::vector<int> order{first};
    for (int k = 0; k < static_cast<int>(starts.size()); ++k)
        if (k != first) order.push_back(k);
    for (int k : order) {
        std::vector<GaussVisit> comp;
        int l = starts[k];
        do {
            auto [ci, port] = d.head(l);
            const auto& c = d.crossings()[ci];
            comp.push_back({c.id, port != 0, c.sign});
            l = d.successor(l);
        } while (l != starts[k]);
        g.components.push_back(std::move(comp));
    }
    for (int k = 0; k < d.free_loops(); ++k) g.components.emplace_back();
    return g;
}

GaussCode to_gauss_code(const Diagram& d) {
    if (d.crossing_count() == 0) {
        GaussCode g;
        g.components.resize(d.component_count());
        return g;
    }
    return to_gauss_code(d, d.labels().front());
}

std::string emit_gauss(const GaussCode& g) {
    std::ostringstream os;
    for (std::size_t k = 0; k < g.components.size(); ++k) {
        if (k) os << '\n';
        if (g.components[k].empty()) os << "()";
        bool first = true;
        for (const auto& v : g.components[k]) {
            if (!first) os << ' ';
            os << (v.over ? 'O' : 'U') << v.crossing << (v.sign > 0 ? '+' : '-');
            first = false;
        }
    }
    return os.str();
}

GaussCode parse_gauss(const std::string& text) {
    GaussCode g;
    std::string flat;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        flat += line;
        flat += '|';
    }
    static const std::regex tok(R"(^([OU])(\d+)([+-])$)");
    std::stringstream parts(flat);
    std::string part;
    while (std::getline(parts, part, '|')) {
        std::istringstream ts(part);
        std::string t;
        std::vector<GaussVisit> comp;
        bool any = false;
        while (ts >> t) {
            any = true;
            if (t == "()") continue;
            std::smatch m;
            if (!std::regex_match(t, m, tok)) throw DiagramError("malformed Gauss token '" + t + "'");
            comp.push_back({std::stoi(m[2]), m[1] == "O", m[3] == "+" ? 1 : -1});
        }
        if (any) g.components.push_back(std::move(comp));
    }
    if (g.components.empty()) throw DiagramError("empty Gauss code");
    return g;
}

Diagram from_gauss_code(const GaussCode& g) {
    struct Seen {
        int under_in = 0, under_out = 0, over_in = 0, over_out = 0;
        int sign = 0, count = 0;
        bool has_over = false, has_under = false;
    };
    std::map<int, Seen> at;
    int base = 1, free = 0;
    for (const auto& comp : g.components) {
        if (comp.empty()) {
            ++free;
            continue;
        }
        int n = static_cast<int>(comp.size());
        for (int k = 0; k < n; ++k) {
            const auto& v = comp[k];
            auto& s = at[v.crossing];
            if (v.sign != 1 && v.sign != -1) throw DiagramError("Gauss visit without sign");
            if (s.count && s.sign != v.sign)
                throw DiagramError("crossing " + std::to_string(v.crossing) + " has unequal signs");
            s.sign = v.sign;
            ++s.count;
            int in = base + k, out = base + (k + 1) % n;
            if (v.over) {
                if (s.has_over) throw DiagramError("crossing " + std::to_string(v.crossing) + " visited over twice");
                s.has_over = true;
                s.over_in = in;
                s.over_out = out;
            } else {
                if (s.has_under) throw DiagramError("crossing " + std::to_string(v.crossing) + " visited under twice");
                s.has_under = true;
                s.under_in = in;
                s.under_out = out;
            }
        }
        base += n;
    }
    std::vector<Crossing> cs;
    for (const auto& [id, s] : at) {
        if (s.count != 2 || !s.has_over || !s.has_under)
            throw DiagramError("crossing " + std::to_string(id) + " must be visited once over and once under");
        Crossing c;
        c.id = id;
        if (s.sign > 0)
            c.x = {s.under_in, s.over_out, s.under_out, s.over_in};
        else
            c.x = {s.under_in, s.over_in, s.under_out, s.over_out};
        c.sign = s.sign;
        cs.push_back(c);
    }
    return Diagram(std::move(cs), free);
}

std::map<int, int> component_labels(const Diagram& d) {
    std::map<int, int> out;
    for (int l : d.labels()) out[l] = d.component_of(l);
    return out;
}

Crossing flip_crossing(const Crossing& c) {
    Crossing f = c;
    if (c.over_in == 3)
        f.x = {c.x[3], c.x[0], c.x[1], c.x[2]};
    else
        f.x = {c.x[1], c.x[2], c.x[3], c.x[0]};
    f.sign = -c.sign;
    return f;
}

Diagram mirror(const Diagram& d) {
    std::vector<Crossing> cs;
    for (const auto& c : d.crossings()) cs.push_back(flip_crossing(c));
    return Diagram(std::move(cs), d.free_loops());
}

Diagram renumber_ids(const Diagram& d) {
    std::vector<Crossing> cs = d.crossings();
    for (std::size_t i = 0; i < cs.size(); ++i) cs[i].id = static_cast<int>(i) + 1;
    return Diagram(std::move(cs), d.free_loops());
}

std::vector<TableEntry> read_knot_table(const std::string& csv_text) {
    std::vector<TableEntry> out;
    std::istringstream lines(csv_text);
    std::string line;
    int row = 0;
    while (std::getline(lines, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw DiagramError("row " + std::to_string(row) + ": expected name,pd_text");
        TableEntry e;
        e.name = line.substr(first, comma - first);
        e.pd = line.substr(comma + 1);
        e.row = row;
        while (!e.name.empty() && std::isspace(static_cast<unsigned char>(e.name.back()))) e.name.pop_back();
        if (e.name.empty()) throw DiagramError("row " + std::to_string(row) + ": empty name");
        if (out.empty() && e.name == "name") continue;
        auto lead = e.pd.find_first_not_of(" \t");
        if (lead != std::string::npos && e.pd[lead] == '"') {
            auto close = e.pd.find('"', lead + 1);
            if (close == std::string::npos) throw DiagramError("row " + std::to_string(row) + ": unterminated quote");
            std::string rest = e.pd.substr(close + 1);
            e.pd = e.pd.substr(lead + 1, close - lead - 1);
            std::istringstream fields(rest);
            std::string field;
            while (std::getline(fields, field, ',')) {
                auto b = field.find_first_not_of(" \t");
                if (b == std::string::npos) continue;
                auto eq = field.find('=');
                if (eq == std::string::npos || eq <= b)
                    throw DiagramError("row " + std::to_string(row) + ": expected key=value, got '" + field + "'");
                std::string key = field.substr(b, eq - b);
                while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
                e.expected[key] = field.substr(eq + 1);
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace gordian
