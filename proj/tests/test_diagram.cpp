#include <gtest/gtest.h>

#include <set>

#include "gordian/diagram.hpp"
#include "gordian/planar.hpp"

using namespace gordian;

namespace {

const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const char* kHopf = "X(1,3,2,4) X(3,1,4,2)";
const char* kFigureEight = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

std::multiset<int> signs(const Diagram& d) {
    std::multiset<int> s;
    for (const auto& c : d.crossings()) s.insert(c.sign);
    return s;
}

}  // namespace

TEST(ParsePd, Kink) {
    Diagram d = parse_pd("X(1,2,2,1)");
    EXPECT_EQ(d.crossing_count(), 1);
    EXPECT_EQ(d.component_count(), 1);
}

TEST(ParsePd, TrefoilSignsAgree) {
    Diagram d = parse_pd(kTrefoil);
    EXPECT_EQ(d.crossing_count(), 3);
    EXPECT_EQ(d.component_count(), 1);
    for (const auto& c : d.crossings()) EXPECT_EQ(c.sign, d.crossings()[0].sign);
    // over strand of X(1,4,2,5) runs 4 -> 5, which is the left-handed convention
    EXPECT_EQ(d.crossings()[0].sign, -1);
}

TEST(ParsePd, SuccessorIsBijection) {
    Diagram d = parse_pd(kFigureEight);
    std::set<int> image;
    for (int l : d.labels()) image.insert(d.successor(l));
    EXPECT_EQ(image.size(), d.labels().size());
    for (int l : d.labels()) EXPECT_EQ(d.predecessor(d.successor(l)), l);
}

TEST(ParsePd, LabelCoverage) {
    EXPECT_THROW(parse_pd("X(1,4,2,3)"), DiagramError);
    EXPECT_THROW(parse_pd("X(1,2,3,4) X(1,2,3,5) X(4,5,6,6)"), DiagramError);
}

TEST(ParsePd, MalformedRecordIsNamed) {
    try {
        parse_pd("X(1,2,2,1) Y(3)");
        FAIL();
    } catch (const DiagramError& e) {
        EXPECT_NE(std::string(e.what()).find("Y(3)"), std::string::npos);
    }
}

TEST(ParsePd, InconsistentOrientation) {
    // both ends of edge 1 are incoming-under ports
    EXPECT_THROW(parse_pd("X(1,3,2,4) X(1,4,2,3)"), DiagramError);
}

TEST(ParsePd, NonPlanarRejected) {
    // the virtual trefoil: a Gauss code with no planar realization
    GaussCode g = parse_gauss("O1- U2- U1- O2-");
    EXPECT_THROW(from_gauss_code(g), DiagramError);
}

TEST(ParsePd, CommentsAndAnnotation) {
    Diagram d = parse_pd("# a Hopf link\nX(1,3,2,4) X(3,1,4,2) # done\ncomponents=3");
    EXPECT_EQ(d.component_count(), 3);
    EXPECT_EQ(d.free_loops(), 1);
}

TEST(EmitPd, EmptyUnknot) {
    EXPECT_EQ(emit_pd(Diagram::unknot()), "components=1");
    Diagram u = parse_pd(emit_pd(Diagram::unknot()));
    EXPECT_EQ(u.component_count(), 1);
    EXPECT_EQ(u.crossing_count(), 0);
}

TEST(EmitPd, Unlink) {
    std::string t = emit_pd(Diagram::unlink(2));
    EXPECT_NE(t.find("components=2"), std::string::npos);
    EXPECT_EQ(parse_pd(t).component_count(), 2);
}

TEST(EmitPd, RoundTrip) {
    for (const char* pd : {kTrefoil, kHopf, kFigureEight, "X(1,2,2,1)"}) {
        Diagram d = parse_pd(pd);
        Diagram e = parse_pd(emit_pd(d));
        EXPECT_EQ(e.crossing_count(), d.crossing_count());
        EXPECT_EQ(e.component_count(), d.component_count());
        EXPECT_EQ(signs(e), signs(d));
    }
}

TEST(GaussCode, Kink) {
    GaussCode g = to_gauss_code(parse_pd("X(1,2,2,1)"), 1);
    ASSERT_EQ(g.components.size(), 1u);
    ASSERT_EQ(g.components[0].size(), 2u);
    EXPECT_NE(g.components[0][0].over, g.components[0][1].over);
}

TEST(GaussCode, TrefoilAlternates) {
    GaussCode g = to_gauss_code(parse_pd(kTrefoil), 1);
    const auto& c = g.components[0];
    ASSERT_EQ(c.size(), 6u);
    for (std::size_t i = 0; i < c.size(); ++i) EXPECT_NE(c[i].over, c[(i + 1) % c.size()].over);
}

TEST(GaussCode, BasepointRotates) {
    Diagram d = parse_pd(kFigureEight);
    auto base = to_gauss_code(d, 1).components[0];
    for (int b : d.labels()) {
        auto rot = to_gauss_code(d, b).components[0];
        ASSERT_EQ(rot.size(), base.size());
        bool found = false;
        for (std::size_t s = 0; s < base.size() && !found; ++s) {
            bool ok = true;
            for (std::size_t i = 0; i < base.size(); ++i) ok = ok && rot[i] == base[(i + s) % base.size()];
            found = ok;
        }
        EXPECT_TRUE(found) << "basepoint " << b;
    }
    EXPECT_THROW(to_gauss_code(d, 99), DiagramError);
}

TEST(GaussCode, TextRoundTripAndRebuild) {
    for (const char* pd : {kTrefoil, kHopf, kFigureEight}) {
        Diagram d = parse_pd(pd);
        GaussCode g = to_gauss_code(d);
        EXPECT_EQ(parse_gauss(emit_gauss(g)), GaussCode({g.components, 0}));
        Diagram r = from_gauss_code(g);
        EXPECT_EQ(r.crossing_count(), d.crossing_count());
        EXPECT_EQ(r.component_count(), d.component_count());
        EXPECT_EQ(signs(r), signs(d));
    }
}

TEST(ComponentLabels, Orbits) {
    auto u = component_labels(parse_pd("X(1,2,2,1)"));
    for (auto [l, c] : u) EXPECT_EQ(c, 0);
    auto h = component_labels(parse_pd(kHopf));
    EXPECT_EQ(h.at(1), h.at(2));
    EXPECT_EQ(h.at(3), h.at(4));
    EXPECT_NE(h.at(1), h.at(3));
    EXPECT_EQ(h.at(1), 0);
    std::set<int> t;
    for (auto [l, c] : component_labels(parse_pd(kTrefoil))) t.insert(c);
    EXPECT_EQ(t.size(), 1u);
}

TEST(Simplify, Kink) {
    Diagram s = simplify(parse_pd("X(1,2,2,1)"));
    EXPECT_EQ(s.crossing_count(), 0);
    EXPECT_EQ(s.component_count(), 1);
}

TEST(Simplify, Bigon) {
    // one circle laid over another: a removable bigon
    Diagram d = from_gauss_code(parse_gauss("O1+ O2- | U1+ U2-"));
    EXPECT_EQ(d.crossing_count(), 2);
    Diagram s = simplify(d);
    EXPECT_EQ(s.crossing_count(), 0);
    EXPECT_EQ(s.component_count(), 2);
}

TEST(Simplify, ClaspKept) {
    Diagram s = simplify(parse_pd(kHopf));
    EXPECT_EQ(s.crossing_count(), 2);
}

TEST(Simplify, TrefoilUnchanged) {
    Diagram d = parse_pd(kTrefoil);
    Diagram s = simplify(d);
    EXPECT_EQ(s.crossing_count(), 3);
    EXPECT_EQ(simplify(s), s);
}

TEST(KnotTable, Rows) {
    auto rows = read_knot_table("name,pd\n# c\nunknot,components=1\ntrefoil,X(1,4,2,5), X(3,6,4,1), X(5,2,6,3)\n");
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[1].name, "trefoil");
    EXPECT_EQ(parse_pd(rows[1].pd).crossing_count(), 3);
    EXPECT_THROW(read_knot_table("broken row\n"), DiagramError);
}
