#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pbq/diagram.hpp"
#include "support/gen.hpp"

using namespace pbq;
using pbq::testing::random_diagram;
using pbq::testing::Rng;
using pbq::testing::uniform;

TEST_CASE("parse and serialize round-trip") {
    const std::string code = "O1-,O2-,U1-,O3+,U2-,U3+";
    Diagram d = Diagram::parse(code);
    CHECK(d.serialize() == code);
    CHECK(d.component_count() == 1);
    CHECK(d.total_passes() == 6);
    CHECK(d.real_crossing_count() == 3);
    CHECK(d.virtual_crossing_count() == 0);
    CHECK(d.writhe() == -1);
    CHECK(d.max_crossing_id() == 3);
    CHECK(!d.has_virtual());
    CHECK(!d.has_empty_component());
    CHECK(Diagram::parse(d.serialize()) == d);
}

TEST_CASE("leading zero digit reads as O") {
    CHECK(Diagram::parse("01-,02-,U1-,03+,U2-,U3+") == Diagram::parse("O1-,O2-,U1-,O3+,U2-,U3+"));
}

TEST_CASE("whitespace is ignored") {
    CHECK(Diagram::parse(" O1- , O2- ,U1-,\tO3+,U2-, U3+ ") ==
          Diagram::parse("O1-,O2-,U1-,O3+,U2-,U3+"));
}

TEST_CASE("sign policy") {
    CHECK_THROWS_AS(Diagram::parse("O1,U1"), ParseError);
    Diagram d = Diagram::parse("O1,U1", SignPolicy::Permissive);
    CHECK(d == Diagram::parse("O1+,U1+"));
    // Mixed: present signs win, absent default to +.
    CHECK(Diagram::parse("O1,U1,O2-,U2-", SignPolicy::Permissive) ==
          Diagram::parse("O1+,U1+,O2-,U2-"));
}

TEST_CASE("parse error positions") {
    try {
        Diagram::parse("O1+,U1+;U2-,X3+");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.component == 1);
        CHECK(e.token == 1);
    }
}

TEST_CASE("validation errors") {
    // Each crossing id must appear exactly twice.
    CHECK_THROWS_AS(Diagram::parse("O1-,U2-"), Error);
    CHECK_THROWS_AS(Diagram::parse("O1+,U1+,O1+,U1+"), Error);
    // A real crossing needs one O and one U.
    CHECK_THROWS_AS(Diagram::parse("O1+,O1+"), Error);
    // Signs of the two passes must agree.
    CHECK_THROWS_AS(Diagram::parse("O1+,U1-"), Error);
    // Virtual and real passes cannot share an id.
    CHECK_THROWS_AS(Diagram::parse("O1+,V1,U1+,V1"), Error);
    // Virtual passes carry no sign.
    CHECK_THROWS_AS(Diagram::parse("V1+,V1+"), ParseError);
    // Garbage token.
    CHECK_THROWS_AS(Diagram::parse("Q1+,Q1+"), ParseError);
    // Missing id digits.
    CHECK_THROWS_AS(Diagram::parse("O+,U+"), ParseError);
}

TEST_CASE("virtual passes round-trip") {
    const std::string code = "O1+,V2,U1+,V2";
    Diagram d = Diagram::parse(code);
    CHECK(d.serialize() == code);
    CHECK(d.real_crossing_count() == 1);
    CHECK(d.virtual_crossing_count() == 1);
    CHECK(d.has_virtual());
    const CrossingInfo& v = d.crossings().at(2);
    CHECK(v.is_virtual);
    CHECK(v.sign == 0);
    CHECK(v.a == Loc{0, 1});
    CHECK(v.b == Loc{0, 3});
}

TEST_CASE("crossing index holds over and under locations") {
    Diagram d = Diagram::parse("O1-,O2-,U1-,O3+,U2-,U3+");
    const CrossingInfo& c1 = d.crossings().at(1);
    CHECK(!c1.is_virtual);
    CHECK(c1.sign == -1);
    CHECK(c1.a == Loc{0, 0});  // over pass
    CHECK(c1.b == Loc{0, 2});  // under pass
    const CrossingInfo& c3 = d.crossings().at(3);
    CHECK(c3.sign == 1);
    CHECK(c3.a == Loc{0, 3});
    CHECK(c3.b == Loc{0, 5});
}

TEST_CASE("multi-component parsing") {
    Diagram d = Diagram::parse("O1,O7,O3,U1,U2,U3,O2;U4,O5,U6,U5,O4,O6,U7", SignPolicy::Permissive);
    CHECK(d.component_count() == 2);
    CHECK(d.pass_count(0) == 7);
    CHECK(d.pass_count(1) == 7);
    CHECK(d.real_crossing_count() == 7);
    const CrossingInfo& c7 = d.crossings().at(7);
    CHECK(c7.a.component == 0);
    CHECK(c7.b.component == 1);
}

TEST_CASE("empty components") {
    Diagram unknot = Diagram::parse("");
    CHECK(unknot.component_count() == 1);
    CHECK(unknot.total_passes() == 0);
    CHECK(unknot.has_empty_component());
    CHECK(unknot.writhe() == 0);

    Diagram d = Diagram::parse("O1+,U1+;");
    CHECK(d.component_count() == 2);
    CHECK(d.has_empty_component());
    CHECK(d.serialize() == "O1+,U1+;");
}

TEST_CASE("writhe counts signs") {
    CHECK(Diagram::parse("O1-,O2-,U3+,U1-,O4-,U2-,O3+,U4-").writhe() == -2);
    CHECK(Diagram::parse("O1-,O7-,O3+,U1-,U2-,U3+,O2-;U4-,O5+,U6-,U5+,O4-,O6-,U7-").writhe() == -3);
    // Virtual crossings do not contribute.
    CHECK(Diagram::parse("O1+,V2,U1+,V2").writhe() == 1);
}

TEST_CASE("kink insertion on the unknot") {
    Diagram kink = r1_insert(Diagram::parse(""), {0, 0}, KinkOrder::OverFirst, 1);
    CHECK(kink.serialize() == "O1+,U1+");
    Diagram under = r1_insert(Diagram::parse(""), {0, 0}, KinkOrder::UnderFirst, -1);
    CHECK(under.serialize() == "U1-,O1-");
    CHECK(r1_remove(kink, 1).serialize() == "");
}

TEST_CASE("kink insertion uses fresh ids and round-trips") {
    Diagram d = Diagram::parse("O1-,O2-,U1-,O3+,U2-,U3+");
    for (int arc = 0; arc < 6; ++arc) {
        for (KinkOrder order : {KinkOrder::OverFirst, KinkOrder::UnderFirst}) {
            for (int sign : {1, -1}) {
                Diagram k = r1_insert(d, {0, arc}, order, sign);
                CHECK(k.total_passes() == 8);
                CHECK(k.real_crossing_count() == 4);
                CHECK(k.crossings().count(4) == 1);
                CHECK(k.crossings().at(4).sign == sign);
                CHECK(r1_remove(k, 4) == d);
            }
        }
    }
}

TEST_CASE("kink removal validates adjacency") {
    Diagram d = Diagram::parse("O1-,O2-,U1-,O3+,U2-,U3+");
    CHECK_THROWS_AS(r1_remove(d, 1), Error);  // passes are not adjacent
    CHECK_THROWS_AS(r1_remove(d, 9), Error);  // no such crossing
    Diagram v = Diagram::parse("V1,V1");
    CHECK_THROWS_AS(r1_remove(v, 1), Error);  // virtual
}

TEST_CASE("kink removal accepts the wrap-around position") {
    // The two kink passes are cyclically adjacent: last and first.
    Diagram d = Diagram::parse("U4+,O1-,O2-,U1-,O3+,U2-,U3+,O4+");
    Diagram r = r1_remove(d, 4);
    CHECK(r == Diagram::parse("O1-,O2-,U1-,O3+,U2-,U3+"));
}

TEST_CASE("clasp insertion across an empty two-component link") {
    Diagram d = Diagram::parse(";");
    R2Insertion ins = r2_insert(d, {0, 0}, {1, 0}, true, 1);
    CHECK(ins.diagram.serialize() == "O1+,O2-;U2-,U1+");
    CHECK(ins.id_a == 1);
    CHECK(ins.id_b == 2);
    CHECK(r2_remove(ins.diagram, 1, 2) == d);
}

TEST_CASE("r2 round-trips on arcs of one component") {
    Diagram d = Diagram::parse("O1-,O2-,U1-,O3+,U2-,U3+");
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
            if (a == b) continue;
            for (bool over_first : {true, false}) {
                for (int eps : {1, -1}) {
                    R2Insertion ins = r2_insert(d, {0, a}, {0, b}, over_first, eps);
                    CHECK(ins.diagram.total_passes() == 10);
                    CHECK(ins.diagram.crossings().at(ins.id_a).sign == eps);
                    CHECK(ins.diagram.crossings().at(ins.id_b).sign == -eps);
                    CHECK(r2_remove(ins.diagram, ins.id_a, ins.id_b) == d);
                    CHECK(r2_remove(ins.diagram, ins.id_b, ins.id_a) == d);
                }
            }
        }
    }
    CHECK_THROWS_AS(r2_insert(d, {0, 2}, {0, 2}, true, 1), Error);
}

TEST_CASE("r2 removal validates the pattern") {
    Diagram d = Diagram::parse("O1-,O2-,U1-,O3+,U2-,U3+");
    // Crossings 1 and 2 have equal signs and are not an r2 pair.
    CHECK_THROWS_AS(r2_remove(d, 1, 2), Error);
    Diagram clasp = Diagram::parse("O1+,O2-;U2-,U1+");
    CHECK_THROWS_AS(r2_remove(clasp, 1, 1), Error);
    CHECK_THROWS_AS(r2_remove(clasp, 1, 3), Error);
}

TEST_CASE("rotation moves the base point") {
    Diagram d = Diagram::parse("O1-,O2-,U1-,O3+,U2-,U3+");
    CHECK(rotated(d, 0, 2).serialize() == "U1-,O3+,U2-,U3+,O1-,O2-");
    CHECK(rotated(d, 0, 0) == d);
    CHECK(rotated(d, 0, 6) == d);
    CHECK(rotated(d, 0, -2) == rotated(d, 0, 4));
    CHECK(rotated(rotated(d, 0, 2), 0, 4) == d);

    Diagram link = Diagram::parse("O1+,O2-;U2-,U1+");
    CHECK(rotated(link, 1, 1).serialize() == "O1+,O2-;U1+,U2-");
}

TEST_CASE("random diagrams are valid and round-trip") {
    Rng rng(20260816);
    for (int iter = 0; iter < 300; ++iter) {
        Diagram d = random_diagram(rng, 8, uniform(rng, 1, 2), 2);
        Diagram back = Diagram::parse(d.serialize());
        CHECK(back == d);
        int passes = 0;
        for (int c = 0; c < d.component_count(); ++c) passes += d.pass_count(c);
        CHECK(passes == d.total_passes());
        CHECK(2 * (d.real_crossing_count() + d.virtual_crossing_count()) == d.total_passes());
    }
}

TEST_CASE("random move sequences round-trip the diagram") {
    Rng rng(31337);
    Diagram base = Diagram::parse("O1-,O2-,U1-,O3+,U2-,U3+");
    for (int iter = 0; iter < 100; ++iter) {
        Diagram d = base;
        std::vector<std::pair<bool, std::pair<int, int>>> undo;  // (is_r2, ids)
        int moves = uniform(rng, 1, 4);
        for (int m = 0; m < moves; ++m) {
            if (uniform(rng, 0, 1)) {
                MoveSite site{0, uniform(rng, 0, d.pass_count(0) - 1)};
                KinkOrder order = uniform(rng, 0, 1) ? KinkOrder::OverFirst : KinkOrder::UnderFirst;
                d = r1_insert(d, site, order, uniform(rng, 0, 1) ? 1 : -1);
                undo.push_back({false, {d.max_crossing_id(), 0}});
            } else {
                int a = uniform(rng, 0, d.pass_count(0) - 1);
                int b = uniform(rng, 0, d.pass_count(0) - 1);
                if (a == b) continue;
                R2Insertion ins =
                    r2_insert(d, {0, a}, {0, b}, uniform(rng, 0, 1) == 1, uniform(rng, 0, 1) ? 1 : -1);
                d = ins.diagram;
                undo.push_back({true, {ins.id_a, ins.id_b}});
            }
        }
        for (auto it = undo.rbegin(); it != undo.rend(); ++it)
            d = it->first ? r2_remove(d, it->second.first, it->second.second)
                          : r1_remove(d, it->second.first);
        CHECK(d == base);
    }
}
