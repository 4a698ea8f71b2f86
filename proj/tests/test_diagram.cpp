#include <doctest.h>

#include "core/diagram.hpp"
#include "core/error.hpp"

using namespace gca;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

} // namespace

TEST_CASE("layout of words") {
    // empty word: one identity row, 4 vertical strands at n=2
    Layout empty = layout_word(BraidWord{}, 2, false);
    REQUIRE(empty.rows.size() == 1);
    CHECK(empty.rows[0].kind == DiagramRow::Kind::identity);

    // a single adjacent braid renders as a single crossing
    Layout single = layout_word(BraidWord{{{2, 3}}}, 2, false);
    REQUIRE(single.rows.size() == 1);
    CHECK(single.rows[0].kind == DiagramRow::Kind::crossing);
    CHECK(single.rows[0].strand == 2);
    CHECK(single.rows[0].positive);

    // adjoint braids flip the crossing sign
    Layout adj = layout_word(BraidWord{{{3, 2}}}, 2, false);
    CHECK_FALSE(adj.rows[0].positive);

    // nonlocal braids render as labeled boxes
    Layout box = layout_word(BraidWord{{{1, 3}}}, 2, false);
    CHECK(box.rows[0].kind == DiagramRow::Kind::box);
    CHECK(box.rows[0].label == "b[1,3]*");
}

TEST_CASE("slide-move state layout has the caps-atop-crossings structure") {
    AstPtr ast = parse_expression("(b[2,3]*b[3,4]*b[1,2]*b[2,3])|vac>");
    Layout layout = layout_expr(ast, 2);
    REQUIRE(layout.rows.size() == 6);
    CHECK(layout.rows[0].kind == DiagramRow::Kind::ground_caps);
    for (int i = 1; i <= 4; ++i) CHECK(layout.rows[i].kind == DiagramRow::Kind::crossing);
    CHECK(layout.rows[5].kind == DiagramRow::Kind::identity);
    // rightmost factor is the top operator row
    CHECK(layout.rows[1].strand == 2);
    CHECK(layout.rows[2].strand == 1);
    CHECK(layout.rows[3].strand == 3);
    CHECK(layout.rows[4].strand == 2);
}

TEST_CASE("projector and charge-label layouts") {
    Layout proj = layout_expr(parse_expression("E[1]"), 2);
    REQUIRE(proj.rows.size() == 1);
    CHECK(proj.rows[0].kind == DiagramRow::Kind::cap_cup);
    CHECK(proj.rows[0].strand == 1);
    CHECK(proj.rows[0].strand2 == 2);

    Layout charge = layout_expr(parse_expression("c[3]^2"), 2);
    REQUIRE(charge.rows.size() == 1);
    CHECK(charge.rows[0].kind == DiagramRow::Kind::charge_label);
    CHECK(charge.rows[0].strand == 3);
    CHECK(charge.rows[0].exponent == 2);

    // straddling cap-cup placements are rejected
    CHECK_THROWS_AS(cap_cup_row(2, 3), UsageError);
    CHECK_THROWS_AS(cap_cup_row(1, 3), UsageError);
    CHECK_NOTHROW(cap_cup_row(3, 4));
}

TEST_CASE("layout rejects invalid input") {
    CHECK_THROWS_AS(layout_word(BraidWord{{{1, 5}}}, 2, false), UsageError);
    CHECK_THROWS_AS(layout_expr(parse_expression("E[3]"), 2), UsageError);
    CHECK_THROWS_AS(layout_expr(parse_expression("c[1]+c[2]"), 2), UsageError);
}

TEST_CASE("distinct words produce distinct layouts") {
    Layout a = layout_word(BraidWord{{{1, 2}, {2, 3}}}, 2, false);
    Layout b = layout_word(BraidWord{{{2, 3}, {1, 2}}}, 2, false);
    Layout c = layout_word(BraidWord{{{1, 2}, {2, 3}}}, 2, false);
    CHECK(a == c);
    CHECK_FALSE(a == b);
}

TEST_CASE("svg output") {
    // identity layout at n=1: exactly two line segments
    Layout identity = layout_word(BraidWord{}, 1, false);
    std::string svg = emit_svg(identity);
    CHECK(count_occurrences(svg, "<line") == 2);
    CHECK(svg.find("<svg xmlns") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);

    // deterministic bytes
    Layout slide = layout_expr(parse_expression("(b[2,3]*b[3,4]*b[1,2]*b[2,3])|vac>"), 2);
    CHECK(emit_svg(slide) == emit_svg(slide));
    std::string s = emit_svg(slide);
    CHECK(count_occurrences(s, "<path") == 2); // two ground caps

    // geometry constants are configurable
    DiagramGeometry wide;
    wide.strand_pitch = 80;
    CHECK(emit_svg(slide, wide) != s);
}

TEST_CASE("tikz output mirrors the primitive macros") {
    Layout slide = layout_expr(parse_expression("(b[2,3]*b[3,4]*b[1,2]*b[2,3])|vac>"), 2);
    std::string tikz = emit_tikz(slide);
    CHECK(count_occurrences(tikz, "\\fbraid") == 4);
    CHECK(count_occurrences(tikz, "\\fqudit") == 2);
    CHECK(emit_tikz(slide) == emit_tikz(slide));

    Layout proj = layout_expr(parse_expression("E[1]"), 1);
    std::string ptikz = emit_tikz(proj);
    CHECK(ptikz.find("\\fqudit") != std::string::npos);
    CHECK(ptikz.find("\\fmeasure") != std::string::npos);
}
