#pragma once

#include <string>
#include <vector>

#include "core/expr.hpp"

namespace gca {

// One rendered band of a diagram.  Crossings exist only for adjacent strands;
// nonlocal braids render as labeled boxes.  Cap-cups sit in place on the
// strand pair (2k-1, 2k) of a single qudit; straddling placements are
// rejected.
struct DiagramRow {
    enum class Kind { identity, charge_label, crossing, cap_cup, ground_caps, measure, box };
    Kind kind = Kind::identity;
    long strand = 0;      // charge label strand / crossing left strand / box low strand
    long strand2 = 0;     // box high strand
    long qudit = 0;       // cap_cup qudit index
    long exponent = 0;    // charge label value
    bool positive = true; // crossing or box orientation
    std::string label;    // box text

    bool operator==(const DiagramRow&) const = default;
};

struct Layout {
    long n = 0; // 2n strands
    std::vector<DiagramRow> rows;

    bool operator==(const Layout&) const = default;
};

DiagramRow identity_row();
DiagramRow charge_label_row(long strand, long exponent);
DiagramRow crossing_row(long left_strand, bool positive);
// Validates in-place placement: strands must be (2k-1, 2k).
DiagramRow cap_cup_row(long strand_lo, long strand_hi);
DiagramRow ground_caps_row();
DiagramRow measure_row();
DiagramRow box_row(long strand_lo, long strand_hi, bool positive, std::string label);

// Rows run top to bottom; reading them downward follows the operator
// composition right to left, so the rightmost factor of a word is the top
// operator row.  A vacuum-applied expression opens with the ground-caps row
// and closes with an identity row of outgoing strands.
Layout layout_word(const BraidWord& w, long n, bool with_vacuum);
Layout layout_expr(const AstPtr& ast, long n);

struct DiagramGeometry {
    double strand_pitch = 36;
    double row_height = 44;
    double margin = 18;
};

// Byte-deterministic standalone SVG 1.1.
std::string emit_svg(const Layout& layout, const DiagramGeometry& geo = {});
// TikZ fragment mirroring the graphical-primitive macros.
std::string emit_tikz(const Layout& layout, const DiagramGeometry& geo = {});

} // namespace gca
