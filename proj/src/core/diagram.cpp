#include "core/diagram.hpp"

#include <cstdio>

#include "core/error.hpp"

namespace gca {

DiagramRow identity_row() { return DiagramRow{}; }

DiagramRow charge_label_row(long strand, long exponent) {
    DiagramRow r;
    r.kind = DiagramRow::Kind::charge_label;
    r.strand = strand;
    r.exponent = exponent;
    return r;
}

DiagramRow crossing_row(long left_strand, bool positive) {
    DiagramRow r;
    r.kind = DiagramRow::Kind::crossing;
    r.strand = left_strand;
    r.positive = positive;
    return r;
}

DiagramRow cap_cup_row(long strand_lo, long strand_hi) {
    if (strand_hi != strand_lo + 1 || strand_lo % 2 != 1)
        throw UsageError("cap-cup placement must sit in place on strands (2k-1, 2k); got (" +
                         std::to_string(strand_lo) + ", " + std::to_string(strand_hi) + ")");
    DiagramRow r;
    r.kind = DiagramRow::Kind::cap_cup;
    r.strand = strand_lo;
    r.strand2 = strand_hi;
    r.qudit = (strand_lo + 1) / 2;
    return r;
}

DiagramRow ground_caps_row() {
    DiagramRow r;
    r.kind = DiagramRow::Kind::ground_caps;
    return r;
}

DiagramRow measure_row() {
    DiagramRow r;
    r.kind = DiagramRow::Kind::measure;
    return r;
}

DiagramRow box_row(long strand_lo, long strand_hi, bool positive, std::string label) {
    DiagramRow r;
    r.kind = DiagramRow::Kind::box;
    r.strand = strand_lo;
    r.strand2 = strand_hi;
    r.positive = positive;
    r.label = std::move(label);
    return r;
}

namespace {

void append_factor_row(std::vector<DiagramRow>& rows, int k, int l, long n) {
    if (k == l || k < 1 || l < 1 || k > 2 * n || l > 2 * n)
        throw UsageError("braid indices out of range for the layout");
    int lo = std::min(k, l), hi = std::max(k, l);
    if (hi - lo == 1) {
        rows.push_back(crossing_row(lo, k < l));
    } else {
        // nonlocal braids go beyond the crossing pictures; render as a box
        std::string label = "b[" + std::to_string(k) + "," + std::to_string(l) + "]*";
        rows.push_back(box_row(lo, hi, k < l, std::move(label)));
    }
}

// Flattens a product expression into operator rows, rightmost factor first.
void expr_rows(const AstPtr& ast, long n, std::vector<DiagramRow>& rows, bool& has_vac) {
    switch (ast->kind) {
    case ExprAst::Kind::mul:
        expr_rows(ast->children[1], n, rows, has_vac);
        expr_rows(ast->children[0], n, rows, has_vac);
        return;
    case ExprAst::Kind::vac:
        if (has_vac) throw UsageError("layout supports a single |vac> application");
        has_vac = true;
        rows.insert(rows.begin(), ground_caps_row());
        expr_rows(ast->children[0], n, rows, has_vac);
        return;
    case ExprAst::Kind::braid:
        append_factor_row(rows, static_cast<int>(ast->index), static_cast<int>(ast->index2), n);
        return;
    case ExprAst::Kind::generator:
        if (ast->index < 1 || ast->index > 2 * n)
            throw UsageError("generator index out of range for the layout");
        rows.push_back(charge_label_row(ast->index, 1));
        return;
    case ExprAst::Kind::projector:
        if (ast->index < 1 || ast->index > n)
            throw UsageError("projector index out of range for the layout");
        rows.push_back(cap_cup_row(2 * ast->index - 1, 2 * ast->index));
        return;
    case ExprAst::Kind::power:
        if (ast->children[0]->kind == ExprAst::Kind::generator) {
            rows.push_back(charge_label_row(ast->children[0]->index, ast->exponent));
            return;
        }
        if (ast->exponent < 0) throw UsageError("layout cannot render negative powers");
        for (long i = 0; i < ast->exponent; ++i) expr_rows(ast->children[0], n, rows, has_vac);
        return;
    default:
        throw UsageError("layout supports products of braids, generator powers, projectors "
                         "and a |vac> application");
    }
}

} // namespace

Layout layout_word(const BraidWord& w, long n, bool with_vacuum) {
    Layout out;
    out.n = n;
    if (with_vacuum) out.rows.push_back(ground_caps_row());
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it)
        append_factor_row(out.rows, it->first, it->second, n);
    if (with_vacuum)
        out.rows.push_back(identity_row());
    else if (out.rows.empty())
        out.rows.push_back(identity_row());
    return out;
}

Layout layout_expr(const AstPtr& ast, long n) {
    Layout out;
    out.n = n;
    bool has_vac = false;
    expr_rows(ast, n, out.rows, has_vac);
    if (has_vac)
        out.rows.push_back(identity_row());
    else if (out.rows.empty())
        out.rows.push_back(identity_row());
    return out;
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

struct SvgWriter {
    const DiagramGeometry& geo;
    std::string body;

    double x(long strand) const { return geo.margin + (strand - 1) * geo.strand_pitch; }

    void line(double x1, double y1, double x2, double y2) {
        body += "<line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) +
                "\" y2=\"" + fmt(y2) + "\"/>\n";
    }
    void arc(double x1, double y1, double x2, double y2, double ctrl_y) {
        double cx = (x1 + x2) / 2;
        body += "<path d=\"M " + fmt(x1) + " " + fmt(y1) + " Q " + fmt(cx) + " " + fmt(ctrl_y) +
                " " + fmt(x2) + " " + fmt(y2) + "\"/>\n";
    }
    void text(double tx, double ty, const std::string& s) {
        body += "<text x=\"" + fmt(tx) + "\" y=\"" + fmt(ty) + "\">" + s + "</text>\n";
    }
    void rect(double rx, double ry, double w, double h) {
        body += "<rect x=\"" + fmt(rx) + "\" y=\"" + fmt(ry) + "\" width=\"" + fmt(w) +
                "\" height=\"" + fmt(h) + "\" fill=\"white\"/>\n";
    }
};

} // namespace

std::string emit_svg(const Layout& layout, const DiagramGeometry& geo) {
    const long strands = 2 * layout.n;
    const double width = 2 * geo.margin + (strands - 1) * geo.strand_pitch;
    const double height = 2 * geo.margin + layout.rows.size() * geo.row_height;
    SvgWriter w{geo, {}};
    double y = geo.margin;
    for (const auto& row : layout.rows) {
        const double y0 = y, y1 = y + geo.row_height;
        auto verticals = [&](long skip_lo, long skip_hi) {
            for (long s = 1; s <= strands; ++s) {
                if (s >= skip_lo && s <= skip_hi) continue;
                w.line(w.x(s), y0, w.x(s), y1);
            }
        };
        switch (row.kind) {
        case DiagramRow::Kind::identity:
            verticals(0, -1);
            break;
        case DiagramRow::Kind::charge_label:
            verticals(0, -1);
            w.text(w.x(row.strand) - 0.45 * geo.strand_pitch, (y0 + y1) / 2,
                   std::to_string(row.exponent));
            break;
        case DiagramRow::Kind::crossing: {
            verticals(row.strand, row.strand + 1);
            const double xa = w.x(row.strand), xb = w.x(row.strand + 1);
            // the under strand is drawn broken around the midpoint
            const double mx = (xa + xb) / 2, my = (y0 + y1) / 2;
            const double gx = 0.16 * (xb - xa), gy = 0.16 * (y1 - y0);
            if (row.positive) {
                w.line(xb, y0, mx + gx, my - gy);
                w.line(mx - gx, my + gy, xa, y1);
                w.line(xa, y0, xb, y1);
            } else {
                w.line(xa, y0, mx - gx, my - gy);
                w.line(mx + gx, my + gy, xb, y1);
                w.line(xb, y0, xa, y1);
            }
            break;
        }
        case DiagramRow::Kind::cap_cup: {
            verticals(row.strand, row.strand2);
            const double xa = w.x(row.strand), xb = w.x(row.strand2);
            w.arc(xa, y0, xb, y0, y0 + 0.55 * geo.row_height);
            w.arc(xa, y1, xb, y1, y1 - 0.55 * geo.row_height);
            w.text(xb + 0.15 * geo.strand_pitch, (y0 + y1) / 2, "&#948;"); // delta marker
            break;
        }
        case DiagramRow::Kind::ground_caps: {
            for (long k = 1; k <= layout.n; ++k)
                w.arc(w.x(2 * k - 1), y1, w.x(2 * k), y1, y0 + 0.3 * geo.row_height);
            w.text(w.x(strands) + 0.15 * geo.strand_pitch, (y0 + y1) / 2,
                   "&#948;^" + std::to_string(layout.n) + "/2");
            break;
        }
        case DiagramRow::Kind::measure: {
            for (long k = 1; k <= layout.n; ++k)
                w.arc(w.x(2 * k - 1), y0, w.x(2 * k), y0, y1 - 0.3 * geo.row_height);
            w.text(w.x(strands) + 0.15 * geo.strand_pitch, (y0 + y1) / 2,
                   "&#948;^" + std::to_string(layout.n) + "/2");
            break;
        }
        case DiagramRow::Kind::box: {
            verticals(row.strand, row.strand2);
            for (long s = row.strand; s <= row.strand2; ++s) {
                w.line(w.x(s), y0, w.x(s), y0 + 0.2 * geo.row_height);
                w.line(w.x(s), y1 - 0.2 * geo.row_height, w.x(s), y1);
            }
            w.rect(w.x(row.strand) - 0.3 * geo.strand_pitch, y0 + 0.2 * geo.row_height,
                   (row.strand2 - row.strand) * geo.strand_pitch + 0.6 * geo.strand_pitch,
                   0.6 * geo.row_height);
            w.text(w.x(row.strand), (y0 + y1) / 2, row.label);
            break;
        }
        }
        y = y1;
    }
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                      fmt(width) + "\" height=\"" + fmt(height) +
                      "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) +
                      "\">\n<g stroke=\"black\" stroke-width=\"1.5\" fill=\"none\" "
                      "font-family=\"serif\" font-size=\"12\">\n";
    out += w.body;
    out += "</g>\n</svg>\n";
    return out;
}

std::string emit_tikz(const Layout& layout, const DiagramGeometry& geo) {
    // Mirrors the \fbraid / \fqudit / \fmeasure primitive macros so output can
    // be dropped next to the source figures.
    const double px = geo.strand_pitch / 36.0;
    const double ry = geo.row_height / 44.0;
    std::string out = "% braid-word diagram; strands run top to bottom\n\\tikz{\n";
    double y = static_cast<double>(layout.rows.size()) * ry;
    const long strands = 2 * layout.n;
    auto sx = [&](long s) { return (s - 1) * px; };
    for (const auto& row : layout.rows) {
        const double y1 = y, y0 = y - ry;
        auto verticals = [&](long skip_lo, long skip_hi) {
            for (long s = 1; s <= strands; ++s) {
                if (s >= skip_lo && s <= skip_hi) continue;
                out += "  \\draw (" + fmt(sx(s)) + "," + fmt(y0) + ")--(" + fmt(sx(s)) + "," +
                       fmt(y1) + ");\n";
            }
        };
        switch (row.kind) {
        case DiagramRow::Kind::identity:
            verticals(0, -1);
            break;
        case DiagramRow::Kind::charge_label:
            verticals(0, -1);
            out += "  \\node at (" + fmt(sx(row.strand) - 0.4 * px) + "," + fmt((y0 + y1) / 2) +
                   ") {$" + std::to_string(row.exponent) + "$};\n";
            break;
        case DiagramRow::Kind::crossing:
            verticals(row.strand, row.strand + 1);
            if (row.positive)
                out += "  \\fbraid{" + fmt(sx(row.strand)) + "}{" + fmt(y0) + "}{" +
                       fmt(sx(row.strand + 1)) + "}{" + fmt(y1) + "}\n";
            else
                out += "  \\fbraid{" + fmt(sx(row.strand + 1)) + "}{" + fmt(y0) + "}{" +
                       fmt(sx(row.strand)) + "}{" + fmt(y1) + "}\n";
            break;
        case DiagramRow::Kind::cap_cup:
            verticals(row.strand, row.strand2);
            out += "  \\fqudit{" + fmt(sx(row.strand)) + "}{" + fmt(y0) + "}{" + fmt(px) + "}{" +
                   fmt(0.4 * ry) + "}{}\n";
            out += "  \\fmeasure{" + fmt(sx(row.strand)) + "}{" + fmt(y1 - 0.4 * ry) + "}{" +
                   fmt(px) + "}{" + fmt(0.4 * ry) + "}{}\n";
            break;
        case DiagramRow::Kind::ground_caps:
            for (long k = 1; k <= layout.n; ++k)
                out += "  \\fqudit{" + fmt(sx(2 * k - 1)) + "}{" + fmt(y0) + "}{" + fmt(px) +
                       "}{" + fmt(0.5 * ry) + "}{}\n";
            break;
        case DiagramRow::Kind::measure:
            for (long k = 1; k <= layout.n; ++k)
                out += "  \\fmeasure{" + fmt(sx(2 * k - 1)) + "}{" + fmt(y1 - 0.5 * ry) + "}{" +
                       fmt(px) + "}{" + fmt(0.5 * ry) + "}{}\n";
            break;
        case DiagramRow::Kind::box:
            verticals(row.strand, row.strand2);
            out += "  \\node[draw,rectangle] at (" +
                   fmt((sx(row.strand) + sx(row.strand2)) / 2) + "," + fmt((y0 + y1) / 2) +
                   ") {$" + row.label + "$};\n";
            break;
        }
        y = y0;
    }
    out += "}\n";
    return out;
}

} // namespace gca
