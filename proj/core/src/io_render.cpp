#include "sl2rep/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace sl2rep {

namespace {

using Grid = std::vector<std::vector<std::string>>;

std::string aligned(const Grid& grid) {
    std::vector<std::size_t> width;
    for (const auto& row : grid) {
        if (width.size() < row.size()) width.resize(row.size(), 0);
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream os;
    for (const auto& row : grid) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        os << line << '\n';
    }
    return os.str();
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string csv(const Grid& grid, const std::string& comment) {
    std::ostringstream os;
    if (!comment.empty()) os << "# " << comment << '\n';
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_cell(row[c]);
        os << '\n';
    }
    return os.str();
}

std::string latex_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '_' || ch == '&' || ch == '%' || ch == '#') out += '\\';
        out += ch;
    }
    return out;
}

std::string latex_tabular(const Grid& grid) {
    std::ostringstream os;
    const std::size_t cols = grid.empty() ? 0 : grid.front().size();
    os << "\\begin{tabular}{l|" << std::string(cols > 0 ? cols - 1 : 0, 'c') << "}\n";
    for (std::size_t r = 0; r < grid.size(); ++r) {
        for (std::size_t c = 0; c < grid[r].size(); ++c) os << (c ? " & " : "") << grid[r][c];
        os << " \\\\\n";
        if (r == 0) os << "\\hline\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

std::string approx_string(const CycNum& x) {
    const auto z = x.approx();
    char buf[64];
    if (std::abs(z.imag()) < 1e-9) {
        std::snprintf(buf, sizeof buf, "%.4f", z.real());
    } else {
        std::snprintf(buf, sizeof buf, "%.4f%+.4fi", z.real(), z.imag());
    }
    return buf;
}

std::string latex_rational(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    const std::string sign = r < 0 ? "-" : "";
    mpz_class num = abs(r.get_num());
    return sign + "\\frac{" + num.get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string latex_class(const ClassLabel& L) {
    using K = ClassLabel::Kind;
    switch (L.kind) {
        case K::One: return "$\\mathbf{1}$";
        case K::Z: return "$z$";
        case K::C: return "$c$";
        case K::D: return "$d$";
        case K::ZC: return "$zc$";
        case K::ZD: return "$zd$";
        case K::A: return "$a^{" + std::to_string(L.index) + "}$";
        case K::B: return "$b^{" + std::to_string(L.index) + "}$";
    }
    return "";
}

std::string latex_char(const CharLabel& c) {
    using K = CharLabel::Kind;
    switch (c.kind) {
        case K::Triv: return "$\\mathbb{1}$";
        case K::Psi: return "$\\psi$";
        case K::Chi: return "$\\chi_{" + std::to_string(c.index) + "}$";
        case K::Theta: return "$\\theta_{" + std::to_string(c.index) + "}$";
        case K::Xi1: return "$\\xi_1$";
        case K::Xi2: return "$\\xi_2$";
        case K::Eta1: return "$\\eta_1$";
        case K::Eta2: return "$\\eta_2$";
    }
    return "";
}

std::string latex_real_char(const RealCharLabel& c) {
    using K = RealCharLabel::Kind;
    const std::string i = std::to_string(c.index);
    switch (c.kind) {
        case K::RTriv: return "$\\mathbb{1}$";
        case K::RPsi: return "$\\psi$";
        case K::RChiEven: return "$\\chi_{" + i + "}$";
        case K::RTwoChiOdd: return "$2\\chi_{" + i + "}$";
        case K::RThetaEven: return "$\\theta_{" + i + "}$";
        case K::RTwoThetaOdd: return "$2\\theta_{" + i + "}$";
        case K::RXi1: return "$\\xi_1$";
        case K::RXi2: return "$\\xi_2$";
        case K::RTwoEta1: return "$2\\eta_1$";
        case K::RTwoEta2: return "$2\\eta_2$";
        case K::RTwoReXi1: return "$2\\operatorname{Re}\\xi_1$";
        case K::RTwoReEta1: return "$2\\operatorname{Re}\\eta_1$";
    }
    return "";
}

std::string latex_subgroup(const SubgroupKey& k) {
    switch (k.kind) {
        case SubgroupKind::Trivial: return "$\\langle\\mathbf{1}\\rangle$";
        case SubgroupKind::Z: return "$\\langle z\\rangle$";
        case SubgroupKind::C: return "$\\langle c\\rangle$";
        case SubgroupKind::ZC: return "$\\langle zc\\rangle$";
        case SubgroupKind::A: return "$\\langle a^{" + std::to_string(k.index) + "}\\rangle$";
        case SubgroupKind::B: return "$\\langle b^{" + std::to_string(k.index) + "}\\rangle$";
    }
    return "";
}

template <class Label, class Fmt>
Grid value_grid(const std::vector<ConjClass>& classes, const std::vector<Label>& rows,
                const std::vector<std::vector<CharCell>>& cells, Fmt&& fmt) {
    Grid g;
    std::vector<std::string> head{""};
    for (const auto& c : classes) head.push_back(to_string(c.label));
    g.push_back(std::move(head));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<std::string> line{to_string(rows[r])};
        for (const auto& cell : cells[r]) line.push_back(fmt(cell));
        g.push_back(std::move(line));
    }
    return g;
}

template <class Label, class LatexLabel>
std::string latex_values(const std::vector<ConjClass>& classes, const std::vector<Label>& rows,
                         const std::vector<std::vector<CharCell>>& cells, LatexLabel&& label) {
    Grid g;
    std::vector<std::string> head{""};
    for (const auto& c : classes) head.push_back(latex_class(c.label));
    g.push_back(std::move(head));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<std::string> line{label(rows[r])};
        for (const auto& cell : cells[r]) line.push_back("$" + latex_form(cell.form) + "$");
        g.push_back(std::move(line));
    }
    return latex_tabular(g);
}

constexpr const char* kApproxComment =
    "exact symbolic values; bracketed [~x] decimals are advisory approximations";

template <class Table, class LatexLabel>
std::string render_values(const Table& x, OutputFormat fmt, const std::string& title,
                          LatexLabel&& label) {
    switch (fmt) {
        case OutputFormat::Json: return to_json(x) + "\n";
        case OutputFormat::Text:
            return title + "\n" +
                   aligned(value_grid(x.classes(), x.characters(), x.cells(), format_cell));
        case OutputFormat::Csv:
            return csv(value_grid(x.classes(), x.characters(), x.cells(), format_cell),
                       kApproxComment);
        case OutputFormat::Latex: return latex_values(x.classes(), x.characters(), x.cells(), label);
    }
    throw std::logic_error("unknown format");
}

std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }
std::string opt(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : "-"; }

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "latex") return OutputFormat::Latex;
    throw std::invalid_argument("unknown format '" + name + "' (text, json, csv, latex)");
}

std::string format_matrix(const GroupElem& g) {
    return "(" + std::to_string(g.a().value()) + " " + std::to_string(g.b().value()) + "; " +
           std::to_string(g.c().value()) + " " + std::to_string(g.d().value()) + ")";
}

std::string format_cell(const CharCell& cell) {
    if (cell.value.is_rational()) return cell.form.to_string();
    return cell.form.to_string() + " [~" + approx_string(cell.value) + "]";
}

std::string latex_form(const Symbolic& form) {
    std::string atom;
    switch (form.kind) {
        case Symbolic::Kind::Rational: return latex_rational(form.a);
        case Symbolic::Kind::Nu:
            atom = "\\nu_{" + std::to_string(form.r) + "}^{" + std::to_string(form.s) + "}";
            break;
        case Symbolic::Kind::Surd:
            atom = "\\sqrt{" + std::to_string(form.radicand) + "}";
            break;
    }
    std::string out;
    if (form.a != 0) out = latex_rational(form.a) + (form.b < 0 ? "-" : "+");
    else if (form.b < 0) out = "-";
    const Rational mag = abs(form.b);
    if (mag != 1) out += latex_rational(mag);
    return out + atom;
}

std::string render(const ClassListing& x, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) return to_json(x) + "\n";
    Grid g{{"class", "representative", "order", "size"}};
    for (const auto& c : x.classes) {
        g.push_back({fmt == OutputFormat::Latex ? latex_class(c.label) : to_string(c.label),
                     format_matrix(c.representative), std::to_string(c.element_order),
                     std::to_string(c.size)});
    }
    switch (fmt) {
        case OutputFormat::Text:
            return "Conjugacy classes of SL_2(" + std::to_string(x.q) + ")\n" + aligned(g);
        case OutputFormat::Csv: return csv(g, "");
        case OutputFormat::Latex: return latex_tabular(g);
        default: break;
    }
    throw std::logic_error("unknown format");
}

std::string render(const CharTable& x, OutputFormat fmt) {
    return render_values(x, fmt, "Complex character table of SL_2(" + std::to_string(x.q()) + ")",
                         latex_char);
}

std::string render(const RealCharTable& x, OutputFormat fmt) {
    return render_values(x, fmt, "Real character table of SL_2(" + std::to_string(x.q()) + ")",
                         latex_real_char);
}

std::string render(const FsListing& x, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) return to_json(x) + "\n";
    Grid g{{"character", "closed", "class-grouped", "raw", "match"}};
    for (const auto& e : x.entries) {
        g.push_back({fmt == OutputFormat::Latex ? latex_char(e.chr) : to_string(e.chr),
                     std::to_string(e.closed), opt(e.brute), opt(e.raw), e.match ? "yes" : "NO"});
    }
    switch (fmt) {
        case OutputFormat::Text:
            return "Frobenius-Schur indicators for SL_2(" + std::to_string(x.q) + ")\n" + aligned(g);
        case OutputFormat::Csv: return csv(g, "");
        case OutputFormat::Latex: return latex_tabular(g);
        default: break;
    }
    throw std::logic_error("unknown format");
}

std::string render(const FixedDimTable& x, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) return to_json(x) + "\n";
    if (fmt == OutputFormat::Csv) {
        Grid g{{"character", "subgroup", "order", "quotient", "closed", "oracle", "summary", "match",
                "note"}};
        for (std::size_t r = 0; r < x.rows.size(); ++r) {
            for (std::size_t c = 0; c < x.columns.size(); ++c) {
                const auto& e = x.entries[r][c];
                const auto& col = x.columns[c];
                g.push_back({to_string(x.rows[r]), to_string(col.key), std::to_string(col.order),
                             to_string(col.quotient), std::to_string(e.closed), opt(e.oracle),
                             std::to_string(e.summary), e.match ? "yes" : "no", e.note});
            }
        }
        return csv(g, "");
    }
    const bool latex = fmt == OutputFormat::Latex;
    Grid g;
    std::vector<std::string> head{""};
    for (const auto& c : x.columns) head.push_back(latex ? latex_subgroup(c.key) : to_string(c.key));
    g.push_back(std::move(head));
    std::vector<std::string> notes;
    for (std::size_t r = 0; r < x.rows.size(); ++r) {
        std::vector<std::string> line{latex ? latex_real_char(x.rows[r]) : to_string(x.rows[r])};
        for (std::size_t c = 0; c < x.columns.size(); ++c) {
            const auto& e = x.entries[r][c];
            std::string cell = std::to_string(e.closed);
            if (!e.match) cell += "!=" + opt(e.oracle);
            if (!e.note.empty()) {
                cell += "*";
                notes.push_back(to_string(x.rows[r]) + " on " + to_string(x.columns[c].key) + ": " +
                                e.note);
            }
            line.push_back(cell);
        }
        g.push_back(std::move(line));
    }
    if (latex) return latex_tabular(g);
    std::ostringstream os;
    os << "Fixed-point dimensions for SL_2(" << x.q << ")";
    const bool has_oracle = !x.entries.empty() && !x.entries.front().empty() &&
                            x.entries.front().front().oracle.has_value();
    os << (has_oracle ? " (checked against character averages)" : " (closed form only)") << "\n";
    os << aligned(g);
    for (const auto& n : notes) os << "* " << n << "\n";
    return os.str();
}

std::string render(const VerificationReport& x, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) return to_json(x) + "\n";
    Grid g{{"check", "status", "details"}};
    for (const auto& c : x.checks) {
        g.push_back({fmt == OutputFormat::Latex ? latex_escape(c.name) : c.name, c.pass ? "PASS" : "FAIL",
                     fmt == OutputFormat::Latex ? latex_escape(c.details) : c.details});
    }
    switch (fmt) {
        case OutputFormat::Text: {
            std::ostringstream os;
            os << "Verification of SL_2(" << x.q << ")\n";
            for (const auto& c : x.checks) {
                os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.details << "\n";
            }
            os << "overall: " << (x.overall ? "PASS" : "FAIL") << "\n";
            return os.str();
        }
        case OutputFormat::Csv: return csv(g, "");
        case OutputFormat::Latex: return latex_tabular(g);
        default: break;
    }
    throw std::logic_error("unknown format");
}

}  // namespace sl2rep
