#include "sl2rep/io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace sl2rep {

using nlohmann::json;

namespace {

json rational_json(const Rational& r) { return r.get_str(); }

Rational rational_from(const json& j) {
    Rational r;
    if (r.set_str(j.get<std::string>(), 10) != 0) {
        throw std::invalid_argument("bad rational '" + j.get<std::string>() + "'");
    }
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
    r.canonicalize();
    return r;
}

json cyc_json(const CycNum& x) {
    json coeffs = json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(rational_json(c));
    const auto z = x.approx();
    return {{"conductor", x.conductor()},
            {"coeffs", coeffs},
            {"approx", {{"re", z.real()}, {"im", z.imag()}}}};
}

CycNum cyc_from(const json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from(c));
    return CycNum::from_coeffs(j.at("conductor").get<std::uint32_t>(), std::move(coeffs));
}

json form_json(const Symbolic& s) {
    switch (s.kind) {
        case Symbolic::Kind::Rational: return {{"kind", "rational"}, {"a", rational_json(s.a)}};
        case Symbolic::Kind::Nu:
            return {{"kind", "nu"}, {"a", rational_json(s.a)}, {"b", rational_json(s.b)},
                    {"r", s.r},     {"s", s.s}};
        case Symbolic::Kind::Surd:
            return {{"kind", "sqrt"},
                    {"a", rational_json(s.a)},
                    {"b", rational_json(s.b)},
                    {"radicand", s.radicand}};
    }
    throw std::logic_error("unknown symbolic kind");
}

Symbolic form_from(const json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "rational") return Symbolic::rational(rational_from(j.at("a")));
    if (kind == "nu") {
        return Symbolic::nu_form(rational_from(j.at("a")), rational_from(j.at("b")),
                                 j.at("r").get<std::uint32_t>(), j.at("s").get<std::int64_t>());
    }
    if (kind == "sqrt") {
        return Symbolic::surd_form(rational_from(j.at("a")), rational_from(j.at("b")),
                                   j.at("radicand").get<std::int64_t>());
    }
    throw std::invalid_argument("unknown symbolic kind '" + kind + "'");
}

json cell_json(const CharCell& c) {
    json j = cyc_json(c.value);
    j["symbolic"] = c.form.to_string();
    j["form"] = form_json(c.form);
    return j;
}

CharCell cell_from(const json& j) {
    CharCell c{cyc_from(j), form_from(j.at("form"))};
    if (c.form.value() != c.value) throw std::invalid_argument("cell form and value disagree");
    return c;
}

json matrix_json(const GroupElem& g) {
    return json::array({json::array({g.a().value(), g.b().value()}),
                        json::array({g.c().value(), g.d().value()})});
}

GroupElem matrix_from(const json& j, std::uint32_t q) {
    return GroupElem::from_ints(j.at(0).at(0).get<std::int64_t>(), j.at(0).at(1).get<std::int64_t>(),
                                j.at(1).at(0).get<std::int64_t>(), j.at(1).at(1).get<std::int64_t>(),
                                q);
}

json class_json(const ConjClass& c) {
    return {{"label", to_string(c.label)},
            {"representative", matrix_json(c.representative)},
            {"order", c.element_order},
            {"size", c.size}};
}

ConjClass class_from(const json& j, std::uint32_t q) {
    return ConjClass{parse_class_label(j.at("label").get<std::string>()),
                     matrix_from(j.at("representative"), q), j.at("size").get<std::uint64_t>(),
                     j.at("order").get<std::uint64_t>()};
}

json classes_json(const std::vector<ConjClass>& classes) {
    json arr = json::array();
    for (const auto& c : classes) arr.push_back(class_json(c));
    return arr;
}

std::vector<ConjClass> classes_from(const json& j, std::uint32_t q) {
    std::vector<ConjClass> out;
    for (const auto& c : j) out.push_back(class_from(c, q));
    return out;
}

json grid_json(const std::vector<std::vector<CharCell>>& cells) {
    json rows = json::array();
    for (const auto& row : cells) {
        json r = json::array();
        for (const auto& c : row) r.push_back(cell_json(c));
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<std::vector<CharCell>> grid_from(const json& j) {
    std::vector<std::vector<CharCell>> out;
    for (const auto& row : j) {
        std::vector<CharCell> r;
        for (const auto& c : row) r.push_back(cell_from(c));
        out.push_back(std::move(r));
    }
    return out;
}

template <class T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> optional_from(const json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<T>();
}

json parse_or_throw(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
    }
}

// Runs a decoder, mapping library errors to std::invalid_argument.
template <class F>
auto decode(const std::string& text, F&& f) {
    const json j = parse_or_throw(text);
    try {
        return f(j);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed document: ") + e.what());
    }
}

}  // namespace

std::string to_json(const CycNum& x) { return cyc_json(x).dump(); }

CycNum cycnum_from_json(const std::string& text) {
    return decode(text, [](const json& j) { return cyc_from(j); });
}

std::string to_json(const ClassListing& x) {
    return json{{"q", x.q}, {"classes", classes_json(x.classes)}}.dump(2);
}

ClassListing class_listing_from_json(const std::string& text) {
    return decode(text, [](const json& j) {
        const auto q = j.at("q").get<std::uint32_t>();
        return ClassListing{q, classes_from(j.at("classes"), q)};
    });
}

std::string to_json(const CharTable& x) {
    json chars = json::array();
    for (const auto& c : x.characters()) chars.push_back(to_string(c));
    return json{{"q", x.q()},
                {"epsilon", x.epsilon()},
                {"classes", classes_json(x.classes())},
                {"characters", chars},
                {"values", grid_json(x.cells())}}
        .dump(2);
}

CharTable char_table_from_json(const std::string& text) {
    return decode(text, [](const json& j) {
        const auto q = j.at("q").get<std::uint32_t>();
        std::vector<CharLabel> chars;
        for (const auto& c : j.at("characters")) chars.push_back(parse_char_label(c.get<std::string>()));
        return CharTable(q, classes_from(j.at("classes"), q), std::move(chars),
                         grid_from(j.at("values")));
    });
}

std::string to_json(const RealCharTable& x) {
    json chars = json::array();
    for (const auto& c : x.characters()) chars.push_back(to_string(c));
    return json{{"q", x.q()},
                {"classes", classes_json(x.classes())},
                {"characters", chars},
                {"values", grid_json(x.cells())}}
        .dump(2);
}

RealCharTable real_table_from_json(const std::string& text) {
    return decode(text, [](const json& j) {
        const auto q = j.at("q").get<std::uint32_t>();
        std::vector<RealCharLabel> chars;
        for (const auto& c : j.at("characters")) {
            chars.push_back(parse_real_char_label(c.get<std::string>()));
        }
        return RealCharTable(q, classes_from(j.at("classes"), q), std::move(chars),
                             grid_from(j.at("values")));
    });
}

std::string to_json(const FsListing& x) {
    json arr = json::array();
    for (const auto& e : x.entries) {
        arr.push_back({{"character", to_string(e.chr)},
                       {"closed", e.closed},
                       {"brute", optional_json(e.brute)},
                       {"raw", optional_json(e.raw)},
                       {"match", e.match}});
    }
    return json{{"q", x.q}, {"indicators", arr}}.dump(2);
}

FsListing fs_listing_from_json(const std::string& text) {
    return decode(text, [](const json& j) {
        FsListing out;
        out.q = j.at("q").get<std::uint32_t>();
        for (const auto& e : j.at("indicators")) {
            FsEntry f;
            f.chr = parse_char_label(e.at("character").get<std::string>());
            f.closed = e.at("closed").get<int>();
            f.brute = optional_from<int>(e.at("brute"));
            f.raw = optional_from<int>(e.at("raw"));
            f.match = e.at("match").get<bool>();
            out.entries.push_back(f);
        }
        return out;
    });
}

std::string to_json(const FixedDimTable& x) {
    json rows = json::array();
    for (const auto& r : x.rows) rows.push_back(to_string(r));
    json cols = json::array();
    for (const auto& c : x.columns) {
        cols.push_back({{"subgroup", to_string(c.key)},
                        {"order", c.order},
                        {"quotient", to_string(c.quotient)}});
    }
    json entries = json::array();
    for (const auto& row : x.entries) {
        json r = json::array();
        for (const auto& e : row) {
            r.push_back({{"closed", e.closed},
                         {"oracle", optional_json(e.oracle)},
                         {"summary", e.summary},
                         {"match", e.match},
                         {"note", e.note}});
        }
        entries.push_back(std::move(r));
    }
    return json{{"q", x.q}, {"rows", rows}, {"columns", cols}, {"entries", entries}}.dump(2);
}

FixedDimTable fixed_dim_table_from_json(const std::string& text) {
    return decode(text, [](const json& j) {
        FixedDimTable out;
        out.q = j.at("q").get<std::uint32_t>();
        for (const auto& r : j.at("rows")) out.rows.push_back(parse_real_char_label(r.get<std::string>()));
        for (const auto& c : j.at("columns")) {
            SubgroupColumn col;
            col.key = parse_subgroup_key(c.at("subgroup").get<std::string>());
            col.order = c.at("order").get<std::uint64_t>();
            col.quotient = quotient_case(out.q, col.key);
            if (to_string(col.quotient) != c.at("quotient").get<std::string>()) {
                throw std::invalid_argument("quotient case does not match the subgroup");
            }
            out.columns.push_back(col);
        }
        for (const auto& row : j.at("entries")) {
            std::vector<FixedDimEntry> r;
            for (const auto& e : row) {
                FixedDimEntry f;
                f.closed = e.at("closed").get<std::int64_t>();
                f.oracle = optional_from<std::int64_t>(e.at("oracle"));
                f.summary = e.at("summary").get<std::int64_t>();
                f.match = e.at("match").get<bool>();
                f.note = e.at("note").get<std::string>();
                r.push_back(std::move(f));
            }
            out.entries.push_back(std::move(r));
        }
        return out;
    });
}

std::string to_json(const VerificationReport& x) {
    json checks = json::array();
    for (const auto& c : x.checks) {
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
    }
    return json{{"q", x.q}, {"checks", checks}, {"overall", x.overall}}.dump(2);
}

VerificationReport report_from_json(const std::string& text) {
    return decode(text, [](const json& j) {
        VerificationReport out;
        out.q = j.at("q").get<std::uint32_t>();
        for (const auto& c : j.at("checks")) {
            out.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                                  c.at("details").get<std::string>()});
        }
        out.overall = j.at("overall").get<bool>();
        return out;
    });
}

}  // namespace sl2rep
