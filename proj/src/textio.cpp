#include "ktrace/textio.hpp"

#include <algorithm>
#include <sstream>

namespace ktrace {

namespace {

std::string qpow(const Rat& e) {
    // "q^a", "q^2a" for integers >= 2, braces otherwise ("q^{-5/2}a").
    if (e == Rat(1)) return "q^a";
    if (e.is_integer() && e.is_positive()) return "q^" + e.str() + "a";
    return "q^{" + e.str() + "}a";
}

std::string coeff_prefix(const Rat& mag) {
    if (mag == Rat(1)) return "";
    if (mag.is_integer()) return mag.str();
    return "(" + mag.str() + ")";
}

}  // namespace

std::string qpoly_pretty(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {  // ascending exponent
        Rat mag = c.is_negative() ? -c : c;
        if (first) {
            if (c.is_negative()) out += "-";
            first = false;
        } else {
            out += c.is_negative() ? " - " : " + ";
        }
        if (e.is_zero())
            out += mag.str();
        else
            out += coeff_prefix(mag) + qpow(e);
    }
    return out;
}

std::string qpoly_canonical(const QPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += it->second.str() + "*q^(" + it->first.str_slash() + ")";
    }
    return out;
}

QPoly qpoly_from_canonical(const std::string& text) {
    std::string trimmed;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
    if (trimmed == "0") return QPoly::zero();
    QPoly out;
    for (const std::string& term : split(trimmed, '+')) {
        size_t star = term.find("*q^(");
        if (star == std::string::npos || term.back() != ')')
            throw ParseError("bad canonical term: '" + term + "'");
        Rat coeff = parse_rat(term.substr(0, star));
        Rat exp = parse_rat(term.substr(star + 4, term.size() - star - 5));
        out.add_term(exp, coeff);
    }
    return out;
}

nlohmann::json qpoly_to_json(const QPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        arr.push_back({{"coeff", it->second.str_slash()},
                       {"exp", it->first.str_slash()}});
    return arr;
}

QPoly qpoly_from_json(const nlohmann::json& j) {
    QPoly out;
    for (const auto& term : j)
        out.add_term(parse_rat(term.at("exp").get<std::string>()),
                     parse_rat(term.at("coeff").get<std::string>()));
    return out;
}

nlohmann::json sympoly_to_json(const SymPoly& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : f.terms())
        arr.push_back({{"exps", e}, {"coeff", qpoly_to_json(c)}});
    return arr;
}

nlohmann::json trace_result_to_json(const TraceResult& r) {
    nlohmann::json j;
    j["value"] = qpoly_to_json(r.value);
    switch (r.route) {
        case Route::PATH_FORMULA: j["route"] = "PATH_FORMULA"; break;
        case Route::TADIC_SUM: j["route"] = "TADIC_SUM"; break;
        case Route::MONOMIAL_ORACLE: j["route"] = "MONOMIAL_ORACLE"; break;
    }
    if (r.w0) {
        nlohmann::json w = nlohmann::json::array();
        for (int v : *r.w0) w.push_back(v + 1);  // 1-based one-line form
        j["w0"] = w;
    } else {
        j["w0"] = nullptr;
    }
    j["sign"] = r.sign;
    j["prefactor_exp"] = r.prefactor_exp.str_slash();
    j["branch"] = r.branch;
    return j;
}

nlohmann::json tpath_to_json(const TPath& t) {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : t.components) {
        nlohmann::json vs = nlohmann::json::array();
        for (const auto& v : c.vertices())
            vs.push_back({v.x.str(), v.y.str()});
        comps.push_back(vs);
    }
    return comps;
}

std::string tpath_ascii(const TPath& t) {
    std::ostringstream os;
    for (size_t i = 0; i < t.components.size(); ++i) {
        os << "L" << (i + 1) << ":";
        for (const auto& v : t.components[i].vertices())
            os << " (" << v.x.str() << "," << v.y.str() << ")";
        os << "\n";
    }
    return os.str();
}

std::string segment_str(const Segment& s) {
    switch (s.kind()) {
        case Segment::Kind::STAR: return "*";
        case Segment::Kind::EMPTY: return "()";
        case Segment::Kind::PROPER: break;
    }
    return "(" + s.x().str() + "," + s.y().str() + ")";
}

std::string segments_str(const std::vector<Segment>& segs) {
    std::string out;
    for (const auto& s : segs) {
        if (!out.empty()) out += ";";
        out += segment_str(s);
    }
    return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

namespace {

std::string strip(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    for (const std::string& part : split(text, ',')) {
        Rat r = parse_rat(part);
        if (!r.is_integer()) throw ParseError("expected integer: '" + part + "'");
        out.push_back(r.num());
    }
    return out;
}

std::vector<std::string> split_places(const std::string& text) {
    std::string normalized = text;
    std::replace(normalized.begin(), normalized.end(), '|', ';');
    return split(normalized, ';');
}

}  // namespace

std::vector<Segment> parse_segments(const std::string& text) {
    std::vector<Segment> out;
    for (const std::string& raw : split(text, ';')) {
        std::string part = strip(raw);
        if (part.empty()) throw ParseError("empty segment entry");
        if (part == "*") {
            out.push_back(Segment::star());
            continue;
        }
        if (part == "()") {
            out.push_back(Segment::empty());
            continue;
        }
        if (part.front() != '(' || part.back() != ')')
            throw ParseError("bad segment: '" + part + "'");
        auto inner = split(part.substr(1, part.size() - 2), ',');
        if (inner.size() != 2) throw ParseError("bad segment: '" + part + "'");
        out.push_back(Segment::make(parse_rat(inner[0]), parse_rat(inner[1])));
    }
    return out;
}

std::vector<PlaceData> parse_places(const std::string& text) {
    std::vector<PlaceData> out;
    for (const std::string& raw : split_places(text)) {
        std::string part = strip(raw);
        if (part.empty()) continue;
        PlaceData place;
        if (part.rfind("sv=", 0) == 0) {
            place.signatures = parse_int_list(part.substr(3));
        } else if (part.rfind("s=", 0) == 0) {
            place.signatures = {parse_rat(part.substr(2)).num()};
        } else {
            throw ParseError("bad place: '" + part + "' (want s=K or sv=a,b)");
        }
        out.push_back(std::move(place));
    }
    if (out.empty()) throw ParseError("no places given");
    return out;
}

GlobalRigidSpec parse_rigid(const std::string& text, long long n) {
    GlobalRigidSpec spec;
    spec.n = n;
    spec.y = 0;
    for (const std::string& raw : split(text, '|')) {
        std::string part = strip(raw);
        if (part.empty()) throw ParseError("empty rigid place");
        long long y = 0;
        std::vector<long long> xs;
        for (const std::string& field_raw : split(part, ';')) {
            std::string field = strip(field_raw);
            if (field.rfind("y=", 0) == 0)
                y = parse_rat(field.substr(2)).num();
            else if (field.rfind("x=", 0) == 0)
                xs = parse_int_list(field.substr(2));
            else
                throw ParseError("bad rigid field: '" + field + "'");
        }
        if (y <= 0 || xs.empty())
            throw ParseError("rigid place needs y=... and x=...");
        if (spec.y == 0)
            spec.y = y;
        else if (spec.y != y)
            throw ParseError("y must be the same at every place");
        spec.per_place.push_back(std::move(xs));
    }
    validate_rigid_spec(spec);
    return spec;
}

}  // namespace ktrace
