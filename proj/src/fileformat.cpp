#include "lf/fileformat.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lf/catalog.hpp"

namespace lf {

namespace {

using nlohmann::json;

std::string where(const std::string& text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

int parse_index(const std::string& digits, const std::string& tok)
{
    if (digits.empty() || digits.size() > 3 || digits.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad label '" + tok + "'");
    return std::stoi(digits);
}

int parse_base_label(const std::string& tok, int genus)
{
    const SurfaceModel& s = surface(genus);
    int curve;
    if (tok == "s1")
        curve = kS1;
    else if (tok.size() >= 2 && tok[0] == 'c')
        curve = parse_index(tok.substr(1), tok);
    else
        throw ParseError("unknown curve label '" + tok + "'");
    if (!s.valid_curve(curve)) throw ParseError("curve label '" + tok + "' is not valid at genus " + std::to_string(genus));
    return curve;
}

}  // namespace

Twist parse_twist_token(const std::string& tok, int genus)
{
    const SurfaceModel& s = surface(genus);
    Twist t;
    if (tok == "s1" || tok == "S1") {
        t = {kS1, tok[0] == 's' ? 1 : -1};
    } else if (tok.size() >= 2 && (tok[0] == 't' || tok[0] == 'T')) {
        t = {parse_index(tok.substr(1), tok), tok[0] == 't' ? 1 : -1};
    } else {
        throw ParseError("unknown twist token '" + tok + "'");
    }
    if (!s.valid_curve(t.curve)) throw ParseError("twist token '" + tok + "' is not valid at genus " + std::to_string(genus));
    return t;
}

TwistWord parse_twist_word(const std::string& text, int genus)
{
    std::string cleaned = text;
    for (auto& ch : cleaned)
        if (ch == ',') ch = ' ';
    std::istringstream is(cleaned);
    TwistWord w;
    for (std::string tok; is >> tok;) w.push_back(parse_twist_token(tok, genus));
    return w;
}

Factorization parse_factorization(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("syntax error at " + where(text, e.byte ? e.byte - 1 : 0) + ": " + e.what());
    }
    if (!doc.is_object()) throw ParseError("top level must be an object");
    for (const auto& [key, _] : doc.items())
        if (key != "genus" && key != "base_genus" && key != "order" && key != "twists")
            throw ParseError("unknown field '" + key + "'");
    if (!doc.contains("genus") || !doc["genus"].is_number_integer()) throw ParseError("missing integer field 'genus'");
    if (!doc.contains("twists") || !doc["twists"].is_array()) throw ParseError("missing array field 'twists'");

    Factorization f;
    f.fiber_genus = doc["genus"].get<int>();
    if (f.fiber_genus < 1 || f.fiber_genus > 64) throw ParseError("genus out of supported range 1..64");
    if (doc.contains("base_genus")) {
        if (!doc["base_genus"].is_number_integer() || doc["base_genus"].get<int>() < 0)
            throw ParseError("'base_genus' must be a nonnegative integer");
        f.base_genus = doc["base_genus"].get<int>();
    }
    if (doc.contains("order") && doc["order"] != "application")
        throw ParseError("'order' must be \"application\" (first listed twist acts first)");

    std::size_t idx = 0;
    for (const auto& rec : doc["twists"]) {
        const std::string at = "twists[" + std::to_string(idx++) + "]: ";
        if (!rec.is_object() || !rec.contains("base") || !rec["base"].is_string())
            throw ParseError(at + "expected {\"base\": label, \"conj\": [...]}");
        Curve c;
        try {
            c.base = parse_base_label(rec["base"].get<std::string>(), f.fiber_genus);
            if (rec.contains("conj")) {
                if (!rec["conj"].is_array()) throw ParseError("'conj' must be an array of tokens");
                for (const auto& tok : rec["conj"]) {
                    if (!tok.is_string()) throw ParseError("conjugator tokens must be strings");
                    c.conj.push_back(parse_twist_token(tok.get<std::string>(), f.fiber_genus));
                }
            }
        } catch (const ParseError& e) {
            throw ParseError(at + e.what());
        }
        f.cycles.push_back(std::move(c));
    }
    return f;
}

std::string serialize(const Factorization& f)
{
    std::ostringstream os;
    os << "{\"genus\":" << f.fiber_genus << ",\"base_genus\":" << f.base_genus << ",\"order\":\"application\",\"twists\":[";
    for (std::size_t i = 0; i < f.cycles.size(); ++i) {
        const Curve& c = f.cycles[i];
        os << (i ? ",\n" : "\n") << "  {\"base\":\"" << curve_label(c.base) << "\",\"conj\":[";
        for (std::size_t j = 0; j < c.conj.size(); ++j)
            os << (j ? "," : "") << '"' << twist_token(c.conj[j].curve, c.conj[j].sign) << '"';
        os << "]}";
    }
    os << (f.cycles.empty() ? "" : "\n") << "]}\n";
    return os.str();
}

Factorization load_source(const std::string& src)
{
    const std::string scheme = "catalog:";
    if (src.rfind(scheme, 0) == 0) return catalog_get(src.substr(scheme.size())).factorization;
    std::ifstream in(src);
    if (!in) throw ParseError("cannot read " + src);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_factorization(ss.str());
}

void save_factorization(const Factorization& f, const std::string& path)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize(f);
}

}  // namespace lf
