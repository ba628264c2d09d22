#include "topskit/config.hpp"

#include "topskit/error.hpp"

#include <fstream>
#include <sstream>

namespace topskit {

namespace {

using nlohmann::json;

const json& field_of(const json& obj, const char* key)
{
    auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(std::string("config is missing \"") + key + "\"");
    return *it;
}

std::string as_string(const json& v, const char* what)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_number_integer())
        return std::to_string(v.get<long long>());
    throw ParseError(std::string(what) + " must be a string or an integer");
}

Rational as_rational(const json& v, const char* what)
{
    return parse_rational(as_string(v, what));
}

ExactReal algebraic_from(const json& obj)
{
    const json& poly = field_of(obj, "poly");
    const json& iv = field_of(obj, "interval");
    if (!poly.is_array() || !iv.is_array() || iv.size() != 2)
        throw ParseError("algebraic number needs \"poly\" array and two-element \"interval\"");
    std::vector<Integer> coeffs;
    for (const auto& c : poly) {
        Rational q = as_rational(c, "polynomial coefficient");
        if (q.get_den() != 1)
            throw ParseError("polynomial coefficients must be integers");
        coeffs.push_back(q.get_num());
    }
    return ExactReal::algebraic(IntPoly(std::move(coeffs)), as_rational(iv[0], "interval endpoint"),
                                as_rational(iv[1], "interval endpoint"));
}

} // namespace

ExactReal parse_number(const json& value, const std::optional<ExactReal>& theta)
{
    if (value.is_string())
        return ExactReal::parse(value.get<std::string>());
    if (value.is_number_integer())
        return ExactReal(static_cast<long>(value.get<long long>()));
    if (value.is_object()) {
        if (value.contains("field")) {
            if (!theta)
                throw ParseError("number uses \"field\" but the config declares no field");
            const json& cs = value["field"];
            if (!cs.is_array() || cs.empty())
                throw ParseError("\"field\" coefficients must be a nonempty array");
            ExactReal acc(0L), power(1L);
            for (const auto& c : cs) {
                acc += ExactReal(as_rational(c, "field coefficient")) * power;
                power *= *theta;
            }
            return acc;
        }
        return algebraic_from(value);
    }
    throw ParseError("numbers must be strings, integers or algebraic-number objects (got " +
                     value.dump() + ")");
}

GraphIFS parse_config(const json& doc)
{
    if (!doc.is_object())
        throw ParseError("config must be a JSON object");
    std::optional<ExactReal> theta;
    if (auto f = doc.find("field"); f != doc.end()) {
        if (!f->is_object())
            throw ParseError("\"field\" must be an object");
        theta = algebraic_from(*f);
    }
    const json& vs = field_of(doc, "vertices");
    if (!vs.is_array())
        throw ParseError("\"vertices\" must be an array");
    std::vector<std::string> names;
    for (const auto& v : vs) {
        if (!v.is_string())
            throw ParseError("vertex names must be strings");
        names.push_back(v.get<std::string>());
    }
    auto vertex = [&](const json& e, const char* key) {
        std::string n = as_string(field_of(e, key), key);
        for (std::size_t i = 0; i < names.size(); ++i)
            if (names[i] == n)
                return static_cast<VertexId>(i);
        throw ParseError("edge refers to unknown vertex '" + n + "'");
    };
    const json& es = field_of(doc, "edges");
    if (!es.is_array())
        throw ParseError("\"edges\" must be an array");
    std::vector<Edge> edges;
    for (const auto& e : es) {
        if (!e.is_object())
            throw ParseError("edges must be objects");
        const json& label = field_of(e, "label");
        if (!label.is_number_integer() || label.get<long long>() < 1)
            throw ParseError("edge labels must be positive integers");
        edges.push_back(Edge{static_cast<Label>(label.get<long long>()), vertex(e, "source"),
                             vertex(e, "target"),
                             AffineMap(parse_number(field_of(e, "a"), theta),
                                       parse_number(field_of(e, "b"), theta))});
    }
    GraphIFS g(std::move(names), std::move(edges));
    if (auto c = doc.find("comment"); c != doc.end() && c->is_string())
        g.set_comment(c->get<std::string>());
    return g;
}

GraphIFS parse_config_text(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& ex) {
        throw ParseError(std::string("malformed JSON: ") + ex.what());
    }
    return parse_config(doc);
}

GraphIFS load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot read config " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

nlohmann::ordered_json config_to_json(const GraphIFS& g)
{
    nlohmann::ordered_json doc;
    if (!g.comment().empty())
        doc["comment"] = g.comment();
    doc["vertices"] = g.vertex_names();
    auto edges = nlohmann::ordered_json::array();
    for (const auto& e : g.edges()) {
        edges.push_back({{"label", e.label},
                         {"source", g.vertex_names()[e.source]},
                         {"target", g.vertex_names()[e.target]},
                         {"a", e.map.slope().to_string()},
                         {"b", e.map.offset().to_string()}});
    }
    doc["edges"] = std::move(edges);
    return doc;
}

} // namespace topskit
