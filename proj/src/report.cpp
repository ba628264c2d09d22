#include "topskit/report.hpp"

namespace topskit {

namespace {

Json labeling_json(const Labeling& l)
{
    auto a = Json::array();
    for (Label x : l)
        a.push_back(x);
    return a;
}

} // namespace

Json to_json(const Interval& i)
{
    return Json::array({i.lo.to_string(), i.hi.to_string()});
}

Json to_json(const IntervalSet& s)
{
    auto a = Json::array();
    for (const auto& i : s.intervals())
        a.push_back(to_json(i));
    return a;
}

Json to_json(const ValidationReport& r)
{
    Json j;
    j["valid"] = r.ok();
    j["violations"] = r.violations;
    return j;
}

Json to_json(const GraphIFS& g, const ComponentHulls& h)
{
    Json j = Json::object();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        Json e;
        e["hull"] = to_json(h.hull[v]);
        e["exact"] = static_cast<bool>(h.exact[v]);
        j[g.vertex_names()[v]] = std::move(e);
    }
    return j;
}

Json to_json(const GraphIFS& g, const TopAddress& t)
{
    Json j;
    j["address"] = t.word.to_string();
    j["tail_point"] = t.tail_point.to_string();
    j["tail_vertex"] = g.vertex_names()[t.tail_vertex];
    return j;
}

Json to_json(const TopsClassification& c)
{
    Json j;
    j["verdict"] = to_string(c.verdict);
    if (c.witness) {
        Json w;
        w["edges"] = Json::array({c.witness->i, c.witness->j});
        w["intersection"] = to_json(c.witness->overlap);
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

Json to_json(const GraphIFS& g, const UpsilonRegion& r)
{
    Json j;
    j["n"] = r.n;
    j["empty"] = r.empty();
    Json reg = Json::object();
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        reg[g.vertex_names()[v]] = to_json(r.region[v]);
    j["region"] = std::move(reg);
    return j;
}

Json to_json(const GraphIFS& g, const InvarianceVerdict& v)
{
    Json j;
    j["shift_invariant"] = v.shift_invariant;
    j["witness_point"] = v.witness_point ? Json(v.witness_point->to_string()) : Json(nullptr);
    j["witness_vertex"] = v.witness_vertex ? Json(g.vertex_names()[*v.witness_vertex]) : Json(nullptr);
    j["witness_address"] = v.witness_address ? Json(v.witness_address->to_string()) : Json(nullptr);
    if (v.witness_prefix)
        j["witness_prefix"] = v.witness_prefix->to_string();
    return j;
}

Json to_json(const OrderingReport& r)
{
    Json j;
    j["total"] = r.total.get_str();
    j["evaluated"] = r.evaluated.get_str();
    j["exhaustive"] = r.exhaustive;
    j["invariant"] = r.invariant.get_str();
    j["non_invariant"] = r.non_invariant.get_str();
    j["invariant_witness"] = r.invariant_witness ? labeling_json(*r.invariant_witness) : Json(nullptr);
    j["non_invariant_witness"] =
        r.non_invariant_witness ? labeling_json(*r.non_invariant_witness) : Json(nullptr);
    auto all = Json::array();
    for (const auto& l : r.labelings) {
        Json e;
        e["labeling"] = labeling_json(l.labeling);
        e["shift_invariant"] = l.shift_invariant;
        all.push_back(std::move(e));
    }
    j["labelings"] = std::move(all);
    return j;
}

Json to_json(const RbwReport& r)
{
    Json j;
    j["rho"] = r.rho.to_string();
    j["max_len"] = r.max_len;
    auto entries = Json::array();
    for (const auto& e : r.entries) {
        Json x;
        x["word"] = e.word.to_string();
        x["endpoint"] = e.endpoint.to_string();
        x["equality"] = e.equality;
        entries.push_back(std::move(x));
    }
    j["entries"] = std::move(entries);
    j["finite_type_sufficient"] = r.finite_type_sufficient;
    j["truncated"] = r.truncated;
    Json checks = Json::object();
    for (const auto& [name, ok] : r.lemma_checks)
        checks[name] = ok;
    j["lemma_checks"] = std::move(checks);
    Json conj;
    conj["holds_up_to_max_len"] = r.conjecture.holds;
    conj["counterexample"] = r.conjecture.counterexample ? Json(r.conjecture.counterexample->to_string())
                                                         : Json(nullptr);
    j["conjecture_status"] = std::move(conj);
    auto pats = Json::array();
    for (const auto& p : r.patterns) {
        Json x;
        x["index"] = p.index;
        x["matches"] = p.matches;
        if (p.matches) {
            x["j"] = p.j;
            x["k"] = p.k;
        } else {
            x["verdict"] = "pattern broken";
        }
        pats.push_back(std::move(x));
    }
    j["pattern_scan"] = std::move(pats);
    j["note"] = r.note;
    return j;
}

} // namespace topskit
