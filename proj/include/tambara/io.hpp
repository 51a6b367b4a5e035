#pragma once

// JSON interchange.  Integers that may exceed 64 bits travel as decimal
// strings; elements travel in their canonical text form.

#include <string>
#include <vector>

#include <json.hpp>

#include "tambara/expr.hpp"
#include "tambara/ideals.hpp"
#include "tambara/lattice.hpp"
#include "tambara/primality.hpp"
#include "tambara/spectrum.hpp"

namespace tambara {

using json = nlohmann::json;

inline json lattice_to_json(const Lattice& l)
{
    json rows = json::array();
    for (const auto& row : l.basis()) {
        json r = json::array();
        for (const auto& x : row)
            r.push_back(x.get_str());
        rows.push_back(std::move(r));
    }
    return json{{"dim", l.dim()}, {"rows", std::move(rows)}};
}

inline Lattice lattice_from_json(const json& j)
{
    const std::size_t n = j.at("dim").get<std::size_t>();
    Matrix rows;
    for (const auto& r : j.at("rows")) {
        IntVec row;
        for (const auto& x : r)
            row.emplace_back(x.is_string() ? x.get<std::string>()
                                           : std::to_string(x.get<long long>()));
        rows.push_back(std::move(row));
    }
    return Lattice::from_canonical(n, std::move(rows));
}

inline json descriptor_to_json(const JDescriptor& d)
{
    return json{{"level", d.level}, {"k", d.cut}, {"x", d.x.get_str()}};
}

inline json sequence_to_json(const IdealSequence& seq)
{
    json levels = json::array(), labels = json::array();
    for (const auto& I : seq.ideals()) {
        levels.push_back(lattice_to_json(I.lattice()));
        if (auto d = recognize_J(I))
            labels.push_back(descriptor_to_json(*d));
        else
            labels.push_back(nullptr);
    }
    return json{{"p", seq.params().p},
                {"r", seq.top()},
                {"levels", std::move(levels)},
                {"labels", std::move(labels)}};
}

/// Rebuilds a sequence; the group rank is taken as max(top, rank).
inline IdealSequence sequence_from_json(const json& j, unsigned rank = 0)
{
    const unsigned long p = j.at("p").get<unsigned long>();
    const unsigned top = j.at("r").get<unsigned>();
    GroupParams P(p, std::max(top, rank));
    std::vector<Ideal> v;
    unsigned k = 0;
    for (const auto& lj : j.at("levels"))
        v.emplace_back(P, k++, lattice_from_json(lj));
    IdealSequence seq(std::move(v));
    if (seq.top() != top)
        throw PreconditionViolated("sequence JSON: r does not match number of levels");
    return seq;
}

inline json witness_to_json(const Witness& w)
{
    return json{{"k", w.k}, {"i", w.i}, {"b", to_string(w.b)}, {"a", to_string(w.a)}};
}

inline Witness witness_from_json(const json& j, const GroupParams& P)
{
    Element b = eval_expr(j.at("b").get<std::string>(), P);
    Element a = eval_expr(j.at("a").get<std::string>(), P);
    const unsigned k = j.at("k").get<unsigned>(), i = j.at("i").get<unsigned>();
    // bare integers parse at level 0; lift them to their declared levels
    if (b.level() != i && b.level() == 0)
        b = Element::constant(P, i, b[0]);
    if (a.level() != k && a.level() == 0)
        a = Element::constant(P, k, a[0]);
    return Witness{k, i, b, a};
}

inline json prime_report_to_json(const PrimeReport& rep)
{
    json j{{"status", to_string(rep.status)}, {"bound", rep.bound}};
    if (rep.witness)
        j["witness"] = witness_to_json(*rep.witness);
    return j;
}

inline json spectrum_to_json(const GroupParams& G, const std::vector<Int>& qs,
                             const std::vector<SpectrumPoint>& pts, const Poset& poset)
{
    json jq = json::array();
    for (const auto& q : qs)
        jq.push_back(q.get_str());
    json jp = json::array();
    for (std::size_t a = 0; a < pts.size(); ++a) {
        const auto& pt = pts[a];
        json e{{"id", a},
               {"kind", kind_name(pt.kind)},
               {"label", label(pt, G.r, G.p)},
               {"tambara", to_string(pt.tambara.status)},
               {"seq", sequence_to_json(pt.seq)}};
        if (pt.kind != PointKind::Lp)
            e["i"] = pt.i;
        if (pt.kind == PointKind::LiSq)
            e["q"] = pt.q.get_str();
        jp.push_back(std::move(e));
    }
    json edges = json::array();
    for (const auto& [a, b] : poset.covers)
        edges.push_back(json::array({a, b}));
    return json{{"p", G.p},
                {"r", G.r},
                {"qs", std::move(jq)},
                {"points", std::move(jp)},
                {"edges", std::move(edges)},
                {"dimension", dimension(pts, poset)}};
}

} // namespace tambara
