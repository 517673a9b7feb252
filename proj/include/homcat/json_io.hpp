#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "homcat/analyze.hpp"
#include "homcat/module.hpp"
#include "homcat/quiver.hpp"

namespace homcat {

using ojson = nlohmann::ordered_json;

inline ojson load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open file: " + path);
    ojson j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, "bad JSON in " + path + ": " + e.what());
    }
    return j;
}

inline FieldDesc parse_field(const ojson& j) {
    if (!j.contains("char")) throw Error(ErrorKind::Parse, "field needs a \"char\" entry");
    long c = j.at("char").get<long>();
    if (c < 0) throw Error(ErrorKind::Parse, "characteristic must be nonnegative");
    return FieldDesc::of_char(static_cast<uint32_t>(c));
}

template <class K>
K parse_scalar(const ojson& j, const K& proto) {
    if (j.is_number_integer()) return scalar_from_int(j.get<long>(), proto);
    if (j.is_string()) return scalar_from_string(j.get<std::string>(), proto);
    throw Error(ErrorKind::Parse, "coefficient must be an integer or an \"a/b\" string");
}

template <class K>
std::vector<K> parse_row(const ojson& j, int len, const K& proto) {
    if (!j.is_array() || static_cast<int>(j.size()) != len)
        throw Error(ErrorKind::Parse, "expected a coefficient row of length " + std::to_string(len));
    std::vector<K> out;
    out.reserve(len);
    for (const auto& x : j) out.push_back(parse_scalar(x, proto));
    return out;
}

// {"field":{"char":..}, "kind":"structure"|"quiver", ...}
template <class K>
AlgebraPtr<K> parse_algebra_json(const ojson& j, const K& proto) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "structure") {
        const ojson& s = j.at("structure");
        int dim = s.at("dim").get<int>();
        if (dim < 0) throw Error(ErrorKind::Parse, "negative dimension");
        std::vector<std::string> labels;
        if (s.contains("basis"))
            for (const auto& l : s.at("basis")) labels.push_back(l.get<std::string>());
        const ojson& mult = s.at("mult");
        if (static_cast<int>(mult.size()) != dim)
            throw Error(ErrorKind::Parse, "mult must have dim rows");
        std::vector<std::vector<std::vector<K>>> table(dim, std::vector<std::vector<K>>(dim));
        for (int i = 0; i < dim; ++i) {
            if (static_cast<int>(mult[i].size()) != dim)
                throw Error(ErrorKind::Parse, "mult row has wrong length");
            for (int jj = 0; jj < dim; ++jj) table[i][jj] = parse_row(mult[i][jj], dim, proto);
        }
        std::vector<K> unit = parse_row(s.at("unit"), dim, proto);
        return from_structure_constants(proto, dim, table, unit, labels);
    }
    if (kind == "quiver") {
        const ojson& q = j.at("quiver");
        QuiverPresentation<K> pres;
        pres.proto = field_prototype(proto);
        for (const auto& v : q.at("vertices")) pres.vertices.push_back(v.get<std::string>());
        auto vertex_index = [&](const std::string& name) {
            for (size_t i = 0; i < pres.vertices.size(); ++i)
                if (pres.vertices[i] == name) return static_cast<int>(i);
            throw Error(ErrorKind::Parse, "unknown vertex '" + name + "'");
        };
        if (q.contains("arrows"))
            for (const auto& ar : q.at("arrows")) {
                QuiverArrow a;
                a.name = ar.at("name").get<std::string>();
                a.from = vertex_index(ar.at("from").get<std::string>());
                a.to = vertex_index(ar.at("to").get<std::string>());
                pres.arrows.push_back(a);
            }
        auto arrow_index = [&](const std::string& name) {
            for (size_t i = 0; i < pres.arrows.size(); ++i)
                if (pres.arrows[i].name == name) return static_cast<int>(i);
            throw Error(ErrorKind::Parse, "unknown arrow '" + name + "'");
        };
        if (q.contains("relations"))
            for (const auto& rel : q.at("relations")) {
                std::vector<std::pair<QPath, K>> terms;
                for (const auto& term : rel) {
                    QPath p;
                    for (const auto& an : term.at("path")) p.arrows.push_back(arrow_index(an.get<std::string>()));
                    if (p.arrows.empty())
                        throw Error(ErrorKind::Parse, "relation path must be nonempty");
                    p.src = pres.arrows[p.arrows.front()].from;
                    p.tgt = pres.arrows[p.arrows.back()].to;
                    K c = term.contains("coeff") ? parse_scalar<K>(term.at("coeff"), proto)
                                                 : field_prototype(proto).one();
                    terms.emplace_back(p, c);
                }
                pres.relations.push_back(std::move(terms));
            }
        pres.cap = q.contains("cap") ? q.at("cap").get<int>() : 20;
        return from_quiver(pres);
    }
    throw Error(ErrorKind::Parse, "kind must be \"structure\" or \"quiver\"");
}

// {"algebra": "<path>" | {...inline...}, "dim":m, "action":{"label":[[..]..]}}
template <class K>
std::pair<AlgebraPtr<K>, FdModule<K>> parse_module_json(const ojson& j, const K& proto,
                                                        const std::string& base_dir = "") {
    AlgebraPtr<K> alg;
    const ojson& aj = j.at("algebra");
    if (aj.is_string()) {
        std::string path = aj.get<std::string>();
        if (!base_dir.empty() && !path.empty() && path[0] != '/') path = base_dir + "/" + path;
        alg = parse_algebra_json<K>(load_json_file(path), proto);
    } else {
        alg = parse_algebra_json<K>(aj, proto);
    }
    FdModule<K> m;
    m.alg = alg;
    m.dim = j.at("dim").get<int>();
    const ojson& act = j.at("action");
    for (int b = 0; b < alg->dim; ++b) {
        const std::string& label = alg->labels[b];
        if (!act.contains(label))
            throw Error(ErrorKind::Parse, "action missing basis label '" + label + "'");
        const ojson& rows = act.at(label);
        if (static_cast<int>(rows.size()) != m.dim)
            throw Error(ErrorKind::Parse, "action matrix for '" + label + "' has wrong row count");
        Mat<K> mat(m.dim, m.dim, field_prototype(proto));
        for (int r = 0; r < m.dim; ++r) mat.set_row(r, parse_row(rows[r], m.dim, proto));
        m.action.push_back(std::move(mat));
    }
    validate_module(m);
    return {alg, m};
}

// ---------------------------------------------------------------------------
// Report emission (deterministic field order via ordered_json)
// ---------------------------------------------------------------------------

template <class K>
ojson gldim_json(const GDimReport<K>& g) {
    ojson j;
    switch (g.kind) {
        case DimKind::Finite:
            j["kind"] = "finite";
            j["value"] = g.value;
            break;
        case DimKind::AtLeastCap:
            j["kind"] = "at_least";
            j["value"] = g.value;
            break;
        case DimKind::InfiniteCertified:
            j["kind"] = "infinite";
            if (g.witness) {
                ojson w;
                if (g.simple_index >= 0) w["simple"] = g.simple_index;
                w["syzygy_from"] = g.witness->i;
                w["syzygy_to"] = g.witness->j;
                w["module_dim"] = g.witness->from.dim;
                j["witness"] = w;
            }
            break;
    }
    return j;
}

template <class K>
ojson report_fragment_json(const AnalysisReport<K>& r) {
    ojson j;
    if (r.gldim) j["gldim"] = gldim_json(*r.gldim);
    else j["gldim"] = nullptr;
    if (r.injdim) {
        ojson inj = ojson::array();
        inj.push_back(r.injdim->first.finite() ? ojson(r.injdim->first.value) : ojson(nullptr));
        inj.push_back(r.injdim->second.finite() ? ojson(r.injdim->second.value) : ojson(nullptr));
        j["injdim"] = inj;
    } else {
        j["injdim"] = nullptr;
    }
    if (r.ig && *r.ig) j["ig"] = **r.ig;
    else j["ig"] = nullptr;
    if (r.selfinjective) j["selfinjective"] = *r.selfinjective;
    else j["selfinjective"] = nullptr;
    if (r.gorenstein_dim) j["gorenstein_dim"] = *r.gorenstein_dim;
    else j["gorenstein_dim"] = nullptr;
    if (r.census) {
        ojson c = ojson::array();
        for (const auto& d : *r.census) {
            ojson e;
            e["projective"] = d.projective_index;
            e["radical_power"] = d.radical_power;
            e["dim"] = d.mod.dim;
            c.push_back(e);
        }
        j["gp_census"] = c;
    } else {
        j["gp_census"] = nullptr;
    }
    if (r.dsg) {
        switch (r.dsg->status) {
            case DsgStatus::Trivial: j["dsg"] = "trivial"; break;
            case DsgStatus::Nontrivial: j["dsg"] = "nontrivial"; break;
            case DsgStatus::UnknownAtCap: j["dsg"] = "unknown"; break;
        }
        if (r.dsg->status == DsgStatus::Nontrivial && r.dsg->witness) {
            ojson w;
            w["dim"] = r.dsg->witness->dim;
            if (!r.dsg->witness_label.empty()) w["label"] = r.dsg->witness_label;
            j["dsg_witness"] = w;
        }
    } else {
        j["dsg"] = "unknown";
    }
    if (!r.errors.empty()) j["field_errors"] = r.errors;
    return j;
}

}  // namespace homcat
