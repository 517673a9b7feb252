#include "homcat/driver.hpp"

#include <sstream>

#include "homcat/catalog.hpp"

namespace homcat {

namespace {

template <class K>
ojson ring_report(const std::string& f_text, const K& proto, int cap) {
    Poly<K> f = parse_poly(f_text, proto);
    RingAnalysis<K> ra = analyze_ring(f, cap, "ring(" + f.str() + ")");
    ojson j;
    j["instance"] = ra.report.instance;
    j["field"] = {{"char", field_characteristic(proto)}};
    ojson ring;
    ring["f"] = f.str();
    ring["indecomposables"] = ra.stable.indecomposables.size();
    ojson table = ojson::array();
    for (size_t i = 0; i < ra.stable.indecomposables.size(); ++i) {
        ojson row = ojson::array();
        for (size_t jj = 0; jj < ra.stable.indecomposables.size(); ++jj)
            row.push_back(ra.stable.hom_dim(static_cast<int>(i), static_cast<int>(jj)));
        table.push_back(row);
    }
    ring["hom_table"] = table;
    ring["lambda_dim"] = ra.stable.lambda_dim();
    ojson dims = ojson::array();
    for (const auto& m : ra.stable.indecomposables) dims.push_back(m.dim);
    ring["indecomposable_dims"] = dims;
    j["ring"] = ring;
    ojson frag = report_fragment_json(ra.report);
    for (auto& [k, v] : frag.items()) j[k] = v;
    return j;
}

template <class K>
ojson algebra_report(const ojson& file, const K& proto, int cap, const std::string& name,
                     bool& claims_failed) {
    AlgebraPtr<K> alg = parse_algebra_json<K>(file, proto);
    AnalysisReport<K> rep = analyze(alg, cap, name);
    ojson j;
    j["instance"] = name;
    j["field"] = {{"char", field_characteristic(proto)}};
    j["lambda_dim"] = alg->dim;
    ojson frag = report_fragment_json(rep);
    for (auto& [k, v] : frag.items()) j[k] = v;
    claims_failed = false;
    if (file.contains("claims")) {
        InstanceRun<K> run;
        run.entry.name = name;
        for (const auto& c : file.at("claims"))
            run.entry.claims.push_back(Claim{c.at("id").get<std::string>(),
                                             c.at("expected").get<std::string>(),
                                             c.value("provenance", "")});
        run.lambda = alg;
        run.report = rep;
        auto results = verify_paper_claims(run, proto);
        ojson cj = ojson::array();
        for (const auto& res : results) {
            ojson e;
            e["id"] = res.id;
            e["expected"] = res.expected;
            e["actual"] = res.actual;
            e["pass"] = res.pass;
            cj.push_back(e);
            claims_failed = claims_failed || !res.pass;
        }
        j["claims"] = cj;
    }
    return j;
}

template <class K>
ojson decompose_report(const ojson& file, const K& proto, int cap) {
    auto [alg, mod] = parse_module_json<K>(file, proto);
    (void)cap;
    auto parts = decompose(mod);
    ojson j;
    j["field"] = {{"char", field_characteristic(proto)}};
    j["dim"] = mod.dim;
    ojson s = ojson::array();
    for (const auto& p : parts) {
        ojson e;
        e["dim"] = p.piece.dim;
        e["multiplicity"] = p.multiplicity;
        e["projective"] = is_projective(p.piece);
        s.push_back(e);
    }
    j["summands"] = s;
    return j;
}

template <class K>
ojson suite_report(const K& proto, int cap, bool& all_pass) {
    all_pass = true;
    ojson suite = ojson::array();
    for (const std::string& name : catalog_names()) {
        CatalogEntry entry = load_instance(name);
        InstanceRun<K> run = run_instance(entry, proto, cap);
        auto results = verify_paper_claims(run, proto);
        ojson j;
        j["instance"] = name;
        j["lambda_dim"] = run.lambda->dim;
        ojson frag = report_fragment_json(run.report);
        for (auto& [k, v] : frag.items()) j[k] = v;
        ojson cj = ojson::array();
        for (const auto& res : results) {
            ojson e;
            e["id"] = res.id;
            e["expected"] = res.expected;
            e["actual"] = res.actual;
            e["pass"] = res.pass;
            e["provenance"] = res.provenance;
            cj.push_back(e);
            all_pass = all_pass && res.pass;
        }
        j["claims"] = cj;
        suite.push_back(j);
    }
    ojson out;
    out["field"] = {{"char", field_characteristic(proto)}};
    out["suite"] = suite;
    out["all_pass"] = all_pass;
    return out;
}

template <class K>
ojson census_report(const std::string& f_text, const std::string& input_path, const K& proto,
                    int cap) {
    AlgebraPtr<K> lambda;
    ojson j;
    if (!f_text.empty()) {
        Poly<K> f = parse_poly(f_text, proto);
        StableCatPresentation<K> sc = build_stable_category(f);
        lambda = sc.lambda;
        j["instance"] = "ring(" + f.str() + ")";
    } else {
        lambda = parse_algebra_json<K>(load_json_file(input_path), proto);
        j["instance"] = input_path;
    }
    j["field"] = {{"char", field_characteristic(proto)}};
    j["lambda_dim"] = lambda->dim;
    auto census = lambda->dim == 0 ? std::vector<IndecDescriptor<K>>{} : gp_census(lambda, cap);
    ojson c = ojson::array();
    for (const auto& d : census) {
        ojson e;
        e["projective"] = d.projective_index;
        e["radical_power"] = d.radical_power;
        e["dim"] = d.mod.dim;
        c.push_back(e);
    }
    j["gp_census"] = c;
    return j;
}

}  // namespace

ojson run_analyze_ring(const std::string& f_text, FieldDesc field, int cap) {
    if (field.characteristic == 0) return ring_report(f_text, Rat(), cap);
    return ring_report(f_text, Fp(0, field.characteristic), cap);
}

ojson run_analyze_algebra(const std::string& input_path, int cap, bool& claims_failed) {
    ojson file = load_json_file(input_path);
    FieldDesc field = parse_field(file.at("field"));
    if (field.characteristic == 0)
        return algebra_report(file, Rat(), cap, input_path, claims_failed);
    return algebra_report(file, Fp(0, field.characteristic), cap, input_path, claims_failed);
}

ojson run_decompose(const std::string& input_path, int cap) {
    ojson file = load_json_file(input_path);
    ojson alg = file.at("algebra");
    if (alg.is_string()) alg = load_json_file(alg.get<std::string>());
    FieldDesc field = parse_field(alg.at("field"));
    if (field.characteristic == 0) return decompose_report(file, Rat(), cap);
    return decompose_report(file, Fp(0, field.characteristic), cap);
}

ojson run_paper_suite(FieldDesc field, int cap, bool& all_pass) {
    if (field.characteristic == 0) return suite_report(Rat(), cap, all_pass);
    return suite_report(Fp(0, field.characteristic), cap, all_pass);
}

ojson run_census(const std::string& f_text, const std::string& input_path, FieldDesc field,
                 int cap) {
    if (field.characteristic == 0) return census_report(f_text, input_path, Rat(), cap);
    return census_report(f_text, input_path, Fp(0, field.characteristic), cap);
}

namespace {

void render_value(const ojson& v, const std::string& key, int indent, std::ostringstream& out) {
    std::string pad(static_cast<size_t>(indent) * 2, ' ');
    if (v.is_object()) {
        out << pad << key << ":\n";
        for (auto& [k, val] : v.items()) render_value(val, k, indent + 1, out);
    } else if (v.is_array()) {
        bool scalars = true;
        for (const auto& e : v) scalars = scalars && !e.is_structured();
        if (scalars) {
            out << pad << key << ": " << v.dump() << "\n";
        } else {
            out << pad << key << ":\n";
            int i = 0;
            for (const auto& e : v) render_value(e, "- [" + std::to_string(i++) + "]", indent + 1, out);
        }
    } else {
        out << pad << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

}  // namespace

std::string render_text(const ojson& j) {
    std::ostringstream out;
    for (auto& [k, v] : j.items()) render_value(v, k, 0, out);
    return out.str();
}

}  // namespace homcat
