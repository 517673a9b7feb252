#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homcat/algebra_iso.hpp"
#include "homcat/analyze.hpp"
#include "homcat/json_io.hpp"

namespace homcat {

// ---------------------------------------------------------------------------
// Reference algebras used by catalog claims.
// ---------------------------------------------------------------------------

template <class K>
AlgebraPtr<K> field_algebra(const K& proto) {
    const K z = field_prototype(proto);
    std::vector<std::vector<std::vector<K>>> mult(1, std::vector<std::vector<K>>(1));
    mult[0][0] = {z.one()};
    return from_structure_constants(z, 1, mult, {z.one()}, {"1"});
}

template <class K>
AlgebraPtr<K> product_kxk(const K& proto) {
    const K z = field_prototype(proto);
    const K o = z.one();
    std::vector<std::vector<std::vector<K>>> mult(2, std::vector<std::vector<K>>(2));
    mult[0][0] = {o, z};
    mult[0][1] = {z, z};
    mult[1][0] = {z, z};
    mult[1][1] = {z, o};
    return from_structure_constants(z, 2, mult, {o, o}, {"e1", "e2"});
}

template <class K>
AlgebraPtr<K> dual_numbers(const K& proto) {
    // k[t]/(t^2) presented by the one-loop quiver with relation t^2
    QuiverPresentation<K> q;
    q.proto = field_prototype(proto);
    q.vertices = {"v"};
    q.arrows = {QuiverArrow{"t", 0, 0}};
    QPath t2{0, 0, {0, 0}};
    q.relations = {{{t2, q.proto.one()}}};
    q.cap = 8;
    return from_quiver(q);
}

template <class K>
AlgebraPtr<K> arrow_algebra(const K& proto) {
    QuiverPresentation<K> q;
    q.proto = field_prototype(proto);
    q.vertices = {"1", "2"};
    q.arrows = {QuiverArrow{"a", 0, 1}};
    q.cap = 8;
    return from_quiver(q);
}

// ---------------------------------------------------------------------------
// Catalog entries with provenance-tagged expected claims.
// ---------------------------------------------------------------------------

struct Claim {
    std::string id;
    std::string expected;
    std::string provenance;
};

struct CatalogEntry {
    std::string name;
    enum class Kind { MFRing, DirectAlgebra, QuiverAlgebra, File } kind = Kind::MFRing;
    std::string f_text;        // MFRing
    std::string algebra_name;  // DirectAlgebra/QuiverAlgebra: builtin key
    ojson file_data;           // File: algebra JSON, optionally with claims
    std::vector<Claim> claims;
};

inline CatalogEntry load_instance(const std::string& name) {
    CatalogEntry e;
    e.name = name;
    // file paths load an algebra (or quiver) JSON, optionally carrying claims
    if (name.find('/') != std::string::npos ||
        (name.size() > 5 && name.substr(name.size() - 5) == ".json")) {
        e.kind = CatalogEntry::Kind::File;
        e.file_data = load_json_file(name);
        if (e.file_data.contains("claims"))
            for (const auto& c : e.file_data.at("claims"))
                e.claims.push_back(Claim{c.at("id").get<std::string>(),
                                         c.at("expected").get<std::string>(),
                                         c.value("provenance", "")});
        return e;
    }
    // a<N>_dim0 -> k[x]/(x^{N+1})
    if (name.size() > 6 && name[0] == 'a' && name.substr(name.size() - 5) == "_dim0") {
        std::string num = name.substr(1, name.size() - 6);
        int n = 0;
        for (char c : num) {
            if (c < '0' || c > '9') throw Error(ErrorKind::UnknownInstance, name);
            n = n * 10 + (c - '0');
        }
        if (n < 1 || n > 12) throw Error(ErrorKind::UnknownInstance, name);
        e.kind = CatalogEntry::Kind::MFRing;
        e.f_text = "x^" + std::to_string(n + 1);
        if (n == 1) {
            e.claims = {
                {"lambda_iso", "k", "paper: lend_R(k) is isomorphic to the field k"},
                {"indecomposables", "1", "paper: all nonfree indecomposables are isomorphic to k"},
                {"gldim", "finite:0", "paper: mod lcm(R) has global dimension zero"},
                {"dsg", "trivial", "paper: regular iff (A_1)"},
            };
        } else {
            e.claims = {
                {"indecomposables", std::to_string(n), "derived: serial census of k[x]/(x^{n+1})"},
                {"selfinjective", "true", "paper: mod(lmod R) is a Frobenius category"},
                {"gorenstein_dim", "0", "paper: Gorenstein of dimension at most 3n at n=0"},
                {"dsg", "nontrivial", "paper: regular iff (A_1)"},
            };
            if (n == 2)
                e.claims.push_back({"census_size", "2", "derived: nonprojective indecomposables of the stable endomorphism algebra"});
        }
        return e;
    }
    if (name == "a1_dim1") {
        e.kind = CatalogEntry::Kind::DirectAlgebra;
        e.algebra_name = "kxk";
        e.claims = {
            {"lambda_iso", "kxk", "paper: lend_R(R/(x) + R/(y)) = k x k"},
            {"gldim", "finite:0", "paper: ds(k x k) = 0"},
            {"dsg", "trivial", "paper: ds(k x k) = 0"},
        };
        return e;
    }
    if (name == "a2_dim1") {
        e.kind = CatalogEntry::Kind::QuiverAlgebra;
        e.algebra_name = "kt2";
        e.claims = {
            {"lambda_iso", "kt2", "paper: lend_R(m) = S/(t^2) = k[t]/(t^2)"},
            {"gldim", "infinite", "paper: artinian ring of infinite global dimension"},
            {"selfinjective", "true", "derived: D(dual numbers) is free"},
            {"ig", "0", "derived: self-injective"},
            {"census_size", "1", "derived: k is the only nonprojective indecomposable"},
            {"dsg", "nontrivial", "paper: nonzero singularity category of k[t]/(t^2)"},
        };
        return e;
    }
    throw Error(ErrorKind::UnknownInstance, name);
}

inline std::vector<std::string> catalog_names() {
    return {"a1_dim0", "a2_dim0", "a3_dim0", "a4_dim0", "a1_dim1", "a2_dim1"};
}

// ---------------------------------------------------------------------------
// Running an entry and evaluating its claims.
// ---------------------------------------------------------------------------

template <class K>
struct InstanceRun {
    CatalogEntry entry;
    std::optional<StableCatPresentation<K>> stable;  // MFRing only
    AlgebraPtr<K> lambda;
    AnalysisReport<K> report;
};

template <class K>
InstanceRun<K> run_instance(const CatalogEntry& e, const K& proto, int cap) {
    InstanceRun<K> run;
    run.entry = e;
    if (e.kind == CatalogEntry::Kind::MFRing) {
        Poly<K> f = parse_poly(e.f_text, proto);
        run.stable = build_stable_category(f);
        run.lambda = run.stable->lambda;
    } else if (e.kind == CatalogEntry::Kind::File) {
        run.lambda = parse_algebra_json<K>(e.file_data, proto);
    } else if (e.algebra_name == "kxk") {
        run.lambda = product_kxk(proto);
    } else if (e.algebra_name == "kt2") {
        run.lambda = dual_numbers(proto);
    } else {
        throw Error(ErrorKind::UnknownInstance, e.algebra_name);
    }
    run.report = analyze(run.lambda, cap, e.name);
    return run;
}

struct ClaimResult {
    std::string id, expected, actual, provenance;
    bool pass = false;
};

template <class K>
std::vector<ClaimResult> verify_paper_claims(const InstanceRun<K>& run, const K& proto) {
    std::vector<ClaimResult> out;
    const AnalysisReport<K>& r = run.report;
    for (const Claim& c : run.entry.claims) {
        ClaimResult res{c.id, c.expected, "", c.provenance, false};
        try {
            if (c.id == "lambda_iso") {
                AlgebraPtr<K> ref;
                if (c.expected == "k") ref = field_algebra(proto);
                else if (c.expected == "kxk") ref = product_kxk(proto);
                else if (c.expected == "kt2") ref = dual_numbers(proto);
                else throw Error(ErrorKind::UnknownInstance, "reference algebra " + c.expected);
                bool iso = algebra_isomorphic_small(run.lambda, ref);
                res.actual = iso ? c.expected : "not isomorphic";
                res.pass = iso;
            } else if (c.id == "indecomposables") {
                int n = run.stable ? static_cast<int>(run.stable->indecomposables.size()) : -1;
                res.actual = std::to_string(n);
                res.pass = res.actual == c.expected;
            } else if (c.id == "gldim") {
                if (!r.gldim) {
                    res.actual = "unavailable";
                } else if (r.gldim->kind == DimKind::Finite) {
                    res.actual = "finite:" + std::to_string(r.gldim->value);
                } else if (r.gldim->kind == DimKind::InfiniteCertified) {
                    res.actual = "infinite";
                } else {
                    res.actual = "at_least:" + std::to_string(r.gldim->value);
                }
                res.pass = res.actual == c.expected;
            } else if (c.id == "selfinjective") {
                res.actual = r.selfinjective ? (*r.selfinjective ? "true" : "false") : "unavailable";
                res.pass = res.actual == c.expected;
            } else if (c.id == "ig") {
                res.actual = (r.ig && *r.ig) ? std::to_string(**r.ig) : "unavailable";
                res.pass = res.actual == c.expected;
            } else if (c.id == "gorenstein_dim") {
                res.actual = r.gorenstein_dim ? std::to_string(*r.gorenstein_dim) : "unavailable";
                res.pass = res.actual == c.expected;
            } else if (c.id == "census_size") {
                res.actual = r.census ? std::to_string(r.census->size()) : "unavailable";
                res.pass = res.actual == c.expected;
            } else if (c.id == "dsg") {
                if (!r.dsg) {
                    res.actual = "unavailable";
                } else {
                    switch (r.dsg->status) {
                        case DsgStatus::Trivial: res.actual = "trivial"; break;
                        case DsgStatus::Nontrivial: res.actual = "nontrivial"; break;
                        case DsgStatus::UnknownAtCap: res.actual = "unknown"; break;
                    }
                }
                res.pass = res.actual == c.expected;
            } else {
                res.actual = "unknown claim id";
            }
        } catch (const Error& err) {
            res.actual = std::string("error: ") + err.what();
        }
        out.push_back(std::move(res));
    }
    return out;
}

}  // namespace homcat
