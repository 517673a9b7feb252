#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homcat/homological.hpp"
#include "homcat/stable_cat.hpp"

namespace homcat {

// Full homological profile of a finite-dimensional algebra. Fields that could
// not be computed carry their error text instead of aborting the report.
template <class K>
struct AnalysisReport {
    std::string instance;
    int lambda_dim = 0;

    std::optional<GDimReport<K>> gldim;
    std::optional<std::pair<GDimReport<K>, GDimReport<K>>> injdim;
    std::optional<std::optional<int>> ig;  // engaged once computed; inner nullopt = cap exceeded
    std::optional<bool> selfinjective;
    std::optional<int> gorenstein_dim;
    std::optional<std::vector<IndecDescriptor<K>>> census;  // only for serial algebras
    std::optional<DsgReport<K>> dsg;
    std::vector<std::string> errors;
};

template <class K>
void enforce_report_consistency(const AnalysisReport<K>& r) {
    if (r.selfinjective && *r.selfinjective && r.ig && *r.ig && **r.ig != 0)
        throw std::logic_error("report inconsistency: self-injective with nonzero IG level");
    if (r.gldim && r.gldim->finite() && r.dsg && r.dsg->status != DsgStatus::Trivial)
        throw std::logic_error("report inconsistency: finite global dimension but nontrivial dsg");
    if (r.ig && *r.ig && r.gorenstein_dim && *r.gorenstein_dim > **r.ig)
        throw std::logic_error("report inconsistency: Gorenstein dimension exceeds IG level");
}

template <class K>
AnalysisReport<K> analyze(const AlgebraPtr<K>& lambda, int cap, const std::string& instance = "") {
    AnalysisReport<K> r;
    r.instance = instance;
    r.lambda_dim = lambda->dim;

    if (lambda->dim == 0) {
        // zero algebra: regular of dimension zero, trivial singularity category
        r.gldim = GDimReport<K>{};
        r.injdim = {GDimReport<K>{}, GDimReport<K>{}};
        r.ig = std::optional<int>(0);
        r.selfinjective = true;
        r.gorenstein_dim = 0;
        r.census = std::vector<IndecDescriptor<K>>{};
        r.dsg = DsgReport<K>{DsgStatus::Trivial, std::nullopt, ""};
        return r;
    }

    auto guard = [&](const char* field, auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            r.errors.push_back(std::string(field) + ": " + e.what());
        }
    };
    guard("gldim", [&] { r.gldim = global_dimension(lambda, cap); });
    guard("injdim", [&] { r.injdim = injective_dimension_regular(lambda, cap); });
    guard("ig", [&] {
        if (r.injdim && r.injdim->first.finite() && r.injdim->second.finite()) {
            if (r.injdim->first.value != r.injdim->second.value)
                throw std::logic_error("one-sided injective dimensions disagree while both finite");
            r.ig = std::optional<int>(r.injdim->first.value);
        } else {
            r.ig = iwanaga_gorenstein(lambda, cap);
        }
    });
    guard("selfinjective", [&] { r.selfinjective = is_selfinjective(lambda); });
    guard("gorenstein_dim", [&] {
        if (r.ig && *r.ig) r.gorenstein_dim = gorenstein_dimension_category(lambda, cap, &*r.ig);
    });
    guard("gp_census", [&] {
        if (r.ig && *r.ig && is_nakayama(lambda))
            r.census = gp_census(lambda, cap, std::nullopt, &*r.ig);
    });
    guard("dsg", [&] {
        const GDimReport<K>* gh = r.gldim ? &*r.gldim : nullptr;
        const std::optional<int>* ih = r.ig ? &*r.ig : nullptr;
        r.dsg = singularity_trivial(lambda, cap, gh, ih);
    });
    enforce_report_consistency(r);
    return r;
}

// End-to-end: stable category of k[x]/(f), then the homological profile of
// its stable endomorphism algebra.
template <class K>
struct RingAnalysis {
    StableCatPresentation<K> stable;
    AnalysisReport<K> report;
};

template <class K>
RingAnalysis<K> analyze_ring(const Poly<K>& f, int cap, const std::string& instance = "") {
    RingAnalysis<K> out{build_stable_category(f), AnalysisReport<K>{}};
    out.report = analyze(out.stable.lambda, cap, instance);
    return out;
}

}  // namespace homcat
