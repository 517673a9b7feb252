#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "homcat/algebra.hpp"
#include "homcat/errors.hpp"

namespace homcat {

struct QuiverArrow {
    std::string name;
    int from = 0, to = 0;
};

// A path is a composable arrow sequence traversed left to right; an empty
// sequence is the trivial path at `src`.
struct QPath {
    int src = 0, tgt = 0;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    bool operator==(const QPath& o) const {
        return src == o.src && tgt == o.tgt && arrows == o.arrows;
    }
};

// Length-lexicographic order with trivial paths ordered by vertex.
inline bool qpath_less(const QPath& a, const QPath& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    return a.src < b.src;
}

template <class K>
struct QuiverPresentation {
    K proto;
    std::vector<std::string> vertices;
    std::vector<QuiverArrow> arrows;
    // each relation: list of (path, coefficient); paths parallel, length >= 1
    std::vector<std::vector<std::pair<QPath, K>>> relations;
    int cap = 20;
};

namespace qdetail {

template <class K>
using Combo = std::map<std::vector<int>, K>;  // arrow sequence -> coefficient

template <class K>
void add_term(Combo<K>& c, const std::vector<int>& w, const K& coeff) {
    auto it = c.find(w);
    if (it == c.end()) {
        if (!coeff.is_zero()) c.emplace(w, coeff);
        return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) c.erase(it);
}

template <class K>
struct Rule {
    std::vector<int> lead;
    Combo<K> tail;  // lead rewrites to tail; all tail words length-lex smaller
};

inline bool word_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// Rewriting system on arrow words; vertex compatibility is implicit in the
// words themselves (only composable words ever arise).
template <class K>
struct Rewriter {
    std::vector<Rule<K>> rules;
    std::map<std::vector<int>, Combo<K>> memo;

    // Find (rule, position) for the leftmost reducible position, preferring
    // longer leads at equal positions. Returns rule index or -1.
    std::pair<int, int> find_redex(const std::vector<int>& w) const {
        for (size_t pos = 0; pos < w.size(); ++pos) {
            int best = -1;
            for (size_t r = 0; r < rules.size(); ++r) {
                const auto& lead = rules[r].lead;
                if (lead.empty() || pos + lead.size() > w.size()) continue;
                if (!std::equal(lead.begin(), lead.end(), w.begin() + pos)) continue;
                if (best < 0 || rules[r].lead.size() > rules[best].lead.size())
                    best = static_cast<int>(r);
            }
            if (best >= 0) return {best, static_cast<int>(pos)};
        }
        return {-1, -1};
    }

    // normal form of coeff * w
    Combo<K> normal_form_word_scaled(const std::vector<int>& w, const K& coeff) {
        auto [r, pos] = find_redex(w);
        Combo<K> out;
        if (r < 0) {
            add_term(out, w, coeff);
            return out;
        }
        auto it = memo.find(w);
        if (it == memo.end()) {
            Combo<K> nf;
            const Rule<K>& rule = rules[r];
            for (const auto& [tw, tc] : rule.tail) {
                std::vector<int> nw(w.begin(), w.begin() + pos);
                nw.insert(nw.end(), tw.begin(), tw.end());
                nw.insert(nw.end(), w.begin() + pos + rule.lead.size(), w.end());
                Combo<K> sub = normal_form_word_scaled(nw, tc);
                for (const auto& [sw, sc] : sub) add_term(nf, sw, sc);
            }
            it = memo.emplace(w, std::move(nf)).first;
        }
        Combo<K> out2;
        for (const auto& [sw, sc] : it->second) add_term(out2, sw, sc * coeff);
        return out2;
    }

    Combo<K> normal_form(const Combo<K>& c) {
        Combo<K> out;
        for (const auto& [w, coeff] : c) {
            Combo<K> nf = normal_form_word_scaled(w, coeff);
            for (const auto& [sw, sc] : nf) add_term(out, sw, sc);
        }
        return out;
    }
};

}  // namespace qdetail

// Build the path algebra modulo relations. Basis = paths irreducible under
// the completed length-lex rewriting, all of length < cap; an irreducible
// path of length exactly cap is the witness that finite dimensionality could
// not be established and raises NotFiniteDimensionalWithinCap.
template <class K>
AlgebraPtr<K> from_quiver(const QuiverPresentation<K>& q) {
    using Combo = qdetail::Combo<K>;
    const K zero = field_prototype(q.proto);
    const int nv = static_cast<int>(q.vertices.size());
    if (nv == 0) throw Error(ErrorKind::Validation, "quiver has no vertices");
    if (q.cap < 1) throw Error(ErrorKind::Validation, "cap must be positive");
    for (const auto& ar : q.arrows)
        if (ar.from < 0 || ar.from >= nv || ar.to < 0 || ar.to >= nv)
            throw Error(ErrorKind::Validation, "arrow endpoints out of range");

    auto word_src = [&](const std::vector<int>& w) { return q.arrows[w.front()].from; };
    auto word_tgt = [&](const std::vector<int>& w) { return q.arrows[w.back()].to; };
    auto composable = [&](const std::vector<int>& w) {
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (q.arrows[w[i]].to != q.arrows[w[i + 1]].from) return false;
        return true;
    };

    // Validate relations and orient them into rewriting rules.
    qdetail::Rewriter<K> rw;
    std::vector<Combo> pending;
    for (const auto& rel : q.relations) {
        if (rel.empty()) continue;
        int src = -1, tgt = -1;
        Combo c;
        for (const auto& [path, coeff] : rel) {
            if (path.length() < 1)
                throw Error(ErrorKind::Validation, "relation contains a trivial path");
            if (!composable(path.arrows))
                throw Error(ErrorKind::Validation, "relation path is not composable");
            int s = word_src(path.arrows), t = word_tgt(path.arrows);
            if (src < 0) {
                src = s;
                tgt = t;
            } else if (s != src || t != tgt) {
                throw Error(ErrorKind::Validation, "relation paths are not parallel");
            }
            qdetail::add_term(c, path.arrows, coeff);
        }
        if (!c.empty()) pending.push_back(std::move(c));
    }

    const size_t word_cap = static_cast<size_t>(2 * q.cap);
    auto orient = [&](Combo c) -> bool {
        c = rw.normal_form(c);
        if (c.empty()) return false;
        auto lead_it = c.begin();
        for (auto it = c.begin(); it != c.end(); ++it)
            if (qdetail::word_less(lead_it->first, it->first)) lead_it = it;
        qdetail::Rule<K> rule;
        rule.lead = lead_it->first;
        K inv = -(lead_it->second.inv());
        for (auto it = c.begin(); it != c.end(); ++it) {
            if (it == lead_it) continue;
            qdetail::add_term(rule.tail, it->first, it->second * inv);
        }
        rw.rules.push_back(std::move(rule));
        rw.memo.clear();
        return true;
    };
    for (auto& c : pending) orient(std::move(c));

    // Overlap completion so normal forms are confluent on all words of length
    // <= 2*cap (enough for products of basis paths).
    for (bool changed = true; changed;) {
        changed = false;
        size_t nrules = rw.rules.size();
        for (size_t i = 0; i < nrules && !changed; ++i)
            for (size_t j = 0; j < nrules && !changed; ++j) {
                const auto u = rw.rules[i].lead, v = rw.rules[j].lead;
                // suffix of u equals prefix of v
                for (size_t k = 1; k < u.size() && !changed; ++k) {
                    size_t olap = u.size() - k;
                    if (olap > v.size()) continue;
                    if (!std::equal(u.begin() + k, u.end(), v.begin())) continue;
                    std::vector<int> w = u;
                    w.insert(w.end(), v.begin() + olap, v.end());
                    if (w.size() > word_cap || !composable(w)) continue;
                    // route 1: rewrite the u-prefix; route 2: rewrite the v-suffix
                    Combo r1, r2;
                    for (const auto& [tw, tc] : rw.rules[i].tail) {
                        std::vector<int> nw = tw;
                        nw.insert(nw.end(), v.begin() + olap, v.end());
                        qdetail::add_term(r1, nw, tc);
                    }
                    for (const auto& [tw, tc] : rw.rules[j].tail) {
                        std::vector<int> nw(u.begin(), u.begin() + k);
                        nw.insert(nw.end(), tw.begin(), tw.end());
                        qdetail::add_term(r2, nw, tc);
                    }
                    for (const auto& [tw, tc] : r2) qdetail::add_term(r1, tw, -tc);
                    if (orient(std::move(r1))) changed = true;
                }
                // v a proper subword of u
                if (changed || v.size() >= u.size()) continue;
                for (size_t pos = 0; pos + v.size() <= u.size() && !changed; ++pos) {
                    if (!std::equal(v.begin(), v.end(), u.begin() + pos)) continue;
                    Combo r1 = rw.rules[i].tail;
                    Combo r2;
                    for (const auto& [tw, tc] : rw.rules[j].tail) {
                        std::vector<int> nw(u.begin(), u.begin() + pos);
                        nw.insert(nw.end(), tw.begin(), tw.end());
                        nw.insert(nw.end(), u.begin() + pos + v.size(), u.end());
                        qdetail::add_term(r2, nw, tc);
                    }
                    for (const auto& [tw, tc] : r2) qdetail::add_term(r1, tw, -tc);
                    if (orient(std::move(r1))) changed = true;
                }
            }
    }

    // Enumerate irreducible composable words of length <= cap.
    std::vector<QPath> basis;
    for (int v = 0; v < nv; ++v) basis.push_back(QPath{v, v, {}});
    std::vector<std::vector<int>> current;
    for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) current.push_back({a});
    for (int len = 1; len <= q.cap; ++len) {
        std::vector<std::vector<int>> next;
        for (auto& w : current) {
            if (rw.find_redex(w).first >= 0) continue;
            if (len == q.cap)
                throw Error(ErrorKind::NotFiniteDimensionalWithinCap,
                            "irreducible path of length " + std::to_string(q.cap) +
                                " exists at the cap");
            basis.push_back(QPath{word_src(w), word_tgt(w), w});
            for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a) {
                if (q.arrows[a].from != word_tgt(w)) continue;
                std::vector<int> w2 = w;
                w2.push_back(a);
                next.push_back(std::move(w2));
            }
        }
        current = std::move(next);
    }
    std::sort(basis.begin(), basis.end(), qpath_less);

    std::map<std::vector<int>, int> index_of;
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i].length() > 0) index_of[basis[i].arrows] = static_cast<int>(i);
    std::vector<int> trivial_index(nv, -1);
    for (size_t i = 0; i < basis.size(); ++i)
        if (basis[i].length() == 0) trivial_index[basis[i].src] = static_cast<int>(i);

    const int d = static_cast<int>(basis.size());
    Algebra<K> alg;
    alg.k0 = zero;
    alg.dim = d;
    for (const QPath& p : basis) {
        if (p.length() == 0) {
            alg.labels.push_back("e_" + q.vertices[p.src]);
        } else {
            std::string s;
            for (int a : p.arrows) {
                if (!s.empty()) s += "*";
                s += q.arrows[a].name;
            }
            alg.labels.push_back(s);
        }
    }
    alg.unit.assign(d, zero);
    for (int v = 0; v < nv; ++v) alg.unit[trivial_index[v]] = zero.one();

    auto combo_to_vec = [&](const Combo& c) {
        std::vector<K> out(d, zero);
        for (const auto& [w, coeff] : c) {
            auto it = index_of.find(w);
            if (it == index_of.end())
                throw std::logic_error("normal form left the computed basis");
            out[it->second] = out[it->second] + coeff;
        }
        return out;
    };

    alg.mult.assign(d, std::vector<typename Algebra<K>::Vec>(d, alg.zero_vec()));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const QPath& p = basis[i];
            const QPath& r = basis[j];
            if (p.tgt != r.src) continue;  // product is zero
            if (p.length() == 0 && r.length() == 0) {
                alg.mult[i][j][i] = zero.one();
                continue;
            }
            std::vector<int> w = p.arrows;
            w.insert(w.end(), r.arrows.begin(), r.arrows.end());
            if (w.empty()) continue;
            Combo nf = rw.normal_form_word_scaled(w, zero.one());
            alg.mult[i][j] = combo_to_vec(nf);
        }

    std::vector<std::vector<K>> vertex_idem;
    for (int v = 0; v < nv; ++v) {
        std::vector<K> e(d, zero);
        e[trivial_index[v]] = zero.one();
        vertex_idem.push_back(std::move(e));
    }
    return make_algebra(std::move(alg), vertex_idem);
}

}  // namespace homcat
