#include "strata/complicial.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <set>

namespace strata {

std::vector<SimplicialOperator> k_divided_face_operators(int n, int k) {
    if (n < 2 || k < 1 || k > n - 1)
        throw RangeError("k-divided faces need n >= 2, 1 <= k <= n-1");
    std::vector<SimplicialOperator> out;
    for (int d = 2; d <= n; ++d)
        for (auto& f : all_face_operators(d, n))
            if (f.in_image(k - 1) && f.in_image(k) && f.in_image(k + 1))
                out.push_back(f);
    return out;
}

bool is_k_admissible_under(const StratifiedComplex& X, const std::vector<char>& thin,
                           const NormalSimplex& s, int k) {
    for (const SimplicialOperator& f : k_divided_face_operators(s.dim(), k)) {
        NormalSimplex t = X.act(s, f);
        if (!t.is_degenerate() && !thin[static_cast<std::size_t>(t.base)]) return false;
    }
    return true;
}

namespace {

std::vector<char> thin_mask(const StratifiedComplex& X) {
    std::vector<char> m(static_cast<std::size_t>(X.size()));
    for (int id = 0; id < X.size(); ++id) m[static_cast<std::size_t>(id)] = X.thin(id);
    return m;
}

} // namespace

bool is_k_admissible(const StratifiedComplex& X, const NormalSimplex& s, int k) {
    return is_k_admissible_under(X, thin_mask(X), s, k);
}

PrecomplicialReport is_precomplicial(const StratifiedComplex& X) {
    PrecomplicialReport rep;
    std::vector<char> thin = thin_mask(X);
    for (int a = 0; a < X.size(); ++a) {
        int n = X.dim(a);
        if (n < 2) continue;
        NormalSimplex s{a, SimplicialOperator::identity(n)};
        for (int k = 1; k <= n - 1; ++k) {
            const NormalSimplex& mid = X.at(a).faces[static_cast<std::size_t>(k)];
            if (X.thin_simplex(mid)) continue;
            if (!X.thin_simplex(X.at(a).faces[static_cast<std::size_t>(k - 1)])) continue;
            if (!X.thin_simplex(X.at(a).faces[static_cast<std::size_t>(k + 1)])) continue;
            if (is_k_admissible_under(X, thin, s, k))
                rep.violations.emplace_back(a, k);
        }
    }
    return rep;
}

StratifiedComplex lp_reflect(const StratifiedComplex& X) {
    std::vector<char> thin = thin_mask(X);
    bool progress = true;
    while (progress) {
        progress = false;
        for (int w = 0; w < X.size(); ++w) {
            int n = X.dim(w);
            if (n < 2) continue;
            NormalSimplex s{w, SimplicialOperator::identity(n)};
            for (int k = 1; k <= n - 1; ++k) {
                const NormalSimplex& mid = X.at(w).faces[static_cast<std::size_t>(k)];
                if (mid.is_degenerate() || thin[static_cast<std::size_t>(mid.base)]) continue;
                auto thin_face = [&](int i) {
                    const NormalSimplex& f = X.at(w).faces[static_cast<std::size_t>(i)];
                    return f.is_degenerate() || thin[static_cast<std::size_t>(f.base)];
                };
                if (!thin_face(k - 1) || !thin_face(k + 1)) continue;
                if (!is_k_admissible_under(X, thin, s, k)) continue;
                thin[static_cast<std::size_t>(mid.base)] = true;
                progress = true;
            }
        }
    }
    StratifiedComplex out = X;
    for (int id = 0; id < out.size(); ++id)
        if (thin[static_cast<std::size_t>(id)]) out.set_thin(id, true);
    return out;
}

std::vector<HornInstance> admissible_horns(const StratifiedComplex& X, int n, int k) {
    if (n < 2 || k < 1 || k > n - 1)
        throw RangeError("admissible_horns: need n >= 2, 1 <= k <= n-1");
    std::vector<NormalSimplex> level = X.normal_simplices_of_dim(n - 1);
    std::vector<int> idx;  // horn face indices in order
    for (int i = 0; i <= n; ++i)
        if (i != k) idx.push_back(i);

    std::vector<HornInstance> out;
    HornInstance cur;
    cur.n = n;
    cur.k = k;
    std::vector<NormalSimplex> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == idx.size()) {
            out.push_back(cur);
            return;
        }
        int i = idx[pos];
        for (const NormalSimplex& cand : level) {
            bool ok = true;
            for (std::size_t prev = 0; prev < pos && ok; ++prev) {
                int j = idx[prev];
                // compatibility x_i . delta_j = x_j . delta_{i-1} for j < i
                if (X.act(cand, face_op(n - 1, j)) !=
                    X.act(cur.faces.at(j), face_op(n - 1, i - 1)))
                    ok = false;
            }
            if (!ok) continue;
            cur.faces[i] = cand;
            rec(pos + 1);
            cur.faces.erase(i);
        }
    };
    rec(0);

    std::vector<HornInstance> adm;
    for (const HornInstance& h : out) {
        bool ok = true;
        for (const auto& [i, s] : h.faces) {
            if (i < k - 1 && !is_k_admissible(X, s, k - 1)) { ok = false; break; }
            if (i > k + 1 && !is_k_admissible(X, s, k)) { ok = false; break; }
        }
        if (ok) adm.push_back(h);
    }
    return adm;
}

FillerSets fillers(const StratifiedComplex& X, const HornInstance& h) {
    FillerSets out;
    for (const NormalSimplex& x : X.normal_simplices_of_dim(h.n)) {
        bool match = true;
        for (const auto& [i, s] : h.faces)
            if (X.act(x, face_op(h.n, i)) != s) { match = false; break; }
        if (!match) continue;
        out.all.push_back(x);
        if (X.thin_simplex(x)) out.thin.push_back(x);
        if (is_k_admissible(X, x, h.k)) out.admissible.push_back(x);
    }
    return out;
}

namespace {

struct HornShapeReport {
    int checked = 0;
    int skipped = 0;
    std::vector<std::string> failures;
    std::vector<std::string> disagreements;
};

HornShapeReport check_horn_shape(const StratifiedComplex& X, int n, int k, int eff) {
    HornShapeReport out;
    std::vector<HornInstance> horns = admissible_horns(X, n, k);
    if (n > eff) {
        out.skipped = static_cast<int>(horns.size());
        return out;
    }
    for (const HornInstance& h : horns) {
        ++out.checked;
        FillerSets fs = fillers(X, h);
        if (fs.thin.size() != 1)
            out.failures.push_back("(" + std::to_string(n) + "," + std::to_string(k) +
                                   ")-horn has " + std::to_string(fs.thin.size()) +
                                   " thin fillers");
        bool thin_unique = fs.thin.size() == 1;
        bool adm_unique = fs.admissible.size() == 1;
        if (thin_unique != adm_unique ||
            (thin_unique && adm_unique && fs.thin[0] != fs.admissible[0]))
            out.disagreements.push_back(
                "(" + std::to_string(n) + "," + std::to_string(k) +
                ")-horn: thin fillers " + std::to_string(fs.thin.size()) +
                ", admissible fillers " + std::to_string(fs.admissible.size()));
    }
    return out;
}

} // namespace

ComplicialReport is_complicial(const StratifiedComplex& X, int bound, int workers) {
    ComplicialReport rep;
    int eff = bound < 0 ? X.dim_bound() : std::min(bound, X.dim_bound());
    rep.precomplicial = is_precomplicial(X).ok();
    for (int id = 0; id < X.size(); ++id)
        if (X.dim(id) == 1 && X.thin(id))
            rep.failures.push_back("thin non-degenerate 1-simplex " + X.name(id));
    std::vector<std::pair<int, int>> shapes;
    for (int n = 2; n <= eff + 1; ++n)
        for (int k = 1; k <= n - 1; ++k) shapes.emplace_back(n, k);
    std::vector<HornShapeReport> partial(shapes.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < shapes.size(); ++i)
            partial[i] = check_horn_shape(X, shapes[i].first, shapes[i].second, eff);
    } else {
        std::vector<std::future<HornShapeReport>> jobs;
        for (const auto& [n, k] : shapes)
            jobs.push_back(std::async(std::launch::async, check_horn_shape,
                                      std::cref(X), n, k, eff));
        for (std::size_t i = 0; i < jobs.size(); ++i) partial[i] = jobs[i].get();
    }
    for (const HornShapeReport& p : partial) {
        rep.horns_checked += p.checked;
        rep.horns_skipped_at_bound += p.skipped;
        rep.failures.insert(rep.failures.end(), p.failures.begin(), p.failures.end());
        rep.filler_disagreements.insert(rep.filler_disagreements.end(),
                                        p.disagreements.begin(), p.disagreements.end());
    }
    return rep;
}

bool is_pre_degenerate_at(const StratifiedComplex& X, const NormalSimplex& s, int k) {
    int n = s.dim();
    if (k < 0 || k >= n) throw RangeError("is_pre_degenerate_at: need 0 <= k < dim");
    for (int d = 1; d <= n; ++d)
        for (const SimplicialOperator& f : all_face_operators(d, n)) {
            if (!f.in_image(k) || !f.in_image(k + 1)) continue;
            if (!X.thin_simplex(X.act(s, f))) return false;
        }
    return true;
}

WellTemperedReport is_well_tempered(const StratifiedComplex& X) {
    WellTemperedReport rep;
    for (int d = 1; d <= X.dim_bound(); ++d)
        for (const NormalSimplex& s : X.normal_simplices_of_dim(d))
            for (int k = 0; k < d; ++k)
                if (!s.degen.collapses_at(k) && is_pre_degenerate_at(X, s, k))
                    rep.violations.emplace_back(s, k);
    return rep;
}

} // namespace strata
