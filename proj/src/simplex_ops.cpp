#include "strata/simplex_ops.hpp"

#include <algorithm>
#include <sstream>

namespace strata {

SimplicialOperator::SimplicialOperator(int dom, int cod, std::vector<int> values)
    : dom_(dom), cod_(cod), values_(std::move(values)) {
    if (dom_ < -1 || cod_ < -1)
        throw RangeError("ordinal below [-1]");
    if (static_cast<int>(values_.size()) != dom_ + 1)
        throw RangeError("operator value list length does not match domain");
    if (dom_ >= 0 && cod_ < 0)
        throw RangeError("no operator from a non-empty ordinal into [-1]");
    int prev = 0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        int v = values_[i];
        if (v < 0 || v > cod_)
            throw RangeError("operator value out of codomain range");
        if (i > 0 && v < prev)
            throw RangeError("operator value list not monotone");
        prev = v;
    }
}

SimplicialOperator SimplicialOperator::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = i;
    return SimplicialOperator(n, n, std::move(v));
}

int SimplicialOperator::operator()(int i) const {
    if (i < 0 || i > dom_)
        throw IndexError("operator applied outside its domain");
    return values_[static_cast<std::size_t>(i)];
}

bool SimplicialOperator::is_identity() const {
    if (dom_ != cod_) return false;
    for (int i = 0; i <= dom_; ++i)
        if (values_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

bool SimplicialOperator::is_face() const {
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i] == values_[i - 1]) return false;
    return true;
}

bool SimplicialOperator::is_degeneracy() const {
    if (dom_ < cod_) return false;
    if (cod_ == -1) return dom_ == -1;
    if (values_.empty()) return cod_ == -1;
    if (values_.front() != 0 || values_.back() != cod_) return false;
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i] - values_[i - 1] > 1) return false;
    return true;
}

bool SimplicialOperator::in_image(int j) const {
    return std::binary_search(values_.begin(), values_.end(), j);
}

bool SimplicialOperator::collapses_at(int k) const {
    if (k < 0 || k + 1 > dom_) return false;
    return values_[static_cast<std::size_t>(k)] == values_[static_cast<std::size_t>(k + 1)];
}

std::vector<int> SimplicialOperator::image() const {
    std::vector<int> im = values_;
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
}

std::string SimplicialOperator::str() const {
    std::ostringstream os;
    os << "op " << dom_ << ' ' << cod_ << " :";
    for (int v : values_) os << ' ' << v;
    return os.str();
}

SimplicialOperator compose(const SimplicialOperator& g, const SimplicialOperator& f) {
    if (f.cod() != g.dom())
        throw CompositionMismatch("compose: cod " + std::to_string(f.cod()) +
                                  " != dom " + std::to_string(g.dom()));
    std::vector<int> v(f.values().size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = g(f.values()[i]);
    return SimplicialOperator(f.dom(), g.cod(), std::move(v));
}

SimplicialOperator face_op(int n, int j) {
    if (n < 1 || j < 0 || j > n)
        throw IndexError("face_op: need n >= 1 and 0 <= j <= n");
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = i < j ? i : i + 1;
    return SimplicialOperator(n - 1, n, std::move(v));
}

SimplicialOperator degeneracy_op(int n, int j) {
    if (n < 0 || j < 0 || j > n)
        throw IndexError("degeneracy_op: need 0 <= j <= n");
    std::vector<int> v(static_cast<std::size_t>(n + 2));
    for (int i = 0; i <= n + 1; ++i)
        v[static_cast<std::size_t>(i)] = i <= j ? i : i - 1;
    return SimplicialOperator(n + 1, n, std::move(v));
}

SimplicialOperator vertex_op(int n, int i) {
    if (n < 0 || i < 0 || i > n)
        throw IndexError("vertex_op: need 0 <= i <= n");
    return SimplicialOperator(0, n, {i});
}

SimplicialOperator terminal_op(int n) {
    if (n < 0) throw IndexError("terminal_op: need n >= 0");
    return SimplicialOperator(n, 0, std::vector<int>(static_cast<std::size_t>(n + 1), 0));
}

SimplicialOperator part_inj1(int p, int q) {
    if (p < 0 || q < 0) throw RangeError("partition: p, q >= 0");
    std::vector<int> v(static_cast<std::size_t>(p + 1));
    for (int i = 0; i <= p; ++i) v[static_cast<std::size_t>(i)] = i;
    return SimplicialOperator(p, p + q, std::move(v));
}

SimplicialOperator part_inj2(int p, int q) {
    if (p < 0 || q < 0) throw RangeError("partition: p, q >= 0");
    std::vector<int> v(static_cast<std::size_t>(q + 1));
    for (int j = 0; j <= q; ++j) v[static_cast<std::size_t>(j)] = j + p;
    return SimplicialOperator(q, p + q, std::move(v));
}

SimplicialOperator part_proj1(int p, int q) {
    if (p < 0 || q < 0) throw RangeError("partition: p, q >= 0");
    std::vector<int> v(static_cast<std::size_t>(p + q + 1));
    for (int i = 0; i <= p + q; ++i) v[static_cast<std::size_t>(i)] = i <= p ? i : p;
    return SimplicialOperator(p + q, p, std::move(v));
}

SimplicialOperator part_proj2(int p, int q) {
    if (p < 0 || q < 0) throw RangeError("partition: p, q >= 0");
    std::vector<int> v(static_cast<std::size_t>(p + q + 1));
    for (int i = 0; i <= p + q; ++i) v[static_cast<std::size_t>(i)] = i < p ? 0 : i - p;
    return SimplicialOperator(p + q, q, std::move(v));
}

EzFactorization ez_factorize(const SimplicialOperator& alpha) {
    std::vector<int> im = alpha.image();
    int k = static_cast<int>(im.size()) - 1;  // intermediate ordinal [k]
    std::vector<int> deg(alpha.values().size());
    for (std::size_t i = 0; i < deg.size(); ++i) {
        auto it = std::lower_bound(im.begin(), im.end(), alpha.values()[i]);
        deg[i] = static_cast<int>(it - im.begin());
    }
    return EzFactorization{SimplicialOperator(k, alpha.cod(), im),
                           SimplicialOperator(alpha.dom(), k, std::move(deg))};
}

SimplicialOperator dual(const SimplicialOperator& alpha) {
    int n = alpha.dom(), m = alpha.cod();
    std::vector<int> v(alpha.values().size());
    for (int i = 0; i <= n; ++i)
        v[static_cast<std::size_t>(i)] = m - alpha(n - i);
    return SimplicialOperator(n, m, std::move(v));
}

SimplicialOperator ordinal_sum(const SimplicialOperator& low, const SimplicialOperator& high) {
    int n = low.dom(), np = low.cod();
    int m = high.dom(), mp = high.cod();
    std::vector<int> v(static_cast<std::size_t>(n + m + 2));
    for (int j = 0; j <= n; ++j) v[static_cast<std::size_t>(j)] = low(j);
    for (int j = n + 1; j <= n + m + 1; ++j)
        v[static_cast<std::size_t>(j)] = np + 1 + high(j - n - 1);
    return SimplicialOperator(n + m + 1, np + mp + 1, std::move(v));
}

SimplicialOperator pointwise_sum(const SimplicialOperator& a, const SimplicialOperator& b) {
    if (a.dom() != b.dom())
        throw CompositionMismatch("pointwise_sum: domains differ");
    std::vector<int> v(a.values().size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a.values()[i] + b.values()[i];
    return SimplicialOperator(a.dom(), a.cod() + b.cod(), std::move(v));
}

Adjoints adjoints(const SimplicialOperator& alpha) {
    Adjoints out;
    int n = alpha.dom(), m = alpha.cod();
    if (n == -1) {
        if (m == -1) {
            out.left = SimplicialOperator::identity(-1);
            out.right = SimplicialOperator::identity(-1);
        }
        return out;  // no maps [m] -> [-1] for m >= 0
    }
    if (alpha(n) == m) {
        std::vector<int> v(static_cast<std::size_t>(m + 1));
        for (int i = 0; i <= m; ++i) {
            int j = 0;
            while (alpha(j) < i) ++j;
            v[static_cast<std::size_t>(i)] = j;
        }
        out.left = SimplicialOperator(m, n, std::move(v));
    }
    if (alpha(0) == 0) {
        std::vector<int> v(static_cast<std::size_t>(m + 1));
        for (int i = 0; i <= m; ++i) {
            int j = n;
            while (alpha(j) > i) --j;
            v[static_cast<std::size_t>(i)] = j;
        }
        out.right = SimplicialOperator(m, n, std::move(v));
    }
    return out;
}

namespace {

SimplicialOperator extend_gamma(int n, int m, const SimplicialOperator& gamma) {
    if (gamma.dom() != n - 1 || gamma.cod() != m)
        throw RangeError("shuffle gamma must be [n-1] -> [m]");
    std::vector<int> v = gamma.values();
    v.push_back(m);
    return SimplicialOperator(n, m, std::move(v));
}

} // namespace

Shuffle shuffle_of_operator(int n, int m, const SimplicialOperator& gamma) {
    SimplicialOperator ghat = extend_gamma(n, m, gamma);
    // alpha^r = id (+) gamma-hat pointwise, a face operator [n] -> [n+m]
    SimplicialOperator ar = pointwise_sum(SimplicialOperator::identity(n), ghat);
    Adjoints adj = adjoints(ar);
    Shuffle s;
    s.n = n;
    s.m = m;
    s.gamma = gamma;
    s.alpha = *adj.left;  // exists since ar(n) = n+m
    std::vector<int> bv(s.alpha.values().size());
    for (std::size_t j = 0; j < bv.size(); ++j)
        bv[j] = static_cast<int>(j) - s.alpha.values()[j];
    s.beta = SimplicialOperator(n + m, m, std::move(bv));
    return s;
}

std::vector<Shuffle> enumerate_shuffles(int n, int m) {
    if (n < 0 || m < 0) throw RangeError("enumerate_shuffles: n, m >= 0");
    std::vector<Shuffle> out;
    for (const SimplicialOperator& g : all_operators(n - 1, m))
        out.push_back(shuffle_of_operator(n, m, g));
    return out;  // all_operators is lexicographic, which is the order on gammas
}

SimplicialOperator max_operator_of_simplex(int n, int m,
                                           const SimplicialOperator& a,
                                           const SimplicialOperator& b) {
    if (a.dom() != b.dom() || a.cod() != n || b.cod() != m)
        throw CompositionMismatch("max_operator_of_simplex: incompatible pair");
    int r = a.dom();
    std::vector<int> v(static_cast<std::size_t>(n));  // domain [n-1]
    for (int i = 0; i <= n - 1; ++i) {
        if (a(r) > i) {
            int best = m;
            for (int l = 0; l <= r; ++l)
                if (a(l) > i) best = std::min(best, b(l));
            v[static_cast<std::size_t>(i)] = best;
        } else {
            v[static_cast<std::size_t>(i)] = m;
        }
    }
    return SimplicialOperator(n - 1, m, std::move(v));
}

bool is_face_of_shuffle(const Shuffle& s, const SimplicialOperator& a,
                        const SimplicialOperator& b) {
    if (a.dom() != b.dom() || a.cod() != s.n || b.cod() != s.m)
        throw CompositionMismatch("is_face_of_shuffle: incompatible pair");
    SimplicialOperator ghat = extend_gamma(s.n, s.m, s.gamma);
    for (int l = 0; l <= a.dom(); ++l) {
        int lo = a(l) - 1 >= 0 ? ghat(a(l) - 1) : 0;
        int hi = ghat(a(l));
        if (!(lo <= b(l) && b(l) <= hi)) return false;
    }
    return true;
}

IdentityReport simplicial_identities_check(int n_max) {
    if (n_max < 1) throw RangeError("simplicial_identities_check: n_max >= 1");
    IdentityReport rep;
    auto complain = [&rep](const std::string& msg) { rep.violations.push_back(msg); };
    // delta^{n+1}_i . delta^n_j = delta^{n+1}_j . delta^n_{i-1} for j < i
    for (int n = 1; n + 1 <= n_max; ++n)
        for (int i = 0; i <= n + 1; ++i)
            for (int j = 0; j < i; ++j) {
                ++rep.instances;
                if (compose(face_op(n + 1, i), face_op(n, j)) !=
                    compose(face_op(n + 1, j), face_op(n, i - 1)))
                    complain("delta-delta failure at n=" + std::to_string(n) +
                             " i=" + std::to_string(i) + " j=" + std::to_string(j));
            }
    // sigma^{n-1}_i . sigma^n_j = sigma^{n-1}_j . sigma^n_{i+1} for j <= i
    for (int n = 1; n <= n_max; ++n)
        for (int i = 0; i <= n - 1; ++i)
            for (int j = 0; j <= i; ++j) {
                ++rep.instances;
                if (compose(degeneracy_op(n - 1, i), degeneracy_op(n, j)) !=
                    compose(degeneracy_op(n - 1, j), degeneracy_op(n, i + 1)))
                    complain("sigma-sigma failure at n=" + std::to_string(n) +
                             " i=" + std::to_string(i) + " j=" + std::to_string(j));
            }
    // sigma^{n-1}_i . delta^n_j, all three cases
    for (int n = 1; n <= n_max; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n - 1; ++i) {
                ++rep.instances;
                SimplicialOperator lhs = compose(degeneracy_op(n - 1, i), face_op(n, j));
                SimplicialOperator rhs = SimplicialOperator::identity(n - 1);
                if (j < i)
                    rhs = compose(face_op(n - 1, j), degeneracy_op(n - 2, i - 1));
                else if (j > i + 1)
                    rhs = compose(face_op(n - 1, j - 1), degeneracy_op(n - 2, i));
                if (lhs != rhs)
                    complain("sigma-delta failure at n=" + std::to_string(n) +
                             " i=" + std::to_string(i) + " j=" + std::to_string(j));
            }
    return rep;
}

std::vector<SimplicialOperator> all_operators(int a, int b) {
    std::vector<SimplicialOperator> out;
    if (a < -1) throw RangeError("all_operators: a >= -1");
    if (a == -1) {
        out.push_back(SimplicialOperator(-1, b, {}));
        return out;
    }
    if (b < 0) return out;
    std::vector<int> v(static_cast<std::size_t>(a + 1), 0);
    while (true) {
        out.push_back(SimplicialOperator(a, b, v));
        int i = a;
        while (i >= 0 && v[static_cast<std::size_t>(i)] == b) --i;
        if (i < 0) break;
        int nv = v[static_cast<std::size_t>(i)] + 1;
        for (int j = i; j <= a; ++j) v[static_cast<std::size_t>(j)] = nv;
    }
    return out;
}

std::vector<SimplicialOperator> all_face_operators(int a, int b) {
    std::vector<SimplicialOperator> out;
    for (auto& op : all_operators(a, b))
        if (op.is_face()) out.push_back(op);
    return out;
}

std::vector<SimplicialOperator> all_degeneracy_operators(int a, int b) {
    std::vector<SimplicialOperator> out;
    for (auto& op : all_operators(a, b))
        if (op.is_degeneracy()) out.push_back(op);
    return out;
}

SimplicialOperator parse_operator(const std::string& line) {
    std::istringstream is(line);
    std::string tag, colon;
    int dom = 0, cod = 0;
    if (!(is >> tag >> dom >> cod >> colon) || tag != "op" || colon != ":")
        throw ParseError("bad operator syntax: " + line);
    std::vector<int> vals;
    int v;
    while (is >> v) vals.push_back(v);
    return SimplicialOperator(dom, cod, std::move(vals));
}

} // namespace strata
