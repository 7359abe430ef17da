#include "abelian/apparent.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace abelian {

SupportHypermatrix::SupportHypermatrix(std::vector<int> dims, std::uint64_t q) : box_(std::move(dims)), q_(q) {
    pat_.assign(box_.size(), 0);
}

SupportHypermatrix::SupportHypermatrix(std::vector<int> dims, std::uint64_t q, std::vector<std::uint8_t> pattern)
    : box_(std::move(dims)), q_(q), pat_(std::move(pattern)) {
    if (pat_.size() != box_.size()) throw std::invalid_argument("pattern size does not match the index box");
    for (auto& v : pat_) v = v ? 1 : 0;
}

SupportHypermatrix SupportHypermatrix::of(const MultiPoly& f, std::uint64_t q) {
    return SupportHypermatrix(f.dims(), q, f.support());
}

SupportHypermatrix SupportHypermatrix::ones(std::vector<int> dims, std::uint64_t q) {
    SupportHypermatrix m(std::move(dims), q);
    std::fill(m.pat_.begin(), m.pat_.end(), 1);
    return m;
}

bool SupportHypermatrix::is_zero() const {
    return std::all_of(pat_.begin(), pat_.end(), [](auto v) { return v == 0; });
}

std::size_t SupportHypermatrix::weight() const {
    return static_cast<std::size_t>(std::count(pat_.begin(), pat_.end(), 1));
}

bool SupportHypermatrix::is_orbit_matrix() const { return is_orbit_union(pat_, q_, dims()); }

bool SupportHypermatrix::leq(const SupportHypermatrix& o) const {
    if (!(box_ == o.box_)) throw std::invalid_argument("comparing hypermatrices over different boxes");
    for (std::size_t i = 0; i < pat_.size(); ++i)
        if (pat_[i] && !o.pat_[i]) return false;
    return true;
}

SupportHypermatrix SupportHypermatrix::hypercolumn(int axis, int level) const {
    const int j = axis - 1;
    if (j < 0 || j >= rank() || rank() < 2) throw std::invalid_argument("invalid hypercolumn axis");
    std::vector<int> sub;
    for (int k = 0; k < rank(); ++k)
        if (k != j) sub.push_back(dims()[k]);
    SupportHypermatrix h(sub, q_);
    std::size_t out = 0;
    // row-major order of the remaining axes is preserved when skipping axis j
    for (std::size_t i = 0; i < pat_.size(); ++i)
        if (box_.coord(i, j) == level) h.pat_[out++] = pat_[i];
    return h;
}

IndexMask SupportHypermatrix::axis_support(int axis) const {
    const int j = axis - 1;
    IndexMask s(dims()[j], 0);
    for (std::size_t i = 0; i < pat_.size(); ++i)
        if (pat_[i]) s[box_.coord(i, j)] = 1;
    return s;
}

OrbitSet SupportHypermatrix::support_set() const { return OrbitSet::from_mask(dims(), q_, pat_); }

SupportHypermatrix afforded(const OrbitSet& D) {
    std::vector<std::uint8_t> pat(D.mask().size());
    for (std::size_t i = 0; i < pat.size(); ++i) pat[i] = D.mask()[i] ? 0 : 1;
    return SupportHypermatrix(D.dims(), D.q(), std::move(pat));
}

namespace {

int vec_value(const std::vector<std::uint8_t>& pat, std::size_t off, std::size_t stride, int n, const BoundSet& B) {
    IndexMask comp(n, 1);
    bool nz = false;
    for (int i = 0; i < n; ++i)
        if (pat[off + i * stride]) {
            comp[i] = 0;
            nz = true;
        }
    return nz ? B.eval(n, comp) : 0;
}

}  // namespace

int vec_apparent(const SupportHypermatrix& v, const BoundSet& B) {
    if (v.rank() != 1) throw std::invalid_argument("vector apparent distance needs s = 1");
    return vec_value(v.pattern(), 0, 1, v.dims()[0], B);
}

ApparentReport hyper_apparent(const SupportHypermatrix& M, const BoundSet& B) {
    ApparentReport rep;
    const int s = M.rank();
    if (s == 1) {
        rep.value = vec_apparent(M, B);
        rep.omega = {rep.value};
        rep.epsilon = {rep.value ? 1 : 0};
        rep.delta = {rep.value};
        return rep;
    }
    if (M.is_zero()) {
        rep.omega.assign(s, 0);
        rep.epsilon.assign(s, 0);
        rep.delta.assign(s, 0);
        rep.column_delta.assign(s, {});
        for (int j = 0; j < s; ++j) rep.column_delta[j].assign(M.dims()[j], 0);
        return rep;
    }
    rep.column_delta.resize(s);
    for (int j = 1; j <= s; ++j) {
        const int r = M.dims()[j - 1];
        const IndexMask supp = M.axis_support(j);
        IndexMask comp(r);
        for (int k = 0; k < r; ++k) comp[k] = !supp[k];
        const int om = B.eval(r, comp);
        int eps = 0;
        auto& cd = rep.column_delta[j - 1];
        cd.assign(r, 0);
        for (int k = 0; k < r; ++k) {
            if (!supp[k]) continue;
            cd[k] = apparent_value(M.hypercolumn(j, k), B);
            eps = std::max(eps, cd[k]);
        }
        rep.omega.push_back(om);
        rep.epsilon.push_back(eps);
        rep.delta.push_back(om * eps);
    }
    rep.value = *std::max_element(rep.delta.begin(), rep.delta.end());
    for (int j = 1; j <= s; ++j) {
        if (rep.delta[j - 1] != rep.value) continue;
        for (int k = 0; k < M.dims()[j - 1]; ++k)
            if (rep.column_delta[j - 1][k] > 0 && rep.column_delta[j - 1][k] == rep.epsilon[j - 1])
                rep.involved.push_back({j, k});
    }
    return rep;
}

int apparent_value(const SupportHypermatrix& M, const BoundSet& B) {
    if (M.rank() == 1) return vec_apparent(M, B);
    if (M.rank() == 2) {
        // direct row/column sweep, same recursion without building sub-objects
        if (M.is_zero()) return 0;
        const int r1 = M.dims()[0], r2 = M.dims()[1];
        const auto& p = M.pattern();
        int best = 0;
        for (int j = 0; j < 2; ++j) {
            const int r = j == 0 ? r1 : r2, other = j == 0 ? r2 : r1;
            const std::size_t lvl_stride = j == 0 ? static_cast<std::size_t>(r2) : 1;
            const std::size_t in_stride = j == 0 ? 1 : static_cast<std::size_t>(r2);
            IndexMask comp(r, 1);
            int eps = 0;
            for (int k = 0; k < r; ++k) {
                const int v = vec_value(p, k * lvl_stride, in_stride, other, B);
                if (v) {
                    comp[k] = 0;
                    eps = std::max(eps, v);
                }
            }
            best = std::max(best, B.eval(r, comp) * eps);
        }
        return best;
    }
    return hyper_apparent(M, B).value;
}

std::vector<InvolvedPair> involved_set(const SupportHypermatrix& M, const BoundSet& B) {
    if (M.is_zero()) throw std::invalid_argument("involved hypercolumns of the zero hypermatrix are undefined");
    return hyper_apparent(M, B).involved;
}

MadTrace bmad(const SupportHypermatrix& M0, const BoundSet& B) {
    if (M0.rank() != 2) throw std::invalid_argument("B-mad is implemented for matrices (s = 2) only");
    if (!M0.is_orbit_matrix()) throw std::invalid_argument("support is not a union of q-orbits");
    MadTrace tr;
    if (M0.is_zero()) return tr;
    SupportHypermatrix M = M0;
    int m_prev = -1;
    while (true) {
        const ApparentReport rep = hyper_apparent(M, B);
        MadStep st;
        st.matrix = M;
        st.delta = rep.value;
        st.m = m_prev < 0 ? rep.value : std::min(m_prev, rep.value);
        st.involved = rep.involved;
        m_prev = st.m;
        tr.steps.push_back(st);

        bool stop = false;
        for (const auto& pr : rep.involved)
            if (rep.column_delta[pr.axis - 1][pr.level] == 1) stop = true;
        if (stop) {
            tr.early_stop = true;
            break;
        }
        // zero the q-orbits of every nonzero position in an involved hypercolumn
        SupportHypermatrix next = M;
        for (std::size_t i = 0; i < M.pattern().size(); ++i) {
            if (!M.at(i) || !next.at(i)) continue;
            bool hit = false;
            for (const auto& pr : rep.involved)
                if (M.box().coord(i, pr.axis - 1) == pr.level) hit = true;
            if (!hit) continue;
            std::size_t x = i;
            do {
                next.set(x, false);
                x = M.box().scale(x, static_cast<std::int64_t>(M.q()));
            } while (x != i);
        }
        if (next.is_zero()) break;
        M = std::move(next);
    }
    const int ml = tr.steps.back().m;
    for (std::size_t i = 0; i < tr.steps.size(); ++i)
        if (tr.steps[i].m == ml) {
            tr.l_prime = i;
            break;
        }
    tr.result = tr.steps[tr.l_prime].delta;
    return tr;
}

int bmad_bruteforce(const SupportHypermatrix& M, const BoundSet& B, std::size_t orbit_cap) {
    if (!M.is_orbit_matrix()) throw std::invalid_argument("support is not a union of q-orbits");
    if (M.is_zero()) return 0;
    std::vector<std::vector<std::size_t>> orbits;
    std::vector<std::uint8_t> seen(M.pattern().size(), 0);
    for (std::size_t i = 0; i < seen.size(); ++i) {
        if (!M.at(i) || seen[i]) continue;
        orbits.emplace_back();
        std::size_t x = i;
        do {
            seen[x] = 1;
            orbits.back().push_back(x);
            x = M.box().scale(x, static_cast<std::int64_t>(M.q()));
        } while (x != i);
    }
    const std::size_t t = orbits.size();
    if (t > orbit_cap)
        throw std::invalid_argument("support has " + std::to_string(t) + " q-orbits, above the cap of " +
                                    std::to_string(orbit_cap));
    int best = -1;
    SupportHypermatrix P(M.dims(), M.q());
    // Gray order: one orbit toggles per step
    std::uint64_t prev = 0;
    for (std::uint64_t n = 1; n < (std::uint64_t{1} << t); ++n) {
        const std::uint64_t g = n ^ (n >> 1);
        const std::uint64_t diff = g ^ prev;
        const int bit = __builtin_ctzll(diff);
        const bool on = (g >> bit) & 1;
        for (auto x : orbits[bit]) P.set(x, on);
        prev = g;
        const int v = apparent_value(P, B);
        if (best < 0 || v < best) best = v;
    }
    return best;
}

}  // namespace abelian
