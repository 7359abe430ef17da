#include "abelian/bounds.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "abelian/numtheory.hpp"

namespace abelian {

IndexMask mask_of(int n, const std::vector<int>& members) {
    IndexMask m(n, 0);
    for (int x : members) m[nt::mod(x, n)] = 1;
    return m;
}

namespace {

void check_mask(int n, const IndexMask& N) {
    if (n < 1 || static_cast<int>(N.size()) != n) throw std::invalid_argument("subset mask does not match n");
}

// run[b] = number of consecutive members b, b+1, ... (circular), capped at n
std::vector<int> run_table(int n, const IndexMask& N) {
    std::vector<int> run(n, 0);
    const int cnt = static_cast<int>(std::count_if(N.begin(), N.end(), [](auto v) { return v != 0; }));
    if (cnt == n) {
        std::fill(run.begin(), run.end(), n);
        return run;
    }
    // start right after a non-member and sweep backwards twice around the circle
    int start = 0;
    while (N[start]) ++start;
    int cur = 0;
    for (int step = 0; step < n; ++step) {
        const int b = nt::mod(start - step, n);
        cur = N[b] ? cur + 1 : 0;
        run[b] = cur;
    }
    return run;
}

}  // namespace

int bch_optimal(int n, const IndexMask& N) {
    check_mask(n, N);
    const auto run = run_table(n, N);
    return 1 + *std::max_element(run.begin(), run.end());
}

int ht_optimal(int n, const IndexMask& N) {
    check_mask(n, N);
    const auto run = run_table(n, N);
    int best = 1 + *std::max_element(run.begin(), run.end());
    if (best == 1 || best == n + 1) return best;
    for (int c = 1; c < n; ++c) {
        if (nt::gcd(static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(n)) != 1) continue;
        for (int b = 0; b < n; ++b) {
            int mn = run[b];
            for (int s = 0; mn >= 1; ++s) {
                // rows b + i*c for i <= s all carry runs of length >= mn; delta - 1 = mn
                best = std::max(best, mn + 1 + s);
                mn = std::min(mn, run[nt::mod(b + static_cast<std::int64_t>(s + 1) * c, n)]);
            }
        }
    }
    return best;
}

BoundSet::BoundSet() : cache_(std::make_shared<Cache>()) { bounds_.push_back(std::make_shared<BchBound>()); }

BoundSet BoundSet::from_names(const std::string& names) {
    BoundSet b;
    std::stringstream ss(names);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty() || tok == "bch") continue;
        if (tok == "ht")
            b.add(std::make_shared<HtBound>());
        else
            throw std::invalid_argument("unknown ds-bound '" + tok + "' (available: bch, ht)");
    }
    return b;
}

void BoundSet::add(std::shared_ptr<const DsBound> b) {
    for (const auto& x : bounds_)
        if (x->name() == b->name()) return;
    bounds_.push_back(std::move(b));
    cache_ = std::make_shared<Cache>();
}

std::vector<std::string> BoundSet::names() const {
    std::vector<std::string> out;
    for (const auto& b : bounds_) out.push_back(b->name());
    return out;
}

int BoundSet::eval(int n, const IndexMask& N) const {
    // a lone BCH run scan is cheaper than a cache lookup
    if (bounds_.size() == 1) return bounds_[0]->optimal(n, N);
    auto key = std::make_pair(n, N);
    {
        std::lock_guard<std::mutex> lk(cache_->mu);
        auto it = cache_->values.find(key);
        if (it != cache_->values.end()) return it->second;
    }
    int v = 1;
    for (const auto& b : bounds_) v = std::max(v, b->optimal(n, N));
    std::lock_guard<std::mutex> lk(cache_->mu);
    cache_->values.emplace(std::move(key), v);
    return v;
}

}  // namespace abelian
