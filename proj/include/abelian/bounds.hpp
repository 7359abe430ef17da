#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace abelian {

// Subsets of Z_n are passed as membership masks of length n.
using IndexMask = std::vector<std::uint8_t>;

IndexMask mask_of(int n, const std::vector<int>& members);

// A ds-bound: a sound, monotone lower bound for cyclic codes whose defining set contains N.
class DsBound {
public:
    virtual ~DsBound() = default;
    virtual std::string name() const = 0;
    virtual int optimal(int n, const IndexMask& N) const = 0;
};

// 1 + longest circular run of consecutive residues in N
int bch_optimal(int n, const IndexMask& N);
// Hartmann-Tzeng with gcd(c, n) = 1
int ht_optimal(int n, const IndexMask& N);

class BchBound final : public DsBound {
public:
    std::string name() const override { return "bch"; }
    int optimal(int n, const IndexMask& N) const override { return bch_optimal(n, N); }
};

class HtBound final : public DsBound {
public:
    std::string name() const override { return "ht"; }
    int optimal(int n, const IndexMask& N) const override { return ht_optimal(n, N); }
};

// The set B. Always contains BCH. Copies share one synchronized cache.
class BoundSet {
public:
    BoundSet();
    // comma separated list, e.g. "bch,ht"
    static BoundSet from_names(const std::string& names);

    void add(std::shared_ptr<const DsBound> b);
    std::vector<std::string> names() const;
    std::size_t size() const { return bounds_.size(); }

    int eval(int n, const IndexMask& N) const;

private:
    struct Cache {
        std::mutex mu;
        std::map<std::pair<int, IndexMask>, int> values;
    };
    std::vector<std::shared_ptr<const DsBound>> bounds_;
    std::shared_ptr<Cache> cache_;
};

}  // namespace abelian
