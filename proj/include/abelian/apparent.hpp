#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "abelian/bounds.hpp"
#include "abelian/orbits.hpp"
#include "abelian/transform.hpp"

namespace abelian {

// Zero/nonzero pattern of an I-hypermatrix.
class SupportHypermatrix {
public:
    SupportHypermatrix() = default;
    SupportHypermatrix(std::vector<int> dims, std::uint64_t q);
    SupportHypermatrix(std::vector<int> dims, std::uint64_t q, std::vector<std::uint8_t> pattern);
    static SupportHypermatrix of(const MultiPoly& f, std::uint64_t q);
    static SupportHypermatrix ones(std::vector<int> dims, std::uint64_t q);

    const Box& box() const { return box_; }
    const std::vector<int>& dims() const { return box_.dims(); }
    int rank() const { return box_.rank(); }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint8_t>& pattern() const { return pat_; }
    bool at(std::size_t lin) const { return pat_[lin] != 0; }
    bool at(const MultiIndex& i) const { return pat_[box_.index(i)] != 0; }
    void set(std::size_t lin, bool v) { pat_[lin] = v ? 1 : 0; }

    bool is_zero() const;
    std::size_t weight() const;
    bool is_orbit_matrix() const;
    // supp(this) subset of supp(o)
    bool leq(const SupportHypermatrix& o) const;
    // H_M(axis, level); axis is 1-based
    SupportHypermatrix hypercolumn(int axis, int level) const;
    // row/column support on a 1-based axis
    IndexMask axis_support(int axis) const;
    // the support viewed as an orbit union
    OrbitSet support_set() const;

    bool operator==(const SupportHypermatrix& o) const { return box_ == o.box_ && pat_ == o.pat_; }

private:
    Box box_;
    std::uint64_t q_ = 2;
    std::vector<std::uint8_t> pat_;
};

// ones exactly off D
SupportHypermatrix afforded(const OrbitSet& D);

struct InvolvedPair {
    int axis;  // 1-based
    int level;
    bool operator==(const InvolvedPair& o) const { return axis == o.axis && level == o.level; }
    bool operator<(const InvolvedPair& o) const { return axis != o.axis ? axis < o.axis : level < o.level; }
};

struct ApparentReport {
    int value = 0;
    std::vector<int> omega, epsilon, delta;  // per axis
    std::vector<InvolvedPair> involved;
    // Delta of each nonzero hypercolumn, indexed [axis-1][level] (0 for zero hypercolumns)
    std::vector<std::vector<int>> column_delta;
};

int vec_apparent(const SupportHypermatrix& v, const BoundSet& B);
int apparent_value(const SupportHypermatrix& M, const BoundSet& B);
ApparentReport hyper_apparent(const SupportHypermatrix& M, const BoundSet& B);
std::vector<InvolvedPair> involved_set(const SupportHypermatrix& M, const BoundSet& B);

struct MadStep {
    SupportHypermatrix matrix;
    int delta = 0;
    int m = 0;
    std::vector<InvolvedPair> involved;
};

struct MadTrace {
    std::vector<MadStep> steps;
    bool early_stop = false;
    std::size_t l_prime = 0;
    int result = 0;
    const SupportHypermatrix& witness() const { return steps.at(l_prime).matrix; }
};

MadTrace bmad(const SupportHypermatrix& M, const BoundSet& B);
// exact minimum over every nonzero orbit submatrix
int bmad_bruteforce(const SupportHypermatrix& M, const BoundSet& B, std::size_t orbit_cap = 20);

}  // namespace abelian
