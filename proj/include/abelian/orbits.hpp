#pragma once

#include <cstdint>
#include <vector>

namespace abelian {

using MultiIndex = std::vector<int>;

// Row-major index box I = Z_{r_1} x ... x Z_{r_s}; the last axis varies fastest.
class Box {
public:
    Box() = default;
    explicit Box(std::vector<int> dims);

    const std::vector<int>& dims() const { return dims_; }
    int rank() const { return static_cast<int>(dims_.size()); }
    std::size_t size() const { return size_; }
    std::size_t stride(int axis) const { return strides_[axis]; }

    std::size_t index(const MultiIndex& a) const;
    MultiIndex coords(std::size_t lin) const;
    int coord(std::size_t lin, int axis) const { return static_cast<int>(lin / strides_[axis] % dims_[axis]); }
    // coordinatewise multiplication by c (reduced per axis)
    std::size_t scale(std::size_t lin, std::int64_t c) const;
    std::size_t scale(std::size_t lin, const std::vector<std::int64_t>& c) const;
    bool contains(const MultiIndex& a) const;

    bool operator==(const Box& o) const { return dims_ == o.dims_; }

private:
    std::vector<int> dims_;
    std::vector<std::size_t> strides_;
    std::size_t size_ = 1;
};

// A union of q-orbits in I, stored densely.
class OrbitSet {
public:
    OrbitSet() = default;
    OrbitSet(std::vector<int> dims, std::uint64_t q);
    // throws std::invalid_argument unless mask is q-stable
    static OrbitSet from_mask(std::vector<int> dims, std::uint64_t q, std::vector<std::uint8_t> mask);
    static OrbitSet full(std::vector<int> dims, std::uint64_t q);

    const std::vector<int>& dims() const { return box_.dims(); }
    const Box& box() const { return box_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint8_t>& mask() const { return mask_; }

    bool contains(std::size_t lin) const { return mask_[lin] != 0; }
    bool contains(const MultiIndex& a) const { return mask_[box_.index(a)] != 0; }
    std::size_t size() const;
    bool empty() const { return size() == 0; }
    std::vector<std::size_t> members() const;
    std::vector<MultiIndex> member_indices() const;
    // lexicographic minimum of each orbit, sorted
    std::vector<MultiIndex> reps() const;

    OrbitSet complement() const;
    OrbitSet unite(const OrbitSet& o) const;
    OrbitSet minus(const OrbitSet& o) const;
    bool subset_of(const OrbitSet& o) const;
    void add_orbit_of(std::size_t lin);

    bool operator==(const OrbitSet& o) const { return box_ == o.box_ && q_ == o.q_ && mask_ == o.mask_; }

private:
    Box box_;
    std::uint64_t q_ = 2;
    std::vector<std::uint8_t> mask_;
};

// Orbit structure of I under multiplication by q.
class OrbitPartition {
public:
    OrbitPartition(std::vector<int> dims, std::uint64_t q);
    const Box& box() const { return box_; }
    std::uint64_t q() const { return q_; }
    std::size_t count() const { return orbits_.size(); }
    int orbit_of(std::size_t lin) const { return id_[lin]; }
    // members of orbit k, starting at its representative
    const std::vector<std::size_t>& orbit(std::size_t k) const { return orbits_[k]; }

private:
    Box box_;
    std::uint64_t q_;
    std::vector<int> id_;
    std::vector<std::vector<std::size_t>> orbits_;
};

OrbitSet q_orbit(const MultiIndex& a, std::uint64_t q, const std::vector<int>& dims);
// members of the orbit of a in generation order a, q a, q^2 a, ...
std::vector<MultiIndex> orbit_sequence(const MultiIndex& a, std::uint64_t q, const std::vector<int>& dims);
OrbitSet orbit_closure(const std::vector<MultiIndex>& s, std::uint64_t q, const std::vector<int>& dims);
std::vector<OrbitSet> orbit_partition(std::uint64_t q, const std::vector<int>& dims);
bool is_orbit_union(const std::vector<std::uint8_t>& mask, std::uint64_t q, const std::vector<int>& dims);
// union of the orbits whose representatives are given
OrbitSet orbits_from_reps(const std::vector<MultiIndex>& reps, std::uint64_t q, const std::vector<int>& dims);

}  // namespace abelian
