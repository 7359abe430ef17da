#include "abelian/orbits.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "abelian/numtheory.hpp"

namespace abelian {

namespace {
constexpr std::size_t kDenseLimit = std::size_t{1} << 22;
}

Box::Box(std::vector<int> dims) : dims_(std::move(dims)) {
    strides_.assign(dims_.size(), 1);
    size_ = 1;
    for (int k = static_cast<int>(dims_.size()) - 1; k >= 0; --k) {
        if (dims_[k] < 1) throw std::invalid_argument("dimension " + std::to_string(dims_[k]) + " must be positive");
        strides_[k] = size_;
        size_ *= static_cast<std::size_t>(dims_[k]);
        if (size_ > kDenseLimit) throw std::invalid_argument("index box exceeds 2^22 entries");
    }
}

std::size_t Box::index(const MultiIndex& a) const {
    if (!contains(a)) throw std::out_of_range("multi-index outside the box");
    std::size_t lin = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k) lin += static_cast<std::size_t>(a[k]) * strides_[k];
    return lin;
}

MultiIndex Box::coords(std::size_t lin) const {
    MultiIndex a(dims_.size());
    for (std::size_t k = 0; k < dims_.size(); ++k) a[k] = static_cast<int>(lin / strides_[k] % dims_[k]);
    return a;
}

std::size_t Box::scale(std::size_t lin, std::int64_t c) const {
    std::size_t out = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        const std::int64_t x = static_cast<std::int64_t>(lin / strides_[k] % dims_[k]);
        out += static_cast<std::size_t>(nt::mod(x * nt::mod(c, dims_[k]), dims_[k])) * strides_[k];
    }
    return out;
}

std::size_t Box::scale(std::size_t lin, const std::vector<std::int64_t>& c) const {
    std::size_t out = 0;
    for (std::size_t k = 0; k < dims_.size(); ++k) {
        const std::int64_t x = static_cast<std::int64_t>(lin / strides_[k] % dims_[k]);
        out += static_cast<std::size_t>(nt::mod(x * nt::mod(c[k], dims_[k]), dims_[k])) * strides_[k];
    }
    return out;
}

bool Box::contains(const MultiIndex& a) const {
    if (a.size() != dims_.size()) return false;
    for (std::size_t k = 0; k < dims_.size(); ++k)
        if (a[k] < 0 || a[k] >= dims_[k]) return false;
    return true;
}

OrbitSet::OrbitSet(std::vector<int> dims, std::uint64_t q) : box_(std::move(dims)), q_(q) {
    for (int r : box_.dims())
        if (r > 1 && nt::gcd(q % static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(r)) != 1)
            throw std::invalid_argument("q=" + std::to_string(q) + " is not a unit modulo " + std::to_string(r));
    mask_.assign(box_.size(), 0);
}

OrbitSet OrbitSet::from_mask(std::vector<int> dims, std::uint64_t q, std::vector<std::uint8_t> mask) {
    OrbitSet s(std::move(dims), q);
    if (mask.size() != s.box_.size()) throw std::invalid_argument("mask size does not match the index box");
    for (auto& v : mask) v = v ? 1 : 0;
    if (!is_orbit_union(mask, q, s.dims())) throw std::invalid_argument("set is not a union of q-orbits");
    s.mask_ = std::move(mask);
    return s;
}

OrbitSet OrbitSet::full(std::vector<int> dims, std::uint64_t q) {
    OrbitSet s(std::move(dims), q);
    std::fill(s.mask_.begin(), s.mask_.end(), 1);
    return s;
}

std::size_t OrbitSet::size() const { return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), 1)); }

std::vector<std::size_t> OrbitSet::members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < mask_.size(); ++i)
        if (mask_[i]) out.push_back(i);
    return out;
}

std::vector<MultiIndex> OrbitSet::member_indices() const {
    std::vector<MultiIndex> out;
    for (auto i : members()) out.push_back(box_.coords(i));
    return out;
}

std::vector<MultiIndex> OrbitSet::reps() const {
    // row-major order is lexicographic, so the first unseen member of each orbit is its minimum
    std::vector<MultiIndex> out;
    std::vector<std::uint8_t> seen(mask_.size(), 0);
    for (std::size_t i = 0; i < mask_.size(); ++i) {
        if (!mask_[i] || seen[i]) continue;
        out.push_back(box_.coords(i));
        std::size_t x = i;
        do {
            seen[x] = 1;
            x = box_.scale(x, static_cast<std::int64_t>(q_));
        } while (x != i);
    }
    return out;
}

OrbitSet OrbitSet::complement() const {
    OrbitSet s = *this;
    for (auto& v : s.mask_) v = !v;
    return s;
}

OrbitSet OrbitSet::unite(const OrbitSet& o) const {
    if (!(box_ == o.box_)) throw std::invalid_argument("orbit sets over different boxes");
    OrbitSet s = *this;
    for (std::size_t i = 0; i < mask_.size(); ++i) s.mask_[i] |= o.mask_[i];
    return s;
}

OrbitSet OrbitSet::minus(const OrbitSet& o) const {
    if (!(box_ == o.box_)) throw std::invalid_argument("orbit sets over different boxes");
    OrbitSet s = *this;
    for (std::size_t i = 0; i < mask_.size(); ++i)
        if (o.mask_[i]) s.mask_[i] = 0;
    return s;
}

bool OrbitSet::subset_of(const OrbitSet& o) const {
    for (std::size_t i = 0; i < mask_.size(); ++i)
        if (mask_[i] && !o.mask_[i]) return false;
    return true;
}

void OrbitSet::add_orbit_of(std::size_t lin) {
    std::size_t x = lin;
    do {
        mask_[x] = 1;
        x = box_.scale(x, static_cast<std::int64_t>(q_));
    } while (x != lin);
}

OrbitPartition::OrbitPartition(std::vector<int> dims, std::uint64_t q) : box_(std::move(dims)), q_(q) {
    for (int r : box_.dims())
        if (nt::gcd(q % static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(r)) != 1 && r > 1)
            throw std::invalid_argument("q=" + std::to_string(q) + " is not a unit modulo " + std::to_string(r));
    id_.assign(box_.size(), -1);
    for (std::size_t i = 0; i < box_.size(); ++i) {
        if (id_[i] >= 0) continue;
        const int k = static_cast<int>(orbits_.size());
        orbits_.emplace_back();
        std::size_t x = i;
        do {
            id_[x] = k;
            orbits_.back().push_back(x);
            x = box_.scale(x, static_cast<std::int64_t>(q));
        } while (x != i);
    }
}

std::vector<MultiIndex> orbit_sequence(const MultiIndex& a, std::uint64_t q, const std::vector<int>& dims) {
    const OrbitSet guard(dims, q);
    const Box& box = guard.box();
    const std::size_t start = box.index(a);
    std::vector<MultiIndex> out;
    std::size_t x = start;
    do {
        out.push_back(box.coords(x));
        x = box.scale(x, static_cast<std::int64_t>(q));
    } while (x != start);
    return out;
}

OrbitSet q_orbit(const MultiIndex& a, std::uint64_t q, const std::vector<int>& dims) {
    OrbitSet s(dims, q);
    s.add_orbit_of(s.box().index(a));
    return s;
}

OrbitSet orbit_closure(const std::vector<MultiIndex>& members, std::uint64_t q, const std::vector<int>& dims) {
    OrbitSet s(dims, q);
    for (const auto& a : members) {
        const std::size_t lin = s.box().index(a);
        if (!s.contains(lin)) s.add_orbit_of(lin);
    }
    return s;
}

std::vector<OrbitSet> orbit_partition(std::uint64_t q, const std::vector<int>& dims) {
    OrbitPartition part(dims, q);
    std::vector<OrbitSet> out;
    for (std::size_t k = 0; k < part.count(); ++k) {
        OrbitSet s(dims, q);
        s.add_orbit_of(part.orbit(k).front());
        out.push_back(std::move(s));
    }
    return out;
}

bool is_orbit_union(const std::vector<std::uint8_t>& mask, std::uint64_t q, const std::vector<int>& dims) {
    Box box(dims);
    if (mask.size() != box.size()) return false;
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i] && !mask[box.scale(i, static_cast<std::int64_t>(q))]) return false;
    return true;
}

OrbitSet orbits_from_reps(const std::vector<MultiIndex>& reps, std::uint64_t q, const std::vector<int>& dims) {
    return orbit_closure(reps, q, dims);
}

}  // namespace abelian
