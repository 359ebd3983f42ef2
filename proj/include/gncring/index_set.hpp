#pragma once

/**
 * @file index_set.hpp
 * @brief Subsets of a ring carrier, stored as a membership mask plus a sorted listing.
 */

#include <cstdint>
#include <vector>

namespace gncring {

using Index = std::uint32_t;

class IndexSet {
public:
    IndexSet() = default;

    explicit IndexSet(Index universe) : mask_(universe, false) {}

    static IndexSet from_mask(std::vector<bool> mask) {
        IndexSet s;
        s.mask_ = std::move(mask);
        for (Index i = 0; i < s.mask_.size(); ++i)
            if (s.mask_[i]) s.items_.push_back(i);
        return s;
    }

    static IndexSet from_list(Index universe, const std::vector<Index>& items) {
        std::vector<bool> mask(universe, false);
        for (Index i : items) mask.at(i) = true;
        return from_mask(std::move(mask));
    }

    bool contains(Index x) const { return x < mask_.size() && mask_[x]; }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    Index universe() const { return static_cast<Index>(mask_.size()); }

    const std::vector<Index>& elements() const { return items_; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }

    bool is_subset_of(const IndexSet& other) const {
        for (Index x : items_)
            if (!other.contains(x)) return false;
        return true;
    }

    friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.items_ == b.items_; }

private:
    std::vector<bool> mask_;
    std::vector<Index> items_;
};

} // namespace gncring
