#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace sclkit::detail {

class UnionFind {
public:
    std::size_t add() {
        parent_.push_back(parent_.size());
        return parent_.size() - 1;
    }
    std::size_t size() const { return parent_.size(); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x != y) parent_[std::max(x, y)] = std::min(x, y);
    }
    std::size_t classes() {
        std::size_t n = 0;
        for (std::size_t i = 0; i < parent_.size(); ++i) n += find(i) == i ? 1 : 0;
        return n;
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace sclkit::detail
