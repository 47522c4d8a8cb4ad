#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "tilecount/geom.hpp"

namespace tilecount::detail {

/// Static spatial index: points snapped to a square grid of the given pitch.
/// Any two points within `pitch` of each other sit in adjacent cells, so
/// neighbourhood queries only visit the 3x3 block around a cell.
class PointIndex {
public:
    PointIndex(std::span<const Point2> points, double pitch) : pitch_(pitch) {
        order_.resize(points.size());
        std::vector<Cell> cell(points.size());
        for (std::uint32_t i = 0; i < points.size(); ++i) {
            order_[i] = i;
            cell[i] = cell_of(points[i]);
        }
        std::sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) {
            return cell[a] != cell[b] ? cell[a] < cell[b] : a < b;
        });
        ranges_.reserve(points.size());
        for (std::uint32_t b = 0; b < order_.size();) {
            std::uint32_t e = b + 1;
            while (e < order_.size() && cell[order_[e]] == cell[order_[b]]) ++e;
            cells_.push_back(cell[order_[b]]);
            ranges_.emplace(cell[order_[b]], Range{b, e});
            b = e;
        }
    }

    /// Calls f(index) for every stored point in the 3x3 cells around `p`.
    template <class F>
    void for_each_near(Point2 p, F&& f) const {
        const Cell c = cell_of(p);
        for_each_neighbour(c, [&](std::span<const std::uint32_t> members) {
            for (std::uint32_t j : members) f(j);
        });
    }

    /// Calls f(i, j) for every stored pair i < j in the same or adjacent cells.
    template <class F>
    void for_each_close_pair(F&& f) const {
        for (const Cell& c : cells_) {
            const auto own = members(ranges_.at(c));
            for_each_neighbour(c, [&](std::span<const std::uint32_t> other) {
                for (std::uint32_t i : own) {
                    for (std::uint32_t j : other) {
                        if (i < j) f(i, j);
                    }
                }
            });
        }
    }

private:
    struct Cell {
        std::int64_t x;
        std::int64_t y;
        friend auto operator<=>(const Cell&, const Cell&) = default;
    };
    struct CellHash {
        std::size_t operator()(const Cell& c) const noexcept {
            return std::hash<std::int64_t>{}(c.x * 0x9E3779B97F4A7C15LL ^ (c.y + 0x632BE59BD9B4E019LL));
        }
    };
    struct Range {
        std::uint32_t begin;
        std::uint32_t end;
    };

    Cell cell_of(Point2 p) const {
        return {static_cast<std::int64_t>(std::floor(p.x / pitch_)), static_cast<std::int64_t>(std::floor(p.y / pitch_))};
    }

    std::span<const std::uint32_t> members(Range r) const {
        return std::span<const std::uint32_t>(order_).subspan(r.begin, r.end - r.begin);
    }

    template <class F>
    void for_each_neighbour(Cell c, F&& f) const {
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                const auto it = ranges_.find(Cell{c.x + dx, c.y + dy});
                if (it != ranges_.end()) f(members(it->second));
            }
        }
    }

    double pitch_;
    std::vector<std::uint32_t> order_;
    std::vector<Cell> cells_;
    std::unordered_map<Cell, Range, CellHash> ranges_;
};

/// Union-find with path halving and union by size.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<std::uint32_t>(i);
    }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
};

}  // namespace tilecount::detail
