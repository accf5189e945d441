#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace lrcarton {

// Ambient rectangle, `rows` x `cols` cells.
struct Rectangle {
    int rows = 0;
    int cols = 0;

    int cells() const { return rows * cols; }
    bool valid() const { return rows >= 1 && cols >= 1; }
    bool operator==(const Rectangle&) const = default;
};

// 1-based cell coordinates, row 1 at the top, column 1 at the left.
struct Box {
    int row = 0;
    int col = 0;

    bool operator==(const Box&) const = default;
    auto operator<=>(const Box&) const = default;
};

// Weakly decreasing nonnegative parts, stored zero-trimmed so equal
// partitions have identical representations.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int row) const;  // 1-based row length, 0 past the last row
    int size() const;
    bool empty() const { return parts_.empty(); }
    std::string str() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
};

bool contains(const Partition& inner, const Partition& outer);
bool fits(const Partition& p, const Rectangle& rect);
Partition full_partition(const Rectangle& rect);

// 180-degree rotation of rect minus p, as a straight shape.
Partition complement(const Partition& p, const Rectangle& rect);

bool is_addable(const Partition& p, Box b);
bool is_removable(const Partition& p, Box b);
Partition add_box(const Partition& p, Box b);
Partition remove_box(const Partition& p, Box b);

// q covers p in Young's lattice: q is p plus exactly one addable box.
bool covers(const Partition& q, const Partition& p);
std::optional<Box> box_added(const Partition& from, const Partition& to);

std::vector<Box> addable_boxes(const Partition& p);
std::vector<Box> addable_boxes(const Partition& p, const Rectangle& rect);
std::vector<Box> removable_boxes(const Partition& p);
std::vector<Box> cells_of(const Partition& p);

struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape() = default;
    SkewShape(Partition outer_, Partition inner_);

    int cell_count() const { return outer.size() - inner.size(); }
    bool contains_box(Box b) const;
    std::vector<Box> cells() const;  // row-major
    std::string str() const;

    bool operator==(const SkewShape&) const = default;
};

// rotate(p) = rect / complement(p): the cell set of p rotated 180 degrees,
// anchored at the bottom-right corner of rect.
SkewShape rotate_shape(const Partition& p, const Rectangle& rect);

// All partitions fitting in rect, deterministic order (by size, then lex).
std::vector<Partition> partitions_in(const Rectangle& rect);

}  // namespace lrcarton
