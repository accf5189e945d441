#pragma once

#include <string>
#include <vector>

#include "lrcarton/shapes.hpp"

namespace lrcarton {

// Standard filling of a (possibly skew) shape by 1..n, rows and columns
// strictly increasing. Only filled cells are stored; the inner shape is
// explicit. box_of(i) lists the cell holding label i, so the representation
// doubles as the shape chain.
class StandardTableau {
  public:
    StandardTableau();  // empty straight tableau
    StandardTableau(SkewShape shape, std::vector<Box> box_of_label);

    static StandardTableau from_rows(const std::vector<std::vector<int>>& rows);

    const SkewShape& shape() const { return shape_; }
    const Partition& outer() const { return shape_.outer; }
    const Partition& inner() const { return shape_.inner; }
    int size() const { return static_cast<int>(boxes_.size()); }
    Box box_of(int label) const;
    int label_at(Box b) const;  // 0 if no label there
    const std::vector<Box>& boxes() const { return boxes_; }
    std::string str() const;

    bool operator==(const StandardTableau&) const = default;

  private:
    SkewShape shape_;
    std::vector<Box> boxes_;  // boxes_[i] holds label i+1
};

// Saturated chain in Young's lattice.
struct ShapeChain {
    std::vector<Partition> steps;

    ShapeChain() = default;
    explicit ShapeChain(std::vector<Partition> steps_);

    const Partition& front() const { return steps.front(); }
    const Partition& back() const { return steps.back(); }
    int length() const { return static_cast<int>(steps.size()); }

    bool operator==(const ShapeChain&) const = default;
};

ShapeChain tableau_to_chain(const StandardTableau& t);
StandardTableau chain_to_tableau(const ShapeChain& c);

// Concatenation a*b as one standard tableau: outer(a) must equal inner(b);
// entries of b are shifted up by |a|.
StandardTableau stack(const StandardTableau& a, const StandardTableau& b);

// A * B * C tiling the rectangle: A straight, B on gamma/alpha, C on rect/gamma.
struct LayeredTableau {
    Rectangle rect;
    StandardTableau a;
    StandardTableau b;
    StandardTableau c;

    bool operator==(const LayeredTableau&) const = default;
};

LayeredTableau concat_layered(const StandardTableau& a, const StandardTableau& b,
                              const StandardTableau& c, const Rectangle& rect);

// Every standard tableau of the shape, ordered lexicographically by the
// sequence of row indices of labels 1..n (so the row-by-row filling of a
// straight shape comes first).
std::vector<StandardTableau> all_syt(const SkewShape& shape);

// First tableau in all_syt order; for a straight shape this fills row 1
// left to right, then row 2, and so on.
StandardTableau canonical_tableau(const Partition& p);

}  // namespace lrcarton
