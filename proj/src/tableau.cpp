#include "lrcarton/tableau.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lrcarton {

StandardTableau::StandardTableau() = default;

StandardTableau::StandardTableau(SkewShape shape, std::vector<Box> box_of_label)
    : shape_(std::move(shape)), boxes_(std::move(box_of_label)) {
    if (static_cast<int>(boxes_.size()) != shape_.cell_count())
        throw std::invalid_argument("StandardTableau: label count does not match shape");
    // Walking the chain validates standardness: each box must be addable to
    // the partition formed by the inner shape and all earlier boxes.
    Partition cur = shape_.inner;
    for (const Box& b : boxes_) {
        if (!is_addable(cur, b))
            throw std::invalid_argument("StandardTableau: not a standard filling of " +
                                        shape_.str());
        cur = add_box(cur, b);
    }
    if (cur != shape_.outer)
        throw std::invalid_argument("StandardTableau: filling does not reach outer shape");
}

StandardTableau StandardTableau::from_rows(const std::vector<std::vector<int>>& rows) {
    std::vector<int> parts;
    std::vector<std::pair<int, Box>> entries;
    for (size_t r = 0; r < rows.size(); ++r) {
        parts.push_back(static_cast<int>(rows[r].size()));
        for (size_t c = 0; c < rows[r].size(); ++c)
            entries.push_back({rows[r][c], Box{static_cast<int>(r) + 1, static_cast<int>(c) + 1}});
    }
    std::sort(entries.begin(), entries.end());
    std::vector<Box> boxes;
    for (size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].first != static_cast<int>(i) + 1)
            throw std::invalid_argument("from_rows: labels are not exactly 1..n");
        boxes.push_back(entries[i].second);
    }
    return StandardTableau(SkewShape(Partition(std::move(parts)), Partition{}), std::move(boxes));
}

Box StandardTableau::box_of(int label) const {
    if (label < 1 || label > size())
        throw std::invalid_argument("box_of: label out of range");
    return boxes_[label - 1];
}

int StandardTableau::label_at(Box b) const {
    for (size_t i = 0; i < boxes_.size(); ++i)
        if (boxes_[i] == b) return static_cast<int>(i) + 1;
    return 0;
}

std::string StandardTableau::str() const {
    std::string s;
    for (int r = 1; r <= outer().rows(); ++r) {
        if (r > 1) s += '\n';
        for (int c = 1; c <= outer().part(r); ++c) {
            if (c > 1) s += ' ';
            int l = shape_.contains_box(Box{r, c}) ? label_at(Box{r, c}) : 0;
            s += l ? std::to_string(l) : std::string(".");
        }
    }
    return s;
}

ShapeChain::ShapeChain(std::vector<Partition> steps_) : steps(std::move(steps_)) {
    if (steps.empty()) throw std::invalid_argument("ShapeChain: empty chain");
    for (size_t i = 0; i + 1 < steps.size(); ++i)
        if (!covers(steps[i + 1], steps[i]))
            throw std::invalid_argument("ShapeChain: step " + std::to_string(i) +
                                        " is not a cover relation");
}

ShapeChain tableau_to_chain(const StandardTableau& t) {
    std::vector<Partition> steps;
    steps.reserve(t.size() + 1);
    Partition cur = t.inner();
    steps.push_back(cur);
    for (const Box& b : t.boxes()) {
        cur = add_box(cur, b);
        steps.push_back(cur);
    }
    return ShapeChain(std::move(steps));
}

StandardTableau chain_to_tableau(const ShapeChain& c) {
    std::vector<Box> boxes;
    for (size_t i = 0; i + 1 < c.steps.size(); ++i) {
        auto b = box_added(c.steps[i], c.steps[i + 1]);
        if (!b) throw std::invalid_argument("chain_to_tableau: non-cover step");
        boxes.push_back(*b);
    }
    return StandardTableau(SkewShape(c.back(), c.front()), std::move(boxes));
}

StandardTableau stack(const StandardTableau& a, const StandardTableau& b) {
    if (a.outer() != b.inner())
        throw std::invalid_argument("stack: outer(a) != inner(b)");
    std::vector<Box> boxes = a.boxes();
    boxes.insert(boxes.end(), b.boxes().begin(), b.boxes().end());
    return StandardTableau(SkewShape(b.outer(), a.inner()), std::move(boxes));
}

LayeredTableau concat_layered(const StandardTableau& a, const StandardTableau& b,
                              const StandardTableau& c, const Rectangle& rect) {
    if (!a.inner().empty())
        throw std::invalid_argument("concat_layered: first layer must have straight shape");
    if (a.outer() != b.inner())
        throw std::invalid_argument("concat_layered: layers A,B do not nest");
    if (b.outer() != c.inner())
        throw std::invalid_argument("concat_layered: layers B,C do not nest");
    if (c.outer() != full_partition(rect))
        throw std::invalid_argument("concat_layered: layers do not tile the rectangle");
    return LayeredTableau{rect, a, b, c};
}

std::vector<StandardTableau> all_syt(const SkewShape& shape) {
    std::vector<StandardTableau> out;
    std::vector<Box> boxes;
    Partition cur = shape.inner;
    int n = shape.cell_count();
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(boxes.size()) == n) {
            out.push_back(StandardTableau(shape, boxes));
            return;
        }
        // candidates in row order gives row-word-lexicographic enumeration
        for (Box b : addable_boxes(cur)) {
            if (b.col > shape.outer.part(b.row)) continue;
            Partition saved = cur;
            cur = add_box(cur, b);
            boxes.push_back(b);
            self(self);
            boxes.pop_back();
            cur = std::move(saved);
        }
    };
    rec(rec);
    return out;
}

StandardTableau canonical_tableau(const Partition& p) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int r = 1; r <= p.rows(); ++r) {
        std::vector<int> row;
        for (int c = 0; c < p.part(r); ++c) row.push_back(next++);
        rows.push_back(std::move(row));
    }
    return StandardTableau::from_rows(rows);
}

}  // namespace lrcarton
