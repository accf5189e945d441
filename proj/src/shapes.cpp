#include "lrcarton/shapes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lrcarton {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("Partition: negative part");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts not weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::part(int row) const {
    if (row < 1) throw std::invalid_argument("Partition::part: row must be >= 1");
    if (row > rows()) return 0;
    return parts_[row - 1];
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::str() const {
    if (parts_.empty()) return "∅";
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    s += ')';
    return s;
}

bool contains(const Partition& inner, const Partition& outer) {
    if (inner.rows() > outer.rows()) return false;
    for (int r = 1; r <= inner.rows(); ++r)
        if (inner.part(r) > outer.part(r)) return false;
    return true;
}

bool fits(const Partition& p, const Rectangle& rect) {
    if (!rect.valid()) throw std::invalid_argument("fits: invalid rectangle");
    return p.rows() <= rect.rows && (p.empty() || p.part(1) <= rect.cols);
}

Partition full_partition(const Rectangle& rect) {
    if (!rect.valid()) throw std::invalid_argument("full_partition: invalid rectangle");
    return Partition(std::vector<int>(rect.rows, rect.cols));
}

Partition complement(const Partition& p, const Rectangle& rect) {
    if (!fits(p, rect))
        throw std::invalid_argument("complement: " + p.str() + " does not fit in rectangle");
    std::vector<int> out(rect.rows);
    for (int i = 1; i <= rect.rows; ++i)
        out[i - 1] = rect.cols - p.part(rect.rows + 1 - i);
    return Partition(std::move(out));
}

bool is_addable(const Partition& p, Box b) {
    if (b.row < 1 || b.col < 1) return false;
    if (p.part(b.row) != b.col - 1) return false;
    return b.row == 1 || p.part(b.row - 1) >= b.col;
}

bool is_removable(const Partition& p, Box b) {
    if (b.row < 1 || b.col < 1) return false;
    if (p.part(b.row) != b.col) return false;
    return p.part(b.row + 1) <= b.col - 1;
}

Partition add_box(const Partition& p, Box b) {
    if (!is_addable(p, b))
        throw std::invalid_argument("add_box: box not addable to " + p.str());
    std::vector<int> parts = p.parts();
    if (b.row > static_cast<int>(parts.size())) parts.resize(b.row, 0);
    parts[b.row - 1] += 1;
    return Partition(std::move(parts));
}

Partition remove_box(const Partition& p, Box b) {
    if (!is_removable(p, b))
        throw std::invalid_argument("remove_box: box not removable from " + p.str());
    std::vector<int> parts = p.parts();
    parts[b.row - 1] -= 1;
    return Partition(std::move(parts));
}

bool covers(const Partition& q, const Partition& p) {
    return q.size() == p.size() + 1 && contains(p, q);
}

std::optional<Box> box_added(const Partition& from, const Partition& to) {
    if (!covers(to, from)) return std::nullopt;
    for (int r = 1; r <= to.rows(); ++r)
        if (to.part(r) != from.part(r)) return Box{r, to.part(r)};
    return std::nullopt;
}

std::vector<Box> addable_boxes(const Partition& p) {
    std::vector<Box> out;
    for (int r = 1; r <= p.rows() + 1; ++r) {
        Box b{r, p.part(r) + 1};
        if (is_addable(p, b)) out.push_back(b);
    }
    return out;
}

std::vector<Box> addable_boxes(const Partition& p, const Rectangle& rect) {
    std::vector<Box> out;
    for (Box b : addable_boxes(p))
        if (b.row <= rect.rows && b.col <= rect.cols) out.push_back(b);
    return out;
}

std::vector<Box> removable_boxes(const Partition& p) {
    std::vector<Box> out;
    for (int r = 1; r <= p.rows(); ++r) {
        Box b{r, p.part(r)};
        if (is_removable(p, b)) out.push_back(b);
    }
    return out;
}

std::vector<Box> cells_of(const Partition& p) {
    std::vector<Box> out;
    for (int r = 1; r <= p.rows(); ++r)
        for (int c = 1; c <= p.part(r); ++c) out.push_back(Box{r, c});
    return out;
}

SkewShape::SkewShape(Partition outer_, Partition inner_)
    : outer(std::move(outer_)), inner(std::move(inner_)) {
    if (!contains(inner, outer))
        throw std::invalid_argument("SkewShape: inner " + inner.str() +
                                    " not contained in outer " + outer.str());
}

bool SkewShape::contains_box(Box b) const {
    if (b.row < 1 || b.col < 1) return false;
    return b.col <= outer.part(b.row) && b.col > inner.part(b.row);
}

std::vector<Box> SkewShape::cells() const {
    std::vector<Box> out;
    for (int r = 1; r <= outer.rows(); ++r)
        for (int c = inner.part(r) + 1; c <= outer.part(r); ++c)
            out.push_back(Box{r, c});
    return out;
}

std::string SkewShape::str() const {
    return inner.empty() ? outer.str() : outer.str() + "/" + inner.str();
}

SkewShape rotate_shape(const Partition& p, const Rectangle& rect) {
    return SkewShape(full_partition(rect), complement(p, rect));
}

std::vector<Partition> partitions_in(const Rectangle& rect) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int maxpart) -> void {
        out.push_back(Partition(cur));
        if (static_cast<int>(cur.size()) == rect.rows) return;
        for (int v = maxpart; v >= 1; --v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, rect.cols);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.parts() < b.parts();
    });
    return out;
}

}  // namespace lrcarton
