#include "lrcarton/jdt.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace lrcarton {

namespace {

std::map<Box, int> label_map(const StandardTableau& t) {
    std::map<Box, int> m;
    for (int i = 1; i <= t.size(); ++i) m[t.box_of(i)] = i;
    return m;
}

StandardTableau from_label_map(SkewShape shape, const std::map<Box, int>& m) {
    std::vector<Box> boxes(m.size());
    for (const auto& [b, l] : m) boxes[l - 1] = b;
    return StandardTableau(std::move(shape), std::move(boxes));
}

// Forward slide allowing the degenerate case where x has no filled neighbor;
// the vacancy then exits immediately and the shape shrinks on both sides.
std::pair<StandardTableau, Box> slide_into(const StandardTableau& t, Box x) {
    auto m = label_map(t);
    Box vac = x;
    for (;;) {
        auto right = m.find(Box{vac.row, vac.col + 1});
        auto below = m.find(Box{vac.row + 1, vac.col});
        if (right == m.end() && below == m.end()) break;
        auto pick = right == m.end()           ? below
                    : below == m.end()         ? right
                    : right->second < below->second ? right
                                               : below;
        Box from = pick->first;
        int label = pick->second;
        m.erase(pick);
        m[vac] = label;
        vac = from;
    }
    SkewShape shape(remove_box(t.outer(), vac), remove_box(t.inner(), x));
    return {from_label_map(std::move(shape), m), vac};
}

std::pair<StandardTableau, Box> rev_slide_into(const StandardTableau& t, Box x) {
    auto m = label_map(t);
    Box vac = x;
    for (;;) {
        auto left = vac.col > 1 ? m.find(Box{vac.row, vac.col - 1}) : m.end();
        auto above = vac.row > 1 ? m.find(Box{vac.row - 1, vac.col}) : m.end();
        if (left == m.end() && above == m.end()) break;
        auto pick = left == m.end()            ? above
                    : above == m.end()         ? left
                    : left->second > above->second ? left
                                               : above;
        Box from = pick->first;
        int label = pick->second;
        m.erase(pick);
        m[vac] = label;
        vac = from;
    }
    SkewShape shape(add_box(t.outer(), x), add_box(t.inner(), vac));
    return {from_label_map(std::move(shape), m), vac};
}

bool has_forward_neighbor(const StandardTableau& t, Box x) {
    return t.shape().contains_box(Box{x.row, x.col + 1}) ||
           t.shape().contains_box(Box{x.row + 1, x.col});
}

bool has_reverse_neighbor(const StandardTableau& t, Box x) {
    return t.shape().contains_box(Box{x.row, x.col - 1}) ||
           t.shape().contains_box(Box{x.row - 1, x.col});
}

}  // namespace

std::vector<Box> forward_slide_targets(const StandardTableau& t) {
    std::vector<Box> out;
    for (Box x : removable_boxes(t.inner()))
        if (has_forward_neighbor(t, x)) out.push_back(x);
    return out;
}

std::vector<Box> reverse_slide_targets(const StandardTableau& t, const Rectangle& rect) {
    std::vector<Box> out;
    for (Box x : addable_boxes(t.outer(), rect))
        if (has_reverse_neighbor(t, x)) out.push_back(x);
    return out;
}

SlideRecord jdt_slide_record(const StandardTableau& t, Box x) {
    if (!is_removable(t.inner(), x))
        throw std::invalid_argument("jdt_slide: box is not a removable inner corner");
    if (!has_forward_neighbor(t, x))
        throw std::invalid_argument("jdt_slide: box is not adjacent to the filled region");
    auto [res, vac] = slide_into(t, x);
    return SlideRecord{true, x, vac, std::move(res)};
}

StandardTableau jdt_slide(const StandardTableau& t, Box x) {
    return jdt_slide_record(t, x).result;
}

SlideRecord rev_jdt_slide_record(const StandardTableau& t, Box x, const Rectangle& rect) {
    if (x.row > rect.rows || x.col > rect.cols)
        throw std::invalid_argument("rev_jdt_slide: box outside the rectangle");
    if (!is_addable(t.outer(), x))
        throw std::invalid_argument("rev_jdt_slide: box is not addable to the outer shape");
    if (!has_reverse_neighbor(t, x))
        throw std::invalid_argument("rev_jdt_slide: box is not adjacent to the filled region");
    auto [res, vac] = rev_slide_into(t, x);
    return SlideRecord{false, x, vac, std::move(res)};
}

StandardTableau rev_jdt_slide(const StandardTableau& t, Box x, const Rectangle& rect) {
    return rev_jdt_slide_record(t, x, rect).result;
}

StandardTableau rectification(const StandardTableau& t) {
    if (t.size() == 0) return StandardTableau();
    StandardTableau cur = t;
    StandardTableau order = canonical_tableau(t.inner());
    for (int j = order.size(); j >= 1; --j)
        cur = slide_into(cur, order.box_of(j)).first;
    return cur;
}

StandardTableau revrectification(const StandardTableau& t, const Rectangle& rect) {
    if (!fits(t.outer(), rect))
        throw std::invalid_argument("revrectification: tableau does not fit in rectangle");
    Partition full = full_partition(rect);
    StandardTableau cur = t;
    while (cur.outer() != full) {
        Box x = addable_boxes(cur.outer(), rect).front();
        cur = rev_slide_into(cur, x).first;
    }
    return cur;
}

StandardTableau delta(const StandardTableau& t) {
    if (!t.inner().empty())
        throw std::invalid_argument("delta: straight shape required");
    if (t.size() == 0) throw std::invalid_argument("delta: empty tableau");
    if (t.size() == 1) return StandardTableau();
    // erase entry 1 at the northwest corner, decrement, slide back into it
    std::vector<Box> boxes(t.boxes().begin() + 1, t.boxes().end());
    StandardTableau hat(SkewShape(t.outer(), Partition(std::vector<int>{1})), std::move(boxes));
    return slide_into(hat, Box{1, 1}).first;
}

StandardTableau evacuation(const StandardTableau& t) {
    if (!t.inner().empty())
        throw std::invalid_argument("evacuation: straight shape required");
    std::vector<Partition> chain(t.size() + 1);
    StandardTableau cur = t;
    for (int j = t.size(); j >= 1; --j) {
        chain[j] = cur.outer();
        cur = delta(cur);
    }
    chain[0] = Partition{};
    return chain_to_tableau(ShapeChain(std::move(chain)));
}

StandardTableau rotate_complement(const StandardTableau& t, const Rectangle& rect) {
    if (!fits(t.outer(), rect))
        throw std::invalid_argument("rotate_complement: tableau does not fit in rectangle");
    int n = t.size();
    std::vector<Box> boxes(n);
    for (int i = 1; i <= n; ++i) {
        Box b = t.box_of(i);
        boxes[n - i] = Box{rect.rows + 1 - b.row, rect.cols + 1 - b.col};
    }
    SkewShape shape(complement(t.inner(), rect), complement(t.outer(), rect));
    return StandardTableau(std::move(shape), std::move(boxes));
}

StandardTableau tilde(const StandardTableau& t, const Rectangle& rect) {
    if (!t.inner().empty())
        throw std::invalid_argument("tilde: straight shape required");
    if (!fits(t.outer(), rect))
        throw std::invalid_argument("tilde: shape does not fit in rectangle");
    return rotate_complement(evacuation(t), rect);
}

StandardTableau reverse_evacuation(const StandardTableau& t, const Rectangle& rect) {
    if (t.outer() != full_partition(rect))
        throw std::invalid_argument("reverse_evacuation: outer shape must be the full rectangle");
    int n = t.size();
    std::vector<Box> boxes(n);
    StandardTableau cur = t;
    for (int m = 1; m <= n; ++m) {
        // nabla: erase the largest entry (always at the southeast corner of
        // the rectangle) and reverse-slide the rest back into that corner
        Partition prev_inner = cur.inner();
        std::vector<Box> rest(cur.boxes().begin(), cur.boxes().end() - 1);
        Box corner = cur.boxes().back();
        StandardTableau trimmed(SkewShape(remove_box(cur.outer(), corner), cur.inner()),
                                std::move(rest));
        cur = rev_slide_into(trimmed, corner).first;
        boxes[m - 1] = *box_added(prev_inner, cur.inner());
    }
    return StandardTableau(t.shape(), std::move(boxes));
}

bool dual_equiv_check(const StandardTableau& t, const StandardTableau& u, const Rectangle& rect) {
    if (t.shape() != u.shape())
        throw std::invalid_argument("dual_equiv_check: shapes differ");
    if (!fits(t.outer(), rect))
        throw std::invalid_argument("dual_equiv_check: shape does not fit in rectangle");

    std::set<std::pair<std::vector<Box>, std::vector<Box>>> seen;
    auto key = [](const StandardTableau& a, const StandardTableau& b) {
        return std::make_pair(a.boxes(), b.boxes());
    };

    auto walk = [&](auto&& self, const StandardTableau& a, const StandardTableau& b,
                    bool forward) -> bool {
        if (a.shape() != b.shape()) return false;
        if (!seen.insert(key(a, b)).second) return true;
        auto targets = forward ? forward_slide_targets(a) : reverse_slide_targets(a, rect);
        for (Box x : targets) {
            StandardTableau a2 = forward ? jdt_slide(a, x) : rev_jdt_slide(a, x, rect);
            StandardTableau b2 = forward ? jdt_slide(b, x) : rev_jdt_slide(b, x, rect);
            if (!self(self, a2, b2, forward)) return false;
        }
        return true;
    };

    if (!walk(walk, t, u, true)) return false;
    seen.clear();
    return walk(walk, t, u, false);
}

}  // namespace lrcarton
