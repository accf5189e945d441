#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "lrcarton/jdt.hpp"

using namespace lrcarton;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

StandardTableau skew(std::vector<int> outer, std::vector<int> inner,
                     std::vector<std::array<int, 3>> entries) {
    std::vector<Box> boxes(entries.size());
    for (auto [r, c, l] : entries) boxes[l - 1] = Box{r, c};
    return StandardTableau(SkewShape(P(std::move(outer)), P(std::move(inner))),
                           std::move(boxes));
}

// the worked slide example: shape (5,3,2)/(3,1)
StandardTableau worked_example() {
    return skew({5, 3, 2}, {3, 1},
                {{1, 4, 1}, {2, 2, 2}, {2, 3, 3}, {3, 1, 4}, {1, 5, 5}, {3, 2, 6}});
}

}  // namespace

TEST_CASE("jdt_slide") {
    auto t = worked_example();
    auto t1 = jdt_slide(t, Box{2, 1});
    CHECK(t1 == skew({5, 2, 2}, {3},
                     {{1, 4, 1}, {2, 1, 2}, {2, 2, 3}, {3, 1, 4}, {1, 5, 5}, {3, 2, 6}}));
    auto t2 = jdt_slide(t1, Box{1, 3});
    CHECK(t2 == skew({4, 2, 2}, {2},
                     {{1, 3, 1}, {2, 1, 2}, {2, 2, 3}, {3, 1, 4}, {1, 4, 5}, {3, 2, 6}}));
    // a straight tableau has no valid slide target
    auto straight = StandardTableau::from_rows({{1, 2}, {3}});
    CHECK(forward_slide_targets(straight).empty());
    CHECK_THROWS_AS(jdt_slide(straight, Box{1, 1}), std::invalid_argument);
    // not a removable inner corner
    CHECK_THROWS_AS(jdt_slide(t, Box{1, 1}), std::invalid_argument);
}

TEST_CASE("rev_jdt_slide") {
    Rectangle rect{3, 4};
    // reversing a forward slide through the vacated corner restores the input
    auto t = worked_example();
    Rectangle wide{3, 5};
    auto rec = jdt_slide_record(t, Box{2, 1});
    CHECK(rev_jdt_slide(rec.result, rec.vacated_box, wide) == t);

    auto tb = StandardTableau::from_rows({{1, 2}, {3}});
    CHECK(rev_jdt_slide(tb, Box{1, 3}, rect) ==
          skew({3, 1}, {1}, {{1, 2, 1}, {1, 3, 2}, {2, 1, 3}}));
    CHECK_THROWS_AS(rev_jdt_slide(tb, Box{3, 2}, rect), std::invalid_argument);
    CHECK_THROWS_AS(rev_jdt_slide(tb, Box{1, 5}, rect), std::invalid_argument);

    // every reverse slide undoes through a forward slide
    for (Box x : reverse_slide_targets(tb, rect)) {
        auto r = rev_jdt_slide_record(tb, x, rect);
        CHECK(jdt_slide(r.result, r.vacated_box) == tb);
    }
}

TEST_CASE("rectification") {
    CHECK(rectification(worked_example()) == StandardTableau::from_rows({{1, 3, 5}, {2, 6}, {4}}));
    auto straight = StandardTableau::from_rows({{1, 3}, {2}});
    CHECK(rectification(straight) == straight);
    // the 3x4 witness rectifies to the canonical (3,1) tableau
    auto witness = skew({4, 2, 1}, {2, 1}, {{3, 1, 1}, {1, 3, 2}, {1, 4, 3}, {2, 2, 4}});
    CHECK(rectification(witness) == StandardTableau::from_rows({{1, 2, 3}, {4}}));
    CHECK(rectification(StandardTableau()) == StandardTableau());
}

TEST_CASE("rectification is independent of the slide order") {
    // every maximal sequence of slide choices, memoized
    std::map<std::pair<std::vector<Box>, std::vector<int>>, StandardTableau> memo;
    auto all_orders = [&](auto&& self, const StandardTableau& t, bool& ok) -> StandardTableau {
        auto targets = forward_slide_targets(t);
        if (targets.empty()) return rectification(t);  // only degenerate moves left
        auto key = std::make_pair(t.boxes(), t.inner().parts());
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        StandardTableau result;
        bool first = true;
        for (Box x : targets) {
            StandardTableau r = self(self, jdt_slide(t, x), ok);
            if (first) {
                result = r;
                first = false;
            } else if (!(r == result)) {
                ok = false;
            }
        }
        memo.emplace(key, result);
        return result;
    };

    Rectangle rect{3, 4};
    bool ok = true;
    long long cases = 0;
    for (const auto& rho : partitions_in(rect))
        for (const auto& sigma : partitions_in(rect)) {
            if (!contains(rho, sigma)) continue;
            int cells = sigma.size() - rho.size();
            if (cells < 1 || cells > 8) continue;
            for (const auto& t : all_syt(SkewShape(sigma, rho))) {
                if (all_orders(all_orders, t, ok) != rectification(t)) ok = false;
                ++cases;
            }
        }
    CHECK(ok);
    CHECK(cases == 4617);
}

TEST_CASE("revrectification") {
    Rectangle rect{3, 4};
    auto tl = StandardTableau::from_rows({{1, 2}, {3}});
    CHECK(revrectification(tl, rect) ==
          skew({4, 4, 4}, {4, 3, 2}, {{3, 3, 1}, {2, 4, 2}, {3, 4, 3}}));
    CHECK(revrectification(tl, rect) == tilde(tl, rect));

    auto tn = StandardTableau::from_rows({{1, 2, 3}, {4, 5}});
    CHECK(revrectification(tn, rect) == tilde(tn, rect));
    CHECK(tilde(tn, rect) ==
          skew({4, 4, 4}, {4, 2, 1},
               {{3, 2, 1}, {2, 3, 2}, {2, 4, 3}, {3, 3, 4}, {3, 4, 5}}));

    // a tableau already filling the rectangle is fixed
    auto full = canonical_tableau(P({4, 4, 4}));
    CHECK(revrectification(full, rect) == full);
}

TEST_CASE("delta") {
    CHECK(delta(StandardTableau::from_rows({{1, 2}, {3}})) ==
          StandardTableau::from_rows({{1}, {2}}));
    CHECK(delta(StandardTableau::from_rows({{1}})) == StandardTableau());
    CHECK_THROWS_AS(delta(StandardTableau()), std::invalid_argument);
    // |shape| applications empty any tableau
    auto t = StandardTableau::from_rows({{1, 2, 5}, {3, 4}});
    for (int i = 0; i < 5; ++i) t = delta(t);
    CHECK(t == StandardTableau());
}

TEST_CASE("evacuation") {
    auto x = StandardTableau::from_rows({{1, 2, 3, 6}, {4, 7}, {5}});
    CHECK(evacuation(x) == StandardTableau::from_rows({{1, 3, 6, 7}, {2, 4}, {5}}));
    auto one = StandardTableau::from_rows({{1}});
    CHECK(evacuation(one) == one);
    for (const auto& t : all_syt(SkewShape(P({3, 2, 1}), P({}))))
        CHECK(evacuation(evacuation(t)) == t);
    CHECK_THROWS_AS(evacuation(skew({2, 1}, {1}, {{1, 2, 1}, {2, 1, 2}})),
                    std::invalid_argument);
}

TEST_CASE("tilde") {
    Rectangle rect{3, 4};
    CHECK(tilde(StandardTableau::from_rows({{1, 2, 3}, {4}}), rect) ==
          skew({4, 4, 4}, {4, 3, 1}, {{3, 2, 1}, {3, 3, 2}, {2, 4, 3}, {3, 4, 4}}));
    CHECK(tilde(StandardTableau::from_rows({{1, 2, 3}, {4, 5}}), rect) ==
          skew({4, 4, 4}, {4, 2, 1},
               {{3, 2, 1}, {2, 3, 2}, {2, 4, 3}, {3, 3, 4}, {3, 4, 5}}));
    // tilde of the full rectangle keeps the full shape
    auto full = canonical_tableau(P({4, 4, 4}));
    CHECK(tilde(full, rect).outer() == P({4, 4, 4}));
    CHECK(tilde(full, rect).inner() == Partition{});
    CHECK_THROWS_AS(tilde(canonical_tableau(P({5})), rect), std::invalid_argument);
}

TEST_CASE("reverse_evacuation") {
    Rectangle rect{3, 4};
    // reverse evacuation of the concatenation from the worked braid example
    auto co = skew({4, 3, 1}, {2, 1}, {{3, 1, 1}, {1, 3, 2}, {1, 4, 3}, {2, 2, 4}, {2, 3, 5}});
    auto bo = skew({4, 4, 4}, {4, 3, 1}, {{3, 2, 1}, {3, 3, 2}, {2, 4, 3}, {3, 4, 4}});
    auto combined = stack(co, bo);
    CHECK(reverse_evacuation(combined, rect) ==
          skew({4, 4, 4}, {2, 1},
               {{2, 2, 1}, {3, 1, 2}, {1, 3, 3}, {1, 4, 4}, {2, 3, 5}, {2, 4, 6}, {3, 2, 7},
                {3, 3, 8}, {3, 4, 9}}));

    // involution, and agreement with the conjugated forward evacuation
    for (const auto& pi : partitions_in(rect)) {
        if (rect.cells() - pi.size() > 5) continue;
        for (const auto& t : all_syt(SkewShape(P({4, 4, 4}), pi))) {
            CHECK(reverse_evacuation(reverse_evacuation(t, rect), rect) == t);
            CHECK(reverse_evacuation(t, rect) ==
                  rotate_complement(evacuation(rotate_complement(t, rect)), rect));
        }
    }

    // single box at the southeast corner is fixed
    auto corner = skew({4, 4, 4}, {4, 4, 3}, {{3, 4, 1}});
    CHECK(reverse_evacuation(corner, rect) == corner);
    CHECK_THROWS_AS(reverse_evacuation(canonical_tableau(P({2, 1})), rect),
                    std::invalid_argument);
}

TEST_CASE("dual_equiv_check") {
    Rectangle rect{3, 3};
    auto witness = skew({3, 1}, {1}, {{1, 2, 1}, {1, 3, 2}, {2, 1, 3}});
    CHECK(dual_equiv_check(witness, witness, rect));

    // tableaux of the same straight shape are dual equivalent
    auto list = all_syt(SkewShape(P({2, 1}), P({})));
    CHECK(dual_equiv_check(list[0], list[1], rect));

    // a pair that a single slide separates
    auto t1 = skew({3, 1}, {1}, {{1, 2, 1}, {1, 3, 2}, {2, 1, 3}});
    auto t2 = skew({3, 1}, {1}, {{2, 1, 1}, {1, 2, 2}, {1, 3, 3}});
    CHECK_FALSE(dual_equiv_check(t1, t2, rect));

    // B and B'' from the braid analysis are dual equivalent
    Rectangle r34{3, 4};
    auto b = skew({4, 2, 1}, {2, 1}, {{2, 2, 1}, {1, 3, 2}, {1, 4, 3}, {3, 1, 4}});
    auto bpp = skew({4, 2, 1}, {2, 1}, {{2, 2, 1}, {3, 1, 2}, {1, 3, 3}, {1, 4, 4}});
    CHECK(dual_equiv_check(b, bpp, r34));

    CHECK_THROWS_AS(dual_equiv_check(witness, list[0], rect), std::invalid_argument);
}

TEST_CASE("slides preserve dual equivalence") {
    Rectangle rect{3, 3};
    // reverse slides applied in common to pairs of the same straight shape
    for (const auto& shape : partitions_in(rect)) {
        if (shape.size() > 5 || shape.empty()) continue;
        auto list = all_syt(SkewShape(shape, P({})));
        for (const auto& t : list)
            for (const auto& u : list)
                for (Box x : reverse_slide_targets(t, rect))
                    CHECK(dual_equiv_check(rev_jdt_slide(t, x, rect), rev_jdt_slide(u, x, rect),
                                           rect));
    }
    // forward slides applied in common to dual-equivalent skew pairs
    for (const auto& rho : partitions_in(rect))
        for (const auto& sigma : partitions_in(rect)) {
            if (!contains(rho, sigma) || rho.empty()) continue;
            int cells = sigma.size() - rho.size();
            if (cells < 1 || cells > 4) continue;
            auto list = all_syt(SkewShape(sigma, rho));
            for (const auto& t : list)
                for (const auto& u : list) {
                    if (!dual_equiv_check(t, u, rect)) continue;
                    for (Box x : forward_slide_targets(t))
                        CHECK(dual_equiv_check(jdt_slide(t, x), jdt_slide(u, x), rect));
                }
        }
}

TEST_CASE("jdt equivalent plus dual equivalent means equal") {
    Rectangle rect{3, 3};
    for (const auto& rho : partitions_in(rect))
        for (const auto& sigma : partitions_in(rect)) {
            if (!contains(rho, sigma)) continue;
            int cells = sigma.size() - rho.size();
            if (cells < 1 || cells > 5) continue;
            auto list = all_syt(SkewShape(sigma, rho));
            for (size_t i = 0; i < list.size(); ++i)
                for (size_t j = i + 1; j < list.size(); ++j)
                    if (rectification(list[i]) == rectification(list[j]))
                        CHECK_FALSE(dual_equiv_check(list[i], list[j], rect));
        }
}
