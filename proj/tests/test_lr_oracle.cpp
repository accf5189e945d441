#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lrcarton/lr_oracle.hpp"

using namespace lrcarton;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}

TEST_CASE("lr_ballot_count") {
    // the 3x4 worked example's coefficient; the two fillings differ in where
    // the single 2 sits, and both reverse reading words are lattice
    CHECK(lr_ballot_count(P({2, 1}), P({3, 1}), P({4, 2, 1})) == 2);
    CHECK(lr_ballot_count(P({2, 1}), P({2, 1}), P({3, 2, 1})) == 2);
    for (const auto& p : partitions_in(Rectangle{3, 3}))
        CHECK(lr_ballot_count(p, P({}), p) == 1);

    CHECK(lr_ballot_count(P({2}), P({2, 1}), P({3, 2})) == 1);
    CHECK(lr_ballot_count(P({1}), P({1}), P({2})) == 1);
    CHECK(lr_ballot_count(P({1}), P({2}), P({2, 2})) == 0);  // size mismatch
    CHECK_THROWS_AS(lr_ballot_count(P({3}), P({1}), P({2, 2})), std::invalid_argument);
}

TEST_CASE("lr_via_rectification") {
    CHECK(lr_via_rectification(Rectangle{3, 4}, P({2, 1}), P({3, 1}), P({3, 2})) == 2);
    CHECK(lr_via_rectification(Rectangle{2, 3}, P({2}), P({2, 1}), P({1})) == 1);
    CHECK(lr_via_rectification(Rectangle{1, 3}, P({1}), P({1}), P({1})) == 1);
    CHECK(lr_via_rectification(Rectangle{2, 3}, P({2}), P({2}), P({1})) == 0);
    CHECK_THROWS_AS(lr_via_rectification(Rectangle{2, 2}, P({3}), P({1}), P({1})),
                    std::invalid_argument);
}

TEST_CASE("the two oracles agree on small rectangles") {
    for (Rectangle rect : {Rectangle{2, 2}, Rectangle{2, 3}}) {
        auto parts = partitions_in(rect);
        for (const auto& l : parts)
            for (const auto& m : parts)
                for (const auto& n : parts) {
                    Partition nv = complement(n, rect);
                    long long ballot = contains(l, nv) ? lr_ballot_count(l, m, nv) : 0;
                    CHECK(ballot == lr_via_rectification(rect, l, m, n));
                }
    }
}

TEST_CASE("oracle value is symmetric in the three roles") {
    Rectangle rect{2, 3};
    auto parts = partitions_in(rect);
    auto value = [&](const Partition& l, const Partition& m, const Partition& n) {
        return lr_via_rectification(rect, l, m, n);
    };
    for (const auto& l : parts)
        for (const auto& m : parts)
            for (const auto& n : parts) {
                long long v = value(l, m, n);
                CHECK(v == value(m, n, l));
                CHECK(v == value(n, l, m));
                CHECK(v == value(m, l, n));
                CHECK(v == value(n, m, l));
                CHECK(v == value(l, n, m));
            }
}

TEST_CASE("zero outside the size condition") {
    Rectangle rect{2, 3};
    auto parts = partitions_in(rect);
    for (const auto& l : parts)
        for (const auto& m : parts)
            for (const auto& n : parts) {
                if (l.size() + m.size() + n.size() == rect.cells()) continue;
                Partition nv = complement(n, rect);
                CHECK(lr_via_rectification(rect, l, m, n) == 0);
                if (contains(l, nv)) CHECK(lr_ballot_count(l, m, nv) == 0);
            }
}
