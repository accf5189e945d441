#include "lrcarton/lr_oracle.hpp"

#include <stdexcept>

#include "lrcarton/jdt.hpp"
#include "lrcarton/tableau.hpp"

namespace lrcarton {

namespace {

// Cells of outer/lambda in reverse reading order: top row first, right to
// left within a row. Stored as (row, col) pairs, 1-based.
std::vector<std::pair<int, int>> reverse_reading_cells(const Partition& lambda,
                                                       const Partition& outer) {
    std::vector<std::pair<int, int>> cells;
    for (int r = 1; r <= outer.rows(); ++r)
        for (int c = outer.part(r); c > lambda.part(r); --c) cells.push_back({r, c});
    return cells;
}

}  // namespace

long long lr_ballot_count(const Partition& lambda, const Partition& mu, const Partition& outer) {
    if (!contains(lambda, outer))
        throw std::invalid_argument("lr_ballot_count: lambda not contained in outer");
    if (outer.size() - lambda.size() != mu.size()) return 0;
    if (mu.empty()) return 1;

    auto cells = reverse_reading_cells(lambda, outer);
    int k = mu.rows();
    std::vector<int> remaining(k + 1);
    for (int i = 1; i <= k; ++i) remaining[i] = mu.part(i);
    std::vector<int> placed(k + 1, 0);
    // value at each filled cell, keyed by (row, col); 0 = empty
    std::vector<std::vector<int>> val(outer.rows() + 1, std::vector<int>(outer.part(1) + 1, 0));

    long long count = 0;
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[idx];
        // row weakly increases: bound above by the right neighbor (already
        // placed, since we fill right to left)
        int hi = k;
        if (c < outer.part(r) && val[r][c + 1] != 0) hi = val[r][c + 1];
        for (int v = 1; v <= hi; ++v) {
            if (remaining[v] == 0) continue;
            // columns strictly increase among filled cells
            if (r > 1 && c <= outer.part(r - 1) && c > lambda.part(r - 1) && val[r - 1][c] >= v)
                continue;
            // lattice condition on the reverse reading word, prefix by prefix
            if (v > 1 && placed[v] + 1 > placed[v - 1]) continue;
            placed[v] += 1;
            remaining[v] -= 1;
            val[r][c] = v;
            self(self, idx + 1);
            val[r][c] = 0;
            placed[v] -= 1;
            remaining[v] += 1;
        }
    };
    rec(rec, 0);
    return count;
}

long long lr_via_rectification(const Rectangle& rect, const Partition& lambda,
                               const Partition& mu, const Partition& nu) {
    for (const Partition* p : {&lambda, &mu, &nu})
        if (!fits(*p, rect))
            throw std::invalid_argument("lr_via_rectification: " + p->str() +
                                        " does not fit in the rectangle");
    if (lambda.size() + mu.size() + nu.size() != rect.cells()) return 0;
    Partition nu_vee = complement(nu, rect);
    if (!contains(lambda, nu_vee)) return 0;
    StandardTableau target = canonical_tableau(mu);
    long long count = 0;
    for (const StandardTableau& t : all_syt(SkewShape(nu_vee, lambda)))
        if (rectification(t) == target) ++count;
    return count;
}

}  // namespace lrcarton
