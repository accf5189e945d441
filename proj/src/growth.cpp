#include "lrcarton/growth.hpp"

#include <stdexcept>

namespace lrcarton {

Partition local_rule_forward(const Partition& gamma, const Partition& alpha,
                             const Partition& beta) {
    if (!covers(alpha, gamma) || !covers(beta, alpha))
        throw std::invalid_argument("local_rule_forward: inputs are not a cover chain");
    Box b2 = *box_added(alpha, beta);
    if (is_addable(gamma, b2)) return add_box(gamma, b2);
    return alpha;
}

std::vector<Partition> local_rule_inverse_candidates(const Partition& alpha,
                                                     const Partition& beta,
                                                     const Partition& delta) {
    std::vector<Partition> out;
    if (!covers(beta, alpha) || !covers(beta, delta)) return out;
    for (Box x : removable_boxes(alpha)) {
        Partition gamma = remove_box(alpha, x);
        if (!covers(delta, gamma)) continue;
        if (local_rule_forward(gamma, alpha, beta) == delta) out.push_back(gamma);
    }
    return out;
}

Partition local_rule_inverse(const Partition& alpha, const Partition& beta,
                             const Partition& delta) {
    auto cands = local_rule_inverse_candidates(alpha, beta, delta);
    if (cands.empty())
        throw std::invalid_argument("local_rule_inverse: no gamma completes the square");
    if (cands.size() > 1)
        throw std::invalid_argument("local_rule_inverse: square admits " +
                                    std::to_string(cands.size()) + " completions");
    return cands.front();
}

ShapeChain GrowthGrid::bottom_row() const { return ShapeChain(g.front()); }
ShapeChain GrowthGrid::top_row() const { return ShapeChain(g.back()); }

ShapeChain GrowthGrid::left_column() const {
    std::vector<Partition> col;
    for (const auto& row : g) col.push_back(row.front());
    return ShapeChain(std::move(col));
}

ShapeChain GrowthGrid::right_column() const {
    std::vector<Partition> col;
    for (const auto& row : g) col.push_back(row.back());
    return ShapeChain(std::move(col));
}

bool GrowthGrid::valid() const {
    int m = height(), n = width();
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j) {
            if (i < m && !covers(g[i + 1][j], g[i][j])) return false;
            if (j < n && !covers(g[i][j + 1], g[i][j])) return false;
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if (local_rule_forward(g[i][j], g[i + 1][j], g[i + 1][j + 1]) != g[i][j + 1])
                return false;
    return true;
}

GrowthGrid grow_rectangle(const ShapeChain& left, const ShapeChain& top) {
    if (left.back() != top.front())
        throw std::invalid_argument("grow_rectangle: left chain must end where top begins");
    int m = left.length() - 1, n = top.length() - 1;
    GrowthGrid grid;
    grid.g.assign(m + 1, std::vector<Partition>(n + 1));
    grid.g[m] = top.steps;
    for (int i = m - 1; i >= 0; --i) {
        grid.g[i][0] = left.steps[i];
        for (int j = 0; j < n; ++j)
            grid.g[i][j + 1] =
                local_rule_forward(grid.g[i][j], grid.g[i + 1][j], grid.g[i + 1][j + 1]);
    }
    return grid;
}

GrowthGrid grow_from_bottom_right(const ShapeChain& bottom, const ShapeChain& right) {
    if (bottom.back() != right.front())
        throw std::invalid_argument("grow_from_bottom_right: chains must share a corner");
    int m = right.length() - 1, n = bottom.length() - 1;
    GrowthGrid grid;
    grid.g.assign(m + 1, std::vector<Partition>(n + 1));
    grid.g[0] = bottom.steps;
    for (int i = 0; i < m; ++i) {
        grid.g[i + 1][n] = right.steps[i + 1];
        // same rule with the roles of alpha and delta exchanged
        for (int j = n - 1; j >= 0; --j)
            grid.g[i + 1][j] =
                local_rule_forward(grid.g[i][j], grid.g[i][j + 1], grid.g[i + 1][j + 1]);
    }
    return grid;
}

GrowthGrid transpose(const GrowthGrid& grid) {
    int m = grid.height(), n = grid.width();
    GrowthGrid out;
    out.g.assign(n + 1, std::vector<Partition>(m + 1));
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j) out.g[j][i] = grid.g[i][j];
    return out;
}

GrowthGrid infusion_grid(const StandardTableau& u, const StandardTableau& t) {
    if (u.outer() != t.inner())
        throw std::invalid_argument("infusion: outer(u) != inner(t)");
    return grow_rectangle(tableau_to_chain(u), tableau_to_chain(t));
}

std::pair<StandardTableau, StandardTableau> infusion(const StandardTableau& u,
                                                     const StandardTableau& t) {
    GrowthGrid grid = infusion_grid(u, t);
    return {chain_to_tableau(grid.bottom_row()), chain_to_tableau(grid.right_column())};
}

std::pair<TriangularGrowth, StandardTableau> evac_via_triangle(const StandardTableau& x) {
    if (!x.inner().empty())
        throw std::invalid_argument("evac_via_triangle: straight shape required");
    TriangularGrowth tri;
    tri.rows.push_back(tableau_to_chain(x).steps);
    while (tri.rows.back().size() > 1) {
        const auto& prev = tri.rows.back();
        std::vector<Partition> next(prev.size() - 1);
        next[0] = Partition{};
        for (size_t i = 1; i + 1 < prev.size(); ++i)
            next[i] = local_rule_forward(next[i - 1], prev[i], prev[i + 1]);
        tri.rows.push_back(std::move(next));
    }
    std::vector<Partition> chain;
    for (auto it = tri.rows.rbegin(); it != tri.rows.rend(); ++it)
        chain.push_back(it->back());
    return {std::move(tri), chain_to_tableau(ShapeChain(std::move(chain)))};
}

LayeredTableau apply_i1(const LayeredTableau& l) {
    auto [first, second] = infusion(l.a, l.b);
    return concat_layered(first, second, l.c, l.rect);
}

LayeredTableau apply_i2(const LayeredTableau& l) {
    auto [first, second] = infusion(l.b, l.c);
    return concat_layered(l.a, first, second, l.rect);
}

}  // namespace lrcarton
