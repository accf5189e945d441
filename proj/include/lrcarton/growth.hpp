#pragma once

#include <utility>

#include "lrcarton/tableau.hpp"

namespace lrcarton {

// Fomin local rule on a unit square
//
//      alpha --- beta
//        |         |
//      gamma --- delta
//
// gamma < alpha < beta: if alpha is the only shape strictly between gamma and
// beta, delta = alpha; otherwise delta is the unique other intermediate shape.
// The conditions are symmetric in alpha and delta, so the same call computes
// alpha from (gamma, delta, beta).
Partition local_rule_forward(const Partition& gamma, const Partition& alpha,
                             const Partition& beta);

// All gamma with gamma < alpha, gamma < delta and
// local_rule_forward(gamma, alpha, beta) == delta. When alpha == delta there
// can be two; the square relation does not determine gamma uniquely.
std::vector<Partition> local_rule_inverse_candidates(const Partition& alpha,
                                                     const Partition& beta,
                                                     const Partition& delta);

// The unique such gamma; throws when none or several exist.
Partition local_rule_inverse(const Partition& alpha, const Partition& beta,
                             const Partition& delta);

// (m+1) x (n+1) array of partitions, g[i][j]; row m holds the top chain, row 0
// the derived bottom chain, column 0 the left chain.
struct GrowthGrid {
    std::vector<std::vector<Partition>> g;

    int height() const { return static_cast<int>(g.size()) - 1; }     // m
    int width() const { return static_cast<int>(g.front().size()) - 1; }  // n
    ShapeChain bottom_row() const;
    ShapeChain top_row() const;
    ShapeChain left_column() const;
    ShapeChain right_column() const;
    bool valid() const;  // covers in both directions plus the local rule everywhere

    bool operator==(const GrowthGrid&) const = default;
};

// Fill the grid from the left column (bottom to top) and the top row; the two
// must share the junction partition. Propagation is row by row downward.
GrowthGrid grow_rectangle(const ShapeChain& left, const ShapeChain& top);

// Reconstruction from the other boundary pair; equals the transpose of the
// grid that produced (bottom, right).
GrowthGrid grow_from_bottom_right(const ShapeChain& bottom, const ShapeChain& right);

GrowthGrid transpose(const GrowthGrid& grid);

// infusion(u, t) = (bottom row, right column) of the grid grown from u's chain
// (left) and t's chain (top). Requires outer(u) == inner(t). An involution;
// for straight u the first component is rectification(t).
GrowthGrid infusion_grid(const StandardTableau& u, const StandardTableau& t);
std::pair<StandardTableau, StandardTableau> infusion(const StandardTableau& u,
                                                     const StandardTableau& t);

// Staircase of chains of x, delta(x), delta^2(x), ...; the diagonal reads the
// evacuation chain.
struct TriangularGrowth {
    std::vector<std::vector<Partition>> rows;
};

std::pair<TriangularGrowth, StandardTableau> evac_via_triangle(const StandardTableau& x);

// Layered operators: i1 infuses through the (A,B) interface, i2 through (B,C).
// Both are involutions and satisfy the braid identity i1 i2 i1 = i2 i1 i2.
LayeredTableau apply_i1(const LayeredTableau& l);
LayeredTableau apply_i2(const LayeredTableau& l);

}  // namespace lrcarton
