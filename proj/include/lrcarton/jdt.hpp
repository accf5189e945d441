#pragma once

#include "lrcarton/tableau.hpp"

namespace lrcarton {

// Record of a single slide, mostly useful for tracing and tests.
struct SlideRecord {
    bool forward = true;
    Box start_box;
    Box vacated_box;
    StandardTableau result;
};

// Forward slide into x: x must be a removable corner of the inner shape with
// at least one filled cell immediately right of or below it. The vacancy
// repeatedly swallows the smaller of the labels right/below until none remain.
StandardTableau jdt_slide(const StandardTableau& t, Box x);
SlideRecord jdt_slide_record(const StandardTableau& t, Box x);

// Reverse slide into x: x in rect, addable to the outer shape, with a filled
// cell immediately left of or above it; moves the larger label each step.
StandardTableau rev_jdt_slide(const StandardTableau& t, Box x, const Rectangle& rect);
SlideRecord rev_jdt_slide_record(const StandardTableau& t, Box x, const Rectangle& rect);

// Iterate forward slides to a straight shape. The corner order vacates the
// boxes of the canonical inner tableau by decreasing label; the result is
// independent of that choice (first fundamental theorem).
StandardTableau rectification(const StandardTableau& t);

// Mirror image: iterate reverse slides until the outer shape is the full
// rectangle. A straight input of shape beta lands on rotate(beta).
StandardTableau revrectification(const StandardTableau& t, const Rectangle& rect);

// Erase entry 1 at the northwest corner, decrement, slide into the corner.
StandardTableau delta(const StandardTableau& t);

// Schutzenberger evacuation via iterated delta; an involution on SYT(shape).
StandardTableau evacuation(const StandardTableau& t);

// evac, relabel i -> n-i+1, rotate 180 degrees to the bottom-right of rect.
StandardTableau tilde(const StandardTableau& t, const Rectangle& rect);

// Mirror-dual of evacuation for tableaux whose outer shape is the full
// rectangle, built from reverse slides out of the southeast corner. Agrees
// with conjugating evacuation by rotation plus label complementation.
StandardTableau reverse_evacuation(const StandardTableau& t, const Rectangle& rect);

// 180-degree rotation within rect plus label complementation i -> n-i+1.
StandardTableau rotate_complement(const StandardTableau& t, const Rectangle& rect);

// Bounded dual-equivalence test: applies every common forward-slide sequence
// down to straight shape and every reverse-slide sequence up to the full
// rectangle, requiring equal shapes at every step.
bool dual_equiv_check(const StandardTableau& t, const StandardTableau& u, const Rectangle& rect);

// Valid slide targets for the two directions.
std::vector<Box> forward_slide_targets(const StandardTableau& t);
std::vector<Box> reverse_slide_targets(const StandardTableau& t, const Rectangle& rect);

}  // namespace lrcarton
