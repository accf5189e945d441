#pragma once

#include "lrcarton/shapes.hpp"

namespace lrcarton {

// Classical ballot formulation: the number of semistandard fillings of
// outer/lambda with content mu whose reverse reading word (right to left
// within rows, top row first) is a lattice word. Deliberately shares no code
// with the slide machinery.
long long lr_ballot_count(const Partition& lambda, const Partition& mu, const Partition& outer);

// Jeu-de-taquin formulation: the number of standard tableaux of shape
// complement(nu)/lambda rectifying to the canonical tableau of mu.
long long lr_via_rectification(const Rectangle& rect, const Partition& lambda,
                               const Partition& mu, const Partition& nu);

}  // namespace lrcarton
