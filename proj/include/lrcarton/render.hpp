#pragma once

#include <string>

#include "lrcarton/carton.hpp"
#include "lrcarton/growth.hpp"

namespace lrcarton {

// Growth diagrams print with the top chain first, so row index decreases down
// the page. Cells are left-justified and column-aligned.
std::string render_grid(const GrowthGrid& grid);

// Face in its printed orientation (the orientation of the worked 3x4
// example's tables): page rows top to bottom, columns left to right.
std::vector<std::vector<Partition>> printed_face_grid(const Carton& carton, Face f);

// Inverse of the printed orientation: recover the face-local (i, j) grid.
std::vector<std::vector<Partition>> face_local_from_printed(
    const CartonGeometry& geo, Face f, const std::vector<std::vector<Partition>>& printed);

// Corner names in printed order: top-left, top-right, bottom-left, bottom-right.
std::array<std::string, 4> face_corner_names(Face f);
std::string face_id(Face f);  // short ascii identifier

std::string render_face(const Carton& carton, Face f);

// All six faces with their corner captions, in proof order.
std::string render_carton_text(const Carton& carton);

}  // namespace lrcarton
