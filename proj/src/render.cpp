#include "lrcarton/render.hpp"

#include <stdexcept>
#include <vector>

namespace lrcarton {

namespace {

// Display width in code points; the only multibyte cell text is the empty-set
// symbol, which renders one column wide.
size_t display_width(const std::string& s) {
    size_t w = 0;
    for (unsigned char ch : s)
        if ((ch & 0xC0) != 0x80) ++w;
    return w;
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width;
    for (const auto& row : rows)
        for (size_t j = 0; j < row.size(); ++j) {
            if (j >= width.size()) width.resize(j + 1, 0);
            width[j] = std::max(width[j], display_width(row[j]));
        }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) line += "  ";
            line += row[j];
            if (j + 1 < row.size())
                line.append(width[j] - display_width(row[j]), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

// Printed orientation per face. The page row axis always decreases down the
// page; the x=a face prints with its grid transposed (z as the row axis),
// and the y=0 / y=b faces print z right to left.
struct FaceOrientation {
    bool transposed;
    bool columns_reversed;
};

FaceOrientation orientation(Face f) {
    switch (f) {
        case Face::Z0: return {false, false};
        case Face::Xa: return {true, false};
        case Face::Y0: return {false, true};
        case Face::Zc: return {false, false};
        case Face::Yb: return {false, true};
        case Face::X0: return {false, false};
    }
    return {false, false};
}

}  // namespace

std::string render_grid(const GrowthGrid& grid) {
    std::vector<std::vector<std::string>> rows;
    for (int i = grid.height(); i >= 0; --i) {
        std::vector<std::string> row;
        for (int j = 0; j <= grid.width(); ++j) row.push_back(grid.g[i][j].str());
        rows.push_back(std::move(row));
    }
    return render_table(rows);
}

std::vector<std::vector<Partition>> printed_face_grid(const Carton& carton, Face f) {
    auto grid = carton.face_grid(f);
    auto orient = orientation(f);
    if (orient.transposed) {
        std::vector<std::vector<Partition>> t(grid.front().size(),
                                              std::vector<Partition>(grid.size()));
        for (size_t i = 0; i < grid.size(); ++i)
            for (size_t j = 0; j < grid[i].size(); ++j) t[j][i] = grid[i][j];
        grid = std::move(t);
    }
    std::vector<std::vector<Partition>> out;
    for (int i = static_cast<int>(grid.size()) - 1; i >= 0; --i) {
        std::vector<Partition> row;
        int n = static_cast<int>(grid[i].size());
        for (int j = 0; j < n; ++j)
            row.push_back(grid[i][orient.columns_reversed ? n - 1 - j : j]);
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<std::vector<Partition>> face_local_from_printed(
    const CartonGeometry& geo, Face f, const std::vector<std::vector<Partition>>& printed) {
    auto orient = orientation(f);
    auto [mi, mj] = face_dims(geo, f);
    size_t prows = orient.transposed ? mj + 1 : mi + 1;
    size_t pcols = orient.transposed ? mi + 1 : mj + 1;
    if (printed.size() != prows)
        throw std::invalid_argument("face_local_from_printed: wrong row count");
    std::vector<std::vector<Partition>> local(mi + 1, std::vector<Partition>(mj + 1));
    for (size_t r = 0; r < prows; ++r) {
        if (printed[r].size() != pcols)
            throw std::invalid_argument("face_local_from_printed: ragged grid");
        for (size_t col = 0; col < pcols; ++col) {
            size_t i = prows - 1 - r;
            size_t j = orient.columns_reversed ? pcols - 1 - col : col;
            if (orient.transposed)
                local[j][i] = printed[r][col];
            else
                local[i][j] = printed[r][col];
        }
    }
    return local;
}

std::array<std::string, 4> face_corner_names(Face f) {
    switch (f) {
        case Face::Z0: return {"lambda", "nuVee", "empty", "mu"};
        case Face::Xa: return {"muVee", "Lambda", "lambda", "nuVee"};
        case Face::Y0: return {"muVee", "lambda", "nu", "empty"};
        case Face::Zc: return {"muVee", "Lambda", "nu", "lambdaVee"};
        case Face::Yb: return {"Lambda", "nuVee", "lambdaVee", "mu"};
        case Face::X0: return {"nu", "lambdaVee", "empty", "mu"};
    }
    throw std::logic_error("face_corner_names: bad face");
}

std::string face_id(Face f) {
    switch (f) {
        case Face::Z0: return "z0";
        case Face::Xa: return "xa";
        case Face::Y0: return "y0";
        case Face::Zc: return "zc";
        case Face::Yb: return "yb";
        case Face::X0: return "x0";
    }
    throw std::logic_error("face_id: bad face");
}

std::string render_face(const Carton& carton, Face f) {
    auto printed = printed_face_grid(carton, f);
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : printed) {
        std::vector<std::string> srow;
        for (const Partition& p : row) srow.push_back(p.str());
        rows.push_back(std::move(srow));
    }
    return render_table(rows);
}

std::string render_carton_text(const Carton& carton) {
    std::string out;
    for (Face f : all_faces) {
        out += "face " + face_name(f) + ":\n";
        out += render_face(carton, f);
    }
    return out;
}

}  // namespace lrcarton
