#include "lrcarton/json_io.hpp"

#include <stdexcept>

#include "lrcarton/render.hpp"

namespace lrcarton {

using nlohmann::json;

json partition_to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition_from_json: expected array");
    return Partition(j.get<std::vector<int>>());
}

json tableau_to_json(const StandardTableau& t) {
    json entries = json::array();
    // row-major entry order keeps serialization canonical
    for (Box b : t.shape().cells()) entries.push_back({b.row, b.col, t.label_at(b)});
    return json{{"shape", {{"outer", partition_to_json(t.outer())},
                           {"inner", partition_to_json(t.inner())}}},
                {"entries", entries}};
}

StandardTableau tableau_from_json(const json& j) {
    SkewShape shape(partition_from_json(j.at("shape").at("outer")),
                    partition_from_json(j.at("shape").at("inner")));
    std::vector<Box> boxes(shape.cell_count());
    for (const auto& e : j.at("entries")) {
        int label = e.at(2).get<int>();
        if (label < 1 || label > static_cast<int>(boxes.size()))
            throw std::invalid_argument("tableau_from_json: label out of range");
        boxes[label - 1] = Box{e.at(0).get<int>(), e.at(1).get<int>()};
    }
    return StandardTableau(std::move(shape), std::move(boxes));
}

json carton_to_json(const Carton& carton) {
    const CartonGeometry& geo = carton.geometry();
    json faces = json::array();
    for (Face f : all_faces) {
        json grid = json::array();
        for (const auto& row : printed_face_grid(carton, f)) {
            json jrow = json::array();
            for (const Partition& p : row) jrow.push_back(partition_to_json(p));
            grid.push_back(std::move(jrow));
        }
        auto corners = face_corner_names(f);
        faces.push_back(json{{"face", face_id(f)},
                             {"corners", {corners[0], corners[1], corners[2], corners[3]}},
                             {"grid", std::move(grid)}});
    }
    return json{{"geometry",
                 {{"rect", {{"rows", geo.rect.rows}, {"cols", geo.rect.cols}}},
                  {"a", geo.a},
                  {"b", geo.b},
                  {"c", geo.c}}},
                {"faces", std::move(faces)}};
}

Carton carton_from_json(const json& j) {
    const json& g = j.at("geometry");
    CartonGeometry geo{Rectangle{g.at("rect").at("rows").get<int>(),
                                 g.at("rect").at("cols").get<int>()},
                       g.at("a").get<int>(), g.at("b").get<int>(), g.at("c").get<int>()};

    std::map<SurfaceVertex, Partition> labels;
    for (const auto& jf : j.at("faces")) {
        std::string id = jf.at("face").get<std::string>();
        Face face = Face::Z0;
        bool found = false;
        for (Face f : all_faces)
            if (face_id(f) == id) {
                face = f;
                found = true;
            }
        if (!found) throw std::invalid_argument("carton_from_json: unknown face " + id);
        std::vector<std::vector<Partition>> printed;
        for (const auto& jrow : jf.at("grid")) {
            std::vector<Partition> row;
            for (const auto& jp : jrow) row.push_back(partition_from_json(jp));
            printed.push_back(std::move(row));
        }
        auto local = face_local_from_printed(geo, face, printed);
        for (size_t i = 0; i < local.size(); ++i)
            for (size_t jx = 0; jx < local[i].size(); ++jx) {
                SurfaceVertex v =
                    face_vertex(geo, face, static_cast<int>(i), static_cast<int>(jx));
                auto [it, inserted] = labels.try_emplace(v, local[i][jx]);
                if (!inserted && it->second != local[i][jx])
                    throw std::invalid_argument(
                        "carton_from_json: faces disagree on a shared vertex");
            }
    }

    // the defining tableaux are recoverable from the origin edges
    auto edge_tableau = [&](int axis, int len) {
        std::vector<Partition> steps;
        for (int v = 0; v <= len; ++v) {
            SurfaceVertex p = {0, 0, 0};
            p[axis] = v;
            auto it = labels.find(p);
            if (it == labels.end())
                throw std::invalid_argument("carton_from_json: origin edge incomplete");
            steps.push_back(it->second);
        }
        return chain_to_tableau(ShapeChain(std::move(steps)));
    };
    StandardTableau tl = edge_tableau(0, geo.a);
    StandardTableau tm = edge_tableau(1, geo.b);
    StandardTableau tn = edge_tableau(2, geo.c);
    return Carton(geo, std::move(labels), std::move(tl), std::move(tm), std::move(tn));
}

}  // namespace lrcarton
