#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "lrcarton/json_io.hpp"
#include "lrcarton/render.hpp"

using namespace lrcarton;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string golden(const std::string& name) {
    return read_file(std::string(LRCARTON_GOLDEN_DIR) + "/" + name);
}

StandardTableau skew(std::vector<int> outer, std::vector<int> inner,
                     std::vector<std::array<int, 3>> entries) {
    std::vector<Box> boxes(entries.size());
    for (auto [r, c, l] : entries) boxes[l - 1] = Box{r, c};
    return StandardTableau(SkewShape(P(std::move(outer)), P(std::move(inner))),
                           std::move(boxes));
}

}  // namespace

TEST_CASE("growth diagram rendering matches the golden transcription") {
    auto u = StandardTableau::from_rows({{1, 2, 3}, {4}});
    auto t = skew({5, 3, 2}, {3, 1},
                  {{1, 4, 1}, {2, 2, 2}, {2, 3, 3}, {3, 1, 4}, {1, 5, 5}, {3, 2, 6}});
    CHECK(render_grid(infusion_grid(u, t)) == golden("table1.txt"));
}

TEST_CASE("carton face rendering matches the golden transcription") {
    Rectangle rect{3, 4};
    auto init = carton_init(rect, canonical_tableau(P({2, 1})), canonical_tableau(P({3, 1})),
                            canonical_tableau(P({3, 2})));
    REQUIRE(init.has_value());
    auto witness = skew({4, 2, 1}, {2, 1}, {{3, 1, 1}, {1, 3, 2}, {1, 4, 3}, {2, 2, 4}});
    Carton carton = extend_witness(*init, witness);
    CHECK(render_carton_text(carton) == golden("section3_carton.txt"));
}

TEST_CASE("face captions") {
    CHECK(face_name(Face::Z0) == "∅-μ-ν∨-λ");
    CHECK(face_name(Face::Yb) == "λ∨-Λ-ν∨-μ");
}

TEST_CASE("json round trips are fixed points") {
    // partitions
    for (const auto& p : partitions_in(Rectangle{3, 4})) {
        auto j = partition_to_json(p);
        CHECK(partition_from_json(j) == p);
        CHECK(partition_to_json(partition_from_json(j)) == j);
    }

    // tableaux, straight and skew
    for (const auto& t : all_syt(SkewShape(P({4, 2, 1}), P({2, 1})))) {
        auto j = tableau_to_json(t);
        CHECK(tableau_from_json(j) == t);
        CHECK(tableau_to_json(tableau_from_json(j)) == j);
    }

    // cartons
    for (const auto& carton :
         enumerate_cartons(Rectangle{3, 4}, P({2, 1}), P({3, 1}), P({3, 2}))) {
        auto j = carton_to_json(carton);
        CHECK(carton_from_json(j) == carton);
        CHECK(carton_to_json(carton_from_json(j)) == j);
    }
}

TEST_CASE("json schema shape") {
    auto t = StandardTableau::from_rows({{1, 2}, {3}});
    auto j = tableau_to_json(t);
    CHECK(j.at("shape").at("outer") == nlohmann::json({2, 1}));
    CHECK(j.at("shape").at("inner") == nlohmann::json::array());
    CHECK(j.at("entries").size() == 3);

    auto cartons = enumerate_cartons(Rectangle{2, 3}, P({2}), P({2, 1}), P({1}));
    REQUIRE(cartons.size() == 1);
    auto cj = carton_to_json(cartons[0]);
    CHECK(cj.at("geometry").at("rect").at("rows") == 2);
    CHECK(cj.at("faces").size() == 6);
    CHECK(cj.at("faces")[0].at("corners") ==
          nlohmann::json({"lambda", "nuVee", "empty", "mu"}));
    // grids carry partitions as arrays
    CHECK(cj.at("faces")[0].at("grid")[0][0].is_array());
}
