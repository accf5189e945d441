// Python bindings for the main operations: counting and enumeration,
// the two classical oracles, slides and involutions, and the sweeps.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lrcarton/json_io.hpp"
#include "lrcarton/render.hpp"
#include "lrcarton/verify.hpp"

namespace py = pybind11;
using namespace lrcarton;

namespace {

Partition make_partition(const std::vector<int>& parts) { return Partition(parts); }

// tableaux cross the boundary as {"outer": [...], "inner": [...],
// "entries": [[row, col, label], ...]}
StandardTableau tableau_from_py(const py::dict& d) {
    SkewShape shape(Partition(d["outer"].cast<std::vector<int>>()),
                    Partition(d["inner"].cast<std::vector<int>>()));
    auto entries = d["entries"].cast<std::vector<std::array<int, 3>>>();
    std::vector<Box> boxes(entries.size());
    for (auto [r, c, l] : entries) {
        if (l < 1 || l > static_cast<int>(boxes.size()))
            throw std::invalid_argument("tableau entries must use labels 1..n");
        boxes[l - 1] = Box{r, c};
    }
    return StandardTableau(std::move(shape), std::move(boxes));
}

py::dict tableau_to_py(const StandardTableau& t) {
    py::dict d;
    d["outer"] = t.outer().parts();
    d["inner"] = t.inner().parts();
    py::list entries;
    for (Box b : t.shape().cells()) {
        py::list e;
        e.append(b.row);
        e.append(b.col);
        e.append(t.label_at(b));
        entries.append(e);
    }
    d["entries"] = entries;
    return d;
}

}  // namespace

PYBIND11_MODULE(lrcarton, m) {
    m.doc() = "carton enumeration of Littlewood-Richardson coefficients";

    m.def(
        "count",
        [](int rows, int cols, const std::vector<int>& lambda, const std::vector<int>& mu,
           const std::vector<int>& nu) {
            return carton_count(Rectangle{rows, cols}, make_partition(lambda),
                                make_partition(mu), make_partition(nu));
        },
        py::arg("rows"), py::arg("cols"), py::arg("lam"), py::arg("mu"), py::arg("nu"),
        "Number of carton fillings for the triple in a rows x cols rectangle.");

    m.def(
        "ballot_count",
        [](const std::vector<int>& lambda, const std::vector<int>& mu,
           const std::vector<int>& outer) {
            return lr_ballot_count(make_partition(lambda), make_partition(mu),
                                   make_partition(outer));
        },
        py::arg("lam"), py::arg("mu"), py::arg("outer"),
        "Classical ballot-word count of outer/lam fillings with content mu.");

    m.def(
        "rectification_count",
        [](int rows, int cols, const std::vector<int>& lambda, const std::vector<int>& mu,
           const std::vector<int>& nu) {
            return lr_via_rectification(Rectangle{rows, cols}, make_partition(lambda),
                                        make_partition(mu), make_partition(nu));
        },
        py::arg("rows"), py::arg("cols"), py::arg("lam"), py::arg("mu"), py::arg("nu"),
        "Jeu-de-taquin count of witnesses rectifying to the canonical tableau of mu.");

    m.def(
        "enumerate_json",
        [](int rows, int cols, const std::vector<int>& lambda, const std::vector<int>& mu,
           const std::vector<int>& nu) {
            std::vector<std::string> docs;
            for (const Carton& carton :
                 enumerate_cartons(Rectangle{rows, cols}, make_partition(lambda),
                                   make_partition(mu), make_partition(nu)))
                docs.push_back(carton_to_json(carton).dump());
            return docs;
        },
        py::arg("rows"), py::arg("cols"), py::arg("lam"), py::arg("mu"), py::arg("nu"),
        "Every carton filling, one JSON document per carton.");

    m.def(
        "rectify",
        [](const py::dict& t) { return tableau_to_py(rectification(tableau_from_py(t))); },
        py::arg("tableau"), "Rectification of a skew standard tableau.");

    m.def(
        "evacuate",
        [](const py::dict& t) { return tableau_to_py(evacuation(tableau_from_py(t))); },
        py::arg("tableau"), "Evacuation of a straight-shape standard tableau.");

    m.def(
        "infuse",
        [](const py::dict& u, const py::dict& t) {
            auto [a, b] = infusion(tableau_from_py(u), tableau_from_py(t));
            return py::make_tuple(tableau_to_py(a), tableau_to_py(b));
        },
        py::arg("u"), py::arg("t"),
        "Infusion pair of two tableaux with outer(u) == inner(t).");

    m.def(
        "verify_rectangle",
        [](int rows, int cols) {
            auto results = verify::oracle_sweep(Rectangle{rows, cols}, -1, 1);
            for (const auto& r : results)
                if (!r.ok()) return false;
            return true;
        },
        py::arg("rows"), py::arg("cols"),
        "Carton count equals both classical oracles for every triple in the rectangle.");
}
