#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lrcarton/growth.hpp"
#include "lrcarton/jdt.hpp"

namespace lrcarton {

// Box with edge lengths a = |lambda|, b = |mu|, c = |nu|; the six faces of its
// surface grid carry the growth diagrams.
struct CartonGeometry {
    Rectangle rect;
    int a = 0;
    int b = 0;
    int c = 0;

    bool operator==(const CartonGeometry&) const = default;
};

// (x, y, z) with 0 <= x <= a, 0 <= y <= b, 0 <= z <= c and at least one
// coordinate extreme.
using SurfaceVertex = std::array<int, 3>;

// The six faces, in the order the extension proof fills them.
enum class Face { Z0, Xa, Y0, Zc, Yb, X0 };
inline constexpr std::array<Face, 6> all_faces = {Face::Z0, Face::Xa, Face::Y0,
                                                  Face::Zc, Face::Yb, Face::X0};

// Face-local grid coordinates (i, j) -> surface vertex; grids are produced by
// grow_rectangle with i indexing the left chain and j the top chain.
SurfaceVertex face_vertex(const CartonGeometry& geo, Face f, int i, int j);
std::pair<int, int> face_dims(const CartonGeometry& geo, Face f);  // (max i, max j)
std::string face_name(Face f);

class Carton {
  public:
    Carton(CartonGeometry geo, std::map<SurfaceVertex, Partition> labels,
           StandardTableau t_lambda, StandardTableau t_mu, StandardTableau t_nu);

    const CartonGeometry& geometry() const { return geo_; }
    const Partition& label(const SurfaceVertex& v) const;
    const Partition& label(int x, int y, int z) const { return label({x, y, z}); }
    const std::map<SurfaceVertex, Partition>& labels() const { return labels_; }
    const StandardTableau& t_lambda() const { return t_lambda_; }
    const StandardTableau& t_mu() const { return t_mu_; }
    const StandardTableau& t_nu() const { return t_nu_; }

    std::vector<std::vector<Partition>> face_grid(Face f) const;
    ShapeChain edge_chain(const SurfaceVertex& from, const SurfaceVertex& to) const;

    bool operator==(const Carton& o) const {
        return geo_ == o.geo_ && labels_ == o.labels_;
    }

  private:
    CartonGeometry geo_;
    std::map<SurfaceVertex, Partition> labels_;
    StandardTableau t_lambda_, t_mu_, t_nu_;
};

// Initialization data: corners, the three origin edges, and the three far
// edges carrying the tilde chains.
struct PartialCarton {
    CartonGeometry geo;
    StandardTableau t_lambda, t_mu, t_nu;
    StandardTableau tilde_lambda, tilde_mu, tilde_nu;
    std::map<SurfaceVertex, Partition> labels;
};

// nullopt signals |lambda|+|mu|+|nu| != rows*cols, which forces zero cartons.
// Shapes that do not fit the rectangle are rejected.
std::optional<PartialCarton> carton_init(const Rectangle& rect, const StandardTableau& t_lambda,
                                         const StandardTableau& t_mu,
                                         const StandardTableau& t_nu);

struct Witness {
    StandardTableau tableau;  // shape nuVee/lambda, rectifies to t_mu
};

// Every witness for the initialized triple, in all_syt order.
std::vector<Witness> find_witnesses(const PartialCarton& init);

// Fill the six faces from a witness in the proof order, asserting every
// consistency condition the proof guarantees. Failures throw std::logic_error
// naming the face and edge.
Carton extend_witness(const PartialCarton& init, const StandardTableau& witness);
Carton extend_witness(const PartialCarton& init, const Witness& witness);

// Witness-driven enumeration: all_syt(nuVee/lambda) filtered by rectification.
std::vector<Carton> enumerate_cartons(const Rectangle& rect, const StandardTableau& t_lambda,
                                      const StandardTableau& t_mu, const StandardTableau& t_nu);
std::vector<Carton> enumerate_cartons(const Rectangle& rect, const Partition& lambda,
                                      const Partition& mu, const Partition& nu);

// Independent route: constraint propagation over the surface squares with
// fail-first branching. Produces the same carton set, possibly reordered.
std::vector<Carton> enumerate_cartons_generic(const Rectangle& rect,
                                              const StandardTableau& t_lambda,
                                              const StandardTableau& t_mu,
                                              const StandardTableau& t_nu);

struct ValidationReport {
    bool ok = true;
    std::string violation;
};

ValidationReport validate_carton(const Carton& carton);

// Permutation of the roles (lambda, mu, nu); perm[i] is the index of the
// original role carried by axis i of the permuted carton.
using RolePerm = std::array<int, 3>;
Carton permute_carton(const Carton& carton, const RolePerm& perm);

long long carton_count(const Rectangle& rect, const Partition& lambda, const Partition& mu,
                       const Partition& nu);
long long carton_count(const Rectangle& rect, const StandardTableau& t_lambda,
                       const StandardTableau& t_mu, const StandardTableau& t_nu);

}  // namespace lrcarton
