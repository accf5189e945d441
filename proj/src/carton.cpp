#include "lrcarton/carton.hpp"

#include <algorithm>
#include <stdexcept>

namespace lrcarton {

SurfaceVertex face_vertex(const CartonGeometry& geo, Face f, int i, int j) {
    switch (f) {
        case Face::Z0: return {i, j, 0};
        case Face::Xa: return {geo.a, i, j};
        case Face::Y0: return {i, 0, j};
        case Face::Zc: return {i, j, geo.c};
        case Face::Yb: return {i, geo.b, j};
        case Face::X0: return {0, j, i};
    }
    throw std::logic_error("face_vertex: bad face");
}

std::pair<int, int> face_dims(const CartonGeometry& geo, Face f) {
    switch (f) {
        case Face::Z0: return {geo.a, geo.b};
        case Face::Xa: return {geo.b, geo.c};
        case Face::Y0: return {geo.a, geo.c};
        case Face::Zc: return {geo.a, geo.b};
        case Face::Yb: return {geo.a, geo.c};
        case Face::X0: return {geo.c, geo.b};
    }
    throw std::logic_error("face_dims: bad face");
}

std::string face_name(Face f) {
    switch (f) {
        case Face::Z0: return "∅-μ-ν∨-λ";
        case Face::Xa: return "λ-μ∨-Λ-ν∨";
        case Face::Y0: return "∅-ν-μ∨-λ";
        case Face::Zc: return "ν-λ∨-Λ-μ∨";
        case Face::Yb: return "λ∨-Λ-ν∨-μ";
        case Face::X0: return "∅-ν-λ∨-μ";
    }
    throw std::logic_error("face_name: bad face");
}

Carton::Carton(CartonGeometry geo, std::map<SurfaceVertex, Partition> labels,
               StandardTableau t_lambda, StandardTableau t_mu, StandardTableau t_nu)
    : geo_(geo),
      labels_(std::move(labels)),
      t_lambda_(std::move(t_lambda)),
      t_mu_(std::move(t_mu)),
      t_nu_(std::move(t_nu)) {}

const Partition& Carton::label(const SurfaceVertex& v) const {
    auto it = labels_.find(v);
    if (it == labels_.end())
        throw std::invalid_argument("Carton::label: vertex not on the surface");
    return it->second;
}

std::vector<std::vector<Partition>> Carton::face_grid(Face f) const {
    auto [mi, mj] = face_dims(geo_, f);
    std::vector<std::vector<Partition>> grid(mi + 1, std::vector<Partition>(mj + 1));
    for (int i = 0; i <= mi; ++i)
        for (int j = 0; j <= mj; ++j) grid[i][j] = label(face_vertex(geo_, f, i, j));
    return grid;
}

ShapeChain Carton::edge_chain(const SurfaceVertex& from, const SurfaceVertex& to) const {
    int axis = -1;
    for (int d = 0; d < 3; ++d) {
        if (from[d] != to[d]) {
            if (axis != -1) throw std::invalid_argument("edge_chain: not an axis edge");
            axis = d;
        }
    }
    std::vector<Partition> steps;
    if (axis == -1) {
        steps.push_back(label(from));
    } else {
        int lo = std::min(from[axis], to[axis]), hi = std::max(from[axis], to[axis]);
        for (int v = lo; v <= hi; ++v) {
            SurfaceVertex p = from;
            p[axis] = v;
            steps.push_back(label(p));
        }
        if (from[axis] > to[axis]) std::reverse(steps.begin(), steps.end());
    }
    return ShapeChain(std::move(steps));
}

std::optional<PartialCarton> carton_init(const Rectangle& rect, const StandardTableau& t_lambda,
                                         const StandardTableau& t_mu,
                                         const StandardTableau& t_nu) {
    for (const StandardTableau* t : {&t_lambda, &t_mu, &t_nu}) {
        if (!t->inner().empty())
            throw std::invalid_argument("carton_init: corner tableaux must be straight");
        if (!fits(t->outer(), rect))
            throw std::invalid_argument("carton_init: shape " + t->outer().str() +
                                        " does not fit in the rectangle");
    }
    if (t_lambda.size() + t_mu.size() + t_nu.size() != rect.cells()) return std::nullopt;

    PartialCarton pc;
    pc.geo = CartonGeometry{rect, t_lambda.size(), t_mu.size(), t_nu.size()};
    pc.t_lambda = t_lambda;
    pc.t_mu = t_mu;
    pc.t_nu = t_nu;
    pc.tilde_lambda = tilde(t_lambda, rect);
    pc.tilde_mu = tilde(t_mu, rect);
    pc.tilde_nu = tilde(t_nu, rect);

    const int a = pc.geo.a, b = pc.geo.b, c = pc.geo.c;
    auto put_chain = [&pc](SurfaceVertex start, int axis, const ShapeChain& chain) {
        for (int v = 0; v < chain.length(); ++v) {
            SurfaceVertex p = start;
            p[axis] += v;
            pc.labels[p] = chain.steps[v];
        }
    };
    put_chain({0, 0, 0}, 0, tableau_to_chain(t_lambda));
    put_chain({0, 0, 0}, 1, tableau_to_chain(t_mu));
    put_chain({0, 0, 0}, 2, tableau_to_chain(t_nu));
    put_chain({0, b, c}, 0, tableau_to_chain(pc.tilde_lambda));
    put_chain({a, 0, c}, 1, tableau_to_chain(pc.tilde_mu));
    put_chain({a, b, 0}, 2, tableau_to_chain(pc.tilde_nu));
    return pc;
}

namespace {

// Write a grown face into the vertex map, asserting agreement wherever a
// label already exists.
void merge_face(std::map<SurfaceVertex, Partition>& labels, const CartonGeometry& geo, Face f,
                const GrowthGrid& grid) {
    for (int i = 0; i <= grid.height(); ++i)
        for (int j = 0; j <= grid.width(); ++j) {
            SurfaceVertex v = face_vertex(geo, f, i, j);
            auto [it, inserted] = labels.try_emplace(v, grid.g[i][j]);
            if (!inserted && it->second != grid.g[i][j])
                throw std::logic_error("extend_witness: face " + face_name(f) +
                                       " disagrees with an existing label at (" +
                                       std::to_string(v[0]) + "," + std::to_string(v[1]) + "," +
                                       std::to_string(v[2]) + ")");
        }
}

void check_edge(const GrowthGrid& grid, bool right_column, const StandardTableau& expected,
                const std::string& face, const std::string& edge) {
    ShapeChain got = right_column ? grid.right_column() : grid.bottom_row();
    if (got != tableau_to_chain(expected))
        throw std::logic_error("extend_witness: face " + face + ", edge " + edge +
                               " does not carry the expected tableau");
}

}  // namespace

Carton extend_witness(const PartialCarton& init, const StandardTableau& witness) {
    const Rectangle& rect = init.geo.rect;
    Partition nu_vee = complement(init.t_nu.outer(), rect);
    if (witness.inner() != init.t_lambda.outer() || witness.outer() != nu_vee)
        throw std::invalid_argument("extend_witness: witness must have shape nuVee/lambda");
    if (rectification(witness) != init.t_mu)
        throw std::invalid_argument("extend_witness: witness does not rectify to t_mu");

    auto labels = init.labels;
    const CartonGeometry& geo = init.geo;
    ShapeChain w = tableau_to_chain(witness);

    // Face order and consistency checks follow the uniqueness proof.
    GrowthGrid z0 = grow_rectangle(tableau_to_chain(init.t_lambda), w);
    check_edge(z0, false, init.t_mu, face_name(Face::Z0), "empty-mu");
    merge_face(labels, geo, Face::Z0, z0);
    StandardTableau t_nuvee_mu = chain_to_tableau(z0.right_column());

    GrowthGrid xa = grow_rectangle(w, tableau_to_chain(init.tilde_nu));
    check_edge(xa, true, init.tilde_mu, face_name(Face::Xa), "muVee-Lambda");
    merge_face(labels, geo, Face::Xa, xa);
    StandardTableau t_muvee_lambda = chain_to_tableau(xa.bottom_row());

    GrowthGrid y0 =
        grow_rectangle(tableau_to_chain(init.t_lambda), tableau_to_chain(t_muvee_lambda));
    check_edge(y0, false, init.t_nu, face_name(Face::Y0), "empty-nu");
    merge_face(labels, geo, Face::Y0, y0);
    StandardTableau t_muvee_nu = chain_to_tableau(y0.right_column());

    GrowthGrid zc = grow_rectangle(tableau_to_chain(t_muvee_nu), tableau_to_chain(init.tilde_mu));
    check_edge(zc, true, init.tilde_lambda, face_name(Face::Zc), "lambdaVee-Lambda");
    merge_face(labels, geo, Face::Zc, zc);
    StandardTableau t_lambdavee_nu = chain_to_tableau(zc.bottom_row());

    GrowthGrid yb = grow_rectangle(tableau_to_chain(t_nuvee_mu), tableau_to_chain(init.tilde_nu));
    check_edge(yb, true, init.tilde_lambda, face_name(Face::Yb), "lambdaVee-Lambda");
    merge_face(labels, geo, Face::Yb, yb);
    StandardTableau t_lambdavee_mu = chain_to_tableau(yb.bottom_row());

    GrowthGrid x0 =
        grow_rectangle(tableau_to_chain(init.t_nu), tableau_to_chain(t_lambdavee_nu));
    check_edge(x0, false, init.t_mu, face_name(Face::X0), "empty-mu");
    check_edge(x0, true, t_lambdavee_mu, face_name(Face::X0), "mu-lambdaVee");
    merge_face(labels, geo, Face::X0, x0);

    return Carton(geo, std::move(labels), init.t_lambda, init.t_mu, init.t_nu);
}

std::vector<Witness> find_witnesses(const PartialCarton& init) {
    std::vector<Witness> out;
    Partition nu_vee = complement(init.t_nu.outer(), init.geo.rect);
    if (!contains(init.t_lambda.outer(), nu_vee)) return out;
    for (StandardTableau& w : all_syt(SkewShape(nu_vee, init.t_lambda.outer())))
        if (rectification(w) == init.t_mu) out.push_back(Witness{std::move(w)});
    return out;
}

Carton extend_witness(const PartialCarton& init, const Witness& witness) {
    return extend_witness(init, witness.tableau);
}

std::vector<Carton> enumerate_cartons(const Rectangle& rect, const StandardTableau& t_lambda,
                                      const StandardTableau& t_mu, const StandardTableau& t_nu) {
    std::vector<Carton> out;
    auto init = carton_init(rect, t_lambda, t_mu, t_nu);
    if (!init) return out;
    for (const Witness& w : find_witnesses(*init)) out.push_back(extend_witness(*init, w));
    return out;
}

std::vector<Carton> enumerate_cartons(const Rectangle& rect, const Partition& lambda,
                                      const Partition& mu, const Partition& nu) {
    return enumerate_cartons(rect, canonical_tableau(lambda), canonical_tableau(mu),
                             canonical_tableau(nu));
}

namespace {

// Constraint-propagation enumerator over the surface squares.
struct GenericSearch {
    CartonGeometry geo;
    Rectangle rect;
    std::vector<SurfaceVertex> verts;
    std::map<SurfaceVertex, int> index;
    // squares as vertex indices (v00, v10, v01, v11) in face-local axes
    std::vector<std::array<int, 4>> squares;
    std::vector<std::vector<int>> vert_squares;  // vertex -> squares touching it
    const PartialCarton* init = nullptr;
    std::vector<Carton>* out = nullptr;

    void build() {
        for (Face f : all_faces) {
            auto [mi, mj] = face_dims(geo, f);
            for (int i = 0; i <= mi; ++i)
                for (int j = 0; j <= mj; ++j) {
                    SurfaceVertex v = face_vertex(geo, f, i, j);
                    if (index.emplace(v, static_cast<int>(verts.size())).second)
                        verts.push_back(v);
                }
            for (int i = 0; i < mi; ++i)
                for (int j = 0; j < mj; ++j)
                    squares.push_back({index.at(face_vertex(geo, f, i, j)),
                                       index.at(face_vertex(geo, f, i + 1, j)),
                                       index.at(face_vertex(geo, f, i, j + 1)),
                                       index.at(face_vertex(geo, f, i + 1, j + 1))});
        }
        vert_squares.assign(verts.size(), {});
        for (size_t s = 0; s < squares.size(); ++s)
            for (int k = 0; k < 4; ++k) vert_squares[squares[s][k]].push_back(static_cast<int>(s));
    }

    using State = std::vector<std::optional<Partition>>;

    bool assign(State& st, int vi, const Partition& p) {
        if (!fits(p, rect)) return false;
        const SurfaceVertex& v = verts[vi];
        if (p.size() != v[0] + v[1] + v[2]) return false;
        if (st[vi]) return *st[vi] == p;
        st[vi] = p;
        return true;
    }

    // Propagate one square; returns false on contradiction. forced=true when
    // an assignment happened. Squares with several completions feed the
    // branch bookkeeping instead.
    bool step(State& st, int s, bool& forced, int& branch_vertex,
              std::vector<Partition>& branch_cands) {
        auto& q = squares[s];
        const auto& p00 = st[q[0]];
        const auto& p10 = st[q[1]];
        const auto& p01 = st[q[2]];
        const auto& p11 = st[q[3]];
        int known = static_cast<int>(bool(p00)) + bool(p10) + bool(p01) + bool(p11);
        if (known < 3) return true;
        if (known == 4) {
            if (!covers(*p10, *p00) || !covers(*p01, *p00) || !covers(*p11, *p10) ||
                !covers(*p11, *p01))
                return false;
            return local_rule_forward(*p00, *p10, *p11) == *p01;
        }
        if (!p11) {
            if (!covers(*p10, *p00) || !covers(*p01, *p00)) return false;
            std::vector<Partition> cands;
            if (*p10 != *p01) {
                // join of the two distinct covers is the only completion
                std::vector<int> parts;
                int rows = std::max(p10->rows(), p01->rows());
                for (int r = 1; r <= rows; ++r)
                    parts.push_back(std::max(p10->part(r), p01->part(r)));
                Partition join(std::move(parts));
                if (covers(join, *p10) && covers(join, *p01)) cands.push_back(join);
            } else {
                // equal mid corners: beta = mid + x with x addable to mid but
                // not to the bottom corner, which confines x to the two boxes
                // right of and below the box the mids added
                Box added = *box_added(*p00, *p10);
                for (Box x : {Box{added.row, added.col + 1}, Box{added.row + 1, added.col}})
                    if (is_addable(*p10, x) && !is_addable(*p00, x))
                        cands.push_back(add_box(*p10, x));
            }
            return settle(st, q[3], cands, forced, branch_vertex, branch_cands);
        }
        if (!p00) {
            if (!covers(*p11, *p10) || !covers(*p11, *p01)) return false;
            auto cands = local_rule_inverse_candidates(*p10, *p11, *p01);
            return settle(st, q[0], cands, forced, branch_vertex, branch_cands);
        }
        // one mid corner missing: deterministic by the alpha/delta symmetry
        int missing = !p10 ? q[1] : q[2];
        const Partition& other = !p10 ? *p01 : *p10;
        if (!covers(other, *p00) || !covers(*p11, other)) return false;
        Partition val = local_rule_forward(*p00, other, *p11);
        if (!assign(st, missing, val)) return false;
        forced = true;
        return true;
    }

    bool settle(State& st, int vi, std::vector<Partition>& cands, bool& forced, int& branch_vertex,
                std::vector<Partition>& branch_cands) {
        std::erase_if(cands, [&](const Partition& p) {
            return !fits(p, rect) ||
                   p.size() != verts[vi][0] + verts[vi][1] + verts[vi][2];
        });
        if (cands.empty()) return false;
        if (cands.size() == 1) {
            if (!assign(st, vi, cands.front())) return false;
            forced = true;
            return true;
        }
        if (branch_vertex < 0 || cands.size() < branch_cands.size()) {
            branch_vertex = vi;
            branch_cands = cands;
        }
        return true;
    }

    void search(State st) {
        // propagate to fixpoint
        for (;;) {
            bool forced = false;
            int branch_vertex = -1;
            std::vector<Partition> branch_cands;
            for (size_t s = 0; s < squares.size(); ++s) {
                if (!step(st, static_cast<int>(s), forced, branch_vertex, branch_cands))
                    return;
            }
            if (forced) continue;
            size_t unknown = 0;
            for (const auto& v : st)
                if (!v) ++unknown;
            if (unknown == 0) {
                emit(st);
                return;
            }
            if (branch_vertex < 0) {
                // fall back: branch on a frontier vertex by cover extensions
                pick_frontier(st, branch_vertex, branch_cands);
                if (branch_vertex < 0) return;  // disconnected: no progress possible
            }
            for (const Partition& p : branch_cands) {
                State next = st;
                if (assign(next, branch_vertex, p)) search(std::move(next));
            }
            return;
        }
    }

    void pick_frontier(const State& st, int& branch_vertex, std::vector<Partition>& cands) {
        for (size_t vi = 0; vi < verts.size(); ++vi) {
            if (st[vi]) continue;
            // look for a known neighbor one box below along some square edge
            for (int s : vert_squares[vi]) {
                auto& q = squares[s];
                for (auto [lo, hi] : {std::pair{q[0], q[1]}, std::pair{q[0], q[2]},
                                      std::pair{q[1], q[3]}, std::pair{q[2], q[3]}}) {
                    if (hi == static_cast<int>(vi) && st[lo]) {
                        std::vector<Partition> c;
                        for (Box b : addable_boxes(*st[lo], rect)) c.push_back(add_box(*st[lo], b));
                        if (branch_vertex < 0 || c.size() < cands.size()) {
                            branch_vertex = static_cast<int>(vi);
                            cands = std::move(c);
                        }
                    }
                }
            }
        }
    }

    void emit(const State& st) {
        std::map<SurfaceVertex, Partition> labels;
        for (size_t vi = 0; vi < verts.size(); ++vi) labels[verts[vi]] = *st[vi];
        Carton carton(geo, std::move(labels), init->t_lambda, init->t_mu, init->t_nu);
        if (validate_carton(carton).ok) out->push_back(std::move(carton));
    }
};

}  // namespace

std::vector<Carton> enumerate_cartons_generic(const Rectangle& rect,
                                              const StandardTableau& t_lambda,
                                              const StandardTableau& t_mu,
                                              const StandardTableau& t_nu) {
    std::vector<Carton> out;
    auto init = carton_init(rect, t_lambda, t_mu, t_nu);
    if (!init) return out;

    GenericSearch gs;
    gs.geo = init->geo;
    gs.rect = rect;
    gs.init = &*init;
    gs.out = &out;
    gs.build();

    GenericSearch::State st(gs.verts.size());
    for (const auto& [v, p] : init->labels) {
        if (!gs.assign(st, gs.index.at(v), p)) return out;
    }
    gs.search(std::move(st));
    return out;
}

ValidationReport validate_carton(const Carton& carton) {
    const CartonGeometry& geo = carton.geometry();
    const Rectangle& rect = geo.rect;
    auto fail = [](std::string msg) { return ValidationReport{false, std::move(msg)}; };

    if (geo.a + geo.b + geo.c != rect.cells())
        return fail("size condition |lambda|+|mu|+|nu| = rows*cols violated");

    // corners
    const Partition lambda = carton.t_lambda().outer();
    const Partition mu = carton.t_mu().outer();
    const Partition nu = carton.t_nu().outer();
    struct CornerCheck {
        SurfaceVertex v;
        Partition expect;
        const char* name;
    };
    const std::vector<CornerCheck> corners = {
        {{0, 0, 0}, Partition{}, "empty"},
        {{geo.a, 0, 0}, lambda, "lambda"},
        {{0, geo.b, 0}, mu, "mu"},
        {{0, 0, geo.c}, nu, "nu"},
        {{geo.a, geo.b, 0}, complement(nu, rect), "nuVee"},
        {{geo.a, 0, geo.c}, complement(mu, rect), "muVee"},
        {{0, geo.b, geo.c}, complement(lambda, rect), "lambdaVee"},
        {{geo.a, geo.b, geo.c}, full_partition(rect), "Lambda"},
    };
    for (const auto& cc : corners) {
        try {
            if (carton.label(cc.v) != cc.expect)
                return fail(std::string("corner ") + cc.name + " mislabeled");
        } catch (const std::exception&) {
            return fail(std::string("corner ") + cc.name + " missing");
        }
    }

    // initialized and derived edges
    struct EdgeCheck {
        SurfaceVertex from, to;
        StandardTableau expect;
        const char* name;
    };
    const std::vector<EdgeCheck> edges = {
        {{0, 0, 0}, {geo.a, 0, 0}, carton.t_lambda(), "empty-lambda"},
        {{0, 0, 0}, {0, geo.b, 0}, carton.t_mu(), "empty-mu"},
        {{0, 0, 0}, {0, 0, geo.c}, carton.t_nu(), "empty-nu"},
        {{0, geo.b, geo.c}, {geo.a, geo.b, geo.c}, tilde(carton.t_lambda(), rect),
         "lambdaVee-Lambda"},
        {{geo.a, 0, geo.c}, {geo.a, geo.b, geo.c}, tilde(carton.t_mu(), rect), "muVee-Lambda"},
        {{geo.a, geo.b, 0}, {geo.a, geo.b, geo.c}, tilde(carton.t_nu(), rect), "nuVee-Lambda"},
    };
    for (const auto& ec : edges) {
        try {
            if (carton.edge_chain(ec.from, ec.to) != tableau_to_chain(ec.expect))
                return fail(std::string("edge ") + ec.name + " mislabeled");
        } catch (const std::exception& e) {
            return fail(std::string("edge ") + ec.name + ": " + e.what());
        }
    }

    // vertex sizes, fit, covers and the local rule on every face square
    for (Face f : all_faces) {
        auto [mi, mj] = face_dims(geo, f);
        std::vector<std::vector<Partition>> grid;
        try {
            grid = carton.face_grid(f);
        } catch (const std::exception& e) {
            return fail("face " + face_name(f) + ": " + e.what());
        }
        for (int i = 0; i <= mi; ++i)
            for (int j = 0; j <= mj; ++j) {
                SurfaceVertex v = face_vertex(geo, f, i, j);
                if (grid[i][j].size() != v[0] + v[1] + v[2])
                    return fail("face " + face_name(f) + ": wrong size at grid (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
                if (!fits(grid[i][j], rect))
                    return fail("face " + face_name(f) + ": label does not fit rectangle");
            }
        for (int i = 0; i < mi; ++i)
            for (int j = 0; j < mj; ++j) {
                if (!covers(grid[i + 1][j], grid[i][j]) || !covers(grid[i][j + 1], grid[i][j]) ||
                    !covers(grid[i + 1][j + 1], grid[i + 1][j]) ||
                    !covers(grid[i + 1][j + 1], grid[i][j + 1]))
                    return fail("face " + face_name(f) + ": cover relation broken at square (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
                if (local_rule_forward(grid[i][j], grid[i + 1][j], grid[i + 1][j + 1]) !=
                    grid[i][j + 1])
                    return fail("face " + face_name(f) + ": local rule broken at square (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
            }
    }
    return ValidationReport{};
}

Carton permute_carton(const Carton& carton, const RolePerm& perm) {
    {
        RolePerm sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != RolePerm{0, 1, 2})
            throw std::invalid_argument("permute_carton: not a permutation of {0,1,2}");
    }
    auto report = validate_carton(carton);
    if (!report.ok)
        throw std::invalid_argument("permute_carton: invalid input carton: " + report.violation);

    const CartonGeometry& geo = carton.geometry();
    std::array<int, 3> lens = {geo.a, geo.b, geo.c};
    CartonGeometry ngeo{geo.rect, lens[perm[0]], lens[perm[1]], lens[perm[2]]};

    std::map<SurfaceVertex, Partition> labels;
    for (const auto& [v, p] : carton.labels()) {
        SurfaceVertex nv;
        for (int d = 0; d < 3; ++d) nv[d] = v[perm[d]];
        labels[nv] = p;
    }
    std::array<const StandardTableau*, 3> ts = {&carton.t_lambda(), &carton.t_mu(),
                                                &carton.t_nu()};
    return Carton(ngeo, std::move(labels), *ts[perm[0]], *ts[perm[1]], *ts[perm[2]]);
}

long long carton_count(const Rectangle& rect, const StandardTableau& t_lambda,
                       const StandardTableau& t_mu, const StandardTableau& t_nu) {
    return static_cast<long long>(enumerate_cartons(rect, t_lambda, t_mu, t_nu).size());
}

long long carton_count(const Rectangle& rect, const Partition& lambda, const Partition& mu,
                       const Partition& nu) {
    for (const Partition* p : {&lambda, &mu, &nu})
        if (!fits(*p, rect))
            throw std::invalid_argument("carton_count: " + p->str() +
                                        " does not fit in the rectangle");
    if (lambda.size() + mu.size() + nu.size() != rect.cells()) return 0;
    return carton_count(rect, canonical_tableau(lambda), canonical_tableau(mu),
                        canonical_tableau(nu));
}

}  // namespace lrcarton
