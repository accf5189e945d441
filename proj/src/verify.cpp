#include "lrcarton/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "lrcarton/json_io.hpp"

namespace lrcarton::verify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string triple_str(const Partition& l, const Partition& m, const Partition& n) {
    return l.str() + "," + m.str() + "," + n.str();
}

std::string carton_key(const Carton& carton) {
    return carton_to_json(carton).dump();
}

std::vector<std::array<Partition, 3>> triples_in(const Rectangle& rect, int max_size) {
    std::vector<std::array<Partition, 3>> out;
    auto parts = partitions_in(rect);
    if (max_size >= 0)
        std::erase_if(parts, [&](const Partition& p) { return p.size() > max_size; });
    for (const auto& l : parts)
        for (const auto& m : parts)
            for (const auto& n : parts) out.push_back({l, m, n});
    return out;
}

constexpr std::array<RolePerm, 6> all_role_perms = {
    RolePerm{0, 1, 2}, RolePerm{0, 2, 1}, RolePerm{1, 0, 2},
    RolePerm{1, 2, 0}, RolePerm{2, 0, 1}, RolePerm{2, 1, 0}};

}  // namespace

std::vector<TripleResult> oracle_sweep(const Rectangle& rect, int max_size, int threads) {
    auto triples = triples_in(rect, max_size);
    std::vector<TripleResult> results(triples.size());
    auto work = [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) {
            const auto& [l, m, n] = triples[i];
            TripleResult r;
            r.lambda = l;
            r.mu = m;
            r.nu = n;
            r.carton = carton_count(rect, l, m, n);
            Partition nu_vee = complement(n, rect);
            r.ballot = contains(l, nu_vee) ? lr_ballot_count(l, m, nu_vee) : 0;
            r.rectification = lr_via_rectification(rect, l, m, n);
            results[i] = std::move(r);
        }
    };
    int nthreads = std::max(1, threads);
    if (nthreads == 1) {
        work(0, triples.size());
    } else {
        std::vector<std::thread> pool;
        size_t chunk = (triples.size() + nthreads - 1) / nthreads;
        for (int t = 0; t < nthreads; ++t) {
            size_t begin = t * chunk;
            size_t end = std::min(triples.size(), begin + chunk);
            if (begin < end) pool.emplace_back(work, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    return results;
}

bool s3_count_sweep(const Rectangle& rect, std::ostream& log) {
    auto parts = partitions_in(rect);
    std::map<std::array<std::vector<int>, 3>, long long> counts;
    for (const auto& l : parts)
        for (const auto& m : parts)
            for (const auto& n : parts)
                counts[{l.parts(), m.parts(), n.parts()}] = carton_count(rect, l, m, n);
    bool ok = true;
    for (const auto& [key, value] : counts) {
        const std::array<std::vector<int>, 3>& k = key;
        for (const RolePerm& perm : all_role_perms) {
            std::array<std::vector<int>, 3> pk = {k[perm[0]], k[perm[1]], k[perm[2]]};
            if (counts.at(pk) != value) {
                log << "  S3 violation at (" << Partition(k[0]).str() << ","
                    << Partition(k[1]).str() << "," << Partition(k[2]).str() << ")\n";
                ok = false;
            }
        }
    }
    return ok;
}

bool s3_bijection_sweep(const Rectangle& rect, std::ostream& log) {
    auto parts = partitions_in(rect);
    bool ok = true;
    for (const auto& l : parts)
        for (const auto& m : parts)
            for (const auto& n : parts) {
                if (l.size() + m.size() + n.size() != rect.cells()) continue;
                auto cartons = enumerate_cartons(rect, l, m, n);
                if (cartons.empty()) continue;
                std::array<const Partition*, 3> roles = {&l, &m, &n};
                for (const RolePerm& perm : all_role_perms) {
                    auto target = enumerate_cartons(rect, *roles[perm[0]], *roles[perm[1]],
                                                    *roles[perm[2]]);
                    std::vector<std::string> image_keys, target_keys;
                    for (const Carton& carton : cartons) {
                        Carton img = permute_carton(carton, perm);
                        auto report = validate_carton(img);
                        if (!report.ok) {
                            log << "  invalid permuted carton at " << triple_str(l, m, n) << ": "
                                << report.violation << "\n";
                            ok = false;
                        }
                        // round trip through the inverse permutation
                        RolePerm inv;
                        for (int d = 0; d < 3; ++d) inv[perm[d]] = d;
                        if (!(permute_carton(img, inv) == carton)) {
                            log << "  permutation not invertible at " << triple_str(l, m, n)
                                << "\n";
                            ok = false;
                        }
                        image_keys.push_back(carton_key(img));
                    }
                    for (const Carton& carton : target) target_keys.push_back(carton_key(carton));
                    std::sort(image_keys.begin(), image_keys.end());
                    std::sort(target_keys.begin(), target_keys.end());
                    if (image_keys != target_keys) {
                        log << "  bijection mismatch at " << triple_str(l, m, n) << "\n";
                        ok = false;
                    }
                }
            }
    return ok;
}

bool generic_agreement_sweep(const Rectangle& rect, std::ostream& log) {
    auto parts = partitions_in(rect);
    bool ok = true;
    for (const auto& l : parts)
        for (const auto& m : parts)
            for (const auto& n : parts) {
                StandardTableau tl = canonical_tableau(l);
                StandardTableau tm = canonical_tableau(m);
                StandardTableau tn = canonical_tableau(n);
                std::vector<std::string> a, b;
                for (const Carton& carton : enumerate_cartons(rect, tl, tm, tn))
                    a.push_back(carton_key(carton));
                for (const Carton& carton : enumerate_cartons_generic(rect, tl, tm, tn))
                    b.push_back(carton_key(carton));
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                if (a != b) {
                    log << "  enumerator disagreement at " << triple_str(l, m, n) << " ("
                        << a.size() << " vs " << b.size() << ")\n";
                    ok = false;
                }
            }
    return ok;
}

bool suite_infusion_involution(std::ostream& log) {
    const Rectangle rect{3, 4};
    auto parts = partitions_in(rect);
    long long cases = 0;
    for (const auto& rho : parts)
        for (const auto& sigma : parts) {
            if (!contains(rho, sigma)) continue;
            for (const auto& tau : parts) {
                if (!contains(sigma, tau)) continue;
                if (tau.size() - rho.size() > 7) continue;
                for (const auto& u : all_syt(SkewShape(sigma, rho)))
                    for (const auto& t : all_syt(SkewShape(tau, sigma))) {
                        auto [a, b] = infusion(u, t);
                        auto [u2, t2] = infusion(a, b);
                        if (u2 != u || t2 != t) {
                            log << "  infusion involution fails on " << SkewShape(sigma, rho).str()
                                << " / " << SkewShape(tau, sigma).str() << "\n";
                            return false;
                        }
                        ++cases;
                    }
            }
        }
    log << "  infusion involution: " << cases << " pairs\n";
    return true;
}

namespace {

void partitions_of_size(int n, int maxpart, std::vector<int>& cur,
                        std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(cur));
        return;
    }
    for (int v = std::min(n, maxpart); v >= 1; --v) {
        cur.push_back(v);
        partitions_of_size(n - v, v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

bool suite_evac_involution(std::ostream& log) {
    long long cases = 0;
    for (int n = 0; n <= 7; ++n) {
        std::vector<Partition> shapes;
        std::vector<int> cur;
        partitions_of_size(n, n == 0 ? 1 : n, cur, shapes);
        if (n == 0) shapes = {Partition{}};
        for (const auto& shape : shapes)
            for (const auto& t : all_syt(SkewShape(shape, Partition{}))) {
                if (evacuation(evacuation(t)) != t) {
                    log << "  evac involution fails on " << shape.str() << "\n";
                    return false;
                }
                ++cases;
            }
    }
    log << "  evac involution: " << cases << " tableaux\n";
    return true;
}

bool suite_reverse_evac_involution(std::ostream& log) {
    const Rectangle rect{3, 4};
    Partition full = full_partition(rect);
    long long cases = 0;
    for (const auto& pi : partitions_in(rect)) {
        if (rect.cells() - pi.size() > 7) continue;
        for (const auto& t : all_syt(SkewShape(full, pi))) {
            if (reverse_evacuation(reverse_evacuation(t, rect), rect) != t) {
                log << "  reverse evac involution fails on " << SkewShape(full, pi).str() << "\n";
                return false;
            }
            // agreement with the conjugated forward map
            StandardTableau conj =
                rotate_complement(evacuation(rotate_complement(t, rect)), rect);
            if (reverse_evacuation(t, rect) != conj) {
                log << "  reverse evac does not match conjugated evac on "
                    << SkewShape(full, pi).str() << "\n";
                return false;
            }
            ++cases;
        }
    }
    log << "  reverse evac involution: " << cases << " tableaux\n";
    return true;
}

bool suite_tilde_lemma(std::ostream& log) {
    long long cases = 0;
    for (Rectangle rect : {Rectangle{2, 3}, Rectangle{3, 3}, Rectangle{3, 4}}) {
        for (const auto& beta : partitions_in(rect))
            for (const auto& t : all_syt(SkewShape(beta, Partition{}))) {
                if (revrectification(t, rect) != tilde(t, rect)) {
                    log << "  revrectification != tilde for " << beta.str() << " in "
                        << rect.rows << "x" << rect.cols << "\n";
                    return false;
                }
                ++cases;
            }
        // full form: any skew tableau reverse-rectifies to the tilde of its
        // rectification
        for (const auto& lam : partitions_in(rect))
            for (const auto& nu : partitions_in(rect)) {
                Partition nu_vee = complement(nu, rect);
                if (!contains(lam, nu_vee)) continue;
                for (const auto& w : all_syt(SkewShape(nu_vee, lam))) {
                    if (revrectification(w, rect) != tilde(rectification(w), rect)) {
                        log << "  lemma full form fails on " << SkewShape(nu_vee, lam).str()
                            << " in " << rect.rows << "x" << rect.cols << "\n";
                        return false;
                    }
                    ++cases;
                }
            }
    }
    log << "  tilde lemma: " << cases << " tableaux\n";
    return true;
}

namespace {

LayeredTableau layered_from_chain(const Rectangle& rect, const ShapeChain& chain, int s, int t) {
    auto sub = [&](int from, int to) {
        std::vector<Partition> steps(chain.steps.begin() + from, chain.steps.begin() + to + 1);
        return chain_to_tableau(ShapeChain(std::move(steps)));
    };
    int n = chain.length() - 1;
    return concat_layered(sub(0, s), sub(s, t), sub(t, n), rect);
}

bool braid_holds(const LayeredTableau& l, std::ostream& log) {
    LayeredTableau lhs = apply_i1(apply_i2(apply_i1(l)));
    LayeredTableau rhs = apply_i2(apply_i1(apply_i2(l)));
    if (!(lhs == rhs)) {
        log << "  braid identity fails\n";
        return false;
    }
    // endpoint structure: the outer layers are the tilde transports of c and a
    if (lhs.c != tilde(l.a, l.rect)) {
        log << "  braid endpoint (third layer) is not tilde(A)\n";
        return false;
    }
    if (lhs.a != rotate_complement(reverse_evacuation(l.c, l.rect), l.rect)) {
        log << "  braid endpoint (first layer) is not the tilde transport of C\n";
        return false;
    }
    return true;
}

}  // namespace

bool suite_braid(std::uint64_t seed, std::ostream& log) {
    // exhaustive over the 3x3 rectangle
    {
        const Rectangle rect{3, 3};
        long long cases = 0;
        for (const auto& t : all_syt(SkewShape(full_partition(rect), Partition{}))) {
            ShapeChain chain = tableau_to_chain(t);
            int n = chain.length() - 1;
            for (int s = 0; s <= n; ++s)
                for (int u = s; u <= n; ++u) {
                    if (!braid_holds(layered_from_chain(rect, chain, s, u), log)) return false;
                    ++cases;
                }
        }
        log << "  braid identity: " << cases << " layered tableaux in 3x3\n";
    }
    // seeded random sample in 3x4
    {
        const Rectangle rect{3, 4};
        std::mt19937_64 rng(seed);
        const int samples = 1000;
        for (int i = 0; i < samples; ++i) {
            std::vector<Partition> steps = {Partition{}};
            Partition cur;
            while (cur != full_partition(rect)) {
                auto boxes = addable_boxes(cur, rect);
                cur = add_box(cur, boxes[rng() % boxes.size()]);
                steps.push_back(cur);
            }
            ShapeChain chain(steps);
            int n = chain.length() - 1;
            int s = static_cast<int>(rng() % (n + 1));
            int u = s + static_cast<int>(rng() % (n - s + 1));
            if (!braid_holds(layered_from_chain(rect, chain, s, u), log)) return false;
        }
        log << "  braid identity: " << samples << " random layered tableaux in 3x4\n";
    }
    return true;
}

bool suite_local_rule_symmetry(std::ostream& log) {
    const Rectangle rect{3, 4};
    long long cases = 0;
    for (const auto& gamma : partitions_in(rect))
        for (Box b1 : addable_boxes(gamma, rect)) {
            Partition alpha = add_box(gamma, b1);
            for (Box b2 : addable_boxes(alpha, rect)) {
                Partition beta = add_box(alpha, b2);
                Partition delta = local_rule_forward(gamma, alpha, beta);
                if (local_rule_forward(gamma, delta, beta) != alpha) {
                    log << "  local rule not symmetric at gamma=" << gamma.str() << "\n";
                    return false;
                }
                ++cases;
            }
        }
    log << "  local rule symmetry: " << cases << " squares\n";
    return true;
}

bool suite_choice_independence(std::ostream& log) {
    for (Rectangle rect : {Rectangle{2, 3}, Rectangle{3, 3}}) {
        auto parts = partitions_in(rect);
        for (const auto& l : parts)
            for (const auto& m : parts)
                for (const auto& n : parts) {
                    if (l.size() + m.size() + n.size() != rect.cells()) {
                        if (carton_count(rect, l, m, n) != 0) {
                            log << "  nonzero count despite size mismatch at "
                                << triple_str(l, m, n) << "\n";
                            return false;
                        }
                        continue;
                    }
                    long long expected = -1;
                    for (const auto& tl : all_syt(SkewShape(l, Partition{})))
                        for (const auto& tm : all_syt(SkewShape(m, Partition{})))
                            for (const auto& tn : all_syt(SkewShape(n, Partition{}))) {
                                long long got = carton_count(rect, tl, tm, tn);
                                if (expected < 0) expected = got;
                                if (got != expected) {
                                    log << "  count depends on tableau choice at "
                                        << triple_str(l, m, n) << "\n";
                                    return false;
                                }
                            }
                }
    }
    log << "  choice independence: 2x3 and 3x3 sweeps\n";
    return true;
}

bool run_selftest(std::uint64_t seed, std::ostream& log) {
    log << "selftest seed: " << seed << "\n";
    struct Suite {
        const char* name;
        std::function<bool(std::ostream&)> run;
    };
    const std::vector<Suite> suites = {
        {"infusion involution", [](std::ostream& l) { return suite_infusion_involution(l); }},
        {"evac involution", [](std::ostream& l) { return suite_evac_involution(l); }},
        {"reverse evac involution",
         [](std::ostream& l) { return suite_reverse_evac_involution(l); }},
        {"tilde lemma", [](std::ostream& l) { return suite_tilde_lemma(l); }},
        {"braid identity", [seed](std::ostream& l) { return suite_braid(seed, l); }},
        {"local rule symmetry", [](std::ostream& l) { return suite_local_rule_symmetry(l); }},
        {"choice independence", [](std::ostream& l) { return suite_choice_independence(l); }},
    };
    bool all = true;
    for (const auto& suite : suites) {
        auto start = Clock::now();
        bool ok = suite.run(log);
        log << (ok ? "[PASS] " : "[FAIL] ") << suite.name << " (" << seconds_since(start)
            << "s)\n";
        all = all && ok;
    }
    return all;
}

}  // namespace lrcarton::verify
