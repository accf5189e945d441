#pragma once

#include <cstdint>
#include <ostream>

#include "lrcarton/carton.hpp"
#include "lrcarton/lr_oracle.hpp"

namespace lrcarton::verify {

struct TripleResult {
    Partition lambda, mu, nu;
    long long carton = 0;
    long long ballot = 0;
    long long rectification = 0;

    bool ok() const { return carton == ballot && ballot == rectification; }
};

// Carton count against both classical oracles for every triple fitting in
// rect (optionally capped by per-partition size). Deterministic order; the
// thread count only distributes the work.
std::vector<TripleResult> oracle_sweep(const Rectangle& rect, int max_size, int threads);

// Count invariance under all six role permutations.
bool s3_count_sweep(const Rectangle& rect, std::ostream& log);

// permute_carton maps the enumerated set bijectively onto the permuted
// triple's enumerated set, with valid images, for every nonzero instance.
bool s3_bijection_sweep(const Rectangle& rect, std::ostream& log);

// enumerate_cartons and enumerate_cartons_generic agree as sets everywhere.
bool generic_agreement_sweep(const Rectangle& rect, std::ostream& log);

// Property suites.
bool suite_infusion_involution(std::ostream& log);
bool suite_evac_involution(std::ostream& log);
bool suite_reverse_evac_involution(std::ostream& log);
bool suite_tilde_lemma(std::ostream& log);
bool suite_braid(std::uint64_t seed, std::ostream& log);
bool suite_local_rule_symmetry(std::ostream& log);
bool suite_choice_independence(std::ostream& log);

// All suites; prints the seed and one line per suite.
bool run_selftest(std::uint64_t seed, std::ostream& log);

}  // namespace lrcarton::verify
