#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "opradius/catalog.hpp"
#include "opradius/matrix.hpp"
#include "opradius/radii.hpp"

namespace opradius {

enum class Structure {
    general_complex,
    real_integer,
    hermitian,
    normal,
    unitary,
    square_zero,
    accretive_dissipative
};

const char* structure_name(Structure s);

/// Description of a random matrix class. real_integer draws integer entries
/// in [int_lo, int_hi]; every other structure scales its base construction
/// by `scale` (unitary ignores it).
struct EnsembleSpec {
    int dim = 2;
    Structure structure = Structure::general_complex;
    double scale = 1.0;
    long long int_lo = -5;
    long long int_hi = 5;
};

/// Deterministic for fixed (spec, seed); the result satisfies the declared
/// structure per classify.
ComplexMatrix generate_matrix(const EnsembleSpec& spec, uint64_t seed);

struct RelationTally {
    int satisfied = 0;
    int violated = 0;
    int inconclusive = 0;
};

struct Counterexample {
    std::string relation_id;
    int trial = 0;
    int dim = 0;
    uint64_t seed = 0; // the derived per-trial seed, reported verbatim
    double slack = 0.0;
    std::string inputs_digest;
};

struct FixtureResult {
    std::string fixture_id;
    std::string quantity;
    double expected = 0.0;
    double computed = 0.0;
    bool pass = false;
};

struct SuiteReport {
    uint64_t seed = 0;
    int trials = 0;
    std::vector<int> dims;
    std::map<std::string, RelationTally> tallies;
    std::vector<Counterexample> counterexamples;
    std::vector<FixtureResult> fixtures;
    double wall_ms = 0.0;

    bool all_passed() const;
};

/// Sweep settings used for bulk property runs: coarser scans than the
/// defaults, relying on local refinement and on the Violated re-check.
SweepConfig suite_config();

/// Runs `trials` evaluations of each listed relation on ensemble inputs that
/// match its precondition (general_complex and real_integer mixed 50/50 when
/// there is none). Trial k of a relation draws all of its randomness from
/// (seed, relation_id, k). A Violated outcome is re-evaluated at doubled
/// resolution before being recorded.
SuiteReport run_property_suite(const std::vector<std::string>& relations, int trials,
                               const std::vector<int>& dims, uint64_t seed);

/// Recomputes every printed value from the worked examples; a fixture passes
/// iff |computed - printed| <= 1e-3 * max(1, |printed|).
SuiteReport run_paper_examples();

/// Deterministic JSON serialization (timing excluded so identical runs are
/// byte-identical) and a human-readable summary with the wall clock.
std::string report_json(const SuiteReport& rep);
std::string report_text(const SuiteReport& rep);

} // namespace opradius
