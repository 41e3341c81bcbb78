#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rtdg/bigint.hpp"
#include "rtdg/coloring.hpp"
#include "rtdg/isomorphism.hpp"
#include "rtdg/space.hpp"

namespace rtdg {

enum class VerifyStatus { verified, refuted, inconclusive };

std::string to_string(VerifyStatus status);

/// Outcome of one machine check. Refuted reports carry a concrete
/// counterexample in the evidence; inconclusive only ever means a resource
/// limit was hit, never an error in the claim.
struct VerificationReport {
    std::string claim;
    SpaceSpec space;
    DistanceSet distances;
    VerifyStatus status = VerifyStatus::inconclusive;
    std::string evidence;
    double seconds = 0.0;
};

struct VerifyLimits {
    std::size_t max_points = kDefaultMaxPoints;
    ColoringLimits coloring{};
    IsoLimits iso{};
    /// Exhaustive metric-axiom check when |X|^3 is at most this.
    std::uint64_t exhaustive_triple_limit = 10000000;
    std::uint64_t sample_triples = 100000;
    std::uint64_t seed = 1381126215;
    /// Largest n for which the S_n -> Z_n^n embedding host is constructed
    /// (n^n points: 5^5 = 3125).
    int embedding_max_n = 5;
};

/// Closed-form regular degree of the distance graph:
/// (q-1)·Σ q^{d_i-1} for words, Σ (d_i-1)(d_i-1)! for permutations,
/// Σ (q_{d_i}-1)·q_1···q_{d_i-1} for product tuples.
BigInt degree_formula(const SpaceSpec& spec, const DistanceSet& distances);

/// Closed-form component count: q^{n-d_k}, n!/d_k!, or the product of the
/// sizes above position d_k; the space cardinality when D is empty.
BigInt component_count_formula(const SpaceSpec& spec, const DistanceSet& distances);

/// Closed-form chromatic number: q^k, d_1···d_k, or q_{d_1}···q_{d_k}.
BigInt chromatic_formula(const SpaceSpec& spec, const DistanceSet& distances);

/// All nonempty D ⊆ dist(space), in ascending bitmask order (bit i stands
/// for distance min_distance()+i).
std::vector<DistanceSet> all_nonempty_distance_sets(const SpaceSpec& spec);

/// Builds the space's distance graph and the evaluated closed-form
/// expression, runs the isomorphism search, and re-verifies any witness
/// edge by edge.
VerificationReport verify_structure_theorem(const SpaceSpec& spec, const DistanceSet& distances,
                                            const VerifyLimits& limits = {});

/// The graph is regular of exactly the closed-form degree.
VerificationReport verify_regularity(const SpaceSpec& spec, const DistanceSet& distances,
                                     const VerifyLimits& limits = {});

/// Connected iff n ∈ D, and the component count matches the closed form.
VerificationReport verify_connectivity(const SpaceSpec& spec, const DistanceSet& distances,
                                       const VerifyLimits& limits = {});

/// Exact solver result equals the closed-form chromatic number; inconclusive
/// when the solver budget runs out with the formula still inside the bounds.
VerificationReport verify_chromatic(const SpaceSpec& spec, const DistanceSet& distances,
                                    const VerifyLimits& limits = {});

/// Distinct nonempty distance sets yield non-isomorphic components: the
/// invariant pair (component vertex count, degree) separates all pairs, with
/// a full isomorphism check on any collision.
VerificationReport verify_distinctness(const SpaceSpec& spec, const VerifyLimits& limits = {});

/// Symmetry, identity of indiscernibles and the triangle inequality;
/// exhaustive over all triples when feasible, otherwise seeded sampling.
/// Permutation spaces additionally check ω(αβ) ≤ ω(α)+ω(β).
VerificationReport verify_metric_axioms(const SpaceSpec& spec, const VerifyLimits& limits = {});

/// The word encoding α ↦ (α(1)-1, ..., α(n)-1) embeds G(S_n,D) into
/// G(Z_n^n,D): injective, RT-distance-preserving, all edges present.
VerificationReport verify_sn_embedding(int n, const DistanceSet& distances,
                                       const VerifyLimits& limits = {});

/// Per-distance-set regularity, connectivity and chromatic reports over all
/// nonempty D, plus one distinctness report for the space.
std::vector<VerificationReport> verify_corollary_suite_zq(int q, int n,
                                                          const VerifyLimits& limits = {});

/// Same as the word suite, plus one embedding report per distance set.
std::vector<VerificationReport> verify_corollary_suite_sn(int n, const VerifyLimits& limits = {});

/// Reconstructs D from the regular degree of a word-space distance graph:
/// degree/(q-1) must have base-q digits all 0 or 1; D collects the 1 digits.
/// Throws NoPreimageError otherwise.
DistanceSet recover_distance_set_zq(int q, const BigInt& degree);

/// Reconstructs D from the regular degree of a permutation-space distance
/// graph by greedily extracting the largest (t-1)(t-1)! ≤ remainder; the
/// extracted values must be distinct, ≥ 2, and sum exactly.
/// Throws NoPreimageError otherwise.
DistanceSet recover_distance_set_sn(const BigInt& degree);

/// One compact JSON object, no trailing newline, fields in the order
/// claim, space, distances, status, evidence, seconds. The seconds field is
/// 0.0 unless with_timing (byte-identical reruns by default).
std::string report_to_json_line(const VerificationReport& report, bool with_timing = false);

/// Stable order: claim, then space text, then distance values.
void sort_reports(std::vector<VerificationReport>& reports);

} // namespace rtdg
