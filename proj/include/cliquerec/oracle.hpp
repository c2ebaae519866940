#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cliquerec/graphs.hpp"
#include "cliquerec/protocols.hpp"

namespace cliquerec {

// Outcome of one verification sweep. For probabilistic claims the pass rule
// allows the guaranteed bound plus a 99% binomial slack so a correct
// implementation fails spuriously at most 1% of the time; deterministic
// claims carry bound 0 and radius 0, so any failure fails the report.
struct TrialReport {
    std::string claim;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    double bound = 0.0;
    double confidence_radius = 0.0;
    bool exhaustive = true;
    std::uint64_t seed = 0;      // replay seed for sampled sweeps; 0 when exhaustive
    std::int64_t observed = 0;   // claim-specific extreme (max collisions, min distance, ...)

    double empirical_rate() const {
        return trials == 0 ? 0.0 : static_cast<double>(failures) / static_cast<double>(trials);
    }
    bool pass() const { return empirical_rate() <= bound + confidence_radius; }

    nlohmann::json to_json() const;
};

// (m / trials) - bound where m is the 99% quantile of Bin(trials, bound):
// the least integer failure count a true rate of exactly `bound` stays
// under with probability 0.99. Exact integer threshold, log-space tails.
double binomial_quantile_radius(std::uint64_t trials, double bound);

// Power-accumulation polynomial evaluation: deliberately a different route
// than the Horner form used by the protocol stack.
std::uint64_t poly_eval_powersum(std::span<const std::uint64_t> a, std::uint64_t t,
                                 std::uint64_t p);

// Root-count bound on fingerprint collisions: over pairs of distinct 0/1
// vectors of length n, the number of points t in F_p where fingerprints
// agree is at most n. Exhaustive over all pairs when samples == 0, sampled
// otherwise. Cross-checks the library collision counter against the
// independent evaluator.
TrialReport verify_lemma1(int n, std::uint64_t p, std::uint64_t samples = 0);

// Minimum-distance check of the code: all pairs of distinct bit-vectors
// differ in >= k codeword positions; for n <= 4 additionally every pair of
// distinct graphs has coded row distance > k.
std::vector<TrialReport> verify_code_distance(int n, int k);

// Sweeps a protocol against enumeration ground truth. Deterministic
// protocols run once per graph with zero tolerance; randomized ones run
// `seeds` trials per graph against the 1/n bound. Every run also checks
// measured per-round bandwidth against the closed form and, for successful
// deterministic runs, the information lower bound.
std::vector<TrialReport> verify_protocol(const GraphClass& cls, int n, std::string_view protocol_id,
                                         std::uint64_t seeds, std::uint64_t base_seed = 1);

// Re-verifies a separator with the independent evaluator, pair by pair.
bool verify_separator_independent(const SeparatorT& sep, const GraphClass& cls, int n);

// Counting bound behind the hereditary one-round analysis: members at row
// distance exactly k from any member are at most C(n,k) * |G_k|.
TrialReport verify_hereditary_counting(const GraphClass& cls, int n_max);

}  // namespace cliquerec
