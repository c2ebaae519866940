#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cliquerec/ecc.hpp"
#include "cliquerec/engine.hpp"
#include "cliquerec/field.hpp"
#include "cliquerec/fingerprint.hpp"
#include "cliquerec/graphs.hpp"

namespace cliquerec {

// Evaluation points over F_p whose coded fingerprints separate every pair of
// distinct class members at this n. Common knowledge: any party repeating
// the search with the same (class, n, k) obtains the same points.
struct SeparatorT {
    std::vector<FieldElem> points;  // length n + k
    CodeParams params;
    std::string class_name;
    std::uint64_t prime_p = 0;
    std::uint64_t attempts = 0;
};

// Smallest prime above (n+k) * 2^ceil(2*log2(class_size)/k). Integer-exact;
// over-approximating the fractional exponent only shrinks the failure bound.
std::uint64_t lemma2_prime(std::uint64_t class_size, int n, int k);

// Smallest prime above 3 * n^3 * 2^ceil(f(n)/n), the over-approximated
// one-round threshold for hereditary classes.
std::uint64_t theorem1_prime(const GraphClass& cls, int n);

// Smallest prime above n^2, used by the candidate-check fingerprints.
std::uint64_t check_prime(int n);

// Deterministic seed of the separator search stream.
std::uint64_t separator_seed(std::string_view class_name, int n, int k, std::uint64_t p);

// Draws candidate point vectors from the deterministic stream until one
// separates all enumerated pairs. Throws SeparatorSearchFailure after
// 10 * |G_n|^2 draws (existence is guaranteed; exhaustion means a bug).
SeparatorT find_separating_T(const GraphClass& cls, int n, int k);

// Redundancy choice for the one-round general protocol: the k in [1, n]
// minimizing 2 * log2_class_size / k + (k+1) * log2(n), ties to smaller k.
int choose_k(double log2_class_size, int n);

// Protocol ids accepted by make_protocol: hereditary-1r, weak-2r, strong-3r,
// strong-2r-rand, general-1r-weak, general-1r-strong.
std::unique_ptr<Protocol> make_hereditary_one_round(const GraphClass& cls, int n);
std::unique_ptr<Protocol> make_two_round_weak(const GraphClass& cls, int n);
std::unique_ptr<Protocol> make_three_round_strong(const GraphClass& cls, int n);
std::unique_ptr<Protocol> make_two_round_strong_rand(const GraphClass& cls, int n);
std::unique_ptr<Protocol> make_one_round_general(const GraphClass& cls, int n, bool strong);
std::unique_ptr<Protocol> make_protocol(const GraphClass& cls, int n, std::string_view id);

std::vector<std::string> protocol_ids();

// Closed-form per-round bandwidth the protocol is expected to measure, in
// bits; index r-1 is round r.
std::vector<int> predicted_bandwidth(const GraphClass& cls, int n, std::string_view id);

}  // namespace cliquerec
