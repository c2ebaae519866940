#include "cliquerec/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "cliquerec/ecc.hpp"
#include "cliquerec/engine.hpp"
#include "cliquerec/fingerprint.hpp"

namespace cliquerec {

nlohmann::json TrialReport::to_json() const {
    return nlohmann::json{{"claim", claim},
                          {"trials", trials},
                          {"failures", failures},
                          {"empirical_rate", empirical_rate()},
                          {"bound", bound},
                          {"confidence_radius", confidence_radius},
                          {"exhaustive", exhaustive},
                          {"seed", seed},
                          {"observed", observed},
                          {"pass", pass()}};
}

double binomial_quantile_radius(std::uint64_t trials, double bound) {
    if (trials == 0 || bound <= 0.0) return 0.0;
    if (bound >= 1.0) return 0.0;
    // Walk the Bin(trials, bound) pmf until the cdf reaches 0.99; the
    // integer threshold m is exact, the tail is accumulated in log space.
    const long double lb = std::log(static_cast<long double>(bound));
    const long double l1mb = std::log1p(-static_cast<long double>(bound));
    long double logpmf = static_cast<long double>(trials) * l1mb;
    long double cdf = std::exp(logpmf);
    std::uint64_t m = 0;
    while (cdf < 0.99L && m < trials) {
        logpmf += std::log(static_cast<long double>(trials - m)) -
                  std::log(static_cast<long double>(m + 1)) + lb - l1mb;
        ++m;
        cdf += std::exp(logpmf);
    }
    return static_cast<double>(m) / static_cast<double>(trials) - bound;
}

std::uint64_t poly_eval_powersum(std::span<const std::uint64_t> a, std::uint64_t t,
                                 std::uint64_t p) {
    std::uint64_t acc = 0;
    std::uint64_t power = 1 % p;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] >= p) throw ContractViolation("poly_eval_powersum: coordinate not below modulus");
        acc = add_mod(acc, mul_mod(a[i], power, p), p);
        power = mul_mod(power, t, p);
    }
    return acc;
}

namespace {

std::vector<std::uint64_t> mask_to_vector(std::uint64_t mask, int n) {
    std::vector<std::uint64_t> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[i] = (mask >> i) & 1;
    return v;
}

std::uint64_t collisions_powersum(std::span<const std::uint64_t> a,
                                  std::span<const std::uint64_t> b, std::uint64_t p) {
    std::uint64_t count = 0;
    for (std::uint64_t t = 0; t < p; ++t) {
        if (poly_eval_powersum(a, t, p) == poly_eval_powersum(b, t, p)) ++count;
    }
    return count;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

std::vector<LabeledGraph> all_graphs_of_size(int n) {
    const int m = n * (n - 1) / 2;
    std::vector<LabeledGraph> out;
    out.reserve(1u << m);
    for (std::uint64_t code = 0; code < (1ULL << m); ++code) {
        out.push_back(LabeledGraph::from_triangle_code(n, code));
    }
    return out;
}

std::vector<LabeledGraph> non_members_of_size(const GraphClass& cls, int n) {
    std::vector<LabeledGraph> out;
    for (LabeledGraph& g : all_graphs_of_size(n)) {
        if (!cls.contains(g)) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

TrialReport verify_lemma1(int n, std::uint64_t p, std::uint64_t samples) {
    if (p > (1ULL << 20)) throw ContractViolation("verify_lemma1: p too large to enumerate");
    if (!is_prime(p)) throw ContractViolation("verify_lemma1: p must be prime");
    TrialReport report;
    report.claim = "lemma1-collision-bound n=" + std::to_string(n) + " p=" + std::to_string(p);
    const std::uint64_t vectors = 1ULL << n;

    auto check_pair = [&](std::uint64_t am, std::uint64_t bm) {
        const std::vector<std::uint64_t> a = mask_to_vector(am, n);
        const std::vector<std::uint64_t> b = mask_to_vector(bm, n);
        const std::uint64_t independent = collisions_powersum(a, b, p);
        const std::uint64_t library = count_collisions(a, b, p);
        ++report.trials;
        report.observed = std::max<std::int64_t>(report.observed,
                                                 static_cast<std::int64_t>(independent));
        if (independent != library || independent > static_cast<std::uint64_t>(n)) {
            ++report.failures;
        }
    };

    if (samples == 0) {
        const std::uint64_t pairs = vectors * (vectors - 1) / 2;
        if (pairs * p > 400'000'000ULL) {
            throw ContractViolation("verify_lemma1: exhaustive scan too large; pass samples");
        }
        for (std::uint64_t am = 0; am < vectors; ++am) {
            for (std::uint64_t bm = am + 1; bm < vectors; ++bm) check_pair(am, bm);
        }
    } else {
        report.exhaustive = false;
        report.seed = separator_seed("lemma1", n, 0, p);
        SplitMix64 stream(report.seed);
        for (std::uint64_t i = 0; i < samples; ++i) {
            const std::uint64_t am = stream.uniform_below(vectors);
            std::uint64_t bm = stream.uniform_below(vectors - 1);
            if (bm >= am) ++bm;
            check_pair(am, bm);
        }
    }
    return report;
}

std::vector<TrialReport> verify_code_distance(int n, int k) {
    if (n > 8) throw ContractViolation("verify_code_distance: exhaustive only up to n = 8");
    const CodeParams params = CodeParams::make(n, k);
    const RsEncoder encoder(params);

    std::vector<TrialReport> reports;
    TrialReport words;
    words.claim = "code-distance n=" + std::to_string(n) + " k=" + std::to_string(k);
    words.observed = n + k + 1;  // above any possible distance
    const std::uint64_t vectors = 1ULL << n;
    std::vector<std::vector<std::uint64_t>> codewords;
    codewords.reserve(vectors);
    for (std::uint64_t m = 0; m < vectors; ++m) {
        codewords.push_back(encoder.encode(mask_to_vector(m, n)));
    }
    for (std::uint64_t a = 0; a < vectors; ++a) {
        for (std::uint64_t b = a + 1; b < vectors; ++b) {
            int dist = 0;
            for (int i = 0; i < n + k; ++i) {
                if (codewords[a][i] != codewords[b][i]) ++dist;
            }
            ++words.trials;
            words.observed = std::min<std::int64_t>(words.observed, dist);
            if (dist < k) ++words.failures;
        }
    }
    reports.push_back(std::move(words));

    if (n <= 4) {
        TrialReport graphs;
        graphs.claim = "graph-row-distance n=" + std::to_string(n) + " k=" + std::to_string(k);
        graphs.observed = n + k + 1;
        std::vector<CodedGraph> coded;
        for (const LabeledGraph& g : all_graphs_of_size(n)) {
            coded.push_back(encode_graph(g, encoder));
        }
        for (std::size_t a = 0; a < coded.size(); ++a) {
            for (std::size_t b = a + 1; b < coded.size(); ++b) {
                const int dist = row_distance(coded[a].matrix, coded[b].matrix);
                ++graphs.trials;
                graphs.observed = std::min<std::int64_t>(graphs.observed, dist);
                if (dist <= k) ++graphs.failures;
            }
        }
        reports.push_back(std::move(graphs));
    }
    return reports;
}

bool verify_separator_independent(const SeparatorT& sep, const GraphClass& cls, int n) {
    const RsEncoder encoder(sep.params);
    const std::vector<LabeledGraph>& members = cls.enumerate(n);
    std::vector<std::vector<std::uint64_t>> prints;
    prints.reserve(members.size());
    for (const LabeledGraph& g : members) {
        const CodedGraph coded = encode_graph(g, encoder);
        std::vector<std::uint64_t> fp;
        fp.reserve(coded.matrix.size());
        for (std::size_t i = 0; i < coded.matrix.size(); ++i) {
            fp.push_back(poly_eval_powersum(coded.matrix[i], sep.points[i].value(), sep.prime_p));
        }
        prints.push_back(std::move(fp));
    }
    for (std::size_t a = 0; a < prints.size(); ++a) {
        for (std::size_t b = a + 1; b < prints.size(); ++b) {
            if (prints[a] == prints[b]) return false;
        }
    }
    return true;
}

TrialReport verify_hereditary_counting(const GraphClass& cls, int n_max) {
    if (n_max > 5) throw ContractViolation("verify_hereditary_counting: supported up to n = 5");
    TrialReport report;
    report.claim = "hereditary-ball-counting " + cls.name() + " n<=" + std::to_string(n_max);
    for (int n = 1; n <= n_max; ++n) {
        const std::vector<LabeledGraph>& members = cls.enumerate(n);
        for (const LabeledGraph& g : members) {
            std::vector<std::uint64_t> at_distance(static_cast<std::size_t>(n) + 1, 0);
            for (const LabeledGraph& h : members) {
                int d = 0;
                for (int row = 1; row <= n; ++row) {
                    if (g.row_mask(row) != h.row_mask(row)) ++d;
                }
                ++at_distance[d];
            }
            for (int k = 1; k <= n; ++k) {
                ++report.trials;
                if (at_distance[k] > binomial(n, k) * cls.cardinality(k)) ++report.failures;
            }
        }
    }
    return report;
}

namespace {

bool bandwidth_matches(const Transcript& t, const std::vector<int>& predicted) {
    if (t.n < 2) return true;  // no links, nothing measurable
    if (t.rounds.size() != predicted.size()) return false;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        if (t.rounds[i].max_bits != predicted[i]) return false;
    }
    return true;
}

}  // namespace

std::vector<TrialReport> verify_protocol(const GraphClass& cls, int n, std::string_view protocol_id,
                                         std::uint64_t seeds, std::uint64_t base_seed) {
    const std::unique_ptr<Protocol> protocol = make_protocol(cls, n, protocol_id);
    const std::vector<int> predicted = predicted_bandwidth(cls, n, protocol_id);
    const std::vector<LabeledGraph>& members = cls.enumerate(n);
    const std::string prefix = std::string(protocol_id) + " " + cls.name() +
                               " n=" + std::to_string(n) + " ";

    ExecOptions options;
    options.record_payloads = false;

    TrialReport accounting;
    accounting.claim = prefix + "bandwidth-and-cost";
    std::uint64_t seed_counter = base_seed;

    auto run_one = [&](const LabeledGraph& g, bool deterministic) {
        const ExecResult result = execute(*protocol, g, seed_counter++, options);
        ++accounting.trials;
        bool ok = bandwidth_matches(result.transcript, predicted);
        if (deterministic && result.outcomes[0].kind == ProtocolOutcome::Kind::Reconstructed) {
            ok = ok && cost_lower_bound_check(cls, n, result.transcript);
        }
        if (!ok) ++accounting.failures;
        return result.outcomes[0];
    };

    std::vector<TrialReport> reports;
    const bool deterministic =
        protocol_id == "weak-2r" || protocol_id == "strong-3r" || protocol_id == "general-1r-weak";

    if (deterministic) {
        TrialReport exact;
        exact.claim = prefix + "member-exactness";
        for (const LabeledGraph& g : members) {
            const ProtocolOutcome outcome = run_one(g, true);
            ++exact.trials;
            if (outcome.kind != ProtocolOutcome::Kind::Reconstructed || *outcome.graph != g) {
                ++exact.failures;
            }
        }
        reports.push_back(std::move(exact));
        if (protocol_id == "strong-3r") {
            TrialReport rejects;
            rejects.claim = prefix + "non-member-rejection";
            for (const LabeledGraph& g : non_members_of_size(cls, n)) {
                const ProtocolOutcome outcome = run_one(g, true);
                ++rejects.trials;
                if (outcome.kind != ProtocolOutcome::Kind::Reject) ++rejects.failures;
            }
            reports.push_back(std::move(rejects));
        }
    } else if (protocol_id == "strong-2r-rand" || protocol_id == "general-1r-strong") {
        TrialReport members_side;
        members_side.claim = prefix + "member-one-sidedness";
        members_side.exhaustive = false;
        members_side.seed = base_seed;
        for (const LabeledGraph& g : members) {
            for (std::uint64_t s = 0; s < seeds; ++s) {
                const ProtocolOutcome outcome = run_one(g, false);
                ++members_side.trials;
                if (outcome.kind != ProtocolOutcome::Kind::Reconstructed ||
                    *outcome.graph != g) {
                    ++members_side.failures;
                }
            }
        }
        reports.push_back(std::move(members_side));

        TrialReport false_accept;
        false_accept.claim = prefix + "non-member-false-accept";
        false_accept.exhaustive = false;
        false_accept.seed = base_seed;
        false_accept.bound = 1.0 / n;
        for (const LabeledGraph& g : non_members_of_size(cls, n)) {
            for (std::uint64_t s = 0; s < seeds; ++s) {
                const ProtocolOutcome outcome = run_one(g, false);
                ++false_accept.trials;
                if (outcome.kind == ProtocolOutcome::Kind::Reconstructed) ++false_accept.failures;
            }
        }
        false_accept.confidence_radius = binomial_quantile_radius(false_accept.trials, false_accept.bound);
        reports.push_back(std::move(false_accept));
    } else if (protocol_id == "hereditary-1r") {
        TrialReport success;
        success.claim = prefix + "member-success";
        success.exhaustive = false;
        success.seed = base_seed;
        success.bound = 1.0 / n;
        for (const LabeledGraph& g : members) {
            for (std::uint64_t s = 0; s < seeds; ++s) {
                const ProtocolOutcome outcome = run_one(g, false);
                ++success.trials;
                if (outcome.kind != ProtocolOutcome::Kind::Reconstructed || *outcome.graph != g) {
                    ++success.failures;
                }
            }
        }
        success.confidence_radius = binomial_quantile_radius(success.trials, success.bound);
        reports.push_back(std::move(success));

        TrialReport rejects;
        rejects.claim = prefix + "non-member-rejection";
        rejects.exhaustive = false;
        rejects.seed = base_seed;
        rejects.bound = 1.0 / n;
        for (const LabeledGraph& g : non_members_of_size(cls, n)) {
            for (std::uint64_t s = 0; s < seeds; ++s) {
                const ProtocolOutcome outcome = run_one(g, false);
                ++rejects.trials;
                if (outcome.kind != ProtocolOutcome::Kind::Reject) ++rejects.failures;
            }
        }
        rejects.confidence_radius = binomial_quantile_radius(rejects.trials, rejects.bound);
        reports.push_back(std::move(rejects));
    } else {
        throw ContractViolation("verify_protocol: unknown protocol id '" +
                                std::string(protocol_id) + "'");
    }

    reports.push_back(std::move(accounting));
    return reports;
}

}  // namespace cliquerec
