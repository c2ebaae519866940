#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cliquerec/bits.hpp"
#include "cliquerec/errors.hpp"
#include "cliquerec/graphs.hpp"
#include "cliquerec/rng.hpp"

namespace cliquerec {

enum class Mode { Unicast, Broadcast };
enum class CoinMode { Private, Public };

// What a node announces when the protocol ends. PromiseViolation is the
// report a promise protocol files when no consistent reconstruction exists
// (only reachable when the input breaks the promise).
struct ProtocolOutcome {
    enum class Kind { Reconstructed, Reject, PromiseViolation };

    Kind kind = Kind::Reject;
    std::optional<LabeledGraph> graph;

    static ProtocolOutcome reconstructed(LabeledGraph g);
    static ProtocolOutcome reject() { return {}; }
    static ProtocolOutcome promise_violation();

    bool operator==(const ProtocolOutcome& o) const;
    bool operator!=(const ProtocolOutcome& o) const { return !(*this == o); }

    nlohmann::json to_json() const;
};

// Deterministic per-node coin stream. Private coins derive from
// (master seed, node id, round) through mix64 so a draw can be replayed by
// any code that knows the seed; public coins ignore the node id.
class CoinStream {
public:
    CoinStream(std::uint64_t master_seed, int node_id, int round, CoinMode mode);

    std::uint64_t next() { return rng_.next(); }
    std::uint64_t uniform_below(std::uint64_t m) { return rng_.uniform_below(m); }

private:
    SplitMix64 rng_;
};

// Everything node id sees during a run: its input row, delivered messages,
// and its coin streams. Inboxes cover completed rounds only.
struct NodeContext {
    int id = 0;  // 1-based
    int n = 0;
    std::vector<std::uint64_t> local_input;        // 0/1, bit id is 0
    std::vector<std::vector<Bits>> inbox;          // inbox[r-1][sender-1]
    std::uint64_t master_seed = 0;
    CoinMode coin_mode = CoinMode::Private;

    CoinStream coins(int round) const { return CoinStream(master_seed, id, round, coin_mode); }
    const Bits& received(int round, int from) const;
};

// A synchronous congested-clique protocol. Message computation for round r
// may read only the node's input, id, coins, and inboxes of rounds < r.
class Protocol {
public:
    virtual ~Protocol() = default;

    virtual std::string name() const = 0;
    virtual int rounds() const = 0;
    virtual Mode mode() const = 0;

    // Per-destination payloads, indexed by destination id - 1. The self slot
    // must stay empty. In broadcast mode all other slots must carry
    // identical bits.
    virtual std::vector<Bits> messages(const NodeContext& node, int round) const = 0;

    virtual ProtocolOutcome finalize(const NodeContext& node) const = 0;
};

struct TranscriptMessage {
    int from;
    int to;
    Bits bits;
};

struct TranscriptRound {
    std::vector<TranscriptMessage> messages;  // empty payloads are not logged
    int max_bits = 0;
};

// Per-round, per-link message log with bit counts. Bandwidth is the longest
// logged message; cost is rounds times bandwidth.
struct Transcript {
    int n = 0;
    std::string protocol;
    std::uint64_t seed = 0;
    std::vector<TranscriptRound> rounds;
    std::vector<ProtocolOutcome> outcomes;

    int rounds_used() const { return static_cast<int>(rounds.size()); }
    int bandwidth() const;
    long long cost() const { return static_cast<long long>(rounds_used()) * bandwidth(); }

    nlohmann::json to_json() const;
};

struct ExecOptions {
    std::optional<int> bandwidth_cap;
    bool record_payloads = true;  // sweeps keep only per-round maxima
    CoinMode coin_mode = CoinMode::Private;
};

struct ExecResult {
    std::vector<ProtocolOutcome> outcomes;
    Transcript transcript;
};

// Runs the protocol on g. Deterministic given (protocol, g, seed). Enforces
// the bandwidth cap per message, broadcast-equality in broadcast mode, and
// outcome agreement across nodes.
ExecResult execute(const Protocol& protocol, const LabeledGraph& g, std::uint64_t seed,
                   const ExecOptions& options = {});

// One-round unicast -> one-round broadcast: every node broadcasts the
// message it would send to node 1 plus one bit for adjacency with node 1,
// then replays node 1's finalize on the reassembled view. Bandwidth b+1.
std::unique_ptr<Protocol> unicast_to_broadcast(std::unique_ptr<Protocol> inner);

// Non-asymptotic information bound for a successful deterministic
// reconstruction run: n + (n-1) * cost >= log2 |G_n|.
bool cost_lower_bound_check(const GraphClass& cls, int n, const Transcript& transcript);

}  // namespace cliquerec
