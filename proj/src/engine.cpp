#include "cliquerec/engine.hpp"

#include <algorithm>
#include <cmath>

namespace cliquerec {

ProtocolOutcome ProtocolOutcome::reconstructed(LabeledGraph g) {
    ProtocolOutcome o;
    o.kind = Kind::Reconstructed;
    o.graph = std::move(g);
    return o;
}

ProtocolOutcome ProtocolOutcome::promise_violation() {
    ProtocolOutcome o;
    o.kind = Kind::PromiseViolation;
    return o;
}

bool ProtocolOutcome::operator==(const ProtocolOutcome& o) const {
    if (kind != o.kind) return false;
    if (kind != Kind::Reconstructed) return true;
    return graph == o.graph;
}

nlohmann::json ProtocolOutcome::to_json() const {
    nlohmann::json j;
    switch (kind) {
        case Kind::Reconstructed: {
            j["result"] = "reconstructed";
            nlohmann::json edges = nlohmann::json::array();
            for (auto [u, v] : graph->edges()) edges.push_back({u, v});
            j["graph"] = {{"n", graph->node_count()}, {"edges", edges}};
            break;
        }
        case Kind::Reject:
            j["result"] = "reject";
            break;
        case Kind::PromiseViolation:
            j["result"] = "promise-violation";
            break;
    }
    return j;
}

CoinStream::CoinStream(std::uint64_t master_seed, int node_id, int round, CoinMode mode)
    : rng_(mix64((mode == CoinMode::Private
                      ? mix64(master_seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(node_id))
                      : mix64(master_seed)) +
                 0xD1B54A32D192ED03ULL * static_cast<std::uint64_t>(round))) {}

const Bits& NodeContext::received(int round, int from) const {
    if (round < 1 || round > static_cast<int>(inbox.size())) {
        throw ContractViolation("NodeContext: round " + std::to_string(round) + " not delivered");
    }
    if (from < 1 || from > n || from == id) {
        throw ContractViolation("NodeContext: bad sender id");
    }
    return inbox[round - 1][from - 1];
}

int Transcript::bandwidth() const {
    int b = 0;
    for (const TranscriptRound& r : rounds) b = std::max(b, r.max_bits);
    return b;
}

nlohmann::json Transcript::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["protocol"] = protocol;
    j["seed"] = seed;
    j["rounds"] = nlohmann::json::array();
    for (const TranscriptRound& r : rounds) {
        nlohmann::json msgs = nlohmann::json::array();
        for (const TranscriptMessage& m : r.messages) {
            msgs.push_back({{"from", m.from},
                            {"to", m.to},
                            {"bits", {{"len", m.bits.size()}, {"hex", m.bits.hex()}}}});
        }
        j["rounds"].push_back({{"messages", msgs}});
    }
    j["bandwidth"] = bandwidth();
    j["cost"] = cost();
    j["outcomes"] = nlohmann::json::array();
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        nlohmann::json o = outcomes[i].to_json();
        o["node"] = i + 1;
        j["outcomes"].push_back(o);
    }
    return j;
}

ExecResult execute(const Protocol& protocol, const LabeledGraph& g, std::uint64_t seed,
                   const ExecOptions& options) {
    const int n = g.node_count();
    const int R = protocol.rounds();
    if (R < 1) throw ContractViolation("execute: protocol must run at least one round");

    std::vector<NodeContext> nodes(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) {
        NodeContext& ctx = nodes[v - 1];
        ctx.id = v;
        ctx.n = n;
        ctx.local_input = g.row(v);
        ctx.master_seed = seed;
        ctx.coin_mode = options.coin_mode;
    }

    Transcript t;
    t.n = n;
    t.protocol = protocol.name();
    t.seed = seed;

    for (int round = 1; round <= R; ++round) {
        // compute phase: reads only inboxes of rounds < round
        std::vector<std::vector<Bits>> outgoing;
        outgoing.reserve(static_cast<std::size_t>(n));
        for (int v = 1; v <= n; ++v) {
            std::vector<Bits> msgs = protocol.messages(nodes[v - 1], round);
            if (static_cast<int>(msgs.size()) != n) {
                throw ContractViolation("execute: node " + std::to_string(v) +
                                        " produced a malformed destination vector");
            }
            if (!msgs[v - 1].empty()) {
                throw ContractViolation("execute: node " + std::to_string(v) +
                                        " addressed a message to itself");
            }
            if (protocol.mode() == Mode::Broadcast) {
                const Bits* first = nullptr;
                for (int j = 1; j <= n; ++j) {
                    if (j == v) continue;
                    if (!first) {
                        first = &msgs[j - 1];
                    } else if (msgs[j - 1] != *first) {
                        throw ContractViolation("execute: node " + std::to_string(v) +
                                                " broadcast differing messages in round " +
                                                std::to_string(round));
                    }
                }
            }
            outgoing.push_back(std::move(msgs));
        }

        // delivery phase
        TranscriptRound log;
        for (int v = 1; v <= n; ++v) {
            for (int j = 1; j <= n; ++j) {
                if (j == v) continue;
                const Bits& m = outgoing[v - 1][j - 1];
                const int len = static_cast<int>(m.size());
                if (options.bandwidth_cap && len > *options.bandwidth_cap) {
                    throw BandwidthViolation(
                        "bandwidth cap exceeded: node " + std::to_string(v) + " round " +
                            std::to_string(round) + " link to " + std::to_string(j) + " (" +
                            std::to_string(len) + " > " + std::to_string(*options.bandwidth_cap) +
                            " bits)",
                        v, round, j);
                }
                log.max_bits = std::max(log.max_bits, len);
                if (options.record_payloads && len > 0) {
                    log.messages.push_back(TranscriptMessage{v, j, m});
                }
            }
        }
        t.rounds.push_back(std::move(log));
        for (int v = 1; v <= n; ++v) {
            std::vector<Bits> received(static_cast<std::size_t>(n));
            for (int j = 1; j <= n; ++j) {
                if (j == v) continue;
                received[j - 1] = outgoing[j - 1][v - 1];
            }
            nodes[v - 1].inbox.push_back(std::move(received));
        }
    }

    ExecResult result;
    result.outcomes.reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v) result.outcomes.push_back(protocol.finalize(nodes[v - 1]));
    for (int v = 2; v <= n; ++v) {
        if (result.outcomes[v - 1] != result.outcomes[0]) {
            throw ConsistencyViolation("execute: node " + std::to_string(v) +
                                       " disagrees with node 1 in protocol " + protocol.name());
        }
    }
    t.outcomes = result.outcomes;
    result.transcript = std::move(t);
    return result;
}

namespace {

class BroadcastLift final : public Protocol {
public:
    explicit BroadcastLift(std::unique_ptr<Protocol> inner) : inner_(std::move(inner)) {
        if (inner_->rounds() != 1) {
            throw UnsupportedTransform("unicast_to_broadcast: inner protocol must be one-round");
        }
    }

    std::string name() const override { return inner_->name() + "+broadcast"; }
    int rounds() const override { return 1; }
    Mode mode() const override { return Mode::Broadcast; }

    std::vector<Bits> messages(const NodeContext& node, int round) const override {
        // Broadcast the message meant for node 1 plus one adjacency bit.
        Bits payload;
        if (node.id != 1) {
            std::vector<Bits> inner_msgs = inner_->messages(node, round);
            payload = std::move(inner_msgs[0]);
        }
        payload.append_bit(node.id == 1 ? 0 : static_cast<int>(node.local_input[0]));
        std::vector<Bits> out(static_cast<std::size_t>(node.n));
        for (int j = 1; j <= node.n; ++j) {
            if (j != node.id) out[j - 1] = payload;
        }
        return out;
    }

    ProtocolOutcome finalize(const NodeContext& node) const override {
        // Reassemble node 1's view of the inner run and replay its finalize.
        NodeContext view;
        view.id = 1;
        view.n = node.n;
        view.master_seed = node.master_seed;
        view.coin_mode = node.coin_mode;
        view.local_input.assign(static_cast<std::size_t>(node.n), 0);
        std::vector<Bits> round1(static_cast<std::size_t>(node.n));
        for (int j = 2; j <= node.n; ++j) {
            const Bits& b = node.id == j ? own_broadcast(node) : node.received(1, j);
            Bits inner_msg;
            for (std::size_t i = 0; i + 1 < b.size(); ++i) inner_msg.append_bit(b.bit(i));
            view.local_input[j - 1] = static_cast<std::uint64_t>(b.bit(b.size() - 1));
            round1[j - 1] = std::move(inner_msg);
        }
        view.inbox.push_back(std::move(round1));
        return inner_->finalize(view);
    }

private:
    Bits own_broadcast(const NodeContext& node) const {
        std::vector<Bits> msgs = messages(node, 1);
        for (int j = 1; j <= node.n; ++j) {
            if (j != node.id) return msgs[j - 1];
        }
        return Bits{};  // n = 1: nothing was sent
    }

    std::unique_ptr<Protocol> inner_;
};

}  // namespace

std::unique_ptr<Protocol> unicast_to_broadcast(std::unique_ptr<Protocol> inner) {
    return std::make_unique<BroadcastLift>(std::move(inner));
}

bool cost_lower_bound_check(const GraphClass& cls, int n, const Transcript& transcript) {
    const double log_card = std::log2(static_cast<double>(cls.cardinality(n)));
    const double received = static_cast<double>(n) +
                            static_cast<double>(n - 1) * static_cast<double>(transcript.cost());
    return received >= log_card;
}

}  // namespace cliquerec
