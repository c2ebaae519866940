#include "cliquerec/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <utility>

namespace cliquerec {

namespace {

// Horner evaluation of a 0/1 row stored as a mask; avoids materializing the
// row on the candidate-search hot path.
std::uint64_t fp_row_mask(std::uint32_t mask, int n, std::uint64_t t, std::uint64_t p) {
    std::uint64_t acc = 0;
    for (int j = n - 1; j >= 0; --j) {
        acc = add_mod(mul_mod(acc, t, p), (mask >> j) & 1u, p);
    }
    return acc;
}

}  // namespace

std::uint64_t lemma2_prime(std::uint64_t class_size, int n, int k) {
    const int e = ceil_two_log2_over_k(class_size, k);
    const unsigned __int128 bound = static_cast<unsigned __int128>(n + k) << e;
    if (bound >= (static_cast<unsigned __int128>(1) << 60)) {
        throw ParameterOverflow("lemma2_prime: threshold exceeds the field-width contract");
    }
    return smallest_prime_greater(static_cast<std::uint64_t>(bound));
}

std::uint64_t theorem1_prime(const GraphClass& cls, int n) {
    const int e = ceil_f_over_n(cls, n);
    const unsigned __int128 cube = static_cast<unsigned __int128>(n) * n * n;
    const unsigned __int128 bound = 3 * cube << e;
    if (bound >= (static_cast<unsigned __int128>(1) << 60)) {
        throw ParameterOverflow("theorem1_prime: threshold exceeds the field-width contract");
    }
    return smallest_prime_greater(static_cast<std::uint64_t>(bound));
}

std::uint64_t check_prime(int n) {
    return smallest_prime_greater(static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n));
}

std::uint64_t separator_seed(std::string_view class_name, int n, int k, std::uint64_t p) {
    std::uint64_t s = fnv1a64(class_name);
    s = mix64(s + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(n));
    s = mix64(s + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(k));
    s = mix64(s + 0x9E3779B97F4A7C15ULL * p);
    return s;
}

SeparatorT find_separating_T(const GraphClass& cls, int n, int k) {
    if (k < 1 || k > n) throw ContractViolation("find_separating_T: k must be in [1, n]");
    const std::vector<LabeledGraph>& members = cls.enumerate(n);
    const CodeParams params = CodeParams::make(n, k);
    const RsEncoder encoder(params);
    const std::uint64_t m = members.size();
    const std::uint64_t p = lemma2_prime(m, n, k);
    const PrimeField field(p);

    std::vector<CodedGraph> coded;
    coded.reserve(members.size());
    for (const LabeledGraph& g : members) coded.push_back(encode_graph(g, encoder));

    const std::uint64_t budget = std::max<std::uint64_t>(1, 10 * m * m);
    SplitMix64 stream(separator_seed(cls.name(), n, k, p));
    for (std::uint64_t attempt = 1; attempt <= budget; ++attempt) {
        std::vector<FieldElem> points;
        points.reserve(static_cast<std::size_t>(n) + k);
        for (int i = 0; i < n + k; ++i) points.push_back(field.elem(stream.uniform_below(p)));

        std::set<std::vector<std::uint64_t>> seen;
        bool separated = true;
        for (const CodedGraph& cg : coded) {
            if (!seen.insert(fp_matrix(cg.matrix, points).values()).second) {
                separated = false;
                break;
            }
        }
        if (separated) {
            return SeparatorT{std::move(points), params, cls.name(), p, attempt};
        }
    }
    throw SeparatorSearchFailure("find_separating_T: budget exhausted for class '" + cls.name() +
                                 "' at n=" + std::to_string(n) + ", k=" + std::to_string(k));
}

int choose_k(double log2_class_size, int n) {
    if (n < 2) throw ContractViolation("choose_k: n must be at least 2");
    const double logn = std::log2(static_cast<double>(n));
    int best_k = 1;
    double best = 2.0 * log2_class_size + 2.0 * logn;  // k = 1
    for (int k = 2; k <= n; ++k) {
        const double b = 2.0 * log2_class_size / k + (k + 1) * logn;
        if (b < best) {
            best = b;
            best_k = k;
        }
    }
    return best_k;
}

namespace {

// State shared by every protocol built on the coded adjacency matrix:
// code parameters, the class-wide separator, and the candidate lookup
// table from coded fingerprint to member index.
struct CodedSetup {
    const GraphClass* cls;
    int n;
    CodeParams params;
    RsEncoder encoder;
    std::uint64_t p;
    int pbits;
    int qbits;
    SeparatorT sep;
    std::map<std::vector<std::uint64_t>, int> table;

    CodedSetup(const GraphClass& c, int n_, int k)
        : cls(&c),
          n(n_),
          params(CodeParams::make(n_, k)),
          encoder(params),
          p(0),
          pbits(0),
          qbits(field_bit_width(params.q)),
          sep(find_separating_T(c, n_, k)) {
        p = sep.prime_p;
        pbits = field_bit_width(p);
        const std::vector<LabeledGraph>& members = c.enumerate(n);
        for (std::size_t i = 0; i < members.size(); ++i) {
            const CodedGraph cg = encode_graph(members[i], encoder);
            auto [it, fresh] = table.emplace(fp_matrix(cg.matrix, sep.points).values(),
                                             static_cast<int>(i));
            if (!fresh) throw ConsistencyViolation("CodedSetup: separator failed to separate");
        }
    }

    const LabeledGraph& member(int idx) const { return cls->enumerate(n)[idx]; }

    std::optional<int> lookup(const std::vector<std::uint64_t>& fpv) const {
        auto it = table.find(fpv);
        if (it == table.end()) return std::nullopt;
        return it->second;
    }
};

// Candidate-check fingerprints over F_{p'} (p' the smallest prime above
// n^2): the node draws S_i and sends (S_i, FP(x_i, S_i)).
struct CheckSetup {
    std::uint64_t p_check;
    int cbits;

    explicit CheckSetup(int n) : p_check(check_prime(n)), cbits(field_bit_width(p_check)) {}

    std::pair<std::uint64_t, std::uint64_t> draw(const NodeContext& node, int round) const {
        CoinStream coins = node.coins(round);
        const std::uint64_t s = coins.uniform_below(p_check);
        const std::uint64_t fp =
            fp_vector(node.local_input, FieldElem(s, p_check)).value();
        return {s, fp};
    }

    // True iff FP(row_j of H, S_j) matches the announced FP(x_j, S_j) for
    // every node j.
    bool candidate_matches(const LabeledGraph& h,
                           const std::vector<std::pair<std::uint64_t, std::uint64_t>>& checks) const {
        for (int j = 1; j <= h.node_count(); ++j) {
            const auto& [s, fp] = checks[j - 1];
            if (fp_row_mask(h.row_mask(j), h.node_count(), s, p_check) != fp) return false;
        }
        return true;
    }
};

std::vector<Bits> fill_unicast(int n, int self, const Bits& payload) {
    std::vector<Bits> out(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        if (j != self) out[j - 1] = payload;
    }
    return out;
}

// One round, broadcast: node i announces (t_i, FP(x_i, t_i)) and every node
// searches the class enumeration for the unique fingerprint match.
class HereditaryOneRound final : public Protocol {
public:
    HereditaryOneRound(const GraphClass& cls, int n) : cls_(&cls), n_(n) {
        if (!cls.hereditary()) {
            throw ContractViolation(
                "hereditary-1r: class '" + cls.name() + "' is not flagged hereditary");
        }
        p_ = theorem1_prime(cls, n);
        pbits_ = field_bit_width(p_);
    }

    std::string name() const override { return "hereditary-1r"; }
    int rounds() const override { return 1; }
    Mode mode() const override { return Mode::Broadcast; }

    std::vector<Bits> messages(const NodeContext& node, int) const override {
        const auto [t, fp] = pick(node);
        Bits payload;
        payload.append_uint(t, pbits_);
        payload.append_uint(fp, pbits_);
        return fill_unicast(node.n, node.id, payload);
    }

    ProtocolOutcome finalize(const NodeContext& node) const override {
        std::vector<std::uint64_t> t(static_cast<std::size_t>(n_));
        std::vector<std::uint64_t> fpv(static_cast<std::size_t>(n_));
        for (int j = 1; j <= n_; ++j) {
            if (j == node.id) {
                std::tie(t[j - 1], fpv[j - 1]) = pick(node);
            } else {
                BitReader r(node.received(1, j));
                t[j - 1] = r.read_uint(pbits_);
                fpv[j - 1] = r.read_uint(pbits_);
            }
        }
        const LabeledGraph* match = nullptr;
        for (const LabeledGraph& h : cls_->enumerate(n_)) {
            bool ok = true;
            for (int row = 1; row <= n_ && ok; ++row) {
                ok = fp_row_mask(h.row_mask(row), n_, t[row - 1], p_) == fpv[row - 1];
            }
            if (!ok) continue;
            if (match) return ProtocolOutcome::reject();  // not unique
            match = &h;
        }
        if (!match) return ProtocolOutcome::reject();
        return ProtocolOutcome::reconstructed(*match);
    }

    std::uint64_t prime() const { return p_; }

private:
    std::pair<std::uint64_t, std::uint64_t> pick(const NodeContext& node) const {
        CoinStream coins = node.coins(1);
        const std::uint64_t t = coins.uniform_below(p_);
        const std::uint64_t fp = fp_vector(node.local_input, FieldElem(t, p_)).value();
        return {t, fp};
    }

    const GraphClass* cls_;
    int n_;
    std::uint64_t p_;
    int pbits_;
};

// Shared mechanics of the two/three-round coded protocols: round 1 unicasts
// the per-destination redundancy symbol, round 2 broadcasts the two row
// fingerprints; finalize assembles FP(C(G), T) and looks up the candidate.
class CodedMultiRoundBase : public Protocol {
public:
    CodedMultiRoundBase(const GraphClass& cls, int n) : setup_(cls, n, /*k=*/n) {}

    Mode mode() const override { return Mode::Unicast; }

    std::vector<Bits> messages(const NodeContext& node, int round) const override {
        const int n = setup_.n;
        if (round == 1) {
            const std::vector<std::uint64_t> cw = setup_.encoder.encode(node.local_input);
            std::vector<Bits> out(static_cast<std::size_t>(n));
            for (int j = 1; j <= n; ++j) {
                if (j == node.id) continue;
                Bits b;
                b.append_uint(cw[n + j - 1], setup_.qbits);
                out[j - 1] = std::move(b);
            }
            return out;
        }
        if (round == 2) {
            Bits payload = round2_payload(node);
            return fill_unicast(n, node.id, payload);
        }
        return later_round_messages(node, round);
    }

protected:
    // FP(C(G)_i, T_i) and FP(C(G)_{n+i}, T_{n+i}) for i = node.id.
    std::pair<std::uint64_t, std::uint64_t> own_fingerprints(const NodeContext& node) const {
        const int n = setup_.n;
        const int i = node.id;
        const std::vector<std::uint64_t> cw = setup_.encoder.encode(node.local_input);
        std::vector<std::uint64_t> mirror(static_cast<std::size_t>(n) + setup_.params.k, 0);
        for (int j = 1; j <= n; ++j) {
            if (j == i) {
                mirror[j - 1] = cw[n + i - 1];
            } else {
                BitReader r(node.received(1, j));
                mirror[j - 1] = r.read_uint(setup_.qbits);
            }
        }
        const std::uint64_t fp_row = fp_vector(cw, setup_.sep.points[i - 1]).value();
        const std::uint64_t fp_mirror =
            fp_vector(mirror, setup_.sep.points[n + i - 1]).value();
        return {fp_row, fp_mirror};
    }

    virtual Bits round2_payload(const NodeContext& node) const {
        const auto [fp_row, fp_mirror] = own_fingerprints(node);
        Bits payload;
        payload.append_uint(fp_row, setup_.pbits);
        payload.append_uint(fp_mirror, setup_.pbits);
        return payload;
    }

    virtual std::vector<Bits> later_round_messages(const NodeContext&, int) const {
        throw ContractViolation(name() + ": unexpected round");
    }

    // FP(C(G), T) assembled from the round-2 broadcasts (own entries
    // recomputed deterministically).
    std::vector<std::uint64_t> assemble_fpvec(const NodeContext& node) const {
        const int n = setup_.n;
        std::vector<std::uint64_t> fpv(2 * static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j) {
            if (j == node.id) {
                std::tie(fpv[j - 1], fpv[n + j - 1]) = own_fingerprints(node);
            } else {
                BitReader r(node.received(2, j));
                fpv[j - 1] = r.read_uint(setup_.pbits);
                fpv[n + j - 1] = r.read_uint(setup_.pbits);
            }
        }
        return fpv;
    }

    std::optional<int> candidate(const NodeContext& node) const {
        return setup_.lookup(assemble_fpvec(node));
    }

    CodedSetup setup_;
};

class TwoRoundWeak final : public CodedMultiRoundBase {
public:
    using CodedMultiRoundBase::CodedMultiRoundBase;

    std::string name() const override { return "weak-2r"; }
    int rounds() const override { return 2; }

    ProtocolOutcome finalize(const NodeContext& node) const override {
        const std::optional<int> idx = candidate(node);
        if (!idx) return ProtocolOutcome::promise_violation();
        return ProtocolOutcome::reconstructed(setup_.member(*idx));
    }
};

class ThreeRoundStrong final : public CodedMultiRoundBase {
public:
    using CodedMultiRoundBase::CodedMultiRoundBase;

    std::string name() const override { return "strong-3r"; }
    int rounds() const override { return 3; }

    ProtocolOutcome finalize(const NodeContext& node) const override {
        const std::optional<int> idx = candidate(node);
        if (!idx) return ProtocolOutcome::reject();
        for (int j = 1; j <= setup_.n; ++j) {
            const int bit = j == node.id ? own_check_bit(node)
                                         : BitReader(node.received(3, j)).read_bit();
            if (bit == 0) return ProtocolOutcome::reject();
        }
        return ProtocolOutcome::reconstructed(setup_.member(*idx));
    }

private:
    std::vector<Bits> later_round_messages(const NodeContext& node, int round) const override {
        if (round != 3) throw ContractViolation("strong-3r: unexpected round");
        Bits payload;
        payload.append_bit(own_check_bit(node));
        return fill_unicast(setup_.n, node.id, payload);
    }

    // 1 iff a candidate exists and its row for this node equals the local
    // neighborhood.
    int own_check_bit(const NodeContext& node) const {
        const std::optional<int> idx = candidate(node);
        if (!idx) return 0;
        const LabeledGraph& h = setup_.member(*idx);
        for (int j = 1; j <= setup_.n; ++j) {
            const std::uint64_t want = j == node.id ? 0 : (h.has_edge(node.id, j) ? 1 : 0);
            if (node.local_input[j - 1] != want) return 0;
        }
        return 1;
    }
};

class TwoRoundStrongRand final : public CodedMultiRoundBase {
public:
    TwoRoundStrongRand(const GraphClass& cls, int n)
        : CodedMultiRoundBase(cls, n), check_(n) {}

    std::string name() const override { return "strong-2r-rand"; }
    int rounds() const override { return 2; }

    ProtocolOutcome finalize(const NodeContext& node) const override {
        const std::optional<int> idx = candidate(node);
        if (!idx) return ProtocolOutcome::reject();
        std::vector<std::pair<std::uint64_t, std::uint64_t>> checks(
            static_cast<std::size_t>(setup_.n));
        for (int j = 1; j <= setup_.n; ++j) {
            if (j == node.id) {
                checks[j - 1] = check_.draw(node, 2);
            } else {
                BitReader r(node.received(2, j));
                r.read_uint(setup_.pbits);
                r.read_uint(setup_.pbits);
                checks[j - 1].first = r.read_uint(check_.cbits);
                checks[j - 1].second = r.read_uint(check_.cbits);
            }
        }
        const LabeledGraph& h = setup_.member(*idx);
        if (!check_.candidate_matches(h, checks)) return ProtocolOutcome::reject();
        return ProtocolOutcome::reconstructed(h);
    }

private:
    Bits round2_payload(const NodeContext& node) const override {
        Bits payload = CodedMultiRoundBase::round2_payload(node);
        const auto [s, fp] = check_.draw(node, 2);
        payload.append_uint(s, check_.cbits);
        payload.append_uint(fp, check_.cbits);
        return payload;
    }

    CheckSetup check_;
};

// One round: node i broadcasts FP(C(x_i), T_i) plus its k redundancy
// symbols (plus the check pair in strong mode). Runs as a unicast protocol
// with identical payloads so it is eligible for the broadcast transform.
class OneRoundGeneral final : public Protocol {
public:
    OneRoundGeneral(const GraphClass& cls, int n, bool strong)
        : setup_(cls, n,
                 n == 1 ? 1
                        : choose_k(cls.cardinality(n) == 0
                                       ? 0.0
                                       : std::log2(static_cast<double>(cls.cardinality(n))),
                                   n)),
          strong_(strong),
          check_(n) {}

    std::string name() const override { return strong_ ? "general-1r-strong" : "general-1r-weak"; }
    int rounds() const override { return 1; }
    Mode mode() const override { return Mode::Unicast; }

    std::vector<Bits> messages(const NodeContext& node, int) const override {
        const int n = setup_.n;
        const std::vector<std::uint64_t> cw = setup_.encoder.encode(node.local_input);
        Bits payload;
        payload.append_uint(fp_vector(cw, setup_.sep.points[node.id - 1]).value(), setup_.pbits);
        for (int i = 0; i < setup_.params.k; ++i) {
            payload.append_uint(cw[n + i], setup_.qbits);
        }
        if (strong_) {
            const auto [s, fp] = check_.draw(node, 1);
            payload.append_uint(s, check_.cbits);
            payload.append_uint(fp, check_.cbits);
        }
        return fill_unicast(n, node.id, payload);
    }

    ProtocolOutcome finalize(const NodeContext& node) const override {
        const int n = setup_.n;
        const int k = setup_.params.k;
        std::vector<std::uint64_t> fpv(static_cast<std::size_t>(n) + k);
        std::vector<std::vector<std::uint64_t>> redundancy(
            static_cast<std::size_t>(k),
            std::vector<std::uint64_t>(static_cast<std::size_t>(n) + k, 0));
        std::vector<std::pair<std::uint64_t, std::uint64_t>> checks(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j) {
            if (j == node.id) {
                const std::vector<std::uint64_t> cw = setup_.encoder.encode(node.local_input);
                fpv[j - 1] = fp_vector(cw, setup_.sep.points[j - 1]).value();
                for (int i = 0; i < k; ++i) redundancy[i][j - 1] = cw[n + i];
                if (strong_) checks[j - 1] = check_.draw(node, 1);
            } else {
                BitReader r(node.received(1, j));
                fpv[j - 1] = r.read_uint(setup_.pbits);
                for (int i = 0; i < k; ++i) redundancy[i][j - 1] = r.read_uint(setup_.qbits);
                if (strong_) {
                    checks[j - 1].first = r.read_uint(check_.cbits);
                    checks[j - 1].second = r.read_uint(check_.cbits);
                }
            }
        }
        for (int i = 0; i < k; ++i) {
            fpv[n + i] = fp_vector(redundancy[i], setup_.sep.points[n + i]).value();
        }
        const std::optional<int> idx = setup_.lookup(fpv);
        if (!idx) {
            return strong_ ? ProtocolOutcome::reject() : ProtocolOutcome::promise_violation();
        }
        const LabeledGraph& h = setup_.member(*idx);
        if (strong_ && !check_.candidate_matches(h, checks)) return ProtocolOutcome::reject();
        return ProtocolOutcome::reconstructed(h);
    }

private:
    CodedSetup setup_;
    bool strong_;
    CheckSetup check_;
};

}  // namespace

std::unique_ptr<Protocol> make_hereditary_one_round(const GraphClass& cls, int n) {
    return std::make_unique<HereditaryOneRound>(cls, n);
}

std::unique_ptr<Protocol> make_two_round_weak(const GraphClass& cls, int n) {
    return std::make_unique<TwoRoundWeak>(cls, n);
}

std::unique_ptr<Protocol> make_three_round_strong(const GraphClass& cls, int n) {
    return std::make_unique<ThreeRoundStrong>(cls, n);
}

std::unique_ptr<Protocol> make_two_round_strong_rand(const GraphClass& cls, int n) {
    return std::make_unique<TwoRoundStrongRand>(cls, n);
}

std::unique_ptr<Protocol> make_one_round_general(const GraphClass& cls, int n, bool strong) {
    return std::make_unique<OneRoundGeneral>(cls, n, strong);
}

std::unique_ptr<Protocol> make_protocol(const GraphClass& cls, int n, std::string_view id) {
    if (id == "hereditary-1r") return make_hereditary_one_round(cls, n);
    if (id == "weak-2r") return make_two_round_weak(cls, n);
    if (id == "strong-3r") return make_three_round_strong(cls, n);
    if (id == "strong-2r-rand") return make_two_round_strong_rand(cls, n);
    if (id == "general-1r-weak") return make_one_round_general(cls, n, false);
    if (id == "general-1r-strong") return make_one_round_general(cls, n, true);
    throw ContractViolation("make_protocol: unknown protocol id '" + std::string(id) + "'");
}

std::vector<std::string> protocol_ids() {
    return {"hereditary-1r", "weak-2r",           "strong-3r",
            "strong-2r-rand", "general-1r-weak", "general-1r-strong"};
}

std::vector<int> predicted_bandwidth(const GraphClass& cls, int n, std::string_view id) {
    const std::uint64_t m = cls.cardinality(n);
    if (id == "hereditary-1r") {
        return {2 * field_bit_width(theorem1_prime(cls, n))};
    }
    if (id == "weak-2r" || id == "strong-3r" || id == "strong-2r-rand") {
        const CodeParams params = CodeParams::make(n, n);
        const int qbits = field_bit_width(params.q);
        const int pbits = field_bit_width(lemma2_prime(m, n, n));
        if (id == "weak-2r") return {qbits, 2 * pbits};
        if (id == "strong-3r") return {qbits, 2 * pbits, 1};
        const int cbits = field_bit_width(check_prime(n));
        return {qbits, 2 * pbits + 2 * cbits};
    }
    if (id == "general-1r-weak" || id == "general-1r-strong") {
        const int k =
            n == 1 ? 1 : choose_k(m == 0 ? 0.0 : std::log2(static_cast<double>(m)), n);
        const CodeParams params = CodeParams::make(n, k);
        int bits = field_bit_width(lemma2_prime(m, n, k)) + k * field_bit_width(params.q);
        if (id == "general-1r-strong") bits += 2 * field_bit_width(check_prime(n));
        return {bits};
    }
    throw ContractViolation("predicted_bandwidth: unknown protocol id '" + std::string(id) + "'");
}

}  // namespace cliquerec
