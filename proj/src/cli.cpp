#include "cliquerec/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "cliquerec/engine.hpp"
#include "cliquerec/graphs.hpp"
#include "cliquerec/oracle.hpp"
#include "cliquerec/protocols.hpp"

namespace cliquerec {

namespace {

std::string format_edges(const LabeledGraph& g) {
    const auto es = g.edges();
    if (es.empty()) return "(empty)";
    std::ostringstream s;
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (i) s << ' ';
        s << es[i].first << '-' << es[i].second;
    }
    return s.str();
}

std::vector<LabeledGraph> resolve_graphs(const RunConfig& config, const GraphClass& cls,
                                         std::ostream& err, bool& usage_error) {
    usage_error = false;
    const std::string& spec = config.graph_spec;
    if (spec == "all-members") {
        return cls.enumerate(config.n);
    }
    if (spec == "all-graphs") {
        std::vector<LabeledGraph> out;
        const int m = config.n * (config.n - 1) / 2;
        for (std::uint64_t code = 0; code < (1ULL << m); ++code) {
            out.push_back(LabeledGraph::from_triangle_code(config.n, code));
        }
        return out;
    }
    if (spec.rfind("member:", 0) == 0) {
        const std::size_t idx = std::stoull(spec.substr(7));
        const auto& members = cls.enumerate(config.n);
        if (idx >= members.size()) {
            err << "error: member index " << idx << " out of range (|G_n| = " << members.size()
                << ")\n";
            usage_error = true;
            return {};
        }
        return {members[idx]};
    }
    if (spec.rfind("file:", 0) == 0) {
        std::ifstream in(spec.substr(5));
        if (!in) {
            err << "error: cannot open graph file '" << spec.substr(5) << "'\n";
            usage_error = true;
            return {};
        }
        LabeledGraph g = read_graph(in);
        if (g.node_count() != config.n) {
            err << "error: graph file has n = " << g.node_count() << ", expected " << config.n
                << "\n";
            usage_error = true;
            return {};
        }
        return {g};
    }
    err << "error: bad graph spec '" << spec << "'\n";
    usage_error = true;
    return {};
}

struct SummaryRow {
    std::string protocol;
    std::string class_name;
    int n;
    std::uint64_t class_size;
    int rounds;
    int bandwidth_bits;
    long long cost;
    double lb_bits;
    std::uint64_t accepts;
    std::uint64_t rejects;
    std::uint64_t errors;
};

void write_rows(std::ostream& out, const std::string& format,
                const std::vector<SummaryRow>& rows) {
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const SummaryRow& r : rows) {
            arr.push_back({{"protocol", r.protocol},
                           {"class", r.class_name},
                           {"n", r.n},
                           {"class_size", r.class_size},
                           {"rounds", r.rounds},
                           {"bandwidth_bits", r.bandwidth_bits},
                           {"cost", r.cost},
                           {"lb_bits", r.lb_bits},
                           {"accepts", r.accepts},
                           {"rejects", r.rejects},
                           {"errors", r.errors}});
        }
        out << arr.dump(2) << '\n';
        return;
    }
    out << "protocol,class,n,class_size,rounds,bandwidth_bits,cost,lb_bits,accepts,rejects,errors\n";
    for (const SummaryRow& r : rows) {
        out << r.protocol << ',' << r.class_name << ',' << r.n << ',' << r.class_size << ','
            << r.rounds << ',' << r.bandwidth_bits << ',' << r.cost << ',' << std::fixed
            << std::setprecision(6) << r.lb_bits << std::defaultfloat << ',' << r.accepts << ','
            << r.rejects << ',' << r.errors << '\n';
    }
}

}  // namespace

int cmd_enumerate(std::ostream& out, std::ostream& err, const std::string& class_name, int n) {
    try {
        const GraphClass& cls = catalog(class_name);
        const auto& members = cls.enumerate(n);
        out << "# class=" << cls.name() << " n=" << n << " count=" << members.size() << '\n';
        for (std::size_t i = 0; i < members.size(); ++i) {
            out << i << ": " << format_edges(members[i]) << '\n';
        }
        return 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

int cmd_run(std::ostream& out, std::ostream& err, const RunConfig& config) {
    try {
        const GraphClass& cls = catalog(config.class_name);
        const std::unique_ptr<Protocol> protocol = make_protocol(cls, config.n, config.protocol_id);
        bool usage_error = false;
        const std::vector<LabeledGraph> graphs = resolve_graphs(config, cls, err, usage_error);
        if (usage_error) return 2;
        if (!config.transcript_path.empty() && (graphs.size() != 1 || config.trials != 1)) {
            err << "error: --transcript requires a single graph and a single trial\n";
            return 2;
        }

        const std::uint64_t class_size = cls.cardinality(config.n);
        const double lb_bits =
            class_size == 0 ? 0.0
                            : std::log2(static_cast<double>(class_size)) / config.n;
        bool hard_violation = false;
        std::vector<SummaryRow> rows;
        rows.reserve(graphs.size());
        std::uint64_t seed_counter = config.seed;

        for (const LabeledGraph& g : graphs) {
            SummaryRow row{config.protocol_id, cls.name(), config.n, class_size,
                           protocol->rounds(), 0, 0, lb_bits, 0, 0, 0};
            for (std::uint64_t t = 0; t < config.trials; ++t) {
                ExecOptions options;
                options.bandwidth_cap = config.bandwidth_cap;
                options.record_payloads = !config.transcript_path.empty();
                try {
                    const ExecResult result = execute(*protocol, g, seed_counter++, options);
                    row.bandwidth_bits = result.transcript.bandwidth();
                    row.cost = result.transcript.cost();
                    switch (result.outcomes[0].kind) {
                        case ProtocolOutcome::Kind::Reconstructed:
                            ++row.accepts;
                            break;
                        case ProtocolOutcome::Kind::Reject:
                            ++row.rejects;
                            break;
                        case ProtocolOutcome::Kind::PromiseViolation:
                            ++row.errors;
                            break;
                    }
                    if (!config.transcript_path.empty()) {
                        std::ofstream tf(config.transcript_path);
                        tf << result.transcript.to_json().dump(2) << '\n';
                    }
                } catch (const BandwidthViolation& e) {
                    err << "bandwidth violation: " << e.what() << '\n';
                    ++row.errors;
                    hard_violation = true;
                } catch (const ConsistencyViolation& e) {
                    err << "consistency violation: " << e.what() << '\n';
                    ++row.errors;
                    hard_violation = true;
                }
            }
            rows.push_back(std::move(row));
        }
        write_rows(out, config.format, rows);
        return hard_violation ? 1 : 0;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

namespace {

void emit(std::ostream& out, const TrialReport& report, bool& all_pass) {
    out << report.to_json().dump() << '\n';
    if (!report.pass()) all_pass = false;
}

std::vector<std::string> select_classes(const std::vector<std::string>& filter,
                                        const std::vector<std::string>& defaults,
                                        std::ostream& err, bool& empty_selection) {
    empty_selection = false;
    if (filter.empty()) return defaults;
    std::vector<std::string> out;
    const auto known = catalog_names();
    for (const std::string& name : filter) {
        if (std::find(known.begin(), known.end(), name) != known.end()) {
            out.push_back(name);
        } else {
            err << "warning: unknown class '" << name << "' skipped\n";
        }
    }
    if (out.empty()) {
        err << "warning: class selection is empty; nothing to verify\n";
        empty_selection = true;
    }
    return out;
}

}  // namespace

int cmd_verify(std::ostream& out, std::ostream& err, const std::string& suite,
               const std::vector<std::string>& class_filter) {
    bool all_pass = true;
    try {
        const bool all = suite == "all";
        if (!all && suite != "lemma1" && suite != "distance" && suite != "protocols" &&
            suite != "hereditary") {
            err << "error: unknown suite '" << suite << "'\n";
            return 2;
        }
        bool empty_selection = false;

        if (all || suite == "lemma1") {
            emit(out, verify_lemma1(2, 5), all_pass);
            emit(out, verify_lemma1(6, 101), all_pass);
        }
        if (all || suite == "distance") {
            for (int n = 1; n <= 8; ++n) {
                for (int k : {1, 2, 4}) {
                    if (k > n) continue;
                    for (TrialReport& r : verify_code_distance(n, k)) emit(out, r, all_pass);
                }
            }
        }
        if (all || suite == "protocols") {
            const auto classes =
                select_classes(class_filter, {"forests", "all-graphs"}, err, empty_selection);
            for (const std::string& name : classes) {
                const GraphClass& cls = catalog(name);
                const int n = 4;
                for (const std::string& id : protocol_ids()) {
                    const std::uint64_t seeds =
                        (id == "weak-2r" || id == "strong-3r" || id == "general-1r-weak") ? 1 : 50;
                    for (TrialReport& r : verify_protocol(cls, n, id, seeds)) {
                        emit(out, r, all_pass);
                    }
                }
                const SeparatorT sep = find_separating_T(cls, n, 2);
                TrialReport sep_report;
                sep_report.claim = "separator-independent-verify " + name + " n=4 k=2";
                sep_report.trials = 1;
                sep_report.failures = verify_separator_independent(sep, cls, n) ? 0 : 1;
                emit(out, sep_report, all_pass);
            }
        }
        if (all || suite == "hereditary") {
            const auto classes = select_classes(class_filter, catalog_names(), err, empty_selection);
            for (const std::string& name : classes) {
                const GraphClass& cls = catalog(name);
                TrialReport closed;
                closed.claim = "hereditary-closure " + name + " n<=4";
                closed.trials = 1;
                closed.failures = verify_hereditary(cls, 4) ? 0 : 1;
                emit(out, closed, all_pass);
                emit(out, verify_hereditary_counting(cls, 4), all_pass);
            }
        }
        if (empty_selection) {
            out << nlohmann::json{{"suite", suite}, {"warning", "empty class selection"}}.dump()
                << '\n';
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return all_pass ? 0 : 1;
}

}  // namespace cliquerec
