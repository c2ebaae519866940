#pragma once

#include <stdexcept>
#include <string>

namespace cliquerec {

// Violation of a documented precondition (caller bug).
struct ContractViolation : std::logic_error {
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// Requested n exceeds what a class can enumerate.
struct UnsupportedScale : std::runtime_error {
    explicit UnsupportedScale(const std::string& what) : std::runtime_error(what) {}
};

// A derived field parameter would not fit the 2^61 field-width cap.
struct ParameterOverflow : std::runtime_error {
    explicit ParameterOverflow(const std::string& what) : std::runtime_error(what) {}
};

// A message exceeded the declared per-link bandwidth cap.
struct BandwidthViolation : std::runtime_error {
    int node;
    int round;
    int link;
    BandwidthViolation(const std::string& what, int node_, int round_, int link_)
        : std::runtime_error(what), node(node_), round(round_), link(link_) {}
};

// Nodes disagreed where the protocol promises agreement.
struct ConsistencyViolation : std::runtime_error {
    explicit ConsistencyViolation(const std::string& what) : std::runtime_error(what) {}
};

// Separating-vector search exhausted its attempt budget.
struct SeparatorSearchFailure : std::runtime_error {
    explicit SeparatorSearchFailure(const std::string& what) : std::runtime_error(what) {}
};

// unicast_to_broadcast applied to a protocol it cannot transform.
struct UnsupportedTransform : std::runtime_error {
    explicit UnsupportedTransform(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cliquerec
