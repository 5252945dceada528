#pragma once
// Network/message structure of a general cognitive network and the set
// combinatorics used by the bound generators: common transmitters T_S,
// involved receivers R_S, the all-common reduction, downward-closed
// message families and receiver partitions.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rateregion {

// Sorted, duplicate-free list of 1-based node indices.
using IndexSet = std::vector<int>;

IndexSet sorted_unique(IndexSet v);
bool is_subset(const IndexSet& a, const IndexSet& b);
IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet set_intersection(const IndexSet& a, const IndexSet& b);
std::string index_set_str(const IndexSet& s);

// A message W_{tx -> rx}: known at the transmitter subset `tx`, to be
// decoded by the receiver subset `rx`. Canonical order is lexicographic
// by (tx, rx), both sorted.
struct MessageId {
    IndexSet tx;
    IndexSet rx;

    auto operator<=>(const MessageId&) const = default;
    std::string str() const;  // "{1,2|1}"
};

struct NetworkSpec {
    int n_tx = 0;
    int n_rx = 0;
    std::vector<MessageId> messages;  // canonical order, duplicate-free
};

struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Throws SpecError identifying the offending message position.
void validate_spec(const NetworkSpec& spec);

// T_S = intersection of tx sets; empty result is legal.
IndexSet common_transmitters(const std::vector<MessageId>& s);

// R_S = union of rx sets.
IndexSet involved_receivers(const std::vector<MessageId>& s);

// All-common reduction: one message per distinct tx set, all destined to
// j_all = union of every rx set in the spec. rate_map[r] lists the
// original message indices whose rates sum into reduced message r.
struct ReducedSpec {
    NetworkSpec reduced;
    std::vector<std::vector<int>> rate_map;
};
ReducedSpec all_common_reduction(const NetworkSpec& spec);

// All nonempty S' (as index lists into spec.messages) closed under
// "message with tx set i present => every message whose tx set is a
// subset of i present". Quantifies only over tx sets that appear in the
// spec. Requires one message per tx set (an all-common reduced spec).
std::vector<std::vector<int>> enumerate_closed_sets(const NetworkSpec& spec);

// Assignment of each message in S to one of its receivers; partition[k]
// is the receiver of s[k]. Count = product of |rx| over S.
using Partition = std::vector<int>;
std::vector<Partition> enumerate_partitions(const std::vector<MessageId>& s);

}  // namespace rateregion
