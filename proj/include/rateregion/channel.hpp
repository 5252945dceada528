#pragma once
// Numeric side: discrete memoryless channels, joint pmfs under the
// independent-auxiliary (outer) and superposition (inner) factorization
// schemas, exact mutual-information evaluation, Dirichlet sampling of
// component distributions, and numeric instantiation of bound sets.

#include <cstdint>
#include <vector>

#include "rateregion/bounds.hpp"
#include "rateregion/network.hpp"
#include "rateregion/polytope.hpp"

namespace rateregion {

struct ChannelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// P(y_1..y_NRX | x_1..x_NTX), dense, x-config major / y-config minor,
// mixed-radix row-major within each group (x_1 outermost).
struct Channel {
    std::vector<int> input_alphabets;   // one per transmitter
    std::vector<int> output_alphabets;  // one per receiver
    std::vector<double> transition;

    std::size_t n_inputs_total() const;
    std::size_t n_outputs_total() const;
    void validate() const;  // rows sum to 1 within 1e-9, entries >= 0
};

enum class SchemaMode { OuterIndependent, InnerSuperposition };

// One conditional pmf P(var | parents); the table is indexed with the
// parent configuration major (parents in listed order) and var minor.
struct SchemaComponent {
    VariableId var;
    std::vector<VariableId> parents;
    int alphabet = 0;
    std::vector<int> parent_alphabets;
};

struct FactorizationSchema {
    SchemaMode mode = SchemaMode::OuterIndependent;
    std::vector<SchemaComponent> components;  // aux first (topological), then inputs
    NetworkSpec spec;

    // Outer: independent U per message, X_k | {U of messages with k in tx}.
    static FactorizationSchema outer(const NetworkSpec& spec, const Channel& ch,
                                     int aux_alphabet_override = 0);
    // Inner: U' per reduced message, chained superset-first; X_k likewise.
    // `reduced` must be all-common reduced (one message per tx set).
    static FactorizationSchema inner(const NetworkSpec& reduced, const Channel& ch,
                                     int aux_alphabet_override = 0);
};

struct JointDistribution {
    SchemaMode mode = SchemaMode::OuterIndependent;
    std::vector<VariableId> vars;   // aux..., X..., Y... (Y_z has kind Input, tx=-z)
    std::vector<int> alphabets;
    std::vector<double> pmf;        // row-major over vars

    int var_index(const VariableId& v) const;  // -1 if absent
    int output_index(int z) const;
};

inline constexpr std::size_t kMaxJointEntries = 10'000'000;

// One pmf table per schema component, matching arities.
using ComponentPmfs = std::vector<std::vector<double>>;

JointDistribution build_joint(const FactorizationSchema& schema, const Channel& ch,
                              const ComponentPmfs& components);

// I(Y_z ; targets | conditioning) in bits, exact marginalization.
double mutual_info(const JointDistribution& joint, const MITerm& term);

double entropy_of(const JointDistribution& joint, const std::vector<int>& var_idx);

// Deterministic given seed: symmetric Dirichlet(1) rows; when n >= 3 the
// first two samples are the all-uniform and all-deterministic corners.
std::vector<ComponentPmfs> sample_component_pmfs(const FactorizationSchema& schema,
                                                 int n, std::uint64_t seed);
std::vector<JointDistribution> sample_distributions(const FactorizationSchema& schema,
                                                    const Channel& ch, int n,
                                                    std::uint64_t seed);

// One half-space per bound over the rate axes (default: bound_set.spec's
// messages in canonical order); rhs = sum of term values.
HPolytope evaluate_bounds(const BoundSet& bound_set, const JointDistribution& joint);
HPolytope evaluate_bounds(const BoundSet& bound_set, const JointDistribution& joint,
                          const std::vector<MessageId>& axes);

}  // namespace rateregion
