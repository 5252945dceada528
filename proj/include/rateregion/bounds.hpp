#pragma once
// Symbolic generation of the four rate-bound families over abstract
// conditional mutual-information terms: the Han family (one bound per
// message subset, single receiver), its compact restriction to
// downward-closed subsets, the cut-set outer family, and the
// superposition inner family on the all-common reduced spec.

#include <string>
#include <vector>

#include "rateregion/network.hpp"

namespace rateregion {

enum class VarKind { Input, AuxOuter, AuxInner, Output };

// X_k (Input) / Y_z (Output), keyed by node index; U_{i->j} (AuxOuter)
// or U'_{i->j_all} (AuxInner), keyed by message.
struct VariableId {
    VarKind kind = VarKind::Input;
    int node = 0;        // Input / Output only
    MessageId msg;       // aux kinds only

    auto operator<=>(const VariableId&) const = default;
    std::string str() const;  // "X1", "Y2", "U[{1|1}]", "U'[{1|1,2}]"
};

VariableId input_var(int tx);
VariableId output_var(int z);
VariableId aux_outer(const MessageId& m);
VariableId aux_inner(const MessageId& m);

// I(Y_output ; targets | conditioning)
struct MITerm {
    int output = 0;
    std::vector<VariableId> targets;
    std::vector<VariableId> conditioning;

    auto operator<=>(const MITerm&) const = default;
};

enum class BoundTag { Han, Compact, Cutset, Inner };
const char* tag_name(BoundTag t);

// sum of lhs rates <= sum of rhs terms
struct RateBound {
    std::vector<MessageId> lhs;
    std::vector<MITerm> rhs;
    BoundTag tag = BoundTag::Han;
    std::string provenance;  // not part of content equality
};

bool same_content(const RateBound& a, const RateBound& b);

struct BoundSet {
    NetworkSpec spec;                      // spec whose rates the lhs refer to
    std::vector<RateBound> bounds;
    std::vector<std::vector<int>> rate_map;  // inner only: reduced -> original
    NetworkSpec original_spec;               // inner only
};

// Sorts lhs/targets/conditioning; idempotent. Dedup uses the canonical form.
RateBound canonicalize(RateBound b);

// Full outer family: requires a single-receiver spec; 2^m - 1 bounds.
BoundSet han_bounds(const NetworkSpec& spec);

// Compact family: the Han bounds restricted to downward-closed subsets,
// with superposition (inner) auxiliaries.
BoundSet compact_bounds(const NetworkSpec& spec);

// Cut-set family: every nonempty S, every receiver partition of S.
BoundSet cutset_bounds(const NetworkSpec& spec);

// Superposition inner family on the all-common reduction: every
// downward-closed S', every decoder z. Bounds are in reduced rates;
// rate_map re-expresses them.
BoundSet inner_bounds(const NetworkSpec& spec);

// Re-express an inner BoundSet in the original message rates.
BoundSet expand_inner(const BoundSet& inner);

// Line form, e.g. "R[{1|1}]+R[{1|1,2}] <= I(Y1; X1,X2 | X2,U[{2|2}])".
std::string bound_line(const RateBound& b);
std::string bound_set_text(const BoundSet& bs);

}  // namespace rateregion
