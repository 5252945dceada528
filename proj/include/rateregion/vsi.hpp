#pragma once
// Very-strong-interference certification: per (S, z) obligation, try to
// discharge the inner-bound matching via condition i (symbolic), ii
// (strong-interference outer replacement, sampled) or iii (inner-bound
// redundancy, sampled), then assemble the resulting region.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rateregion/channel.hpp"
#include "rateregion/network.hpp"
#include "rateregion/polytope.hpp"

namespace rateregion {

inline constexpr double kMiTol = 1e-9;

struct Obligation {
    std::vector<int> s_prime;     // indices into the reduced spec's messages
    std::vector<int> s_original;  // expansion: indices into the original messages
    int z = 0;
};

struct SampleEvidence {
    int sample = 0;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct ConditionCheck {
    enum Kind { I, II, III } kind = I;
    enum Verdict { Certified, Falsified, Exhausted } verdict = Exhausted;
    std::string witness;                   // winning candidate, or empty
    std::vector<SampleEvidence> evidence;  // per-sample for the winner, or one
                                           // violation per failed candidate
};

struct ObligationResult {
    Obligation ob;
    std::vector<ConditionCheck> attempts;  // in check order i, ii, iii
    bool certified() const;
    const ConditionCheck* winner() const;
};

struct VSICertificate {
    bool certified = false;
    std::uint64_t seed = 0;
    int n_samples = 0;
    std::vector<ObligationResult> results;

    std::string report(const NetworkSpec& spec) const;
};

// One obligation per downward-closed S' of the reduced spec and receiver z.
std::vector<Obligation> obligations(const NetworkSpec& spec);

// i: z decodes every message of S (z in the intersection of rx sets).
ConditionCheck check_condition_i(const NetworkSpec& spec, const Obligation& ob);

// ii: some partition {S^z} of S makes the cut-term sum <= the matched
// single bound at the obligation's receiver, on every outer-schema sample.
ConditionCheck check_condition_ii(const NetworkSpec& spec, const Obligation& ob,
                                  const std::vector<JointDistribution>& outer_samples);

// iii: some collection of at most k_max (closed set, receiver) pairs whose
// sets cover S' — not the obligation itself, and not entirely at the
// obligation's own receiver — has rhs-sum <= the obligation's bound on
// every inner-schema sample.
ConditionCheck check_condition_iii(const NetworkSpec& reduced, const Obligation& ob,
                                   const std::vector<JointDistribution>& inner_samples,
                                   int k_max = 2);

struct VSIResult {
    VSICertificate certificate;
    RegionEstimate region;   // inner-bound region in original rates (if certified)
    BoundSet region_bounds;  // the expanded inner bound set the region evaluates
};

VSIResult vsi_capacity(const NetworkSpec& spec, const Channel& channel, int n_samples,
                       std::uint64_t seed);

}  // namespace rateregion
