#include "rateregion/vsi.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>

namespace rateregion {

namespace {

std::vector<VariableId> all_inputs(const NetworkSpec& spec) {
    std::vector<VariableId> xs;
    for (int k = 1; k <= spec.n_tx; ++k) xs.push_back(input_var(k));
    return xs;
}

std::string idx_members_str(const NetworkSpec& spec, const std::vector<int>& idx) {
    std::string s = "{";
    for (size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ",";
        s += spec.messages[idx[i]].str();
    }
    return s + "}";
}

MITerm mi_term(const NetworkSpec& spec, int z, const std::vector<int>& cond_msgs,
               bool inner) {
    MITerm t;
    t.output = z;
    t.targets = all_inputs(spec);
    for (int i : cond_msgs)
        t.conditioning.push_back(inner ? aux_inner(spec.messages[i])
                                       : aux_outer(spec.messages[i]));
    return t;
}

std::vector<int> complement_idx(const std::vector<int>& s, size_t m) {
    std::vector<int> out;
    size_t j = 0;
    for (int i = 0; i < static_cast<int>(m); ++i) {
        if (j < s.size() && s[j] == i) { ++j; continue; }
        out.push_back(i);
    }
    return out;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    return buf;
}

}  // namespace

bool ObligationResult::certified() const { return winner() != nullptr; }

const ConditionCheck* ObligationResult::winner() const {
    for (const auto& a : attempts)
        if (a.verdict == ConditionCheck::Certified) return &a;
    return nullptr;
}

std::vector<Obligation> obligations(const NetworkSpec& spec) {
    validate_spec(spec);
    const auto red = all_common_reduction(spec);
    std::vector<Obligation> out;
    for (const auto& sp : enumerate_closed_sets(red.reduced)) {
        std::vector<int> expansion;
        for (int r : sp)
            expansion.insert(expansion.end(), red.rate_map[r].begin(),
                             red.rate_map[r].end());
        std::sort(expansion.begin(), expansion.end());
        for (int z = 1; z <= spec.n_rx; ++z)
            out.push_back({sp, expansion, z});
    }
    return out;
}

ConditionCheck check_condition_i(const NetworkSpec& spec, const Obligation& ob) {
    ConditionCheck c;
    c.kind = ConditionCheck::I;
    std::vector<MessageId> msgs;
    for (int i : ob.s_original) msgs.push_back(spec.messages[i]);
    IndexSet common = msgs.front().rx;
    for (const auto& m : msgs) common = set_intersection(common, m.rx);
    if (std::binary_search(common.begin(), common.end(), ob.z)) {
        c.verdict = ConditionCheck::Certified;
        c.witness = "S^" + std::to_string(ob.z) + "=S";
    } else {
        c.verdict = ConditionCheck::Exhausted;
    }
    return c;
}

ConditionCheck check_condition_ii(const NetworkSpec& spec, const Obligation& ob,
                                  const std::vector<JointDistribution>& outer_samples) {
    ConditionCheck c;
    c.kind = ConditionCheck::II;
    if (outer_samples.empty()) return c;

    const size_t m = spec.messages.size();
    std::vector<MessageId> s_msgs;
    for (int i : ob.s_original) s_msgs.push_back(spec.messages[i]);

    const MITerm rhs_term =
        mi_term(spec, ob.z, complement_idx(ob.s_original, m), /*inner=*/false);
    std::vector<double> rhs_vals;
    for (const auto& j : outer_samples) rhs_vals.push_back(mutual_info(j, rhs_term));

    for (const auto& part : enumerate_partitions(s_msgs)) {
        // one cut term per receiver with a nonempty block
        std::vector<MITerm> lhs_terms;
        for (int z : sorted_unique(part)) {
            std::vector<int> block;
            for (size_t k = 0; k < part.size(); ++k)
                if (part[k] == z) block.push_back(ob.s_original[k]);
            lhs_terms.push_back(
                mi_term(spec, z, complement_idx(block, m), /*inner=*/false));
        }
        std::string witness;
        for (size_t k = 0; k < part.size(); ++k) {
            if (k) witness += ",";
            witness += s_msgs[k].str() + "->" + std::to_string(part[k]);
        }
        witness = "partition{" + witness + "} z'=" + std::to_string(ob.z);

        bool pass = true;
        std::vector<SampleEvidence> ev;
        for (size_t si = 0; si < outer_samples.size(); ++si) {
            double lhs = 0.0;
            for (const auto& t : lhs_terms) lhs += mutual_info(outer_samples[si], t);
            ev.push_back({static_cast<int>(si), lhs, rhs_vals[si]});
            if (lhs > rhs_vals[si] + kMiTol) {
                pass = false;
                // keep only the violation for this candidate
                c.evidence.push_back(ev.back());
                break;
            }
        }
        if (pass) {
            c.verdict = ConditionCheck::Certified;
            c.witness = witness;
            c.evidence = std::move(ev);
            return c;
        }
    }
    c.verdict = ConditionCheck::Falsified;
    return c;
}

ConditionCheck check_condition_iii(const NetworkSpec& reduced, const Obligation& ob,
                                   const std::vector<JointDistribution>& inner_samples,
                                   int k_max) {
    ConditionCheck c;
    c.kind = ConditionCheck::III;
    if (inner_samples.empty() || k_max < 1) return c;

    const size_t m = reduced.messages.size();
    const auto closed = enumerate_closed_sets(reduced);

    // obligation's own bound value per sample
    const MITerm ob_term =
        mi_term(reduced, ob.z, complement_idx(ob.s_prime, m), /*inner=*/true);
    std::vector<double> ob_vals;
    for (const auto& j : inner_samples) ob_vals.push_back(mutual_info(j, ob_term));

    struct Pair {
        int set;  // index into `closed`
        int z;
    };
    std::vector<Pair> pool;
    for (size_t s = 0; s < closed.size(); ++s)
        for (int z = 1; z <= reduced.n_rx; ++z)
            pool.push_back({static_cast<int>(s), z});

    // candidate term values, computed lazily
    std::vector<std::vector<double>> pair_vals(pool.size());
    auto vals_of = [&](int pi) -> const std::vector<double>& {
        if (pair_vals[pi].empty()) {
            const MITerm t = mi_term(reduced, pool[pi].z,
                                     complement_idx(closed[pool[pi].set], m),
                                     /*inner=*/true);
            for (const auto& j : inner_samples)
                pair_vals[pi].push_back(mutual_info(j, t));
        }
        return pair_vals[pi];
    };

    auto covers = [&](const std::vector<int>& members) {
        std::vector<bool> hit(m, false);
        for (int pi : members)
            for (int msg : closed[pool[pi].set]) hit[msg] = true;
        for (int msg : ob.s_prime)
            if (!hit[msg]) return false;
        return true;
    };
    auto is_self = [&](int pi) {
        return pool[pi].z == ob.z && closed[pool[pi].set] == ob.s_prime;
    };
    auto admissible = [&](const std::vector<int>& members) {
        bool other_rx = false;
        for (int pi : members) {
            if (is_self(pi)) return false;
            if (pool[pi].z != ob.z) other_rx = true;
        }
        return other_rx && covers(members);
    };

    auto test_candidate = [&](const std::vector<int>& members) -> bool {
        std::string witness;
        for (int pi : members) {
            if (!witness.empty()) witness += ",";
            witness += "(S'=" + idx_members_str(reduced, closed[pool[pi].set]) +
                       " z=" + std::to_string(pool[pi].z) + ")";
        }
        witness = "collection{" + witness + "}";
        bool pass = true;
        std::vector<SampleEvidence> ev;
        for (size_t si = 0; si < inner_samples.size(); ++si) {
            double sum = 0.0;
            for (int pi : members) sum += vals_of(pi)[si];
            ev.push_back({static_cast<int>(si), sum, ob_vals[si]});
            if (sum > ob_vals[si] + kMiTol) {
                c.evidence.push_back(ev.back());
                return false;
            }
        }
        (void)pass;
        c.verdict = ConditionCheck::Certified;
        c.witness = witness;
        c.evidence = std::move(ev);
        return true;
    };

    // collections of size 1..k_max (unordered, no repetition)
    std::vector<int> members;
    std::function<bool(int, int)> rec = [&](int start, int remaining) -> bool {
        if (!members.empty() && admissible(members) && test_candidate(members))
            return true;
        if (remaining == 0) return false;
        for (int pi = start; pi < static_cast<int>(pool.size()); ++pi) {
            members.push_back(pi);
            if (rec(pi + 1, remaining - 1)) return true;
            members.pop_back();
        }
        return false;
    };
    if (rec(0, k_max)) return c;

    c.verdict = ConditionCheck::Falsified;
    if (c.evidence.empty()) c.verdict = ConditionCheck::Exhausted;
    return c;
}

VSIResult vsi_capacity(const NetworkSpec& spec, const Channel& channel, int n_samples,
                       std::uint64_t seed) {
    validate_spec(spec);
    channel.validate();
    const auto red = all_common_reduction(spec);

    const auto outer_schema = FactorizationSchema::outer(spec, channel);
    const auto inner_schema = FactorizationSchema::inner(red.reduced, channel);
    const auto outer_samples =
        sample_distributions(outer_schema, channel, n_samples, seed);
    const auto inner_samples =
        sample_distributions(inner_schema, channel, n_samples, seed);

    VSIResult out;
    out.certificate.seed = seed;
    out.certificate.n_samples = n_samples;
    out.certificate.certified = true;

    for (const auto& ob : obligations(spec)) {
        ObligationResult r;
        r.ob = ob;
        r.attempts.push_back(check_condition_i(spec, ob));
        if (!r.certified()) {
            r.attempts.push_back(check_condition_ii(spec, ob, outer_samples));
            if (!r.certified())
                r.attempts.push_back(
                    check_condition_iii(red.reduced, ob, inner_samples));
        }
        if (!r.certified()) out.certificate.certified = false;
        out.certificate.results.push_back(std::move(r));
    }

    out.region_bounds = expand_inner(inner_bounds(spec));
    for (const auto& j : inner_samples)
        out.region.members.push_back(evaluate_bounds(out.region_bounds, j));
    return out;
}

std::string VSICertificate::report(const NetworkSpec& spec) const {
    std::string out = "seed=" + std::to_string(seed) +
                      " samples=" + std::to_string(n_samples) + "\n";
    for (const auto& r : results) {
        out += "S=" + idx_members_str(spec, r.ob.s_original) +
               " z=" + std::to_string(r.ob.z) + " -> ";
        if (const ConditionCheck* w = r.winner()) {
            const char* names[] = {"i", "ii", "iii"};
            out += "condition=" + std::string(names[w->kind]);
            if (!w->witness.empty()) out += " witness=" + w->witness;
        } else {
            out += "condition=FAILED";
            for (const auto& a : r.attempts) {
                if (a.verdict != ConditionCheck::Falsified || a.evidence.empty())
                    continue;
                const char* names[] = {"i", "ii", "iii"};
                const auto& e = a.evidence.front();
                out += " " + std::string(names[a.kind]) +
                       ":sample=" + std::to_string(e.sample) + " lhs=" + fmt(e.lhs) +
                       " rhs=" + fmt(e.rhs);
            }
        }
        out += "\n";
    }
    return out;
}

}  // namespace rateregion
