#include "rateregion/bounds.hpp"

#include <algorithm>

namespace rateregion {

namespace {

// nonempty subsets of {0..m-1}, ordered by (size, lexicographic)
std::vector<std::vector<int>> nonempty_subsets(size_t m) {
    std::vector<std::vector<int>> out;
    for (uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<int> s;
        for (size_t i = 0; i < m; ++i)
            if (mask >> i & 1) s.push_back(static_cast<int>(i));
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<int> complement_of(const std::vector<int>& s, size_t m) {
    std::vector<int> out;
    size_t j = 0;
    for (int i = 0; i < static_cast<int>(m); ++i) {
        if (j < s.size() && s[j] == i) { ++j; continue; }
        out.push_back(i);
    }
    return out;
}

std::vector<VariableId> all_inputs(const NetworkSpec& spec) {
    std::vector<VariableId> xs;
    for (int k = 1; k <= spec.n_tx; ++k) xs.push_back(input_var(k));
    return xs;
}

std::string members_str(const NetworkSpec& spec, const std::vector<int>& idx) {
    std::string s = "{";
    for (size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ",";
        s += spec.messages[idx[i]].str();
    }
    return s + "}";
}

void push_dedup(std::vector<RateBound>& out, RateBound b) {
    b = canonicalize(std::move(b));
    for (const auto& e : out)
        if (same_content(e, b)) return;
    out.push_back(std::move(b));
}

}  // namespace

VariableId input_var(int tx) { return {VarKind::Input, tx, {}}; }
VariableId output_var(int z) { return {VarKind::Output, z, {}}; }
VariableId aux_outer(const MessageId& m) { return {VarKind::AuxOuter, 0, m}; }
VariableId aux_inner(const MessageId& m) { return {VarKind::AuxInner, 0, m}; }

std::string VariableId::str() const {
    switch (kind) {
        case VarKind::Input: return "X" + std::to_string(node);
        case VarKind::Output: return "Y" + std::to_string(node);
        case VarKind::AuxOuter: return "U[" + msg.str() + "]";
        case VarKind::AuxInner: return "U'[" + msg.str() + "]";
    }
    return "?";
}

const char* tag_name(BoundTag t) {
    switch (t) {
        case BoundTag::Han: return "han";
        case BoundTag::Compact: return "compact";
        case BoundTag::Cutset: return "cutset";
        case BoundTag::Inner: return "inner";
    }
    return "?";
}

bool same_content(const RateBound& a, const RateBound& b) {
    return a.tag == b.tag && a.lhs == b.lhs && a.rhs == b.rhs;
}

RateBound canonicalize(RateBound b) {
    auto uniq = [](auto& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    uniq(b.lhs);
    for (auto& t : b.rhs) {
        uniq(t.targets);
        uniq(t.conditioning);
    }
    std::sort(b.rhs.begin(), b.rhs.end());
    return b;
}

BoundSet han_bounds(const NetworkSpec& spec) {
    validate_spec(spec);
    if (spec.n_rx != 1) throw SpecError("han_bounds: not a MAC (N_RX must be 1)");
    BoundSet out;
    out.spec = spec;
    const auto xs = all_inputs(spec);
    for (const auto& s : nonempty_subsets(spec.messages.size())) {
        RateBound b;
        b.tag = BoundTag::Han;
        for (int i : s) b.lhs.push_back(spec.messages[i]);
        MITerm term;
        term.output = 1;
        term.targets = xs;
        for (int i : complement_of(s, spec.messages.size()))
            term.conditioning.push_back(aux_outer(spec.messages[i]));
        b.rhs.push_back(std::move(term));
        b.provenance = "S=" + members_str(spec, s);
        push_dedup(out.bounds, std::move(b));
    }
    return out;
}

BoundSet compact_bounds(const NetworkSpec& spec) {
    validate_spec(spec);
    if (spec.n_rx != 1) throw SpecError("compact_bounds: not a MAC (N_RX must be 1)");
    auto red = all_common_reduction(spec);
    BoundSet out;
    out.spec = red.reduced;
    out.rate_map = red.rate_map;
    out.original_spec = spec;
    const auto xs = all_inputs(red.reduced);
    for (const auto& s : enumerate_closed_sets(red.reduced)) {
        RateBound b;
        b.tag = BoundTag::Compact;
        for (int i : s) b.lhs.push_back(red.reduced.messages[i]);
        MITerm term;
        term.output = 1;
        term.targets = xs;
        for (int i : complement_of(s, red.reduced.messages.size()))
            term.conditioning.push_back(aux_inner(red.reduced.messages[i]));
        b.rhs.push_back(std::move(term));
        b.provenance = "S=" + members_str(red.reduced, s);
        push_dedup(out.bounds, std::move(b));
    }
    return out;
}

BoundSet cutset_bounds(const NetworkSpec& spec) {
    validate_spec(spec);
    BoundSet out;
    out.spec = spec;
    const size_t m = spec.messages.size();
    for (const auto& s : nonempty_subsets(m)) {
        std::vector<MessageId> s_msgs;
        for (int i : s) s_msgs.push_back(spec.messages[i]);
        for (const auto& part : enumerate_partitions(s_msgs)) {
            RateBound b;
            b.tag = BoundTag::Cutset;
            b.lhs = s_msgs;
            for (int z : sorted_unique(part)) {
                // block S^z and its complement w.r.t. all messages
                std::vector<int> block;
                for (size_t k = 0; k < s.size(); ++k)
                    if (part[k] == z) block.push_back(s[k]);
                if (block.empty()) continue;
                std::vector<int> co = complement_of(block, m);
                MITerm term;
                term.output = z;
                std::vector<MessageId> co_msgs;
                for (int i : co) co_msgs.push_back(spec.messages[i]);
                IndexSet cond_tx =
                    co_msgs.empty() ? IndexSet{} : common_transmitters(co_msgs);
                for (int k = 1; k <= spec.n_tx; ++k) {
                    VariableId x = input_var(k);
                    if (std::binary_search(cond_tx.begin(), cond_tx.end(), k))
                        term.conditioning.push_back(x);
                    else
                        term.targets.push_back(x);
                }
                for (const auto& msg : co_msgs)
                    term.conditioning.push_back(aux_outer(msg));
                b.rhs.push_back(std::move(term));
            }
            std::string pstr;
            for (size_t k = 0; k < s.size(); ++k) {
                if (k) pstr += ",";
                pstr += s_msgs[k].str() + "->" + std::to_string(part[k]);
            }
            b.provenance = "S=" + members_str(spec, s) + " partition={" + pstr + "}";
            push_dedup(out.bounds, std::move(b));
        }
    }
    return out;
}

BoundSet inner_bounds(const NetworkSpec& spec) {
    validate_spec(spec);
    auto red = all_common_reduction(spec);
    BoundSet out;
    out.spec = red.reduced;
    out.rate_map = red.rate_map;
    out.original_spec = spec;
    const auto xs = all_inputs(red.reduced);
    for (const auto& s : enumerate_closed_sets(red.reduced)) {
        for (int z = 1; z <= spec.n_rx; ++z) {
            RateBound b;
            b.tag = BoundTag::Inner;
            for (int i : s) b.lhs.push_back(red.reduced.messages[i]);
            MITerm term;
            term.output = z;
            term.targets = xs;
            for (int i : complement_of(s, red.reduced.messages.size()))
                term.conditioning.push_back(aux_inner(red.reduced.messages[i]));
            b.rhs.push_back(std::move(term));
            b.provenance =
                "S'=" + members_str(red.reduced, s) + " z=" + std::to_string(z);
            push_dedup(out.bounds, std::move(b));
        }
    }
    return out;
}

BoundSet expand_inner(const BoundSet& inner) {
    if (inner.rate_map.empty())
        throw SpecError("expand_inner: bound set has no rate map");
    BoundSet out;
    out.spec = inner.original_spec;
    for (const auto& b : inner.bounds) {
        RateBound e;
        e.tag = b.tag;
        e.rhs = b.rhs;
        e.provenance = b.provenance;
        for (const auto& lm : b.lhs) {
            // locate the reduced message and splice in its originals
            for (size_t r = 0; r < inner.spec.messages.size(); ++r) {
                if (inner.spec.messages[r] == lm) {
                    for (int oi : inner.rate_map[r])
                        e.lhs.push_back(inner.original_spec.messages[oi]);
                    break;
                }
            }
        }
        out.bounds.push_back(canonicalize(std::move(e)));
    }
    return out;
}

std::string bound_line(const RateBound& b) {
    std::string s;
    for (size_t i = 0; i < b.lhs.size(); ++i) {
        if (i) s += "+";
        s += "R[" + b.lhs[i].str() + "]";
    }
    s += " <= ";
    for (size_t t = 0; t < b.rhs.size(); ++t) {
        if (t) s += " + ";
        const MITerm& term = b.rhs[t];
        s += "I(Y" + std::to_string(term.output) + "; ";
        for (size_t i = 0; i < term.targets.size(); ++i) {
            if (i) s += ",";
            s += term.targets[i].str();
        }
        if (!term.conditioning.empty()) {
            s += " | ";
            for (size_t i = 0; i < term.conditioning.size(); ++i) {
                if (i) s += ",";
                s += term.conditioning[i].str();
            }
        }
        s += ")";
    }
    return s;
}

std::string bound_set_text(const BoundSet& bs) {
    std::string out;
    for (const auto& b : bs.bounds) out += bound_line(b) + "\n";
    return out;
}

}  // namespace rateregion
