#include "rateregion/network.hpp"

#include <algorithm>
#include <set>

namespace rateregion {

IndexSet sorted_unique(IndexSet v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool is_subset(const IndexSet& a, const IndexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
    IndexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::string index_set_str(const IndexSet& s) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s[i]);
    }
    return out;
}

std::string MessageId::str() const {
    return "{" + index_set_str(tx) + "|" + index_set_str(rx) + "}";
}

void validate_spec(const NetworkSpec& spec) {
    if (spec.n_tx < 1 || spec.n_rx < 1)
        throw SpecError("network must have at least one transmitter and one receiver");
    std::set<MessageId> seen;
    for (size_t pos = 0; pos < spec.messages.size(); ++pos) {
        const MessageId& m = spec.messages[pos];
        const std::string where = "message " + std::to_string(pos) + " " + m.str();
        if (m.tx.empty()) throw SpecError(where + ": empty tx_set");
        if (m.rx.empty()) throw SpecError(where + ": empty rx_set");
        if (!std::is_sorted(m.tx.begin(), m.tx.end()) ||
            std::adjacent_find(m.tx.begin(), m.tx.end()) != m.tx.end() ||
            !std::is_sorted(m.rx.begin(), m.rx.end()) ||
            std::adjacent_find(m.rx.begin(), m.rx.end()) != m.rx.end())
        throw SpecError(where + ": index sets must be sorted and duplicate-free");
        for (int k : m.tx)
            if (k < 1 || k > spec.n_tx)
                throw SpecError(where + ": tx index " + std::to_string(k) + " out of range");
        for (int z : m.rx)
            if (z < 1 || z > spec.n_rx)
                throw SpecError(where + ": rx index " + std::to_string(z) + " out of range");
        if (!seen.insert(m).second)
            throw SpecError(where + ": duplicate message");
        if (pos > 0 && !(spec.messages[pos - 1] < m))
            throw SpecError(where + ": messages not in canonical order");
    }
}

IndexSet common_transmitters(const std::vector<MessageId>& s) {
    if (s.empty()) throw SpecError("common_transmitters: empty set");
    IndexSet acc = s[0].tx;
    for (size_t i = 1; i < s.size(); ++i) acc = set_intersection(acc, s[i].tx);
    return acc;
}

IndexSet involved_receivers(const std::vector<MessageId>& s) {
    if (s.empty()) throw SpecError("involved_receivers: empty set");
    IndexSet acc;
    for (const auto& m : s) acc = set_union(acc, m.rx);
    return acc;
}

ReducedSpec all_common_reduction(const NetworkSpec& spec) {
    validate_spec(spec);
    IndexSet j_all;
    for (const auto& m : spec.messages) j_all = set_union(j_all, m.rx);

    // distinct tx sets in canonical order
    std::vector<IndexSet> tx_sets;
    for (const auto& m : spec.messages) tx_sets.push_back(m.tx);
    std::sort(tx_sets.begin(), tx_sets.end());
    tx_sets.erase(std::unique(tx_sets.begin(), tx_sets.end()), tx_sets.end());

    ReducedSpec out;
    out.reduced.n_tx = spec.n_tx;
    out.reduced.n_rx = spec.n_rx;
    for (const auto& tx : tx_sets) {
        out.reduced.messages.push_back({tx, j_all});
        std::vector<int> originals;
        for (size_t i = 0; i < spec.messages.size(); ++i)
            if (spec.messages[i].tx == tx) originals.push_back(static_cast<int>(i));
        out.rate_map.push_back(std::move(originals));
    }
    return out;
}

std::vector<std::vector<int>> enumerate_closed_sets(const NetworkSpec& spec) {
    const size_t m = spec.messages.size();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (spec.messages[i].tx == spec.messages[j].tx)
                throw SpecError("enumerate_closed_sets: spec is not all-common reduced");

    std::vector<std::vector<int>> out;
    for (uint32_t mask = 1; mask < (1u << m); ++mask) {
        bool closed = true;
        for (size_t i = 0; i < m && closed; ++i) {
            if (!(mask >> i & 1)) continue;
            // every present message whose tx set is a subset must also be in
            for (size_t l = 0; l < m && closed; ++l) {
                if (l == i || (mask >> l & 1)) continue;
                if (is_subset(spec.messages[l].tx, spec.messages[i].tx)) closed = false;
            }
        }
        if (!closed) continue;
        std::vector<int> members;
        for (size_t i = 0; i < m; ++i)
            if (mask >> i & 1) members.push_back(static_cast<int>(i));
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::vector<Partition> enumerate_partitions(const std::vector<MessageId>& s) {
    if (s.empty()) throw SpecError("enumerate_partitions: empty set");
    std::vector<Partition> out;
    Partition cur(s.size());
    // mixed-radix counter over the rx choices of each message
    std::vector<size_t> idx(s.size(), 0);
    for (;;) {
        for (size_t k = 0; k < s.size(); ++k) cur[k] = s[k].rx[idx[k]];
        out.push_back(cur);
        size_t k = s.size();
        while (k > 0) {
            --k;
            if (++idx[k] < s[k].rx.size()) break;
            idx[k] = 0;
            if (k == 0) return out;
        }
    }
}

}  // namespace rateregion
