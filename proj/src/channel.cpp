#include "rateregion/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "rateregion/kernels.hpp"

namespace rateregion {

namespace {

std::size_t product_of(const std::vector<int>& v) {
    std::size_t p = 1;
    for (int a : v) p *= static_cast<std::size_t>(a);
    return p;
}

// uniform double in [0,1) from the top 53 bits; bit-reproducible
double next_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int default_aux_alphabet(const MessageId& m, const Channel& ch) {
    int p = 1;
    for (int k : m.tx) p *= ch.input_alphabets[k - 1];
    return p;
}

}  // namespace

std::size_t Channel::n_inputs_total() const { return product_of(input_alphabets); }
std::size_t Channel::n_outputs_total() const { return product_of(output_alphabets); }

void Channel::validate() const {
    if (input_alphabets.empty() || output_alphabets.empty())
        throw ChannelError("channel: missing alphabets");
    for (int a : input_alphabets)
        if (a < 1) throw ChannelError("channel: input alphabet size < 1");
    for (int a : output_alphabets)
        if (a < 1) throw ChannelError("channel: output alphabet size < 1");
    const std::size_t nx = n_inputs_total(), ny = n_outputs_total();
    if (transition.size() != nx * ny)
        throw ChannelError("channel: transition table has wrong size");
    for (std::size_t x = 0; x < nx; ++x) {
        double row = 0.0;
        for (std::size_t y = 0; y < ny; ++y) {
            const double v = transition[x * ny + y];
            if (v < 0.0) throw ChannelError("channel: negative probability");
            row += v;
        }
        if (std::abs(row - 1.0) > 1e-9)
            throw ChannelError("channel: conditional row " + std::to_string(x) +
                               " sums to " + std::to_string(row));
    }
}

FactorizationSchema FactorizationSchema::outer(const NetworkSpec& spec,
                                               const Channel& ch,
                                               int aux_alphabet_override) {
    validate_spec(spec);
    FactorizationSchema s;
    s.mode = SchemaMode::OuterIndependent;
    s.spec = spec;
    for (const auto& m : spec.messages) {
        SchemaComponent c;
        c.var = aux_outer(m);
        c.alphabet = aux_alphabet_override > 0 ? aux_alphabet_override
                                               : default_aux_alphabet(m, ch);
        s.components.push_back(std::move(c));
    }
    for (int k = 1; k <= spec.n_tx; ++k) {
        SchemaComponent c;
        c.var = input_var(k);
        c.alphabet = ch.input_alphabets[k - 1];
        for (size_t i = 0; i < spec.messages.size(); ++i) {
            const auto& m = spec.messages[i];
            if (std::binary_search(m.tx.begin(), m.tx.end(), k)) {
                c.parents.push_back(aux_outer(m));
                c.parent_alphabets.push_back(s.components[i].alphabet);
            }
        }
        s.components.push_back(std::move(c));
    }
    return s;
}

FactorizationSchema FactorizationSchema::inner(const NetworkSpec& reduced,
                                               const Channel& ch,
                                               int aux_alphabet_override) {
    validate_spec(reduced);
    FactorizationSchema s;
    s.mode = SchemaMode::InnerSuperposition;
    s.spec = reduced;

    // chain order: bottom codewords (larger encoder sets) first
    std::vector<MessageId> order = reduced.messages;
    std::sort(order.begin(), order.end(), [](const MessageId& a, const MessageId& b) {
        if (a.tx.size() != b.tx.size()) return a.tx.size() > b.tx.size();
        return a < b;
    });

    std::vector<int> alph(order.size());
    for (size_t i = 0; i < order.size(); ++i)
        alph[i] = aux_alphabet_override > 0 ? aux_alphabet_override
                                            : default_aux_alphabet(order[i], ch);

    for (size_t i = 0; i < order.size(); ++i) {
        SchemaComponent c;
        c.var = aux_inner(order[i]);
        c.alphabet = alph[i];
        for (size_t l = 0; l < i; ++l) {
            if (order[l].tx != order[i].tx && is_subset(order[i].tx, order[l].tx)) {
                c.parents.push_back(aux_inner(order[l]));
                c.parent_alphabets.push_back(alph[l]);
            }
        }
        s.components.push_back(std::move(c));
    }
    for (int k = 1; k <= reduced.n_tx; ++k) {
        SchemaComponent c;
        c.var = input_var(k);
        c.alphabet = ch.input_alphabets[k - 1];
        for (size_t i = 0; i < order.size(); ++i) {
            if (std::binary_search(order[i].tx.begin(), order[i].tx.end(), k)) {
                c.parents.push_back(aux_inner(order[i]));
                c.parent_alphabets.push_back(alph[i]);
            }
        }
        s.components.push_back(std::move(c));
    }
    return s;
}

int JointDistribution::var_index(const VariableId& v) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == v) return static_cast<int>(i);
    return -1;
}

int JointDistribution::output_index(int z) const { return var_index(output_var(z)); }

JointDistribution build_joint(const FactorizationSchema& schema, const Channel& ch,
                              const ComponentPmfs& components) {
    ch.validate();
    if ((int)ch.input_alphabets.size() != schema.spec.n_tx ||
        (int)ch.output_alphabets.size() != schema.spec.n_rx)
        throw ChannelError("build_joint: channel alphabets do not match spec");
    if (components.size() != schema.components.size())
        throw ChannelError("build_joint: component count mismatch");

    JointDistribution j;
    j.mode = schema.mode;
    for (const auto& c : schema.components) {
        j.vars.push_back(c.var);
        j.alphabets.push_back(c.alphabet);
    }
    for (int z = 1; z <= schema.spec.n_rx; ++z) {
        j.vars.push_back(output_var(z));
        j.alphabets.push_back(ch.output_alphabets[z - 1]);
    }

    const size_t nv = j.vars.size();
    std::size_t total = 1;
    for (int a : j.alphabets) {
        total *= static_cast<std::size_t>(a);
        if (total > kMaxJointEntries)
            throw ChannelError("build_joint: joint exceeds entry cap");
    }

    // per-component: table, own position, parent positions
    struct Comp {
        const std::vector<double>* table;
        int self;
        std::vector<int> parents;
        std::vector<int> parent_alph;
        int alphabet;
    };
    std::vector<Comp> comps;
    for (size_t ci = 0; ci < schema.components.size(); ++ci) {
        const auto& sc = schema.components[ci];
        Comp c;
        c.table = &components[ci];
        c.self = static_cast<int>(ci);
        c.alphabet = sc.alphabet;
        c.parent_alph = sc.parent_alphabets;
        std::size_t expect = static_cast<std::size_t>(sc.alphabet) *
                             product_of(sc.parent_alphabets);
        if (c.table->size() != expect)
            throw ChannelError("build_joint: component " + sc.var.str() +
                               " arity mismatch");
        for (const auto& pv : sc.parents) {
            int idx = -1;
            for (size_t q = 0; q < schema.components.size(); ++q)
                if (schema.components[q].var == pv) idx = static_cast<int>(q);
            if (idx < 0) throw ChannelError("build_joint: unresolved parent");
            c.parents.push_back(idx);
        }
        for (double v : *c.table)
            if (v < 0.0) throw ChannelError("build_joint: negative component entry");
        comps.push_back(std::move(c));
    }

    const int n_tx = schema.spec.n_tx, n_rx = schema.spec.n_rx;
    const int x_base = static_cast<int>(schema.components.size()) - n_tx;
    const int y_base = static_cast<int>(schema.components.size());
    const std::size_t ny = ch.n_outputs_total();

    j.pmf.assign(total, 0.0);
    std::vector<int> cfg(nv, 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
        double p = 1.0;
        for (const auto& c : comps) {
            std::size_t row = 0;
            for (size_t q = 0; q < c.parents.size(); ++q)
                row = row * static_cast<std::size_t>(c.parent_alph[q]) +
                      static_cast<std::size_t>(cfg[c.parents[q]]);
            p *= (*c.table)[row * c.alphabet + cfg[c.self]];
            if (p == 0.0) break;
        }
        if (p != 0.0) {
            std::size_t xi = 0, yi = 0;
            for (int k = 0; k < n_tx; ++k)
                xi = xi * ch.input_alphabets[k] + cfg[x_base + k];
            for (int z = 0; z < n_rx; ++z)
                yi = yi * ch.output_alphabets[z] + cfg[y_base + z];
            p *= ch.transition[xi * ny + yi];
        }
        j.pmf[flat] = p;
        // row-major increment, last variable fastest
        for (size_t v = nv; v-- > 0;) {
            if (++cfg[v] < j.alphabets[v]) break;
            cfg[v] = 0;
        }
    }

    const double sum = std::accumulate(j.pmf.begin(), j.pmf.end(), 0.0);
    if (std::abs(sum - 1.0) > 1e-9)
        throw ChannelError("build_joint: joint sums to " + std::to_string(sum));
    return j;
}

double entropy_of(const JointDistribution& joint, const std::vector<int>& var_idx) {
    if (var_idx.empty()) return 0.0;
    std::size_t msize = 1;
    for (int v : var_idx) msize *= static_cast<std::size_t>(joint.alphabets[v]);
    std::vector<double> marg(msize, 0.0);

    // stride of each selected variable inside the marginal index
    const size_t nv = joint.vars.size();
    std::vector<std::size_t> stride(nv, 0), radix(nv);
    {
        std::size_t s = 1;
        for (size_t q = var_idx.size(); q-- > 0;) {
            stride[var_idx[q]] = s;
            s *= static_cast<std::size_t>(joint.alphabets[var_idx[q]]);
        }
    }
    std::vector<int> cfg(nv, 0);
    for (std::size_t flat = 0; flat < joint.pmf.size(); ++flat) {
        std::size_t mi = 0;
        for (int v : var_idx) mi += stride[v] * static_cast<std::size_t>(cfg[v]);
        marg[mi] += joint.pmf[flat];
        for (size_t v = nv; v-- > 0;) {
            if (++cfg[v] < joint.alphabets[v]) break;
            cfg[v] = 0;
        }
    }
    return -kernels::neg_entropy_sum(marg.data(), marg.size());
}

double mutual_info(const JointDistribution& joint, const MITerm& term) {
    const int y = joint.output_index(term.output);
    if (y < 0) throw ChannelError("mutual_info: unknown output Y" +
                                  std::to_string(term.output));
    auto resolve = [&](const std::vector<VariableId>& vs) {
        std::vector<int> out;
        for (const auto& v : vs) {
            int i = joint.var_index(v);
            if (i < 0)
                throw ChannelError("mutual_info: unknown variable " + v.str());
            out.push_back(i);
        }
        return out;
    };
    const std::vector<int> t = resolve(term.targets);
    const std::vector<int> c = resolve(term.conditioning);

    auto join = [](std::vector<int> a, const std::vector<int>& b) {
        a.insert(a.end(), b.begin(), b.end());
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        return a;
    };
    const auto yc = join({y}, c);
    const auto tc = join(t, c);
    const auto ytc = join(yc, t);

    // H(Y|C) - H(Y|T,C)
    return (entropy_of(joint, yc) - entropy_of(joint, c)) -
           (entropy_of(joint, ytc) - entropy_of(joint, tc));
}

std::vector<ComponentPmfs> sample_component_pmfs(const FactorizationSchema& schema,
                                                 int n, std::uint64_t seed) {
    if (n < 1) throw ChannelError("sample_component_pmfs: n must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<ComponentPmfs> out;

    auto uniform_sample = [&]() {
        ComponentPmfs s;
        for (const auto& c : schema.components) {
            std::size_t rows = product_of(c.parent_alphabets);
            s.push_back(std::vector<double>(rows * c.alphabet,
                                            1.0 / static_cast<double>(c.alphabet)));
        }
        return s;
    };
    auto deterministic_sample = [&]() {
        ComponentPmfs s;
        for (const auto& c : schema.components) {
            std::size_t rows = product_of(c.parent_alphabets);
            std::vector<double> t(rows * c.alphabet, 0.0);
            for (std::size_t r = 0; r < rows; ++r) {
                // point mass at the digit-sum of the parent configuration
                std::size_t rem = r, digit_sum = 0;
                for (size_t q = c.parent_alphabets.size(); q-- > 0;) {
                    digit_sum += rem % c.parent_alphabets[q];
                    rem /= c.parent_alphabets[q];
                }
                t[r * c.alphabet + digit_sum % c.alphabet] = 1.0;
            }
            s.push_back(std::move(t));
        }
        return s;
    };
    auto dirichlet_sample = [&]() {
        ComponentPmfs s;
        for (const auto& c : schema.components) {
            std::size_t rows = product_of(c.parent_alphabets);
            std::vector<double> t(rows * c.alphabet);
            for (std::size_t r = 0; r < rows; ++r) {
                double total = 0.0;
                for (int a = 0; a < c.alphabet; ++a) {
                    const double e = -std::log(1.0 - next_uniform(rng));
                    t[r * c.alphabet + a] = e;
                    total += e;
                }
                for (int a = 0; a < c.alphabet; ++a) t[r * c.alphabet + a] /= total;
            }
            s.push_back(std::move(t));
        }
        return s;
    };

    if (n >= 3) {
        out.push_back(uniform_sample());
        out.push_back(deterministic_sample());
    }
    while ((int)out.size() < n) out.push_back(dirichlet_sample());
    return out;
}

std::vector<JointDistribution> sample_distributions(const FactorizationSchema& schema,
                                                    const Channel& ch, int n,
                                                    std::uint64_t seed) {
    std::vector<JointDistribution> out;
    for (auto& comp : sample_component_pmfs(schema, n, seed))
        out.push_back(build_joint(schema, ch, comp));
    return out;
}

HPolytope evaluate_bounds(const BoundSet& bound_set, const JointDistribution& joint) {
    return evaluate_bounds(bound_set, joint, bound_set.spec.messages);
}

HPolytope evaluate_bounds(const BoundSet& bound_set, const JointDistribution& joint,
                          const std::vector<MessageId>& axes) {
    for (const auto& b : bound_set.bounds) {
        const bool needs_outer =
            b.tag == BoundTag::Han || b.tag == BoundTag::Cutset;
        if (needs_outer != (joint.mode == SchemaMode::OuterIndependent))
            throw ChannelError("evaluate_bounds: schema mode does not match bound tag");
    }
    HPolytope p;
    p.dim = static_cast<int>(axes.size());
    for (const auto& b : bound_set.bounds) {
        Halfspace h;
        h.a.assign(axes.size(), 0.0);
        for (const auto& m : b.lhs) {
            auto it = std::find(axes.begin(), axes.end(), m);
            if (it == axes.end())
                throw ChannelError("evaluate_bounds: rate axis missing for " + m.str());
            h.a[static_cast<size_t>(it - axes.begin())] += 1.0;
        }
        double rhs = 0.0;
        for (const auto& t : b.rhs) rhs += mutual_info(joint, t);
        h.b = std::max(rhs, 0.0);  // clip -0/rounding noise
        p.halfspaces.push_back(std::move(h));
    }
    return p;
}

}  // namespace rateregion
