// rateregion: generate, evaluate and compare rate-bound families of a
// general multiple-access / cognitive network, and certify the very
// strong interference regime.
//
// Exit codes: 0 success/certified, 2 invalid input, 3 not certified.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rateregion/bounds.hpp"
#include "rateregion/channel.hpp"
#include "rateregion/io.hpp"
#include "rateregion/network.hpp"
#include "rateregion/polytope.hpp"
#include "rateregion/vsi.hpp"

namespace {

using namespace rateregion;

struct CommonOpts {
    std::string spec_path, spec_preset_name;
    std::string channel_path, channel_preset_name;
    std::string formulation = "han";
    std::string out_path;
    std::string axes;
    int samples = 200;
    int grid = 33;
    std::uint64_t seed = 42;
    bool seed_set = false;
    double tol = -1.0;
};

std::uint64_t effective_seed(const CommonOpts& o) {
    if (o.seed_set) return o.seed;
    if (const char* env = std::getenv("RATEREGION_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 42;
}

NetworkSpec load_spec(const CommonOpts& o) {
    if (!o.spec_path.empty() && !o.spec_preset_name.empty())
        throw IoError("give either --spec or --preset, not both");
    if (!o.spec_path.empty()) return load_spec_file(o.spec_path);
    if (!o.spec_preset_name.empty()) {
        auto s = spec_preset(o.spec_preset_name);
        if (!s) throw IoError("unknown spec preset: " + o.spec_preset_name);
        return *s;
    }
    throw IoError("missing --spec or --preset");
}

Channel load_channel(const CommonOpts& o) {
    if (!o.channel_path.empty() && !o.channel_preset_name.empty())
        throw IoError("give either --channel or --channel-preset, not both");
    if (!o.channel_path.empty()) return load_channel_file(o.channel_path);
    if (!o.channel_preset_name.empty()) {
        auto c = channel_preset(o.channel_preset_name);
        if (!c) throw IoError("unknown channel preset: " + o.channel_preset_name);
        return *c;
    }
    throw IoError("missing --channel or --channel-preset");
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(o.out_path, std::ios::binary);
        if (!f) throw IoError("cannot write " + o.out_path);
        f << text;
    }
}

// axis token: 1-based message position, or "tx|rx" with '.'-joined indices
// (e.g. "1.2|1.2"); two tokens separated by ','.
int parse_axis(const std::string& tok, const std::vector<MessageId>& msgs) {
    if (tok.find('|') == std::string::npos) {
        const int pos = std::atoi(tok.c_str());
        if (pos < 1 || pos > (int)msgs.size())
            throw IoError("axis position out of range: " + tok);
        return pos - 1;
    }
    auto parse_dotted = [](const std::string& s) {
        IndexSet out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, '.')) out.push_back(std::atoi(item.c_str()));
        return sorted_unique(std::move(out));
    };
    const auto bar = tok.find('|');
    MessageId m{parse_dotted(tok.substr(0, bar)), parse_dotted(tok.substr(bar + 1))};
    for (size_t i = 0; i < msgs.size(); ++i)
        if (msgs[i] == m) return static_cast<int>(i);
    throw IoError("no such rate axis: " + tok);
}

std::pair<int, int> parse_axes(const std::string& axes,
                               const std::vector<MessageId>& msgs) {
    const auto comma = axes.find(',');
    if (axes.empty() || comma == std::string::npos)
        throw IoError("--axes expects two comma-separated rate names");
    const int a = parse_axis(axes.substr(0, comma), msgs);
    const int b = parse_axis(axes.substr(comma + 1), msgs);
    if (a == b) throw IoError("--axes must name two distinct rates");
    return {a, b};
}

BoundSet make_bounds(const NetworkSpec& spec, const std::string& formulation) {
    if (formulation == "han") return han_bounds(spec);
    if (formulation == "compact") return compact_bounds(spec);
    if (formulation == "cutset") return cutset_bounds(spec);
    if (formulation == "inner") return inner_bounds(spec);
    throw IoError("unknown formulation: " + formulation);
}

int cmd_bounds(const CommonOpts& o) {
    const NetworkSpec spec = load_spec(o);
    BoundSet bs = make_bounds(spec, o.formulation);
    if (o.formulation == "inner") bs = expand_inner(bs);
    std::string text = bound_set_text(bs);
    text += "formulation=" + o.formulation +
            " bounds=" + std::to_string(bs.bounds.size()) + "\n";
    emit(o, text);
    return 0;
}

int cmd_compare(const CommonOpts& o) {
    const NetworkSpec spec = load_spec(o);
    if (spec.n_rx != 1) throw IoError("compare requires a MAC spec (n_rx = 1)");
    const Channel ch = load_channel(o);
    const std::uint64_t seed = effective_seed(o);
    const double tol = o.tol > 0 ? o.tol : 0.02;

    const BoundSet han = han_bounds(spec);
    const BoundSet compact = compact_bounds(spec);
    if (compact.spec.messages.size() != spec.messages.size())
        throw IoError("compare: spec has duplicate tx sets; rate spaces differ");

    RegionEstimate ra, rb;
    for (const auto& j : sample_distributions(FactorizationSchema::outer(spec, ch),
                                              ch, o.samples, seed))
        ra.members.push_back(evaluate_bounds(han, j));
    for (const auto& j : sample_distributions(
             FactorizationSchema::inner(compact.spec, ch), ch, o.samples, seed))
        rb.members.push_back(evaluate_bounds(compact, j));

    const auto dirs = default_directions((int)spec.messages.size());
    const auto res = region_equal(ra, rb, dirs, tol);

    std::ostringstream ss;
    ss << "formulation_a=han formulation_b=compact samples=" << o.samples
       << " seed=" << seed << "\n";
    char buf[128];
    std::snprintf(buf, sizeof(buf), "max_deviation=%.6f tol=%.6f verdict=%s\n",
                  res.max_deviation, tol, res.equal ? "EQUAL" : "DIFFERENT");
    ss << buf << "worst_direction=";
    for (size_t i = 0; i < res.worst_direction.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%s%.6f", i ? "," : "",
                      res.worst_direction[i]);
        ss << buf;
    }
    ss << "\n";
    emit(o, ss.str());
    return 0;
}

int cmd_checkvsi(const CommonOpts& o) {
    const NetworkSpec spec = load_spec(o);
    const Channel ch = load_channel(o);
    const std::uint64_t seed = effective_seed(o);
    const VSIResult res = vsi_capacity(spec, ch, o.samples, seed);

    std::string text = res.certificate.report(spec);
    if (!o.axes.empty()) {
        const auto [a, b] = parse_axes(o.axes, res.region_bounds.spec.messages);
        text += slice_csv(slice_2d(res.region, a, b, o.grid));
    }
    emit(o, text);
    return res.certificate.certified ? 0 : 3;
}

int cmd_slice(const CommonOpts& o) {
    const NetworkSpec spec = load_spec(o);
    const Channel ch = load_channel(o);
    const std::uint64_t seed = effective_seed(o);

    BoundSet bs = make_bounds(spec, o.formulation);
    FactorizationSchema schema =
        (o.formulation == "han" || o.formulation == "cutset")
            ? FactorizationSchema::outer(spec, ch)
            : FactorizationSchema::inner(bs.spec, ch);
    if (o.formulation == "inner") bs = expand_inner(bs);

    RegionEstimate est;
    for (const auto& j : sample_distributions(schema, ch, o.samples, seed))
        est.members.push_back(evaluate_bounds(bs, j));

    const auto [a, b] = parse_axes(o.axes, bs.spec.messages);
    emit(o, slice_csv(slice_2d(est, a, b, o.grid)));
    return 0;
}

void add_common(CLI::App* app, CommonOpts& o, bool needs_channel) {
    app->add_option("--spec", o.spec_path, "spec file (JSON)");
    app->add_option("--preset", o.spec_preset_name, "spec preset name");
    if (needs_channel) {
        app->add_option("--channel", o.channel_path, "channel file (JSON)");
        app->add_option("--channel-preset", o.channel_preset_name,
                        "channel preset name");
        app->add_option("--samples", o.samples, "number of sampled distributions");
        app->add_option("--seed", o.seed, "RNG seed")
            ->each([&o](const std::string&) { o.seed_set = true; });
        app->add_option("--tol", o.tol, "tolerance override");
    }
    app->add_option("--out", o.out_path, "write output to file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rate-region toolkit for general multiple-access networks"};
    app.require_subcommand(1);

    CommonOpts ob, oc, ov, os;

    CLI::App* bounds = app.add_subcommand("bounds", "generate a bound family");
    add_common(bounds, ob, false);
    bounds->add_option("--formulation", ob.formulation, "han|compact|cutset|inner");

    CLI::App* compare =
        app.add_subcommand("compare", "Han vs compact formulation, sampled unions");
    add_common(compare, oc, true);

    CLI::App* checkvsi =
        app.add_subcommand("checkvsi", "very strong interference certification");
    add_common(checkvsi, ov, true);
    checkvsi->add_option("--axes", ov.axes, "also emit a 2-D slice (Ra,Rb)");
    checkvsi->add_option("--grid", ov.grid, "slice angle count");

    CLI::App* slice = app.add_subcommand("slice", "2-D slice of an evaluated region");
    add_common(slice, os, true);
    slice->add_option("--formulation", os.formulation, "han|compact|cutset|inner");
    slice->add_option("--axes", os.axes, "rate axes Ra,Rb")->required();
    slice->add_option("--grid", os.grid, "slice angle count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (bounds->parsed()) return cmd_bounds(ob);
        if (compare->parsed()) return cmd_compare(oc);
        if (checkvsi->parsed()) return cmd_checkvsi(ov);
        if (slice->parsed()) return cmd_slice(os);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
