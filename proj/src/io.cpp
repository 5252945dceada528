#include "rateregion/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rateregion {

namespace {

using nlohmann::json;

IndexSet parse_index_set(const json& j, const std::string& field) {
    if (!j.is_array()) throw IoError(field + ": expected an array of indices");
    IndexSet out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw IoError(field + ": non-integer index");
        out.push_back(v.get<int>());
    }
    return sorted_unique(std::move(out));
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

NetworkSpec parse_spec_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw IoError(std::string("spec: invalid JSON: ") + e.what());
    }
    NetworkSpec spec;
    try {
        spec.n_tx = j.at("n_tx").get<int>();
        spec.n_rx = j.at("n_rx").get<int>();
        int pos = 0;
        for (const auto& m : j.at("messages")) {
            MessageId msg;
            msg.tx = parse_index_set(m.at("tx"),
                                     "messages[" + std::to_string(pos) + "].tx");
            msg.rx = parse_index_set(m.at("rx"),
                                     "messages[" + std::to_string(pos) + "].rx");
            spec.messages.push_back(std::move(msg));
            ++pos;
        }
    } catch (const json::exception& e) {
        throw IoError(std::string("spec: ") + e.what());
    }
    std::sort(spec.messages.begin(), spec.messages.end());
    try {
        validate_spec(spec);
    } catch (const SpecError& e) {
        throw IoError(std::string("spec: ") + e.what());
    }
    return spec;
}

Channel parse_channel_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw IoError(std::string("channel: invalid JSON: ") + e.what());
    }
    Channel ch;
    try {
        const int n_tx = j.at("n_tx").get<int>();
        const int n_rx = j.at("n_rx").get<int>();
        ch.input_alphabets = j.at("input_alphabets").get<std::vector<int>>();
        ch.output_alphabets = j.at("output_alphabets").get<std::vector<int>>();
        if ((int)ch.input_alphabets.size() != n_tx)
            throw IoError("channel: input_alphabets length != n_tx");
        if ((int)ch.output_alphabets.size() != n_rx)
            throw IoError("channel: output_alphabets length != n_rx");
        ch.transition = j.at("transition").get<std::vector<double>>();
    } catch (const json::exception& e) {
        throw IoError(std::string("channel: ") + e.what());
    }
    try {
        ch.validate();
    } catch (const ChannelError& e) {
        throw IoError(e.what());
    }
    return ch;
}

NetworkSpec load_spec_file(const std::string& path) {
    return parse_spec_json(slurp(path));
}

Channel load_channel_file(const std::string& path) {
    return parse_channel_json(slurp(path));
}

std::optional<NetworkSpec> spec_preset(const std::string& name) {
    if (name == "classical-mac")
        return NetworkSpec{2, 1, {{{1}, {1}}, {{2}, {1}}}};
    if (name == "sw-mac")
        return NetworkSpec{2, 1, {{{1}, {1}}, {{1, 2}, {1}}, {{2}, {1}}}};
    if (name == "ifc2cm")
        return NetworkSpec{
            2, 2, {{{1}, {1}}, {{1}, {1, 2}}, {{2}, {1, 2}}, {{2}, {2}}}};
    return std::nullopt;
}

std::vector<std::string> spec_preset_names() {
    return {"classical-mac", "sw-mac", "ifc2cm"};
}

Channel deterministic_channel(
    std::vector<int> in_alph, std::vector<int> out_alph,
    const std::function<std::vector<int>(const std::vector<int>&)>& f) {
    Channel ch;
    ch.input_alphabets = std::move(in_alph);
    ch.output_alphabets = std::move(out_alph);
    std::size_t nx = 1, ny = 1;
    for (int a : ch.input_alphabets) nx *= a;
    for (int a : ch.output_alphabets) ny *= a;
    ch.transition.assign(nx * ny, 0.0);
    std::vector<int> x(ch.input_alphabets.size(), 0);
    for (std::size_t xi = 0; xi < nx; ++xi) {
        const std::vector<int> y = f(x);
        std::size_t yi = 0;
        for (size_t z = 0; z < y.size(); ++z) yi = yi * ch.output_alphabets[z] + y[z];
        ch.transition[xi * ny + yi] = 1.0;
        for (size_t k = x.size(); k-- > 0;) {
            if (++x[k] < ch.input_alphabets[k]) break;
            x[k] = 0;
        }
    }
    return ch;
}

std::optional<Channel> channel_preset(const std::string& name) {
    if (name == "mac-xor")
        return deterministic_channel({2, 2}, {2}, [](const std::vector<int>& x) {
            return std::vector<int>{x[0] ^ x[1]};
        });
    if (name == "mac-parallel")
        return deterministic_channel({2, 2}, {4}, [](const std::vector<int>& x) {
            return std::vector<int>{2 * x[0] + x[1]};
        });
    if (name == "ifc-dup")
        return deterministic_channel({2, 2}, {4, 4}, [](const std::vector<int>& x) {
            const int y = 2 * x[0] + x[1];
            return std::vector<int>{y, y};
        });
    if (name == "ifc-noise") {
        // receiver 1 sees (x1,x2) noiselessly, receiver 2 pure uniform noise
        Channel ch;
        ch.input_alphabets = {2, 2};
        ch.output_alphabets = {4, 2};
        ch.transition.assign(4 * 8, 0.0);
        for (int x1 = 0; x1 < 2; ++x1)
            for (int x2 = 0; x2 < 2; ++x2) {
                const int xi = 2 * x1 + x2;
                const int y1 = 2 * x1 + x2;
                for (int y2 = 0; y2 < 2; ++y2)
                    ch.transition[xi * 8 + y1 * 2 + y2] = 0.5;
            }
        return ch;
    }
    return std::nullopt;
}

std::vector<std::string> channel_preset_names() {
    return {"mac-xor", "mac-parallel", "ifc-dup", "ifc-noise"};
}

}  // namespace rateregion
