#pragma once
// Spec/channel ingestion (JSON) and the built-in presets.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rateregion/channel.hpp"
#include "rateregion/network.hpp"

namespace rateregion {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// {"n_tx":2,"n_rx":1,"messages":[{"tx":[1],"rx":[1]}, ...]}
NetworkSpec parse_spec_json(const std::string& text);

// {"n_tx":..,"n_rx":..,"input_alphabets":[..],"output_alphabets":[..],
//  "transition":[..]} — flat row-major, x-config outer, y-config inner.
Channel parse_channel_json(const std::string& text);

NetworkSpec load_spec_file(const std::string& path);
Channel load_channel_file(const std::string& path);

// classical-mac, sw-mac, ifc2cm
std::optional<NetworkSpec> spec_preset(const std::string& name);
std::vector<std::string> spec_preset_names();

// mac-xor, mac-parallel, ifc-dup, ifc-noise
std::optional<Channel> channel_preset(const std::string& name);
std::vector<std::string> channel_preset_names();

// Deterministic channel y = f(x) with an optional uniform-noise receiver
// handled by the preset builders; general helper for tests and presets.
Channel deterministic_channel(std::vector<int> in_alph, std::vector<int> out_alph,
                              const std::function<std::vector<int>(const std::vector<int>&)>& f);

}  // namespace rateregion
