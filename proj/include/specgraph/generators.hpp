#pragma once

#include <map>

#include "specgraph/sequence.hpp"

namespace specgraph {

class GeneratorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Named sequence constructors. Common parameter: levels=N (prefix G_0..G_N).
// Generator-specific parameters: variant (modification_patterns: plain |
// crossed), seed (edge_splitting_seq: path:k | cycle:k | claw | discrete:k),
// alpha_step/beta_step (cantor_fan).
Sequence generate(const std::string& name, const std::map<std::string, std::string>& params);

std::vector<std::string> generator_names();

} // namespace specgraph
