#pragma once

#include <string>

#include "multisieve/symmetric_set.hpp"

namespace multisieve {

/// Parses an explicit symmetric set from its JSON form:
///   { "ground_set": ["<label>", ...], "k": <int>,
///     "tuples": [["<label>", ...], ...], "symmetrize": <bool> }
/// With symmetrize=true the tuple list is closed under all coordinate
/// permutations; with symmetrize=false non-symmetric input is rejected with
/// the offending tuple named.
ExplicitSet load_explicit_set_text(const std::string& json_text);
ExplicitSet load_explicit_set_file(const std::string& path);

/// Canonical JSON form (sorted tuples, symmetrize=false); reloading yields
/// an equal set.
std::string dump_explicit_set_json(const ExplicitSet& X);
void dump_explicit_set_file(const ExplicitSet& X, const std::string& path);

} // namespace multisieve
