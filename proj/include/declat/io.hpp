#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "declat/decomp.hpp"
#include "declat/ideals.hpp"
#include "declat/lattice.hpp"
#include "declat/theorems.hpp"

namespace declat {

using Json = nlohmann::ordered_json;

// {"name", "elements", "covers" | "leq"}. Throws kParse with line or key
// context, or the validation error of the lattice itself.
Lattice parse_lattice_json(const std::string& text, const std::string& default_name = "lattice");
// Throws kIo when the file cannot be read.
Lattice load_lattice_file(const std::string& path);

// Round-trips through parse_lattice_json; "covers" in index order.
Json lattice_to_json(const Lattice& lattice);

// Labels of the carrier in index order.
std::vector<std::string> ideal_labels(const Lattice& lattice, const Ideal& ideal);
// "{0}" for the zero ideal, "(g]" otherwise.
std::string ideal_name(const Lattice& lattice, const Ideal& ideal);

Json spectrum_to_json(const Lattice& lattice, const SpectrumReport& report);
std::string spectrum_to_text(const Lattice& lattice, const SpectrumReport& report);

Json decomposition_to_json(const Lattice& lattice, const SpecialDecomposition& d);

Json instance_to_json(const Instance& instance);
std::string instance_to_text(const Instance& instance);
Json verdict_to_json(const TheoremVerdict& verdict);

// Hasse diagram: one node per element in index order, one edge per cover.
std::string to_dot(const Lattice& lattice);

}  // namespace declat
