#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "convlab/convergence.hpp"

namespace convlab::lab {

using Json = nlohmann::ordered_json;

enum class Completion { strict, isotone };

/// Parses a space document:
///   {"carrier": [...], "completion": "strict"|"isotone",
///    "limits": [{"kernel": [...], "limits": [...]}, ...]}
/// Strict documents list every nonempty kernel exactly once. Isotone
/// documents may be partial and are completed from the largest kernels
/// down: L(K) = specified(K) ∪ ⋃_{K′ ⊋ K} L(K′) ∪ point rule.
/// Throws InputError (unknown atom, duplicate kernel, axiom violation with
/// its witness) or BoundExceeded (carrier above bounds.max_carrier).
Convergence parse_space(const Json& doc, const Bounds& bounds = {});
Convergence parse_space_text(const std::string& text, const Bounds& bounds = {});

/// Strict document: kernels in ascending bit order, atoms in carrier order.
Json serialize_space(const Convergence& xi);
/// Two-space indented JSON followed by a newline.
std::string dump(const Json& doc);

/// {"domain": space, "codomain": space, "assignment": {"a": "x", ...}}
SpaceMap parse_map(const Json& doc, const Bounds& bounds = {});
SpaceMap parse_map_text(const std::string& text, const Bounds& bounds = {});
Json serialize_map(const SpaceMap& m);

/// Atom lists and assignments without spaces attached.
Json serialize_subset(const Carrier& c, Subset s);
Subset parse_subset(const Carrier& c, const Json& atoms);
Json serialize_atom_map(const AtomMap& f);
AtomMap parse_atom_map(const Json& doc);

std::string read_file(const std::string& path);

}  // namespace convlab::lab
