#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "convlab/convergence.hpp"

namespace convlab::lab {

enum class SpaceClass { convergence, pretopology, topology };

const char* to_string(SpaceClass c);
std::optional<SpaceClass> space_class_from_string(const std::string& s);

/// Largest exhaustive size per class: 3 for convergences, 4 otherwise.
std::size_t enumeration_limit(SpaceClass c);

/// Visits every space of the class on the carrier "a","b",... of size n, in
/// canonical order. Convergences are tables where each atom's set of
/// converging kernels is a down-set containing its singleton; atom 0 is the
/// most significant digit. Pretopologies are indexed by vicinity kernels
/// (the same digit order, kernels ascending), topologies are the
/// pretopologies with transitive vicinities. Throws BoundExceeded above
/// enumeration_limit.
void for_each_space(std::size_t n, SpaceClass c, const std::function<void(const Convergence&)>& visit);
std::vector<Convergence> enumerate(std::size_t n, SpaceClass c);
std::size_t count(std::size_t n, SpaceClass c);

}  // namespace convlab::lab
