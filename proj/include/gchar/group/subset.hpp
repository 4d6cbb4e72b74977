#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gchar/group/abelian.hpp"

namespace gchar {

/// Subset of a group of order at most 64, bit g set iff element g belongs.
using Subset = std::uint64_t;

constexpr std::size_t kMaxSubsetGroup = 64;

inline Subset singleton(std::size_t g) { return Subset{1} << g; }
inline bool subset_has(Subset s, std::size_t g) { return (s >> g) & 1U; }
inline std::size_t subset_size(Subset s) { return static_cast<std::size_t>(__builtin_popcountll(s)); }
Subset full_subset(std::size_t n);

std::vector<std::size_t> subset_elements(Subset s);
Subset subset_of(const std::vector<std::size_t>& elements);

/// {gh : g in a, h in b}.
Subset subset_product(const AbelianGroup& g, Subset a, Subset b);
/// Image of s under an element map.
Subset subset_image(const std::vector<std::size_t>& map, Subset s);
/// g * s.
Subset subset_translate(const AbelianGroup& g, std::size_t x, Subset s);

/// "{0,1}" or "{(0,1),(1,0)}"; "{}" for the empty set.
std::string subset_string(const AbelianGroup& g, Subset s);
/// Inverse of subset_string; throws Parse.
Subset parse_subset(const AbelianGroup& g, const std::string& text);

/// Throws InvalidArgument if |G| is too large for bitmask subsets.
void require_subset_group(const AbelianGroup& g);

}  // namespace gchar
