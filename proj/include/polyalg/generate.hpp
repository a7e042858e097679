#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polyalg/geometry.hpp"

namespace polyalg {

struct GenerateOptions {
  int max_rank = 10;
  bool closed_paths = false;
  bool no_zigzag = false;       // keep only closed paths without zig-zag walks
  std::optional<std::uint32_t> seed;  // deterministic shuffle of the stream
  std::optional<int> count;     // emit at most this many
  int cap = 14;                 // refuse max_rank beyond this
};

/// Polyominoes up to translation and the dihedral group, emitted as canonical
/// representatives in a deterministic order.
std::vector<Polyomino> generate(const GenerateOptions& opts);

/// All free polyominoes of rank 1..max_rank (canonical representatives).
std::vector<Polyomino> enumerate_polyominoes(int max_rank);

/// All closed paths of rank > 5 up to max_rank (canonical representatives).
std::vector<Polyomino> enumerate_closed_paths(int max_rank);

}  // namespace polyalg
