#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "core/plane_graph.hpp"

namespace nonrep {

enum class GenKind {
  Cycle,
  MaximalPlanar,
  Stacked,
  BowtieChain,
  RandomConnected,
  RandomBiconnected,
  Tree,
};

std::optional<GenKind> parse_gen_kind(const std::string& name);
const char* to_string(GenKind kind);

/// Random plane graph. For BowtieChain, `n` is the number of cut vertices.
PlaneGraph generate(GenKind kind, std::size_t n, std::uint64_t seed);

}  // namespace nonrep
