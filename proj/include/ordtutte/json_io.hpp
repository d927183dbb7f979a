#pragma once

#include <optional>
#include <string>
#include <utility>

#include "ordtutte/state_sum.hpp"

namespace ordtutte {

// Canonical JSON rendering:
//   {"n":..,"vertices":..,"ordering":[ids],"terms":[{"subgraph":[ids],
//    "q_power":..,"factors":[{"edge":..,"kind":"alpha"|"beta",
//    "arg":{"<edge_id>":"<coefficient>"}}]}]}
// Terms ascend by subgraph mask (bit r = r-th smallest edge id), factors
// follow processing order, arg keys ascend numerically. Only integers and
// canonical strings appear, so output is byte-stable across platforms and
// re-parsing plus re-rendering is the identity.
//
// With eps_point set, every coefficient polynomial is evaluated there and
// rendered as an exact rational string instead of a polynomial string.
std::string render_state_sum_json(
    const StateSum& s, const std::optional<std::pair<Rational, Rational>>& eps_point = {});

// Human-oriented listing, one term per line.
std::string render_state_sum_pretty(
    const StateSum& s, const std::optional<std::pair<Rational, Rational>>& eps_point = {});

}  // namespace ordtutte
