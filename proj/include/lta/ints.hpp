// Copyright (c) the lta contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace lta {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Numeric-aware string order: digit runs compare by value, so q!9 < q!10.
// Used everywhere a canonical state order is needed (merge survivors,
// iteration order, serialization).
bool natural_less(const std::string& a, const std::string& b);

struct NaturalLess {
  using is_transparent = void;
  bool operator()(const std::string& a, const std::string& b) const {
    return natural_less(a, b);
  }
};

}  // namespace lta
