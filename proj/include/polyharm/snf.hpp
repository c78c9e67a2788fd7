#pragma once

#include <vector>

#include "polyharm/rational.hpp"

namespace polyharm {

// Nonzero elementary divisors of an integer matrix, in divisibility order.
std::vector<Int> smith_normal_form(std::vector<std::vector<Int>> a);

}  // namespace polyharm
