// Canonical complexes and matrices used by the examples and tests.

#ifndef SRPOS_FIXTURES_HPP
#define SRPOS_FIXTURES_HPP

#include "srpos/constructions.hpp"
#include "srpos/quadratic.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace srpos {

std::vector<std::string> fixture_complex_names();
/// Throws on an unknown name.
SimplicialComplex fixture_complex(std::string_view name);

std::vector<std::string> fixture_matrix_names();
PartialMatrix fixture_matrix(std::string_view name);

/// Two nodes x, y joined by a path block (x -> y) and a fan of two
/// triangles (y -> x); the complex of fixture "thick-two-block".
Thickening two_block_thickening();

/// Cycle on vertices "1" .. "n".
SimplicialComplex cycle_complex(int n);

} // namespace srpos

#endif
