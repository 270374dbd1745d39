#pragma once

#include <functional>
#include <span>
#include <vector>

#include "rado/equation.hpp"

namespace rado {

// Visits every solution tuple in [1,n]^m in lexicographic order.
// The callback returns false to stop early.
using SolutionVisitor = std::function<bool(std::span<const Int>)>;

void for_each_solution(const LinearEquation& eq, Int n, const SolutionVisitor& visit);

// Same, restricted to tuples whose maximum entry equals t exactly.
void for_each_solution_with_max(const LinearEquation& eq, Int t, const SolutionVisitor& visit);

std::vector<SolutionTuple> solutions(const LinearEquation& eq, Int n);

// Distinct value sets {v : v appears in some solution tuple} of solutions with
// maximum entry exactly t, each sorted ascending; the list itself sorted.
// Enumerated over canonical multisets (non-decreasing within slots sharing a
// signed coefficient), so wide unit-sum equations do not pay the ordered
// tuple blowup.
std::vector<std::vector<Int>> solution_value_sets_at(const LinearEquation& eq, Int t);

// Decision: does eq have a solution using only the given values (sorted
// ascending, distinct)? If require > 0 the solution must use that value.
bool class_has_solution(const LinearEquation& eq, std::span<const Int> values, Int require = 0);

} // namespace rado
