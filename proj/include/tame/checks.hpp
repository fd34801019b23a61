#pragma once

#include "tame/starverify.hpp"

namespace tame {

// Batch checks behind `tamectl verify-paper`. Each group is deterministic and
// returns its results in a fixed order.

/// Commutator filtration, homothety grid, Nagata, jet inversion, abelianization.
SuiteReport filtration_checks(Field f, int jet);
/// Word builders and the torus operations.
SuiteReport generation_checks(Field f, int jet);
/// verify_suite plus hiking and inclusion-exclusion.
SuiteReport free_algebra_checks(Field f, int jet);

/// Concatenates the checks of several reports over the same field and jet.
SuiteReport merge_reports(const std::vector<SuiteReport>& parts);

}  // namespace tame
