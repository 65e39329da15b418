#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hdet/types.hpp"

namespace hdet {

/// GHZ, C1, C2, C3, YC, W, HD, L. Throws UnknownState.
PureState4 named_state(std::string_view name);
const std::vector<std::string>& named_state_names();

enum class Family {
  Gabcd,
  Labc2,
  La2b2,
  La2_03p1,
  Lab3,
  La4,
  L05p3,
  L07p1,
  L03p1_03p1,
};

struct FamilyParams {
  Family family = Family::Gabcd;
  std::vector<cplx> params;
};

std::size_t family_arity(Family f);
std::string_view family_tag(Family f);
/// Throws UnknownState for an unrecognized tag.
Family family_from_tag(std::string_view tag);
const std::vector<Family>& all_families();

/// Amplitudes exactly as printed (not normalized). Throws ArityMismatch.
Amplitudes4 verstraete_amplitudes(const FamilyParams& p);
PureState4 verstraete_state(const FamilyParams& p);

/// Closed-form S, T, hdet of the unnormalized printed state. Throws
/// ArityMismatch.
InvariantTriple verstraete_invariants_closed_form(const FamilyParams& p);

/// Divides S, T, hdet of an unnormalized state by norm^8, norm^12, norm^24.
InvariantTriple normalize_invariants(const InvariantTriple& raw, double norm);

}  // namespace hdet
