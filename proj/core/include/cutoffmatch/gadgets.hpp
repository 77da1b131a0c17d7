#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cutoffmatch/instance.hpp"

namespace cutoffmatch {

// Built-in fixture instances, addressed by name:
//   example1              two supervisors, one of them too poor to fund p1 alone
//   example2_unsolvable   no strongly stable matching
//   example3_cycle        four-cycle with two strongly stable matchings
//   example4_distinct     weak, cutoff and strong stable sets all differ
//   thm7_item1            engine is manipulable; thm7_item1_misreport is the lie
//   thm7_item3            engine output depends on the project order
//   thm7_item4            a cutoff stable matching the engine never returns
//   egalitarian_fixture   one applicant, supervisors with budgets 1/4 and 2
std::span<const std::string_view> gadget_names();

// Throws std::invalid_argument for unknown names.
InstanceSpec gadget_spec(std::string_view name);
Instance gadget(std::string_view name);

}  // namespace cutoffmatch
