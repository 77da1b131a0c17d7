#include "cutoffmatch/gadgets.hpp"

#include <array>
#include <stdexcept>

namespace cutoffmatch {
namespace {

using Prefs = std::map<std::string, std::vector<std::string>>;

InstanceSpec example1() {
  return {{"a1", "a2"},
          {{"p1", 1, {"a1", "a2"}}, {"p2", 1, {"a2", "a1"}}},
          {{"s1", Rational(7, 10), {"p1", "p2"}}, {"s2", Rational(1, 2), {"p2"}}},
          Prefs{{"a1", {"p2", "p1"}}, {"a2", {"p1", "p2"}}}};
}

InstanceSpec example2() {
  return {{"a1", "a2"},
          {{"p1", 1, {"a1", "a2"}}, {"p2", 1, {"a2", "a1"}}},
          {{"s", Rational(1), {"p1", "p2"}}},
          Prefs{{"a1", {"p2", "p1"}}, {"a2", {"p1", "p2"}}}};
}

InstanceSpec example3() {
  return {{"a1", "a2", "a3", "a4"},
          {{"p1", 1, {"a1", "a4"}},
           {"p2", 1, {"a2", "a1"}},
           {"p3", 1, {"a3", "a2"}},
           {"p4", 1, {"a4", "a3"}}},
          {{"s1", Rational(1), {"p1", "p3"}}, {"s2", Rational(1), {"p2"}}, {"s3", Rational(1), {"p4"}}},
          Prefs{{"a1", {"p2", "p1"}}, {"a2", {"p3", "p2"}}, {"a3", {"p4", "p3"}}, {"a4", {"p1", "p4"}}}};
}

InstanceSpec example4() {
  return {{"a1", "a2", "a3"},
          {{"p1", 1, {"a2", "a1"}}, {"p2", 1, {"a1", "a2"}}, {"p3", 1, {"a1", "a3"}}},
          {{"s", Rational(2), {"p1", "p2", "p3"}}},
          Prefs{{"a1", {"p1", "p2", "p3"}}, {"a2", {"p2", "p1"}}, {"a3", {"p3"}}}};
}

InstanceSpec thm7_item1(bool misreport) {
  return {{"a1", "a2"},
          {{"p1", 1, {"a2", "a1"}}, {"p2", 1, {"a2", "a1"}}},
          {{"s", Rational(1), {"p1", "p2"}}},
          Prefs{{"a1", {"p2", "p1"}},
                {"a2", misreport ? std::vector<std::string>{"p2", "p1"} : std::vector<std::string>{"p2"}}}};
}

InstanceSpec thm7_item3() {
  return {{"a1", "a2", "a3"},
          {{"p1", 1, {"a1", "a2"}}, {"p2", 2, {"a2", "a1"}}, {"p3", 1, {"a3"}}},
          {{"s", Rational(2), {"p1", "p2", "p3"}}},
          Prefs{{"a1", {"p2", "p1"}}, {"a2", {"p1", "p2"}}, {"a3", {"p3"}}}};
}

InstanceSpec thm7_item4() {
  return {{"a1", "a2"},
          {{"p1", 1, {"a2", "a1"}}, {"p2", 1, {"a1", "a2"}}},
          {{"s", Rational(2), {"p1", "p2"}}},
          Prefs{{"a1", {"p1", "p2"}}, {"a2", {"p2", "p1"}}}};
}

InstanceSpec egalitarian_fixture() {
  return {{"a1"},
          {{"p1", 1, {"a1"}}},
          {{"s1", Rational(1, 4), {"p1"}}, {"s2", Rational(2), {"p1"}}},
          Prefs{{"a1", {"p1"}}}};
}

constexpr std::array<std::string_view, 9> kNames = {
    "example1",   "example2_unsolvable",  "example3_cycle",
    "example4_distinct", "thm7_item1", "thm7_item1_misreport",
    "thm7_item3", "thm7_item4",           "egalitarian_fixture"};

}  // namespace

std::span<const std::string_view> gadget_names() { return kNames; }

InstanceSpec gadget_spec(std::string_view name) {
  if (name == "example1") return example1();
  if (name == "example2_unsolvable") return example2();
  if (name == "example3_cycle") return example3();
  if (name == "example4_distinct") return example4();
  if (name == "thm7_item1") return thm7_item1(false);
  if (name == "thm7_item1_misreport") return thm7_item1(true);
  if (name == "thm7_item3") return thm7_item3();
  if (name == "thm7_item4") return thm7_item4();
  if (name == "egalitarian_fixture") return egalitarian_fixture();
  throw std::invalid_argument("unknown gadget: " + std::string(name));
}

Instance gadget(std::string_view name) { return Instance::from_spec(gadget_spec(name)); }

}  // namespace cutoffmatch
