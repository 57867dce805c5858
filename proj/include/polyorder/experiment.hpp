#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyorder/cone.hpp"
#include "polyorder/order_ideal.hpp"
#include "polyorder/toy_rings.hpp"

namespace polyorder {

enum class Conclusion { Pass, FailRefuted, Inconclusive };

std::string conclusion_name(Conclusion c);

enum class ToyRing { R1, R2 };

/// Machine-checkable record of one order-unit-cancellation run: is u an
/// order unit, does u*a land in the positive cone, and does a itself.
struct ExperimentReport {
  std::string setting;
  std::string u_repr;
  std::string a_repr;
  Conclusion conclusion = Conclusion::Inconclusive;
  std::string error;  // nonempty when u failed the order-unit check

  // Cone-backed runs.
  std::optional<OrderUnitVerdict> u_check;
  std::optional<MembershipVerdict> ua_check;
  std::optional<MembershipVerdict> a_check;
  std::optional<PositivityPipelineResult> pipeline;

  // Toy-ring runs (exact decisions).
  std::optional<bool> toy_u_order_unit;
  std::optional<bool> toy_ua_member;
  std::optional<bool> toy_a_member;

  SearchCaps caps;
  double wall_seconds = 0.0;
};

ExperimentReport run_cancellation_experiment(const GeneratedCone& cone, const SparsePoly& u, const SparsePoly& a,
                                             const SearchCaps& caps = SearchCaps{});
ExperimentReport run_cancellation_experiment(ToyRing ring, const SparsePoly& u, const SparsePoly& a);

/// Named, self-checking reproduction of one of the worked examples.
struct GalleryCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct GalleryResult {
  std::string case_name;
  bool all_pass = false;
  std::vector<GalleryCheck> checks;
};

std::vector<std::string> gallery_names();
GalleryResult run_gallery_case(const std::string& name, const SearchCaps& caps = SearchCaps{});

}  // namespace polyorder
