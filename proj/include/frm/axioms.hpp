#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frm/biframe.hpp"
#include "frm/bispace.hpp"

namespace frm {

enum class Axiom { subfit, fit, pairwise_t1 };

std::string_view to_string(Axiom a);
std::optional<Axiom> parse_axiom(std::string_view name);  // subfit | fit | t1

struct ConditionWitness {
  std::string description;
  std::vector<std::size_t> elements;  // indices named by the description, in order
};

// One entry per numbered condition; witnesses[i] is set exactly when
// condition i+1 fails.
struct AxiomVerdict {
  Axiom axiom = Axiom::subfit;
  std::vector<bool> condition_results;
  std::vector<std::optional<ConditionWitness>> witnesses;
  bool consistent = true;

  // The definitional condition; what the CLI reports as the verdict.
  bool holds() const { return condition_results.at(0); }
};

// ⋁{Δ(e⁺x ∨ e⁻y) : Δ(e⁺x ∨ e⁻y) ⊆ C}.
Congruence finitary_fitting(const Biframe& b, const Congruence& c);

// a, b range over the main component. Throws Error{SizeLimitExceeded} when
// |A_fin| exceeds the configured cap.
AxiomVerdict subfit_verdict(const Biframe& b);
AxiomVerdict subfit_verdict(const Biframe& b, const FinitaryAssembly& fin);
AxiomVerdict fit_verdict(const Biframe& b);
AxiomVerdict fit_verdict(const Biframe& b, const FinitaryAssembly& fin);
AxiomVerdict pairwise_t1_verdict(const Biframe& b);
AxiomVerdict pairwise_t1_verdict(const Biframe& b, const FinitaryAssembly& fin);

AxiomVerdict axiom_verdict(const Biframe& b, const FinitaryAssembly& fin, Axiom a);

}  // namespace frm
