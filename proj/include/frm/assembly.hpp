#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frm/biframe.hpp"

namespace frm {

enum class Variant { plain, cf, pm };

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

// An assembly biframe. Main is A_fin(L); the sides are subframes of it given
// by generator sets (indices into main).
struct AssemblyResult {
  Variant variant = Variant::plain;
  FinitaryAssembly fin;
  Biframe biframe;
  std::vector<Elem> plus_generators;
  std::vector<Elem> minus_generators;
  Subframe plus_side;
  Subframe minus_side;

  const FiniteFrame& main() const noexcept { return fin.frame(); }
  // Congruence behind an element of main.
  const Congruence& congruence(Elem i) const { return fin.congruence(i); }
};

// plain: ⟨∇e⁺x, Δe⁻x⟩ and ⟨∇e⁻x, Δe⁺x⟩
// cf:    closed congruences ⟨∇e⁺x, ∇e⁻x⟩ and finitary fitted ones, the joins of Δ(e⁺x ∨ e⁻y)
// pm:    ⟨∇e⁺x, Δe⁺x⟩ and ⟨∇e⁻x, Δe⁻x⟩
AssemblyResult assembly(const Biframe& b, Variant v, std::size_t cap = default_caps().coproduct);
// Same, reusing an already computed A_fin so all variants share one main frame.
AssemblyResult assembly(const Biframe& b, const FinitaryAssembly& fin, Variant v);

// The unit B → A(B): a ↦ ∇(e a) on the sides, x ↦ ∇(x) on main.
BiframeMap nabla_unit(const Biframe& b, const AssemblyResult& a);

// A(f): C ↦ the congruence generated by (f × f)[C]. Checked against the
// generator form ⋁ ∇(f x) ∩ Δ(f y) and for side preservation; throws
// Error{NotWellDefined} on any mismatch.
BiframeMap assembly_map(const BiframeMap& f, const AssemblyResult& source, const AssemblyResult& target);

struct PresentationReport {
  bool ok = false;
  std::size_t presented_size = 0;  // elements of the presented main frame
  std::vector<Elem> iso;           // presented element ↦ element of A_fin
  std::string failure;             // empty when ok
};

// Builds the frame presented by L⁺ ⊕ Filt(L⁻) ⊕ L⁻ ⊕ Filt(L⁺) modulo C_L and
// the complementation relations a ∧ ↑a = ⊥, a ∨ ↑a = ⊤, and checks that
// a ↦ ∇(e a), ↑a ↦ Δ(e a) induces a biframe isomorphism onto the assembly of
// the given variant. The four-fold coproduct is built in stages: each
// L ⊕ Filt(L) is quotiented by its complementation relations first.
PresentationReport presentation_check(const Biframe& b, const AssemblyResult& a,
                                      std::size_t side_cap = default_caps().presentation_side,
                                      std::size_t cap = default_caps().coproduct);

// Given f : B → M such that every f±(x) has a bicomplement in M, finds the
// mediating map g : A(B) → M (plain variant) with g ∘ ∇ = f by searching the
// complement candidates of each generator Δ(e±x). Throws
// Error{PreconditionViolated} when a bicomplement is missing,
// Error{NoMediatingMap} or Error{NonUniqueMediatingMap} otherwise.
struct MediatingMap {
  BiframeMap g;
  std::size_t assignments_tried = 0;
};

MediatingMap universal_property_check(const BiframeMap& f, const AssemblyResult& a);

// The coframe S(B) of biquotients: element i is biquotient(B, C_i) for the i-th
// member of A_fin, ordered by the reverse of inclusion.
struct BiquotientLattice {
  FiniteFrame order;  // A_fin with the order reversed
  std::vector<BiquotientResult> members;
  std::vector<bool> positive;  // C_i is induced from a congruence on L⁺
  std::vector<bool> negative;  // C_i is induced from a congruence on L⁻
};

BiquotientLattice biquotient_lattice(const Biframe& b, const FinitaryAssembly& fin);

}  // namespace frm
