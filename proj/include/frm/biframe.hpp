#pragma once

#include <optional>
#include <vector>

#include "frm/caps.hpp"
#include "frm/congruence.hpp"
#include "frm/constructions.hpp"
#include "frm/frame.hpp"
#include "frm/frame_hom.hpp"

namespace frm {

enum class Side { plus, minus };

// (L⁺, L⁻, L) with injective frame homs e± : L± → L whose images generate L.
class Biframe {
 public:
  // Throws Error{NotAHom, NotInjective, GenerationFails}. For GenerationFails
  // the witness is the least-index element of main that is not generated.
  Biframe(FrameHom embed_plus, FrameHom embed_minus);
  Biframe(FiniteFrame plus, FiniteFrame minus, FiniteFrame main, std::vector<Elem> embed_plus,
          std::vector<Elem> embed_minus);

  const FiniteFrame& plus() const noexcept { return e_plus_.source(); }
  const FiniteFrame& minus() const noexcept { return e_minus_.source(); }
  const FiniteFrame& main() const noexcept { return e_plus_.target(); }
  const FiniteFrame& side(Side s) const noexcept { return s == Side::plus ? plus() : minus(); }
  const FrameHom& e_plus() const noexcept { return e_plus_; }
  const FrameHom& e_minus() const noexcept { return e_minus_; }
  const FrameHom& embed(Side s) const noexcept { return s == Side::plus ? e_plus_ : e_minus_; }

  bool degenerate() const noexcept { return main().degenerate(); }

  friend bool operator==(const Biframe& a, const Biframe& b) {
    return a.e_plus_ == b.e_plus_ && a.e_minus_ == b.e_minus_;
  }

 private:
  void validate() const;

  FrameHom e_plus_;
  FrameHom e_minus_;
};

Biframe validate_biframe(FiniteFrame plus, FiniteFrame minus, FiniteFrame main, std::vector<Elem> embed_plus,
                         std::vector<Elem> embed_minus);

// (2, 2, 2) with identities.
Biframe two_biframe();
// (C3, F2, C3) with e⁺ = id and e⁻ the bounds inclusion.
Biframe sierpinski_biframe();

// Biframe isomorphism: a main-frame isomorphism carrying e⁺[L⁺], e⁻[L⁻] onto
// the corresponding images. Returns the main component of one, if any.
std::optional<std::vector<Elem>> find_biframe_isomorphism(const Biframe& a, const Biframe& b);

// A biframe map f : B → M, stored with all three components.
class BiframeMap {
 public:
  // Derives the side maps from a main-frame hom; throws Error{NotAHom} when
  // f∘e± does not land inside e±[M±].
  static BiframeMap from_main(const Biframe& source, const Biframe& target, const FrameHom& main);
  // Derives the main map from side homs by generation; throws
  // Error{NotWellDefined} when the extension is not a function.
  static BiframeMap from_sides(const Biframe& source, const Biframe& target, const FrameHom& plus,
                               const FrameHom& minus);
  static BiframeMap identity(const Biframe& b);

  const Biframe& source() const noexcept { return source_; }
  const Biframe& target() const noexcept { return target_; }
  const FrameHom& plus() const noexcept { return plus_; }
  const FrameHom& minus() const noexcept { return minus_; }
  const FrameHom& main() const noexcept { return main_; }

  friend bool operator==(const BiframeMap& a, const BiframeMap& b) { return a.main_ == b.main_; }

 private:
  BiframeMap(Biframe source, Biframe target, FrameHom plus, FrameHom minus, FrameHom main);

  Biframe source_;
  Biframe target_;
  FrameHom plus_;
  FrameHom minus_;
  FrameHom main_;
};

// g ∘ f
BiframeMap compose(const BiframeMap& g, const BiframeMap& f);

// Elements of main that are finite joins of e⁺(x) ∧ e⁻(y), ascending.
std::vector<Elem> fin_elements(const Biframe& b);

struct FinitaryAnalysis {
  Congruence fin_part;  // generated by C restricted to finitary elements
  bool is_finitary = false;
};

FinitaryAnalysis finitary_analysis(const Biframe& b, const Congruence& c);

struct FinitarinessReport {
  Coproduct presentation;  // K = L⁺ ⊕ L⁻
  FrameHom surjection;     // K → main, copair of e⁺ and e⁻
  Congruence c_l;          // kernel of the surjection
  FinitaryAnalysis analysis;
  // All generator inequalities inj⁺(a)∧inj⁻(a′) ≤ inj⁺(b)∨inj⁻(b′) that
  // hold in main, as pairs of K elements. They generate c_l (checked), but
  // are not reduced to a minimal set.
  std::vector<std::pair<Elem, Elem>> r_l;
  bool r_l_generates = false;
  bool is_finitary = false;
};

FinitarinessReport is_finitary_biframe(const Biframe& b, std::size_t cap = default_caps().coproduct);

struct BiquotientResult {
  Biframe biframe;
  Quotient quotient;
  FrameHom plus;   // L⁺ → L⁺/C, surjective
  FrameHom minus;  // L⁻ → L⁻/C, surjective
  bool biquotient = false;  // C is finitary
  bool degenerate = false;
};

BiquotientResult biquotient(const Biframe& b, const Congruence& c);

// 𝓛/C ≤ 𝓛/D in the biquotient order iff D ⊆ C.
bool biquotient_leq(const Congruence& c, const Congruence& d);

struct Bipseudocomplement {
  Elem value = 0;  // element of the opposite side
  bool is_bicomplement = false;
};

// ∼x = ⋁{y in the opposite side : e(x) ∧ e′(y) = ⊥}.
Bipseudocomplement bipseudocomplement(const Biframe& b, Elem x, Side side);

// ⋁{∇(e a) ∩ Δ(e b) : [a] ≤ [b] in L±/C_side}, the positive or negative
// congruence induced on main.
Congruence side_congruence(const Biframe& b, Side side, const Congruence& c_side);

// The frame A_fin(L) of finitary congruences, with the principal generators
// of each side and of main indexed into it.
struct FinitaryAssembly {
  CongruenceFrame family;
  std::vector<Elem> nabla_plus, delta_plus;    // indexed by L⁺
  std::vector<Elem> nabla_minus, delta_minus;  // indexed by L⁻
  std::vector<Elem> nabla_main, delta_main;    // indexed by main

  const FiniteFrame& frame() const noexcept { return family.frame; }
  const Congruence& congruence(Elem i) const { return family.congruences.at(i); }
  const std::vector<Elem>& nabla(Side s) const noexcept { return s == Side::plus ? nabla_plus : nabla_minus; }
  const std::vector<Elem>& delta(Side s) const noexcept { return s == Side::plus ? delta_plus : delta_minus; }
};

// Join closure of {∇(e⁺a) ∩ ∇(e⁻a′) ∩ Δ(e⁺b) ∩ Δ(e⁻b′)}. Throws
// Error{SizeLimitExceeded} past `cap` members.
FinitaryAssembly finitary_assembly(const Biframe& b, std::size_t cap = default_caps().coproduct);

// The same family computed as the subframe of A(L) generated by
// ∇(e±x) and Δ(e±x); used as an independent cross-check.
std::vector<Congruence> finitary_assembly_by_subframe(const Biframe& b, std::size_t cap = default_caps().coproduct);

}  // namespace frm
