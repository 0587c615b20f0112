#pragma once

#include <string>
#include <vector>

#include "frm/assembly.hpp"
#include "frm/biframe.hpp"
#include "frm/bispace.hpp"

namespace frm {

// The bispectrum of a biframe: points are the frame points of main, in
// frame_points order; φ±(a) = {f : f(e± a) = ⊤}.
struct Bispectrum {
  FiniteBispace space;
  std::vector<FrameHom> points;
  std::vector<PointSet> phi_plus;   // indexed by L⁺
  std::vector<PointSet> phi_minus;  // indexed by L⁻
  std::vector<PointSet> phi_main;   // indexed by main

  const std::vector<PointSet>& phi(Side s) const noexcept { return s == Side::plus ? phi_plus : phi_minus; }
};

// Throws Error{SizeLimitExceeded} when main has more than 64 points.
Bispectrum bpt(const Biframe& b);

// Points of bpt(B) that are constant on the classes of C.
PointSet quotient_spectrum(const Bispectrum& spec, const Congruence& c);

// Checks that g ↦ g ∘ q is a bijection from bpt(B/C) onto the quotient
// spectrum carrying both topologies onto the subspace topologies. Returns an
// empty string on success, otherwise a description of the mismatch.
std::string quotient_spectrum_mismatch(const Biframe& b, const Bispectrum& spec, const Congruence& c);

struct FactsReport {
  bool joins = true;        // spec(⋁ Cᵢ) = ⋂ spec(Cᵢ)
  bool open_sides = true;   // spec(Δ(e a)) = φ(a)
  bool closed_sides = true; // spec(∇(e a)) = φ(a)ᶜ
  bool inequality = true;   // spec(e⁺x∧e⁻x′ ≤ e⁺y∨e⁻y′) = φ⁺(x)ᶜ ∪ φ⁻(x′)ᶜ ∪ φ⁺(y) ∪ φ⁻(y′)
  std::vector<std::string> failures;

  bool ok() const noexcept { return joins && open_sides && closed_sides && inequality; }
};

FactsReport spectra_facts(const Biframe& b, const Bispectrum& spec, const FinitaryAssembly& fin);

struct BisoberFamily {
  Family by_sets;        // finite intersections of φ⁺(a)ᶜ ∪ φ⁺(b) ∪ φ⁻(a′)ᶜ ∪ φ⁻(b′)
  Family by_quotients;   // spectra of the finitary congruences
  bool agree() const { return by_sets == by_quotients; }
};

BisoberFamily bisober_family(const Biframe& b, const Bispectrum& spec, const FinitaryAssembly& fin);

// Closed sets of the cf and pm Skula bispaces as families of quotient spectra:
// cf positive = spectra of ∇(z), cf negative = spectra of finitary fitted
// congruences, pm side = spectra of side congruences induced from that side.
struct SkulaClosedReport {
  bool cf_plus = false, cf_minus = false, pm_plus = false, pm_minus = false;
  std::string failure;

  bool ok() const noexcept { return cf_plus && cf_minus && pm_plus && pm_minus; }
};

SkulaClosedReport skula_closed_sets(const Biframe& b, const Bispectrum& spec, const FinitaryAssembly& fin);

SkulaVariant skula_for(Variant v);

struct BijectionReport {
  std::vector<std::size_t> map;  // point of bpt(B) ↦ point of bpt(assembly)
  bool bijective = false;
  bool subbasis_match = false;   // per-generator images of the subbasic opens
  bool bihomeomorphic = false;   // full topologies carried onto each other
  std::string failure;

  bool ok() const noexcept { return bijective && subbasis_match && bihomeomorphic; }
};

// The map f ↦ f̃ with f̃(∇(e x)) = f(e x) and f̃(Δ(e x)) = ¬f(e x), extended
// over the generator meets of A_fin, from the Skula space of bpt(B) to
// bpt(assembly(B, v)).
BijectionReport spectrum_bijection(const Biframe& b, const Bispectrum& spec, const AssemblyResult& a,
                                   const Bispectrum& assembly_spec);

// The point of A_fin determined by a point f of main through the generator values.
std::vector<Elem> lifted_point(const FrameHom& f, const FinitaryAssembly& fin, const Biframe& b);

struct NaturalityReport {
  bool ok = true;
  std::size_t points_checked = 0;
  std::string failure;
};

// For every point g of M: lift(g ∘ f) = lift(g) ∘ A(f) on A_fin(B).
NaturalityReport naturality_check(const BiframeMap& f, const AssemblyResult& source, const AssemblyResult& target);

}  // namespace frm
