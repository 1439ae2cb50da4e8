#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "epscalc/finset.hpp"

namespace epscalc::doctrine {

using finset::FinMor;
using finset::FinObj;
using finset::Subset;

// Boolean algebra of all subsets of a carrier, ordered by inclusion.
struct Fiber {
  FinObj carrier;

  Subset top() const { return finset::full_subset(carrier); }
  Subset bot() const { return finset::empty_subset(carrier); }
  Subset meet(const Subset& a, const Subset& b) const;
  Subset join(const Subset& a, const Subset& b) const;
  Subset neg(const Subset& a) const { return finset::complement(a); }
  Subset imp(const Subset& a, const Subset& b) const { return join(neg(a), b); }
  bool leq(const Subset& a, const Subset& b) const;

  // Mask enumeration of all 2^n elements; requires carrier size < 64.
  std::uint64_t count() const;
  Subset element(std::uint64_t mask) const;
  std::uint64_t mask_of(const Subset& s) const;
};

// A registered product projection; which = 1 projects onto the left
// factor, which = 2 onto the right.
struct Projection {
  finset::Product prod;
  int which;

  const FinMor& map() const { return which == 1 ? prod.proj1 : prod.proj2; }
  FinObj total() const { return prod.obj; }
  FinObj base() const { return which == 1 ? prod.left : prod.right; }
  FinObj fiber() const { return which == 1 ? prod.right : prod.left; }
};

Projection first_projection(FinObj x, FinObj y);
Projection second_projection(FinObj x, FinObj y);

// Preimage; equals the canonical representative of the pullback of the
// inclusion of s along f.
Subset reindex(const FinMor& f, const Subset& s);
// The pullback route, kept as an independent oracle for reindex.
Subset reindex_pullback(const FinMor& f, const Subset& s);

// Left adjoint to reindexing along the projection, computed by image
// factorization of the projection restricted to s.
Subset sigma(const Projection& pi, const Subset& s);
// Direct projection of the member set (oracle).
Subset sigma_direct(const Projection& pi, const Subset& s);

// The epsilon morphism X -> Y for psi in the fiber over X×Y, built by the
// coproduct diagram: factorize the restricted projection, section the epi,
// section the projection at the basepoint, copair and project.
// Basepoints are frozen at element 0.
FinMor epsilon_categorical(const Projection& pi, const Subset& psi);
// Oracle: least witness, basepoint 0 when the slice is empty.
FinMor epsilon_oracle(const Projection& pi, const Subset& psi);
// Canonicalizes the member list first; equal subsets give identical tables.
FinMor epsilon_extensional(const Projection& pi, FinObj carrier,
                           std::vector<std::size_t> raw_members);

// Sigma_pi psi <= <id, eps_psi>* psi in the fiber over X.
bool check_epsilon_inequality(const Projection& pi, const Subset& psi);
// In finite sets the two sides coincide; model-specific strengthening.
bool check_epsilon_def_equality(const Projection& pi, const Subset& psi);

// Recovers a section of an epi between pointed carriers through the
// epsilon morphism of its graph subobject.
FinMor section_from_epsilon(const FinMor& f);

// ---------------------------------------------------------------- laws

struct LawVerdict {
  std::string law;
  std::string instance;
  bool ok = true;
  std::uint64_t checked = 0;
  std::string detail;  // first failure, empty when ok
};

struct LawReport {
  std::vector<LawVerdict> verdicts;
  bool all_ok() const;
  std::uint64_t total_checked() const;
};

using LawSink = std::function<void(const LawVerdict&)>;

// Exhaustive thresholds, part of the external contract.
inline constexpr std::size_t kAdjunctionExhaustiveCells = 12;
inline constexpr std::size_t kBeckChevalleyExhaustiveCells = 10;
inline constexpr std::size_t kEpsilonExhaustiveCells = 12;
inline constexpr std::size_t kSampledSubsets = 512;

LawVerdict verify_fiber_boolean_algebra(std::size_t carrier);
LawVerdict verify_reindex_homomorphism(std::size_t dom, std::size_t cod);
LawVerdict verify_reindex_functoriality(std::size_t a, std::size_t b, std::size_t c);
LawVerdict verify_adjunction(FinObj x, FinObj y, int which, std::uint64_t seed);
LawVerdict verify_beck_chevalley(FinObj x, FinObj y, FinObj z, std::uint64_t seed);
LawVerdict verify_lem_coproduct(std::size_t max_carrier, std::size_t max_cod);
LawVerdict verify_ac_sections(std::size_t max_carrier);
LawVerdict verify_ac_epsilon_roundtrip(std::size_t max_carrier);
LawVerdict verify_epsilon_agreement(FinObj x, FinObj y, std::uint64_t seed);
LawVerdict verify_epsilon_inequality(FinObj x, FinObj y, std::uint64_t seed);
LawVerdict verify_epsilon_sigma_equality(FinObj x, FinObj y, std::uint64_t seed);

// The full deterministic suite; verdicts are also streamed to the sink
// when one is given.
LawReport run_laws(std::size_t max_size, std::uint64_t seed, const LawSink& sink = {});

}  // namespace epscalc::doctrine
