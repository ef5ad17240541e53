#pragma once

#include "artin/truncated.hpp"

#include <map>

namespace artin {

/// Q(r) = Q[X,Y]/(X^{r+1}, X^r Y, Y^2), of dimension 2r+1.
AlgebraPtr q_algebra(unsigned r);

/// dim h(A_i): rank of the images of the degree-i standard monomials.
std::size_t image_dimension(const TruncatedHom &h, unsigned degree);

/// The map A -> A/M^2 -> Q[t]/(t^4) sending M/M^2 onto (t^2, t^3).
/// Requires embedding dimension >= 2.
TruncatedHom tangent_witness(const AlgebraPtr &a);

struct CriticalDegreeReport {
  /// max of the achieved degrees; certified by `witnesses`.
  unsigned lower_bound = 0;
  /// Nilpotency index n (M^{n+1} = 0).
  unsigned upper_bound = 0;
  std::vector<unsigned> degrees_achieved;
  std::map<unsigned, TruncatedHom> witnesses;
  /// Largest dim h(A_i) seen for each degree i in 1..n.
  std::vector<std::size_t> max_image_dimension;
  std::size_t homs_examined = 0;

  bool exact() const { return lower_bound == upper_bound; }
};

/// Critical degree bookkeeping over an explicit hom family (the tangent
/// witness is added when not already present). Throws NotGraded or
/// PrincipalAlgebra.
CriticalDegreeReport critical_degree(const AlgebraPtr &a, std::vector<TruncatedHom> homs);
CriticalDegreeReport critical_degree_search(const AlgebraPtr &a, const SearchOptions &options);

struct SurjectionToQ {
  unsigned r = 0;
  /// Degree-one elements of least and second-least valuation, then the rest.
  Vec x, y;
  std::vector<Vec> rest;
  TruncValue nu_x = TruncValue::infinity(), nu_y = TruncValue::infinity();
  AlgebraPtr q;
  /// A / (x^{r+1}, x^r y, y^2, rest).
  AlgebraPtr quotient;
  bool iso_check = false;
  std::vector<std::string> iso_details;
  /// A -> Q(r), present when iso_check passed.
  std::optional<AlgebraMap> surjection;
};

/// Throws NotGraded, or WitnessInsufficient when dim h(A_r) < 2. A failed
/// isomorphism check is reported in the result, not thrown.
SurjectionToQ surjection_to_q(const AlgebraPtr &a, const TruncatedHom &h, unsigned r);

/// x^{r-1} (x dy - y dx). Throws NotDegreeOne unless x, y lie in A_1.
DifferentialForm omega_witness(const KahlerPtr &module, const Vec &x, const Vec &y, unsigned r);

struct NonzeroCertificate {
  std::string route;
  /// Text of the nonzero image.
  std::string image;
};

struct WitnessReport {
  std::string witness;
  /// False when the witness form itself is zero in Omega_A.
  bool witness_nonzero = false;
  std::vector<NonzeroCertificate> certificates;
  std::size_t homs_tested = 0;
  std::vector<TruncatedHom> violations;
  bool all_killed = true;
  std::string note;
};

/// Push w along every hom; certificate maps (e.g. quotient projections) are
/// tried in order and each one with a nonzero image is recorded.
WitnessReport tau_membership_check(const DifferentialForm &w, const std::vector<TruncatedHom> &homs,
                                   const std::vector<AlgebraMap> &certificate_maps = {});

/// Socle generator of a Gorenstein local algebra. Throws NotGorenstein or
/// PrincipalAlgebra.
Vec socle_generator(const ArtinAlgebra &a);

/// Checks h(s) = 0 for the socle generator s under every hom.
WitnessReport socle_kill_check(const AlgebraPtr &a, const std::vector<TruncatedHom> &homs);

/// Witness d(s) for the socle generator; when d(s) = 0 the report says the
/// route fails, and the kill check still runs.
WitnessReport tau_witness_gorenstein(const KahlerPtr &module, const std::vector<TruncatedHom> &homs);

} // namespace artin
