#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qhtop/operators.hpp"

namespace qhtop {

/// Index thresholds and index sets bounding where commutators and
/// generalized semicommutators of degrees (k1, k2) can act nontrivially:
///   N1 = max{0, -k1, -k2, -k1-k2},  N2 = max{0, -k2, -k1-k2},
///   N3 = max{0, k2, k1+k2},
///   Lambda1   = {-N1+1 .. N1+k1+k2-1} \ {(k1+k2)/2},
///   Lambda1/2 = {(k1+k2)/2 < k <= N1+k1+k2-1},
///   Lambda2   = {-N3+k1+k2+1 .. N2+k1+k2-1}.
struct SupportWindow {
  int k1 = 0, k2 = 0;
  int N1 = 0, N2 = 0, N3 = 0;
  std::set<int> lambda1;
  std::set<int> lambda_half;
  std::set<int> lambda2;

  static SupportWindow from_degrees(int k1, int k2);
};

enum class MapKind { Commutator, GenSemicommutator };

/// Source indices where the map may act nontrivially once finite rank holds;
/// every window index outside this set belongs to the vanishing margin.
std::set<int> support_sources(const SupportWindow& w, MapKind kind,
                              Space space);

/// One rank-one block C_k (e_k tensor e_{k - net}) of a canonical form,
/// indexed by the range index k. The coefficient is the raw basis-image
/// coefficient rescaled by (|source|+1), the reciprocal squared norm of the
/// source monomial. Harmonic commutator blocks carry their symmetry partner
/// -k + k1 + k2.
struct CanonicalTerm {
  int index = 0;
  double coeff = 0.0;
  std::optional<int> partner;
};

struct RankReport {
  int rank = 0;
  std::vector<int> range;  // sorted target indices
  std::vector<CanonicalTerm> canonical;
  bool margin_ok = true;   // every margin coefficient vanished
  double worst_margin = 0.0;
  int checked_lo = 0, checked_hi = 0;  // extent of the vanishing check
  bool range_in_lambda = true;
  bool parity_ok = true;
  bool bound_ok = true;
  bool pairing_ok = true;
  double tol = 0.0;
  std::string note;

  bool finite_rank_at_window() const { return margin_ok; }
  bool all_ok() const {
    return margin_ok && range_in_lambda && parity_ok && bound_ok && pairing_ok;
  }
};

/// Counts distinct nonzero image indices over the support sources, extracts
/// the canonical form, and verifies that every margin source vanishes below
/// tol (relative to the largest coefficient seen, floor 1). A margin
/// violation is reported as "not finite rank at this window" rather than
/// thrown, so callers can probe the negative direction.
RankReport detect_rank(const CoeffMap& map, const SupportWindow& w,
                       MapKind kind, double tol = 1e-10);

std::vector<CanonicalTerm> extract_canonical_form(const CoeffMap& map,
                                                  const SupportWindow& w,
                                                  MapKind kind,
                                                  double tol = 1e-10);

/// C_k = -C_{-k + k1 + k2} for every harmonic commutator block.
bool pairing_check(const std::vector<CanonicalTerm>& canonical, int k1, int k2,
                   double tol = 1e-10);

/// Applies the parity rule (harmonic commutators have even rank) and the
/// rank bounds: |k1|+|k2|-1 (odd k1+k2) or max{0,|k1|+|k2|-2} (even) for
/// harmonic commutators, max{0,|k1|-1,|k2|-1,|k1+k2|-1} for generalized
/// semicommutators, 1 for Bergman commutators of the monomial family.
void parity_and_bounds(RankReport& report, int k1, int k2, MapKind kind,
                       Space space);

/// Rebuilds the truncated map from a canonical form (source coefficient
/// C_k / (|k - net|+1)); detect/extract must invert this exactly.
CoeffMap reconstruct_from_canonical(const std::vector<CanonicalTerm>& canonical,
                                    Space space, int net_degree, Window w);

struct RankEquivalence {
  bool applicable = true;
  int rank_forward = 0;   // T1 T2 - T_psi
  int rank_reversed = 0;  // T2 T1 - T_psi
  int rank_commutator = 0;
  bool margins_ok = true;
  bool ranks_equal = false;
  bool commutator_bounded = false;  // rank [T1,T2] <= 2 * gensemi rank
  std::string note;

  bool pass() const {
    return !applicable || (margins_ok && ranks_equal && commutator_bounded);
  }
};

/// Harmonic-space check that the two product orderings share one rank and
/// dominate half the commutator rank. Bergman inputs are reported as
/// not applicable (the equivalence is a harmonic-space fact).
RankEquivalence rank_equivalence_check(const QHOperator& t1,
                                       const QHOperator& t2,
                                       const MellinTransform& psi,
                                       int margin = 20, double tol = 1e-10);

/// Singular values of the truncated map in the normalized basis, by one-sided
/// Jacobi iteration; a second, support-free route to the rank.
std::vector<double> singular_values(const CoeffMap& map);

int numerical_rank(const std::vector<double>& singular, double rel_tol = 1e-9);

}  // namespace qhtop
