#pragma once

#include "rwpair/connection.hpp"
#include "rwpair/diagram.hpp"

#include <optional>
#include <vector>

namespace rwpair {

/// Bivector used to contract the two flags of an edge (or the two ends of a
/// chord) directed from x to y: entry (x, y) of the returned matrix.
Matrix edge_bivector(const SymplecticForm& w);

/// Weight cocycle of a trivalent diagram of order k: a scalar 2k-form on h.
/// Vertex tensors are the lowered Atiyah cocycle, edges are contracted with
/// edge_bivector along the chosen directions, and the h-arguments are fully
/// antisymmetrized (no factorial). Zero when 2k exceeds dim h. Throws
/// MathError unless c is a connection on q extending the action, and
/// std::invalid_argument for inconsistent choices.
CochainForm weight_cocycle(const Connection& c, const SymplecticForm& w, const TrivalentDiagram& d,
                           const std::optional<AdmissibleChoices>& choices = std::nullopt);

/// Same value by materializing the tensor product of all vertex tensors,
/// permuting slots with the admissible permutation and contracting
/// consecutive pairs. Exponential in the order; used as a cross-check.
CochainForm weight_cocycle_dense(const Connection& c, const SymplecticForm& w, const TrivalentDiagram& d,
                                 const std::optional<AdmissibleChoices>& choices = std::nullopt);

struct WeightClass {
  CochainForm cocycle;
  CohomologyInfo cohomology;
  /// Coordinates of the class in cohomology.basis.
  Vector coordinates;
};

WeightClass weight_class(const Connection& c, const SymplecticForm& w, const TrivalentDiagram& d,
                         const std::optional<AdmissibleChoices>& choices = std::nullopt);

/// w(d) + w(d with vertex v reversed) == 0 exactly, for every vertex.
bool check_AS(const Connection& c, const SymplecticForm& w, const TrivalentDiagram& d);

struct IhxResult {
  CochainForm combination;  ///< w(I) - w(H) + w(X)
  bool closed = false;
  bool exact = false;
};
IhxResult ihx_combination(const Connection& c, const SymplecticForm& w, const TrivalentDiagram& d, int e);
/// The class of w(I) - w(H) + w(X) around edge e vanishes.
bool check_IHX(const Connection& c, const SymplecticForm& w, const TrivalentDiagram& d, int e);

/// Local two-vertex tensors: 2-forms on h valued in (q*)^4, obtained from
/// Rt ^ Rt by moving slots and contracting the first two with edge_bivector.
struct IhxLocalTensors {
  CochainForm delta_i, delta_h, delta_x;
  /// The lowered Bianchi form and a solved primitive of the unlowered one.
  CochainForm psi_lowered;
  std::optional<CochainForm> phi;
  /// d(omega o (phi (x) id)), present when phi exists.
  std::optional<CochainForm> d_phi_lowered;

  CochainForm combination() const { return delta_i - delta_h + delta_x; }
  /// combination() == psi_lowered == d_phi_lowered.
  bool identity_holds() const;
};
IhxLocalTensors ihx_local_tensors(const Connection& c, const SymplecticForm& w);

/// omega(R_{a1}(R_{a2}(b1, b2), b3) - R_{a2}(R_{a1}(b1, b2), b3), b4) for
/// basis vectors, where R_a(b, x) is the Atiyah cocycle applied to x.
Scalar double_bracket_pairing(const CochainForm& atiyah, const SymplecticForm& w, int a1, int a2,
                              const std::array<int, 4>& b);

/// Chord-diagram weight: the Atiyah cocycle of cE sits at each point in
/// the order read from the origin gap, End(E) parts compose left to right
/// and are traced, and chord ends are contracted with edge_bivector in the
/// order of appearance. The h-arguments are fully antisymmetrized.
CochainForm chord_weight(const Connection& cE, const SymplecticForm& w, const ChordDiagram& cd, int origin = 0);

struct FourTResult {
  CochainForm combination;  ///< w(D0) - w(D1) - w(D2) + w(D3)
  bool exact = false;
};
FourTResult four_t_combination(const Connection& cE, const SymplecticForm& w, const FourTQuadruple& q);
bool check_4T(const Connection& cE, const SymplecticForm& w, const FourTQuadruple& q);

/// Cup product of scalar forms (shuffle product).
CochainForm cup(const CochainForm& a, const CochainForm& b);

/// Deframing: subset_weights[J] is the weight of the subdiagram on the
/// chords in bitmask J (index 0 is the empty diagram), s the single-chord
/// weight. Returns sum_J (-s)^(n - |J|) cup w(D|_J).
CochainForm deframe(const std::vector<CochainForm>& subset_weights, const CochainForm& s, int order);
/// Deframed chord weight of cd, with the empty diagram weighing 1.
CochainForm deframed_chord_weight(const Connection& cE, const SymplecticForm& w, const ChordDiagram& cd);
/// The deframed weight of cd has zero class.
bool check_1T(const Connection& cE, const SymplecticForm& w, const ChordDiagram& cd);

}  // namespace rwpair
