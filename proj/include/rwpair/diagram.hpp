#pragma once

#include "rwpair/permutation.hpp"

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace rwpair {

/// A trivalent graph described by its flags (half-edges). Edges are stored
/// as ordered flag pairs, which doubles as a default edge direction.
/// Multi-edges and self-loops are allowed.
struct TrivalentDiagram {
  int num_vertices = 0;
  std::vector<int> flag_vertex;
  std::vector<std::array<int, 2>> edges;
  /// The three flags of each vertex in cyclic order.
  std::vector<std::array<int, 3>> cyclic;

  int order() const { return num_vertices / 2; }
  int num_flags() const { return static_cast<int>(flag_vertex.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }

  /// Throws std::invalid_argument describing the first inconsistency.
  void validate() const;
  /// Index of the edge containing flag f.
  int edge_of_flag(int f) const;
  /// The other flag of f's edge.
  int partner(int f) const;
  bool has_self_loop() const;
  bool is_connected() const;

  bool operator==(const TrivalentDiagram&) const = default;
};

/// The theta graph: two vertices joined by three edges.
TrivalentDiagram theta_diagram();

/// A linear orientation representative: an ordering of the vertices and a
/// direction (first flag, second flag) for each edge, indexed like d.edges.
struct LinearOrientRep {
  std::vector<int> vertex_order;
  std::vector<std::array<int, 2>> edges;

  bool operator==(const LinearOrientRep&) const = default;
};

/// (-1)^(flipped edges) == sign(vertex permutation).
bool orientation_equivalent(const TrivalentDiagram& d, const LinearOrientRep& r1, const LinearOrientRep& r2);

/// Linear representative of the cyclic orientation of d: vertices in index
/// order and the stored edge directions, with the first edge reversed when
/// needed to match the sign of the flag reordering.
LinearOrientRep cyclic_to_linear(const TrivalentDiagram& d);
/// A copy of d whose cyclic orientation corresponds to r.
TrivalentDiagram linear_to_cyclic(const TrivalentDiagram& d, const LinearOrientRep& r);
/// True when the per-vertex orders of a and b (same underlying graph)
/// differ by an odd permutation at an even number of vertices.
bool cyclic_equivalent(const std::vector<std::array<int, 3>>& a, const std::vector<std::array<int, 3>>& b);

struct AdmissibleChoices {
  LinearOrientRep rep;
  std::vector<int> edge_order;
  /// Linear order of the flags at each vertex, indexed by vertex.
  std::vector<std::array<int, 3>> vertex_flags;
};

/// Choices built from d's cyclic orientation, edges in stored order and the
/// stored cyclic orders.
AdmissibleChoices default_choices(const TrivalentDiagram& d);

/// The permutation sending the vertex-grouped flag ordering to the
/// edge-grouped one: position 3j+i (flag i of the j-th vertex) maps to
/// position 2t+s (flag s of the t-th edge). Throws std::invalid_argument when
/// the choices are inconsistent with d or do not represent its orientation.
Permutation admissible_permutation(const TrivalentDiagram& d, const AdmissibleChoices& choices);

/// Random valid choices for d (vertex order, edge directions, edge order,
/// per-vertex orders), used for independence checks.
AdmissibleChoices random_choices(const TrivalentDiagram& d, std::mt19937_64& rng);

/// All trivalent diagrams of order k up to isomorphism, each with the
/// cyclic orientation given by increasing flag order at every vertex.
/// Throws std::invalid_argument for k > 3.
std::vector<TrivalentDiagram> enumerate_trivalent(int k, bool connected_only = false);
/// All 10395 (k = 2) or 15 (k = 1) flag matchings, deduplicated up to
/// isomorphism by brute force; an independent route to the same count.
std::vector<TrivalentDiagram> enumerate_by_matchings(int k);
/// Graph isomorphism, ignoring orientation.
bool isomorphic(const TrivalentDiagram& a, const TrivalentDiagram& b);

struct IhxTriple {
  TrivalentDiagram i, h, x;
  AdmissibleChoices ci, ch, cx;
};

/// The I, H and X diagrams around edge e, which must join two distinct
/// vertices. d itself is the I diagram read from the cyclic orders at the
/// ends of e. Vertex and flag ids are shared by all three outputs.
IhxTriple ihx_triple(const TrivalentDiagram& d, int e);
/// d and d with the cyclic order at vertex v reversed.
std::pair<TrivalentDiagram, TrivalentDiagram> as_pair(const TrivalentDiagram& d, int v);

/// Points 0..2k-1 in the order of the oriented circle, joined in pairs.
struct ChordDiagram {
  int points = 0;
  std::vector<std::array<int, 2>> chords;

  int order() const { return static_cast<int>(chords.size()); }
  void validate() const;
  /// Index of the chord containing point p.
  int chord_of_point(int p) const;
  bool operator==(const ChordDiagram&) const = default;
};

struct ChordOrder {
  /// points[j] is the j-th vertex met after the origin.
  std::vector<int> points;
  /// Per chord, its two vertex positions in order of appearance.
  std::vector<std::array<int, 2>> chord_vertices;
};

/// Gap g lies just before point g.
ChordOrder chord_vertex_order(const ChordDiagram& c, int origin);

/// True when chord i crosses no other chord.
bool is_isolated(const ChordDiagram& c, int chord);
bool has_isolated_chord(const ChordDiagram& c);
/// Chord diagram with the chords of c listed in `keep`, renumbered.
ChordDiagram sub_diagram(const ChordDiagram& c, const std::vector<int>& keep);
/// All chord diagrams of order k up to rotation.
std::vector<ChordDiagram> enumerate_chord(int k);
/// Rotation-invariant canonical form.
ChordDiagram canonical_chord(const ChordDiagram& c);

/// Endpoint x of chord b is moved next to the endpoints p, q of chord a:
/// right after p, right before p, right before q, right after q. The
/// relation reads D[0] - D[1] - D[2] + D[3].
struct FourTQuadruple {
  /// Chord labels around the circle with the moving endpoint removed.
  std::vector<int> base;
  int moving_chord = 0;
  int fixed_chord = 0;
  std::array<ChordDiagram, 4> diagrams;
};
/// Builds the four diagrams from base, moving_chord and fixed_chord.
FourTQuadruple make_four_t(std::vector<int> base, int moving_chord, int fixed_chord);
/// All quadruples obtained from diagrams of order k by choosing a moving
/// endpoint and a fixed chord.
std::vector<FourTQuadruple> four_t_quadruples(int k);
/// Throws std::invalid_argument unless the stored diagrams are the ones
/// make_four_t builds from the same data.
void validate_four_t(const FourTQuadruple& q);

}  // namespace rwpair
