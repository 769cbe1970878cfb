#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fourflow/notation.hpp"

namespace fourflow::model {

using notation::ClusterExpr;
using notation::DegreeSpec;

/** One vertex of a realized configuration. */
struct Vertex {
    DegreeSpec spec = DegreeSpec::any();
    bool interior = false;  // specified structure vertex; false = boundary ring vertex
    bool dashed = false;    // attached by a dashed edge (exempt from the GG rule)
    char letter = 0;        // role marker carried over from the notation, if any
    // Neighbours in plane order. Interior vertices carry the full
    // counter-clockwise rotation (length = the realization degree). Ring
    // vertices carry only the known fan, ordered
    // [next ring vertex, interior fan vertices, previous ring vertex];
    // everything beyond the boundary is unknown.
    std::vector<int> nbr;
};

/**
 * A realized near-triangulation: the specified (interior) vertices with their
 * rotations, plus the materialized boundary circuit. A closed triangulation of
 * the sphere is the ring-free special case.
 */
struct Configuration {
    std::vector<Vertex> verts;
    std::vector<int> ring;  // boundary circuit in walk order; empty = sphere
    std::vector<int> hubs;  // hub vertex ids in header order
    int source = -1;        // discharge source vertex (primary hub), if any
    int target = -1;        // vertex marked T (Major sink), if any
    int crossL = -1;        // crossing-edge vertices of a flow target, if any
    int crossR = -1;

    int size() const { return static_cast<int>(verts.size()); }
    int ringSize() const { return static_cast<int>(ring.size()); }
    int interiorCount() const;
    bool isSphere() const { return ring.empty(); }
    bool hasEdge(int a, int b) const;
    /** Position of v in the ring walk, or -1 for interior vertices. */
    int ringIndex(int v) const;
};

/** Realization degree of a spec: exact value, 6 for minor, otherwise the
 * lower bound (Major 7, at-least-8 8). Declared ring suffixes use the same
 * convention ("the largest boundary circuit, obtained when each m=6"). */
int repDegree(const DegreeSpec& spec);

/**
 * Build the near-triangulation described by one fully expanded expression:
 * lay out the hub/neighbour/cap rotations, add the connections forced by
 * triangulation, trace the boundary and materialize the ring. A declared
 * interior-count prefix or ring-size suffix is validated against the result.
 * degreeOverride remaps the realization degree of selected vertices, keyed by
 * construction-order vertex id (used when a ranged vertex must be instantiated
 * at more than its minimum degree).
 */
Configuration realize(const ClusterExpr& expr,
                      const std::map<int, int>& degreeOverride = {});

/** Parse + expand a string that must denote a single member, then realize. */
Configuration realizeOne(const std::string& text);

struct GGReport {
    bool good = true;
    int vertex = -1;     // offending vertex when !good
    std::string reason;  // diagnosis
};

/**
 * Geographic goodness: every solidly attached interior vertex touches at most
 * 3 consecutive boundary vertices or at most 2 boundary vertices, and there is
 * no hanging 55 pair. Vertices in `exempt` (a rule's Major target, the ends of
 * a crossing edge) are skipped.
 */
GGReport isGG(const Configuration& c, const std::vector<int>& exempt = {});

enum class Match { Holds, Fails, Unknown };

/**
 * Three-valued containment: does `pattern` certainly occur inside the
 * specified part of `host`? Holds needs an embedding in which every host spec
 * lies inside the corresponding pattern spec; placements that would depend on
 * structure beyond host's boundary yield Unknown.
 */
Match contains(const Configuration& host, const Configuration& pattern);

struct OverlayResult {
    bool compatible = false;
    std::string whyNot;           // set when not compatible
    Configuration merged;         // valid when compatible
    std::vector<int> mapA, mapB;  // old vertex id -> merged vertex id
};

/**
 * Overlay two configurations, identifying the aligned vertex pairs
 * (a-vertex, b-vertex) and every further identification propagated across
 * shared triangles, then re-deriving the forced edges and the boundary.
 * Degree specs only narrow; an empty intersection anywhere, or a forced
 * identification inside one input, reports incompatibility.
 */
OverlayResult overlay(const Configuration& a, const Configuration& b,
                      const std::vector<std::pair<int, int>>& align);

/** Canonical key: lexicographically minimal labelled encoding over all ring
 * starts and both directions (all rooted edges for a sphere). Equal keys mean
 * isomorphic configurations including degree specs. */
std::string canonicalKey(const Configuration& c);

/** Structural self-check (rotation symmetry, triangle consistency, Euler
 * count); throws DataError with a description on failure. */
void validate(const Configuration& c);

// ---- fixture triangulations (ringSize() == 0) ----

/** The icosahedron: 12 vertices of degree 5. */
Configuration icosahedron();

/** n rounds of triangle subdivision of the icosahedron (n >= 0). */
Configuration geodesic(int n);

/** Close a realized configuration into a sphere with one apex adjacent to
 * every ring vertex; all specs become the exact resulting degrees. */
Configuration coneClose(const Configuration& c);

/** Deterministic pseudorandom sphere: geodesic(1) followed by `splits`
 * random vertex splits that keep every degree at least 5. */
Configuration randomTriangulation(int splits, unsigned seed);

/** A wheel inside a host triangulation: a centre vertex and its rim. */
struct Wheel {
    const Configuration* host = nullptr;
    int centre = -1;
    std::vector<int> rim() const;
};

} // namespace fourflow::model
