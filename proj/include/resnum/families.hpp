#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "resnum/graph.hpp"

namespace resnum {

namespace family {
struct Path { std::size_t n; };
struct Cycle { std::size_t n; };
struct Complete { std::size_t n; };
/// K_{1,a}.
struct Star { std::size_t a; };
/// Three paths of lengths a, b, c glued at one centre.
struct Spider { std::size_t a, b, c; };
/// K_a plus a vertex adjacent to the first b clique vertices, 1 <= b < a.
struct Gab { std::size_t a, b; };
/// Hub joined to every vertex of C_m.
struct Wheel { std::size_t m; };
/// C_{2a+1} with one pendant edge, a >= 3.
struct PendantCycle { std::size_t a; };
/// Triangle with a path of length r-2 hanging from each corner, r >= 3.
struct TriangleTripod { std::size_t r; };
/// The four graphs with clique number = resolving number = 4 that are not
/// G_{4,b}: K4 = {0,1,2,3} with u = 4 on {0,1} and v = 5 on {1,2}.
/// G1: u,v non-adjacent. G2: u-v edge. G3/G4 add w = 6 on {1,3} with no
/// edges (G3) or a triangle (G4) among u, v, w.
struct ProofWitness { int index; };
struct Join;
}  // namespace family

using FamilySpec =
    std::variant<family::Path, family::Cycle, family::Complete, family::Star, family::Spider,
                 family::Gab, family::Wheel, family::PendantCycle, family::TriangleTripod,
                 family::ProofWitness, family::Join>;

namespace family {
/// Disjoint union plus every edge between the two sides.
struct Join {
  std::shared_ptr<const FamilySpec> left;
  std::shared_ptr<const FamilySpec> right;
};
}  // namespace family

FamilySpec join(FamilySpec left, FamilySpec right);

/// Raises InvalidFamilyParam for out-of-domain parameters.
Graph generate(const FamilySpec& spec);

/// Order generate(spec) will have.
std::size_t family_order(const FamilySpec& spec);

std::string describe(const FamilySpec& spec);

/// Parses a CLI family name plus comma-separated integer parameters, e.g.
/// ("gab", {5, 3}) or ("witness", {2}). Raises InvalidFamilyParam.
FamilySpec parse_family(const std::string& name, const std::vector<std::size_t>& params);

/// Join of two graphs.
Graph graph_join(const Graph& left, const Graph& right);

}  // namespace resnum
