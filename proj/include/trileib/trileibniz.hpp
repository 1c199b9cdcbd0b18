#pragma once

#include <array>
#include <string_view>

#include "trileib/leibniz3.hpp"

namespace trileib {

enum class Tri { Vdash, Dashv, Perp };
inline constexpr std::array<Tri, 3> kAllTri{Tri::Vdash, Tri::Dashv, Tri::Perp};
std::string_view tri_name(Tri t);

struct TriLeibnizAlgebra {
  Bracket3 vdash;
  Bracket3 dashv;
  Bracket3 perp;

  static TriLeibnizAlgebra zero(std::size_t n);

  std::size_t dim() const { return vdash.out_dim(); }
  const Bracket3& operator[](Tri t) const;
  Bracket3& operator[](Tri t);

  friend bool operator==(const TriLeibnizAlgebra&, const TriLeibnizAlgebra&) = default;
};

CheckReport check_tri_leibniz(const TriLeibnizAlgebra& TA, const CheckOptions& opts = {});

TriLeibnizAlgebra from_3leibniz(const ThreeLeibnizAlgebra& A);
/// [x,y,z]_dashv = [x,y,dz], [x,y,z]_perp = [x,dy,z], [x,y,z]_vdash = [dx,y,z].
/// Throws NotSquareZero / NotADerivation.
TriLeibnizAlgebra from_differential(const ThreeLeibnizAlgebra& A, const LinMap& d, const CheckOptions& opts = {});
/// Reports whether f: V -> g intertwines R with the adjoint representation.
CheckReport check_rep_morphism(const ThreeLeibnizAlgebra& A, const Representation& R, const LinMap& f,
                               const CheckOptions& opts = {});
/// Tri-algebra on V; throws NotAMorphism.
TriLeibnizAlgebra from_rep_morphism(const ThreeLeibnizAlgebra& A, const Representation& R, const LinMap& f,
                                    const CheckOptions& opts = {});
/// k copies of g; basis vector i of copy q sits at q*n + i.
TriLeibnizAlgebra direct_sum_tri(const ThreeLeibnizAlgebra& A, std::size_t copies);
TriLeibnizAlgebra hemisemidirect(const ThreeLeibnizAlgebra& A, const Representation& R);

/// Span of all bracket differences; throws IdealClosureFailure if it is not
/// an ideal of (g, vdash).
Subspace associated_ideal(const TriLeibnizAlgebra& TA, const CheckOptions& opts = {});

struct UniversalQuotient {
  ThreeLeibnizAlgebra algebra;  // (g, vdash) / I_g
  Representation rep;           // of the quotient, on the original space
  LinMap projection;            // the embedding tensor g -> g/I_g
  Subspace ideal;
  LinMap section;
};

/// Throws NotWellDefined if the actions depend on the representative.
UniversalQuotient universal_quotient(const TriLeibnizAlgebra& TA, const CheckOptions& opts = {});

struct AveragingEmbedding {
  ThreeLeibnizAlgebra big;  // semidirect sum of the quotient with its representation
  LinMap op;                // (x, y) -> (proj y, 0)
  LinMap inclusion;         // x -> (0, x)
};

AveragingEmbedding averaging_embedding(const TriLeibnizAlgebra& TA, const CheckOptions& opts = {});

}  // namespace trileib
