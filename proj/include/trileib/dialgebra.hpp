#pragma once

#include "trileib/embedding.hpp"

namespace trileib {

/// g acting on the 3-Leibniz algebra h through a representation of g on h.
struct Action {
  ThreeLeibnizAlgebra base;    // g
  ThreeLeibnizAlgebra target;  // h
  Representation rep;

  void require_dims() const;
  friend bool operator==(const Action&, const Action&) = default;
};

/// Representation axioms plus the compatibilities with h's bracket. The two
/// identities whose summands involve disjoint free variables are checked one
/// summand at a time.
CheckReport check_action(const Action& act, const CheckOptions& opts = {});

/// g + h with the semidirect-sum bracket plus [u,v,w]_h in the h-component.
ThreeLeibnizAlgebra semidirect_bowtie(const Action& act);

/// Embedding tensor h -> g that is also a homomorphism. Throws NotAnAction.
CheckReport check_homomorphic_et(const LinMap& T, const Action& act, const CheckOptions& opts = {});

CheckReport check_crossed_module(const LinMap& T, const Action& act, const CheckOptions& opts = {});

struct TriLeibnizDialgebra {
  Bracket3 base;
  TriLeibnizAlgebra tri;

  std::size_t dim() const { return base.out_dim(); }
  friend bool operator==(const TriLeibnizDialgebra&, const TriLeibnizDialgebra&) = default;
};

CheckReport check_dialgebra(const TriLeibnizDialgebra& D, const CheckOptions& opts = {});

/// Dialgebra on h: h's bracket plus the tri-brackets induced by T. Throws
/// NotHomomorphicET.
TriLeibnizDialgebra induced_dialgebra(const LinMap& T, const Action& act, const CheckOptions& opts = {});

}  // namespace trileib
