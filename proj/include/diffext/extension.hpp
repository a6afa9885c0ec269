#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "diffext/cohomology.hpp"
#include "diffext/groups.hpp"
#include "diffext/types.hpp"

namespace diffext {

// The 1-cocycle c_d(g) = d(rho(g)) * rho(g)^{-1} attached to a derivation d
// and a matrix representation rho, valued in matrices under conjugation.
class DerivationCocycle {
 public:
  DerivationCocycle(DerivationQ d, const Representation& rep);

  const DerivationQ& derivation() const { return d_; }
  const Representation& rep() const { return *rep_; }
  int dim() const { return rep_->dim; }
  int nvars() const { return d_.nvars(); }

  // Argument must already live in the representation (dim x dim).
  MatrixQ operator()(const GroupElement& g) const;

  Cochain as_cochain() const;

 private:
  DerivationQ d_;
  const Representation* rep_;
};

// The 2-cocycle alpha(g, h) = tr(c1(g) * g c2(h) g^{-1}), the cup product of
// the two derivation cocycles against the trace pairing. The second form
// -tr(c1(g^{-1}) * c2(h)) must agree with it pointwise.
class AlphaCocycle {
 public:
  AlphaCocycle(DerivationCocycle c1, DerivationCocycle c2);

  const DerivationCocycle& c1() const { return c1_; }
  const DerivationCocycle& c2() const { return c2_; }
  int dim() const { return c1_.dim(); }
  int nvars() const { return c1_.nvars(); }

  RatFuncQ operator()(const GroupElement& g, const GroupElement& h) const;
  RatFuncQ second_form(const GroupElement& g, const GroupElement& h) const;

  Cochain as_cochain() const;

 private:
  DerivationCocycle c1_;
  DerivationCocycle c2_;
};

using AlphaRef = std::shared_ptr<const AlphaCocycle>;

AlphaRef make_alpha(const DerivationQ& d1, const DerivationQ& d2, const Representation& rep);

// Element (g, x) of the central extension E' defined by alpha:
//   (g, x)(h, y) = (gh, x + y + alpha(g, h)).
// Elements combine only when they carry the same alpha object.
struct ExtElement {
  GroupElement g;
  RatFuncQ x;
  AlphaRef alpha;
};

ExtElement ext_element(AlphaRef alpha, GroupElement g, RatFuncQ x);
ExtElement ext_identity(const AlphaRef& alpha);
ExtElement ext_mul(const ExtElement& a, const ExtElement& b);
ExtElement ext_inverse(const ExtElement& a);
ExtElement ext_commutator(const ExtElement& a, const ExtElement& b);
bool ext_equal(const ExtElement& a, const ExtElement& b);
std::string ext_str(const ExtElement& a);

// Value of alpha on a pair of torus images: (sum of squared weights) times
// d1(s) d2(t) / (s t).
RatFuncQ torus_alpha_closed_form(const Representation& rep, const DerivationQ& d1,
                                 const DerivationQ& d2, const RatFuncQ& s, const RatFuncQ& t);

// Central coordinate of the commutator of torus lifts:
//   (sum of squared weights) * (d1(s) d2(t) - d1(t) d2(s)) / (s t).
RatFuncQ torus_commutator_closed_form(const Representation& rep, const DerivationQ& d1,
                                      const DerivationQ& d2, const RatFuncQ& s,
                                      const RatFuncQ& t);

// A pair (s, t) whose torus-lift commutator has nonzero central coordinate.
// Exists only when the derivations are independent (and the weight sum is
// nonzero); its presence certifies that the extension does not split.
struct NonsplitWitness {
  RatFuncQ s;
  RatFuncQ t;
  RatFuncQ value;
};

std::optional<NonsplitWitness> nonsplit_witness(const Representation& rep, const DerivationQ& d1,
                                                const DerivationQ& d2, std::uint64_t seed);

// Commutator of the lifts of nu(s), nu(t) with zero central coordinate,
// compared against the closed form: a central element realized as a
// commutator, the engine of perfectness.
struct PerfectnessSample {
  ExtElement commutator;
  RatFuncQ expected_center;
  bool matches = false;
};

PerfectnessSample perfectness_family(const AlphaRef& alpha, const RatFuncQ& s, const RatFuncQ& t);

}  // namespace diffext
