#pragma once

#include "diffext/coeff.hpp"
#include "diffext/derivation.hpp"
#include "diffext/matrix.hpp"
#include "diffext/poly.hpp"
#include "diffext/ratfunc.hpp"

namespace diffext {

// Characteristic-zero instantiations (the default working field Q(t1..tm)).
using PolyQ = Poly<Rat>;
using RatFuncQ = RatFunc<Rat>;
using DerivationQ = Derivation<Rat>;
using MatrixQ = Matrix<Rat>;

// Characteristic-two instantiations over F2(t).
using Poly2 = Poly<GF2>;
using RatFunc2 = RatFunc<GF2>;
using Matrix2 = Matrix<GF2>;

}  // namespace diffext
