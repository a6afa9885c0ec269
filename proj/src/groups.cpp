#include "diffext/groups.hpp"

#include "diffext/sampling.hpp"

namespace diffext {

bool is_sl2(const MatrixQ& m) {
  if (m.size() != 2) return false;
  return m.det().is_one();
}

GroupElement sl2_elem_upper(const RatFuncQ& f) {
  int nv = f.nvars();
  MatrixQ m = MatrixQ::identity(2, nv);
  m(0, 1) = f;
  MatrixQ inv = MatrixQ::identity(2, nv);
  inv(0, 1) = -f;
  return GroupElement(std::move(m), std::move(inv));
}

GroupElement sl2_elem_lower(const RatFuncQ& f) {
  int nv = f.nvars();
  MatrixQ m = MatrixQ::identity(2, nv);
  m(1, 0) = f;
  MatrixQ inv = MatrixQ::identity(2, nv);
  inv(1, 0) = -f;
  return GroupElement(std::move(m), std::move(inv));
}

GroupElement sl2_torus(const RatFuncQ& u) {
  if (u.is_zero()) throw NotInvertible("torus parameter is zero");
  int nv = u.nvars();
  RatFuncQ ui = u.inverse();
  MatrixQ m(2, nv), inv(2, nv);
  m(0, 0) = u;
  m(1, 1) = ui;
  inv(0, 0) = ui;
  inv(1, 1) = u;
  return GroupElement(std::move(m), std::move(inv));
}

namespace {

MatrixQ natural_eval(const MatrixQ& m, const MatrixQ&) { return m; }

// Conjugation action on trace-zero 2x2 matrices in the basis
// (E12, E11 - E22, E21); a matrix [[y, x], [z, -y]] has coordinates (x, y, z).
MatrixQ adjoint_eval(const MatrixQ& m, const MatrixQ& minv) {
  int nv = m.nvars();
  MatrixQ out(3, nv);
  for (int j = 0; j < 3; ++j) {
    MatrixQ b(2, nv);
    if (j == 0) {
      b(0, 1) = RatFuncQ::one(nv);
    } else if (j == 1) {
      b(0, 0) = RatFuncQ::one(nv);
      b(1, 1) = -RatFuncQ::one(nv);
    } else {
      b(1, 0) = RatFuncQ::one(nv);
    }
    MatrixQ c = m * b * minv;
    out(0, j) = c(0, 1);
    out(1, j) = c(0, 0);
    out(2, j) = c(1, 0);
  }
  return out;
}

}  // namespace

const Representation& natural_rep() {
  static const Representation rep{"natural", 2, {1, -1}, natural_eval};
  return rep;
}

const Representation& adjoint_rep() {
  static const Representation rep{"adjoint", 3, {2, 0, -2}, adjoint_eval};
  return rep;
}

const Representation& rep_by_name(const std::string& name) {
  if (name == "natural") return natural_rep();
  if (name == "adjoint") return adjoint_rep();
  throw Error("unknown representation: " + name);
}

long weight_square_sum(const Representation& rep) {
  long s = 0;
  for (int w : rep.torus_weights) s += static_cast<long>(w) * w;
  return s;
}

GroupElement apply_rep(const Representation& rep, const GroupElement& g) {
  if (!is_sl2(g.mat())) throw NotInSL2("representation argument is not in SL2");
  return GroupElement(rep.eval(g.mat(), g.inv()), rep.eval(g.inv(), g.mat()));
}

GroupElement rep_torus(const Representation& rep, const RatFuncQ& u) {
  return apply_rep(rep, sl2_torus(u));
}

namespace {

// Generator parameters stay sparse: one or two terms up to the degree cap,
// with an occasional short denominator. Entry sizes of sampled words grow
// multiplicatively, so lean parameters keep downstream arithmetic exact and
// fast without narrowing the family being sampled.
RatFuncQ sample_param(Rng& rng, int nvars, int degree_cap, bool force_nonzero) {
  PolyQ num = random_poly_q(rng, nvars, degree_cap, 2, force_nonzero);
  if (!rng.chance(1, 4)) return RatFuncQ(std::move(num));
  PolyQ den = random_poly_q(rng, nvars, 1, 2, true);
  return RatFuncQ(std::move(num), std::move(den));
}

}  // namespace

std::vector<GroupElement> sample_sl2(std::uint64_t seed, int count, int degree_cap, int nvars) {
  Rng rng(seed);
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int c = 0; c < count; ++c) {
    GroupElement g = GroupElement::identity(2, nvars);
    long len = rng.range(1, 3);
    for (long k = 0; k < len; ++k) {
      switch (rng.below(3)) {
        case 0:
          g = g * sl2_elem_upper(sample_param(rng, nvars, degree_cap, false));
          break;
        case 1:
          g = g * sl2_elem_lower(sample_param(rng, nvars, degree_cap, false));
          break;
        default:
          g = g * sl2_torus(sample_param(rng, nvars, degree_cap, true));
          break;
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace diffext
