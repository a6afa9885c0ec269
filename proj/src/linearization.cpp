#include "diffext/linearization.hpp"

#include <cmath>

namespace diffext {

namespace {

int side_from_ambient(int N) {
  int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(N - 2))));
  if (n < 1 || n * n + 2 != N) throw ShapeError("ambient dimension is not n^2 + 2");
  return n;
}

// Entry (kl, ij) of the conjugation operator B -> gBg^{-1} on flattened
// End(V): g(k,i) * g^{-1}(j,l).
void fill_conj_block(MatrixQ& out, int row0, int col0, const GroupElement& g) {
  const int n = g.dim();
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          out(row0 + k * n + l, col0 + i * n + j) = g.mat()(k, i) * g.inv()(j, l);
}

MatrixQ add_corner(MatrixQ p, const RatFuncQ& t) {
  const int N = p.size();
  p(0, N - 1) += t;
  return p;
}

}  // namespace

UVector l_action(const DerivationCocycle& c, const GroupElement& g, const UVector& u) {
  MatrixQ cg = c(g);
  return UVector{g.mat() * u.A * g.inv() + cg.scaled(u.a), u.a};
}

UVector l_dual_action(const DerivationCocycle& c, const GroupElement& g, const UVector& u) {
  MatrixQ cgi = c(g.inverse());
  return UVector{g.mat() * u.A * g.inv(), u.a + trace_of_product(cgi, u.A)};
}

RatFuncQ pairing(const UVector& u, const UVector& v) {
  return trace_of_product(u.A, v.A) + u.a * v.a;
}

MatrixQ l_matrix(const DerivationCocycle& c, const GroupElement& g) {
  const int n = g.dim();
  const int M = n * n + 1;
  MatrixQ out(M, g.nvars());
  fill_conj_block(out, 0, 0, g);
  MatrixQ cg = c(g);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) out(k * n + l, M - 1) = cg(k, l);
  out(M - 1, M - 1) = RatFuncQ::one(g.nvars());
  return out;
}

MatrixQ l_dual_matrix(const DerivationCocycle& c, const GroupElement& g) {
  const int n = g.dim();
  const int M = n * n + 1;
  MatrixQ out(M, g.nvars());
  fill_conj_block(out, 0, 0, g);
  MatrixQ cgi = c(g.inverse());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(M - 1, i * n + j) = cgi(j, i);
  out(M - 1, M - 1) = RatFuncQ::one(g.nvars());
  return out;
}

MatrixQ make_p_g(const DerivationCocycle& c1, const DerivationCocycle& c2,
                 const GroupElement& g) {
  if (c1.dim() != c2.dim()) throw ShapeError("cocycle pair across representations");
  if (g.dim() != c1.dim()) throw ShapeError("section argument has wrong size");
  const int n = g.dim();
  const int N = n * n + 2;
  const int nv = g.nvars();
  MatrixQ p(N, nv);
  p(0, 0) = RatFuncQ::one(nv);
  p(N - 1, N - 1) = RatFuncQ::one(nv);
  MatrixQ c2gi = c2(g.inverse());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p(0, 1 + i * n + j) = c2gi(j, i);
  fill_conj_block(p, 1, 1, g);
  MatrixQ c1g = c1(g);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) p(1 + k * n + l, N - 1) = c1g(k, l);
  return p;
}

MatrixQ make_p_t(const RatFuncQ& t, int n) {
  const int N = n * n + 2;
  MatrixQ p = MatrixQ::identity(N, t.nvars());
  p(0, N - 1) = t;
  return p;
}

RatFuncQ corner_shift(const DerivationCocycle& c1, const DerivationCocycle& c2,
                      const GroupElement& g) {
  return trace_of_product(c1(g), c2(g));
}

MatrixQ make_p_g_corrected(const DerivationCocycle& c1, const DerivationCocycle& c2,
                           const GroupElement& g) {
  return add_corner(make_p_g(c1, c2, g), -corner_shift(c1, c2, g));
}

std::vector<RatFuncQ> flatten_w(const WVector& w) {
  const int n = w.A.size();
  std::vector<RatFuncQ> out;
  out.reserve(static_cast<std::size_t>(n) * n + 2);
  out.push_back(w.b);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.push_back(w.A(i, j));
  out.push_back(w.a);
  return out;
}

WVector unflatten_w(const std::vector<RatFuncQ>& coords, int n) {
  if (static_cast<int>(coords.size()) != n * n + 2)
    throw ShapeError("coordinate vector has wrong length");
  WVector w{coords.front(), MatrixQ(n, coords.front().nvars()), coords.back()};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w.A(i, j) = coords[static_cast<std::size_t>(1 + i * n + j)];
  return w;
}

WVector apply_w(const MatrixQ& p, const WVector& w) {
  const int n = side_from_ambient(p.size());
  std::vector<RatFuncQ> in = flatten_w(w);
  if (static_cast<int>(in.size()) != p.size()) throw ShapeError("vector/matrix size mismatch");
  std::vector<RatFuncQ> out(in.size(), RatFuncQ::zero(p.nvars()));
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) {
      if (p(i, j).is_zero() || in[static_cast<std::size_t>(j)].is_zero()) continue;
      out[static_cast<std::size_t>(i)] += p(i, j) * in[static_cast<std::size_t>(j)];
    }
  return unflatten_w(out, n);
}

MatrixQ pi_star(const MatrixQ& p) {
  const int N = p.size();
  side_from_ambient(N);
  for (int i = 1; i < N; ++i)
    if (!p(i, 0).is_zero()) throw NotInP("first line not preserved");
  MatrixQ out(N - 1, p.nvars());
  for (int i = 1; i < N; ++i)
    for (int j = 1; j < N; ++j) out(i - 1, j - 1) = p(i, j);
  return out;
}

MatrixQ iota_star(const MatrixQ& p) {
  const int N = p.size();
  const int n = side_from_ambient(N);
  for (int j = 0; j + 1 < N; ++j)
    if (!p(N - 1, j).is_zero()) throw NotInP("embedded subspace not preserved");
  // U coordinate k embeds at W coordinate k+1 for the matrix block and at
  // coordinate 0 for the scalar slot.
  auto w = [&](int k) { return k < n * n ? k + 1 : 0; };
  MatrixQ out(n * n + 1, p.nvars());
  for (int k = 0; k <= n * n; ++k)
    for (int l = 0; l <= n * n; ++l) out(k, l) = p(w(k), w(l));
  return out;
}

bool membership_check(const LinElement& el, const DerivationCocycle& c1,
                      const DerivationCocycle& c2) {
  const int n = c1.dim();
  if (el.g.dim() != n) throw ShapeError("group component has wrong size");
  if (el.p.size() != n * n + 2) throw ShapeError("operator component has wrong size");
  if (!preserves_flag(el.p, FlagSpec{n})) throw NotInP("flag not preserved");
  return pi_star(el.p) == l_matrix(c1, el.g) && iota_star(el.p) == l_dual_matrix(c2, el.g);
}

KeyIdentityResult key_identity_check(const DerivationCocycle& c1, const DerivationCocycle& c2,
                                     const GroupElement& g, const GroupElement& h) {
  const int N = c1.dim() * c1.dim() + 2;
  GroupElement hg = h * g;
  MatrixQ ph = make_p_g(c1, c2, h);
  MatrixQ pg = make_p_g(c1, c2, g);
  MatrixQ phg = make_p_g(c1, c2, hg);

  KeyIdentityResult res;
  AlphaCocycle alpha(c1, c2);
  res.alpha_value = alpha(h, g);

  MatrixQ lhs = ph * pg;
  res.t_raw = lhs(0, N - 1) - phg(0, N - 1);
  res.raw_identity = (lhs == add_corner(phg, res.t_raw));

  RatFuncQ uh = corner_shift(c1, c2, h);
  RatFuncQ ug = corner_shift(c1, c2, g);
  RatFuncQ uhg = corner_shift(c1, c2, hg);
  res.shift_bridge = (res.t_raw == res.alpha_value + (ug - uhg + uh));

  MatrixQ qh = add_corner(std::move(ph), -uh);
  MatrixQ qg = add_corner(std::move(pg), -ug);
  MatrixQ qhg = add_corner(std::move(phg), -uhg);
  MatrixQ clhs = qh * qg;
  res.t = clhs(0, N - 1) - qhg(0, N - 1);
  res.corrected_identity = (clhs == add_corner(std::move(qhg), res.t));
  res.corrected_matches = (res.t == res.alpha_value);

  res.holds =
      res.raw_identity && res.shift_bridge && res.corrected_identity && res.corrected_matches;
  return res;
}

std::optional<RatFuncQ> kernel_parameter(const MatrixQ& p) {
  const int N = p.size();
  side_from_ambient(N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      if (i == 0 && j == N - 1) continue;
      if (i == j ? !p(i, j).is_one() : !p(i, j).is_zero()) return std::nullopt;
    }
  return p(0, N - 1);
}

}  // namespace diffext
