#include "filtcx/projections.hpp"

#include <stdexcept>

namespace filtcx {

BoxAndProjection base_box_and_projection(const Family& d0, const Family& delta0, const GramFamily& g) {
  if (d0.shift() != 1 || delta0.shift() != -1)
    throw std::invalid_argument("base_box_and_projection: expected shifts +1 and -1");
  BoxAndProjection out{d0 * delta0 + delta0 * d0, Family(d0.basis_ptr(), 0)};
  for (int k = 0; k <= out.box0.max_degree(); ++k) out.pi0[k] = gram_projector(kernel_basis(out.box0[k]), g[k]);
  return out;
}

Family partial_inverse(const Family& d0, const GramFamily& g) {
  if (d0.shift() != 1) throw std::invalid_argument("partial_inverse: expected a shift +1 family");
  const Family delta0 = adjoint(d0, g);
  Family out(d0.basis_ptr(), -1);
  for (int k = 0; k < d0.max_degree(); ++k) {
    // Im delta0 in degree k is mapped isomorphically onto Im d0 in degree k+1.
    const MatrixQ c = column_basis(delta0[k + 1]);
    if (c.cols() == 0) continue;
    const MatrixQ b = d0[k] * c;
    const MatrixQ bt_g = b.transpose() * g[k + 1];
    out[k + 1] = c * inverse(MatrixQ(bt_g * b)) * bt_g;
  }
  return out;
}

Family neumann_inverse(const Family& n) {
  if (n.shift() != 0) throw std::invalid_argument("neumann_inverse: expected a shift 0 family");
  const auto check = increases_weight(n);
  if (!check.holds) throw std::invalid_argument("neumann_inverse: operator does not increase weight (" + to_string(*check.witness) + ")");
  const auto n0 = nilpotency_bound(n.basis());
  Family out = Family::identity(n.basis_ptr());
  for (int k = 0; k <= n.max_degree(); ++k) {
    MatrixQ power = MatrixQ::Identity(n[k].rows(), n[k].cols());
    for (int j = 1; j < n0[static_cast<std::size_t>(k)]; ++j) {
      power = power * n[k];
      out[k] += power;
    }
  }
  return out;
}

RuminProjection rumin_projection(const Family& d, const Family& d0, const Family& d0inv) {
  const Family diff = d - d0;
  const auto check = increases_weight(diff);
  if (!check.holds) throw std::invalid_argument("rumin_projection: d - d0 does not increase weight (" + to_string(*check.witness) + ")");
  RuminProjection out{-(d0inv * diff), -(diff * d0inv), {}};
  const Family resolvent = neumann_inverse(out.b);
  out.pi_f = resolvent * d0inv * d + d * resolvent * d0inv;
  return out;
}

Family generalized_kernel_projection(const Family& box, const std::vector<int>& n0) {
  if (box.shift() != 0) throw std::invalid_argument("generalized_kernel_projection: expected a shift 0 family");
  Family out(box.basis_ptr(), 0);
  for (int k = 0; k <= box.max_degree(); ++k) {
    const Index size = box[k].rows();
    MatrixQ power = MatrixQ::Identity(size, size);
    for (int j = 0; j < n0.at(static_cast<std::size_t>(k)); ++j) power = power * box[k];
    const MatrixQ ker = kernel_basis(power);
    const MatrixQ im = column_basis(power);
    if (ker.cols() + im.cols() != size)
      throw std::domain_error("generalized_kernel_projection: kernel and image are not complementary in degree " + std::to_string(k));
    MatrixQ s(size, size);
    s << ker, im;
    MatrixQ s_inv;
    try {
      s_inv = inverse(s);
    } catch (const std::domain_error&) {
      throw std::domain_error("generalized_kernel_projection: kernel and image intersect in degree " + std::to_string(k));
    }
    MatrixQ select = MatrixQ::Zero(size, size);
    for (Index i = 0; i < ker.cols(); ++i) select(i, i) = 1;
    out[k] = s * select * s_inv;
  }
  return out;
}

Conjugator build_l(const Family& p, const Family& pi0) {
  const Family id = Family::identity(p.basis_ptr());
  Conjugator out{p * pi0 + (id - p) * (id - pi0), {}};
  const Family n = id - out.l;
  const auto check = increases_weight(n);
  if (!check.holds) throw std::domain_error("build_l: gr(L) is not the identity (" + to_string(*check.witness) + ")");
  out.l_inv = neumann_inverse(n);
  return out;
}

ProjectionBundle build_projections(const Family& d, const Family& d0, const Family& delta0, const GramFamily& g) {
  ProjectionBundle out;
  auto bp = base_box_and_projection(d0, delta0, g);
  out.box0 = std::move(bp.box0);
  out.pi0 = std::move(bp.pi0);
  out.d0inv = partial_inverse(d0, g);
  out.box = d * delta0 + delta0 * d;
  out.p = generalized_kernel_projection(out.box, nilpotency_bound(d.basis()));
  auto rp = rumin_projection(d, d0, out.d0inv);
  out.b = std::move(rp.b);
  out.b1 = std::move(rp.b1);
  out.pi_f = std::move(rp.pi_f);
  out.pi_e = Family::identity(d.basis_ptr()) - out.pi_f;
  auto conj = build_l(out.p, out.pi0);
  out.l = std::move(conj.l);
  out.l_inv = std::move(conj.l_inv);
  return out;
}

}  // namespace filtcx
