#include "filtcx/subcomplex.hpp"

#include <stdexcept>

namespace filtcx {

bool SubcomplexReport::passed() const { return first_failure() == nullptr; }

const IdentityCheck* SubcomplexReport::first_failure() const {
  for (const auto& c : ledger)
    if (!c.passed) return &c;
  return nullptr;
}

GramFamily checked_gram(const LieAlgebraSpec& spec, const BasisTable& basis, const MatrixQ& g1) {
  if (g1.rows() != spec.n || g1.cols() != spec.n)
    throw std::invalid_argument("Gram matrix must be " + std::to_string(spec.n) + "x" + std::to_string(spec.n));
  for (Index i = 0; i < g1.rows(); ++i)
    for (Index j = 0; j < g1.cols(); ++j)
      if (g1(i, j) != 0 && spec.weights[static_cast<std::size_t>(i)] != spec.weights[static_cast<std::size_t>(j)])
        throw std::invalid_argument("Gram entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                    ") couples generators of different weight; the weight layers must be orthogonal");
  return gram_family(g1, basis);
}

namespace {

std::string fingerprint(const MatrixQ& g1) {
  if (equal(g1, MatrixQ::Identity(g1.rows(), g1.cols()))) return "identity";
  std::string out = "[";
  for (Index i = 0; i < g1.rows(); ++i) {
    out += i ? ",[" : "[";
    for (Index j = 0; j < g1.cols(); ++j) out += (j ? "," : "") + to_string(g1(i, j));
    out += "]";
  }
  return out + "]";
}

std::string describe(const Family& diff) {
  for (int k = 0; k <= diff.max_degree(); ++k)
    if (auto pos = first_nonzero(diff[k]))
      return "degree " + std::to_string(k) + ", row " + std::to_string(pos->first) + ", col " +
             std::to_string(pos->second) + ": " + to_string(diff[k](pos->first, pos->second));
  return "";
}

class Ledger {
 public:
  explicit Ledger(std::vector<IdentityCheck>& out) : out_(out) {}

  void zero(const std::string& name, const Family& f) {
    const std::string w = describe(f);
    out_.push_back({name, w.empty(), w});
  }
  void same(const std::string& name, const Family& a, const Family& b) { zero(name, a - b); }
  void flag(const std::string& name, bool ok, const std::string& witness) { out_.push_back({name, ok, ok ? "" : witness}); }

 private:
  std::vector<IdentityCheck>& out_;
};

// Coordinates on span(basis) that are orthogonal for the Gram g.
MatrixQ coordinates(const MatrixQ& basis, const MatrixQ& g) {
  const MatrixQ bt_g = basis.transpose() * g;
  return inverse(MatrixQ(bt_g * basis)) * bt_g;
}

std::vector<int> subcomplex_betti(const std::vector<MatrixQ>& maps, const std::vector<int>& dims) {
  std::vector<int> out;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const Index out_rank = k < maps.size() ? rank(maps[k]) : 0;
    const Index in_rank = k > 0 ? rank(maps[k - 1]) : 0;
    out.push_back(dims[k] - static_cast<int>(out_rank + in_rank));
  }
  return out;
}

}  // namespace

ConjugatorHomotopy conjugator_and_homotopy(const ProjectionBundle& bundle, const Family& d, const Family& d0,
                                           const Family& delta0, const Family& big_c) {
  (void)d;
  const Family id = Family::identity(d0.basis_ptr());
  const Family q0 = id - bundle.pi0;
  // Box0 is invertible on F0 = Im Box0; (Box0 + Pi0)^-1 (I - Pi0) is that inverse extended by 0.
  Family box0_inv(d0.basis_ptr(), 0);
  for (int k = 0; k <= d0.max_degree(); ++k) {
    MatrixQ shifted = bundle.box0[k] + bundle.pi0[k];
    try {
      box0_inv[k] = inverse(shifted) * q0[k];
    } catch (const std::domain_error&) {
      throw std::domain_error("conjugator_and_homotopy: Box0 is singular on F0 in degree " + std::to_string(k));
    }
  }
  ConjugatorHomotopy out;
  out.g = (big_c * delta0 * box0_inv + delta0 * box0_inv * d0) * q0 + bundle.pi0;
  out.g_inv = neumann_inverse(id - out.g);
  out.h = bundle.l * out.g * delta0 * box0_inv * out.g_inv * q0 * bundle.l_inv;
  return out;
}

SubcomplexReport build_subcomplex(const LieAlgebraSpec& spec, const MatrixQ& g1, TopDifferential top) {
  require_valid(spec);
  const BasisPtr basis = enumerate_basis(spec.n, spec.weights);
  const GramFamily g = checked_gram(spec, *basis, g1);
  const int n = spec.n;

  SubcomplexReport r;
  r.algebra = spec.name;
  r.gram_fingerprint = fingerprint(g1);
  // Invariant forms have constant coefficients, so the vector-field part of
  // d vanishes and both choices reduce to the Chevalley-Eilenberg operator.
  r.d = ce_differential(spec, basis);
  (void)top;
  r.d0 = ce_differential(associated_graded(spec), basis);
  r.delta0 = adjoint(r.d0, g);
  r.bundle = build_projections(r.d, r.d0, r.delta0, g);
  const auto& b = r.bundle;
  const Family id = Family::identity(basis);
  const Family q0 = id - b.pi0;
  const Family conj = b.l_inv * r.d * b.l;
  r.big_d = b.pi0 * conj * b.pi0;
  r.big_c = q0 * conj * q0;
  r.d_c = b.pi0 * r.d * b.pi_e * b.pi0;
  r.homotopy = conjugator_and_homotopy(b, r.d, r.d0, r.delta0, r.big_c);

  for (int k = 0; k <= n; ++k) {
    r.e0_basis.push_back(kernel_basis(b.box0[k]));
    r.f0_basis.push_back(column_basis(b.box0[k]));
    r.dim_e0.push_back(static_cast<int>(r.e0_basis.back().cols()));
    r.dim_f0.push_back(static_cast<int>(r.f0_basis.back().cols()));
  }
  for (int k = 0; k < n; ++k) {
    const auto& e_src = r.e0_basis[static_cast<std::size_t>(k)];
    const auto& e_dst = r.e0_basis[static_cast<std::size_t>(k + 1)];
    const auto& f_src = r.f0_basis[static_cast<std::size_t>(k)];
    const auto& f_dst = r.f0_basis[static_cast<std::size_t>(k + 1)];
    r.d_e0.push_back(e_dst.cols() && e_src.cols() ? MatrixQ(coordinates(e_dst, g[k + 1]) * r.big_d[k] * e_src)
                                                  : MatrixQ::Zero(e_dst.cols(), e_src.cols()));
    r.c_f0.push_back(f_dst.cols() && f_src.cols() ? MatrixQ(coordinates(f_dst, g[k + 1]) * r.big_c[k] * f_src)
                                                  : MatrixQ::Zero(f_dst.cols(), f_src.cols()));
  }
  r.betti = subcomplex_betti(r.d_e0, r.dim_e0);

  Ledger led(r.ledger);
  const Family& d = r.d;
  const Family& d0 = r.d0;
  const Family& delta0 = r.delta0;
  led.zero("d^2 = 0", d * d);
  led.zero("d0^2 = 0", d0 * d0);
  led.same("gr(d) = d0", gr_part(d), d0);
  {
    const auto inc = increases_weight(d - d0);
    led.flag("d - d0 increases weight", inc.holds, inc.holds ? "" : to_string(*inc.witness));
  }
  led.same("Pi0^2 = Pi0", b.pi0 * b.pi0, b.pi0);
  led.same("Pi0 = I - d0inv d0 - d0 d0inv", b.pi0, id - b.d0inv * d0 - d0 * b.d0inv);
  led.zero("d0inv^2 = 0", b.d0inv * b.d0inv);
  led.zero("Pi0 delta0 = 0", b.pi0 * delta0);
  led.zero("d0 Pi0 = 0", d0 * b.pi0);
  led.same("P^2 = P", b.p * b.p, b.p);
  led.same("P d = d P", b.p * d, d * b.p);
  led.zero("P delta0 = 0", b.p * delta0);
  led.zero("delta0 P = 0", delta0 * b.p);
  {
    std::string w;
    for (int k = 0; k <= n && w.empty(); ++k)
      if (rank(b.p[k]) != rank(b.pi0[k])) w = "degree " + std::to_string(k);
    led.flag("rank P = rank Pi0", w.empty(), w);
  }
  led.same("b d0inv = d0inv b1", b.b * b.d0inv, b.d0inv * b.b1);
  led.same("(I-b)^-1 d0inv = d0inv (I-b1)^-1", neumann_inverse(b.b) * b.d0inv, b.d0inv * neumann_inverse(b.b1));
  led.same("PiF^2 = PiF", b.pi_f * b.pi_f, b.pi_f);
  led.same("P + PiF = I", b.p + b.pi_f, id);
  led.same("d PiF = PiF d", d * b.pi_f, b.pi_f * d);
  led.zero("d0inv PiE = 0", b.d0inv * b.pi_e);
  led.zero("PiE d0inv = 0", b.pi_e * b.d0inv);
  led.zero("PiE (I - Pi0) PiE = 0", b.pi_e * q0 * b.pi_e);
  led.same("PiE = PiE Pi0 PiE", b.pi_e, b.pi_e * b.pi0 * b.pi_e);
  led.same("Pi0 PiE Pi0 = Pi0", b.pi0 * b.pi_e * b.pi0, b.pi0);
  led.same("L Linv = I", b.l * b.l_inv, id);
  led.same("Linv L = I", b.l_inv * b.l, id);
  led.same("P L = P Pi0", b.p * b.l, b.p * b.pi0);
  led.same("P Pi0 = L Pi0", b.p * b.pi0, b.l * b.pi0);
  led.same("P = L Pi0 Linv", b.p, b.l * b.pi0 * b.l_inv);
  led.same("Linv d L Pi0 = Pi0 Linv d L", conj * b.pi0, b.pi0 * conj);
  led.same("Linv d L = D + C", conj, r.big_d + r.big_c);
  led.zero("D^2 = 0", r.big_d * r.big_d);
  led.zero("C^2 = 0", r.big_c * r.big_c);
  led.zero("D C = 0", r.big_d * r.big_c);
  led.zero("C D = 0", r.big_c * r.big_d);
  led.same("Pi0 Linv d = D Pi0 Linv", b.pi0 * b.l_inv * d, r.big_d * b.pi0 * b.l_inv);
  led.zero("d_c^2 = 0", r.d_c * r.d_c);
  led.same("d_c = D", r.d_c, r.big_d);
  const auto& hm = r.homotopy;
  led.same("g ginv = I", hm.g * hm.g_inv, id);
  led.same("C g = g d0 on F0", r.big_c * hm.g * q0, hm.g * d0 * q0);
  led.same("I - L Pi0 Linv = d h + h d", id - b.l * b.pi0 * b.l_inv, d * hm.h + hm.h * d);
  {
    const auto acyclic = subcomplex_betti(r.c_f0, r.dim_f0);
    std::string w;
    for (int k = 0; k <= n && w.empty(); ++k)
      if (acyclic[static_cast<std::size_t>(k)] != 0)
        w = "degree " + std::to_string(k) + " has cohomology of dimension " + std::to_string(acyclic[static_cast<std::size_t>(k)]);
    led.flag("(F0, C) is acyclic", w.empty(), w);
  }
  {
    std::string w;
    for (int k = 0; k <= n && w.empty(); ++k)
      if (r.dim_e0[static_cast<std::size_t>(k)] + r.dim_f0[static_cast<std::size_t>(k)] != binomial(n, k))
        w = "degree " + std::to_string(k);
    led.flag("dim E0 + dim F0 = C(n,k)", w.empty(), w);
  }
  if (g.is_identity()) {
    Family sign_star_pf_star(basis, 0);
    for (int k = 0; k <= n; ++k) {
      const Rational sign((k * (n - k)) % 2 == 0 ? 1 : -1);
      sign_star_pf_star[k] = sign * hodge_star_matrix(n - k, *basis) * b.pi_f[n - k] * hodge_star_matrix(k, *basis);
    }
    led.same("PiF^t = (-1)^{k(n-k)} star PiF star", adjoint(b.pi_f, g), sign_star_pf_star);
  }
  {
    const BettiVector oracle = ce_cohomology_oracle(spec);
    std::string w;
    for (int k = 0; k <= n && w.empty(); ++k)
      if (oracle[static_cast<std::size_t>(k)] != r.betti[static_cast<std::size_t>(k)])
        w = "degree " + std::to_string(k) + ": subcomplex " + std::to_string(r.betti[static_cast<std::size_t>(k)]) +
            ", oracle " + std::to_string(oracle[static_cast<std::size_t>(k)]);
    led.flag("Betti(E0, D) = Chevalley-Eilenberg Betti", w.empty(), w);
  }
  return r;
}

BettiVector ce_cohomology_oracle(const LieAlgebraSpec& spec) {
  const Family d = ce_differential(spec);
  BettiVector out;
  for (int k = 0; k <= spec.n; ++k) {
    const Index out_rank = rank(d[k]);
    const Index in_rank = k > 0 ? rank(d[k - 1]) : 0;
    out.push_back(static_cast<int>(binomial(spec.n, k) - out_rank - in_rank));
  }
  return out;
}

BettiVector betti_of_subcomplex(const SubcomplexReport& report) { return report.betti; }

ComparisonResult compare_e0(const LieAlgebraSpec& spec, const MatrixQ& gram_a, const MatrixQ& gram_b) {
  const auto a = build_subcomplex(spec, gram_a);
  const auto b = build_subcomplex(spec, gram_b);
  ComparisonResult out;
  for (int k = 0; k <= spec.n && out.projectors_equal; ++k) {
    const MatrixQ diff = a.bundle.pi0[k] - b.bundle.pi0[k];
    if (auto pos = first_nonzero(diff)) {
      out.projectors_equal = false;
      out.projector_degree = k;
      out.row = pos->first;
      out.col = pos->second;
      out.entry_a = a.bundle.pi0[k](pos->first, pos->second);
      out.entry_b = b.bundle.pi0[k](pos->first, pos->second);
    }
  }
  // Subspaces are compared through ranks of concatenated bases.
  const auto outside = [](const MatrixQ& from, const MatrixQ& into) -> std::optional<VectorQ> {
    const Index base = rank(into);
    for (Index c = 0; c < from.cols(); ++c) {
      MatrixQ joined(into.rows(), into.cols() + 1);
      joined << into, from.col(c);
      if (rank(joined) > base) return VectorQ(from.col(c));
    }
    return std::nullopt;
  };
  for (int k = 0; k <= spec.n; ++k) {
    const auto& ea = a.e0_basis[static_cast<std::size_t>(k)];
    const auto& eb = b.e0_basis[static_cast<std::size_t>(k)];
    auto w = outside(ea, eb);
    const bool in_first = w.has_value();
    if (!w) w = outside(eb, ea);
    if (w) {
      out.equal = false;
      out.degree = k;
      out.witness = *w;
      out.witness_in_first = in_first;
      return out;
    }
  }
  return out;
}

}  // namespace filtcx
