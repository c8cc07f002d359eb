#include "skewrank/builtin.hpp"

namespace skewrank {

namespace {

CtxPtr with_identity(AlgebraPtr A) {
  Automorphism id = Automorphism::identity(A);
  return make_context(std::move(A), std::move(id));
}

// Conjugation by the elementary matrix 1 + e_12 inside M_2(F_p).
CtxPtr matrix_with_inner(int p) {
  AlgebraPtr M = matrix_algebra(2, p);
  Vec u = M->unit();
  u[1] = 1;  // e11 + e12 + e22
  return make_context(M, inner_automorphism(M, u));
}

}  // namespace

std::vector<NamedContext> builtin_contexts() {
  std::vector<NamedContext> out;

  out.push_back({"F2", with_identity(field_algebra(2))});
  out.push_back({"F3", with_identity(field_algebra(3))});

  AlgebraPtr f2 = field_algebra(2);
  AlgebraPtr f2xf2 = direct_product(f2, f2);
  out.push_back({"F2xF2-swap", make_context(f2xf2, swap_automorphism(f2xf2, 1))});
  out.push_back({"F2xF2-id", with_identity(f2xf2)});

  out.push_back({"M2F2-id", with_identity(matrix_algebra(2, 2))});
  out.push_back({"M2F2-inner", matrix_with_inner(2)});
  out.push_back({"M2F3-id", with_identity(matrix_algebra(2, 3))});
  out.push_back({"M2F3-inner", matrix_with_inner(3)});

  out.push_back({"F2[t]/t2", with_identity(dual_numbers(2))});

  AlgebraPtr m2f2 = matrix_algebra(2, 2);
  AlgebraPtr m2xf2 = direct_product(m2f2, field_algebra(2));
  out.push_back({"M2F2xF2-id", with_identity(m2xf2)});
  Automorphism inner = inner_automorphism(m2f2, [&] {
    Vec u = m2f2->unit();
    u[1] = 1;
    return u;
  }());
  out.push_back({"M2F2xF2-inner",
                 make_context(m2xf2, product_automorphism(
                                         m2xf2, inner,
                                         Automorphism::identity(field_algebra(2))))});

  AlgebraPtr mixed = direct_product(matrix_algebra(2, 2), dual_numbers(2));
  out.push_back({"M2F2xF2[t]/t2", with_identity(mixed)});

  return out;
}

std::vector<NamedContext> semiprime_contexts() {
  std::vector<NamedContext> out;
  for (auto& nc : builtin_contexts())
    if (is_semiprime(nc.ctx->algebra)) out.push_back(nc);
  return out;
}

}  // namespace skewrank
