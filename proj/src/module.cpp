#include "skewrank/module.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace skewrank {

FiniteModule::FiniteModule(AlgebraPtr ring, int dim, std::vector<Mat> action)
    : ring_(std::move(ring)), dim_(dim), action_(std::move(action)) {
  const PrimeField& F = ring_->field();
  if (static_cast<int>(action_.size()) != ring_->dim())
    throw skew_error(errc::bad_input, "need one action matrix per ring basis element");
  for (const auto& m : action_)
    if (m.rows != dim_ || m.cols != dim_)
      throw skew_error(errc::bad_input, "action matrix has wrong shape");

  // Unit acts as the identity.
  Mat unit_action(dim_, dim_);
  for (int k = 0; k < ring_->dim(); ++k)
    if (ring_->unit()[k] != 0) {
      Mat scaled = action_[k];
      for (auto& x : scaled.d) x = static_cast<std::uint8_t>(F.mul(ring_->unit()[k], x));
      unit_action = mat_add(F, unit_action, scaled);
    }
  if (!(unit_action == identity_mat(dim_)))
    throw skew_error(errc::bad_input, "ring unit does not act as identity");

  // v * (e_i e_j) = (v * e_i) * e_j, i.e. M_{e_i e_j} = M_j * M_i.
  for (int i = 0; i < ring_->dim(); ++i)
    for (int j = 0; j < ring_->dim(); ++j) {
      Mat lhs(dim_, dim_);
      const Vec& prod = ring_->sc(i, j);
      for (int k = 0; k < ring_->dim(); ++k)
        if (prod[k] != 0) {
          Mat scaled = action_[k];
          for (auto& x : scaled.d) x = static_cast<std::uint8_t>(F.mul(prod[k], x));
          lhs = mat_add(F, lhs, scaled);
        }
      if (!(lhs == mat_mul(F, action_[j], action_[i])))
        throw skew_error(errc::bad_input, "action matrices violate the structure constants");
    }
}

Vec FiniteModule::act(const Vec& v, const Vec& r) const {
  const PrimeField& F = ring_->field();
  Vec out(dim_, 0);
  for (int k = 0; k < ring_->dim(); ++k) {
    if (r[k] == 0) continue;
    Vec w = apply(F, action_[k], v);
    vec_add_scaled(F, out, r[k], w);
  }
  return out;
}

FiniteModule regular_module(const AlgebraPtr& A) {
  std::vector<Mat> action;
  for (int k = 0; k < A->dim(); ++k) action.push_back(A->right_mul_matrix(A->basis_vec(k)));
  return FiniteModule(A, A->dim(), std::move(action));
}

FiniteModule submodule_as_module(const FiniteModule& M, const RowSpace& S) {
  const PrimeField& F = M.ring()->field();
  int d = S.dim();
  std::vector<Mat> action;
  for (int k = 0; k < M.ring()->dim(); ++k) {
    Mat m(d, d);
    for (int j = 0; j < d; ++j) {
      Vec img = apply(F, M.action_of_basis(k), S.basis().row(j));
      auto coords = S.coordinates(img);
      if (!coords) throw skew_error(errc::bad_input, "subspace is not action-invariant");
      for (int i = 0; i < d; ++i) m.at(i, j) = (*coords)[i];
    }
    action.push_back(m);
  }
  return FiniteModule(M.ring(), d, std::move(action));
}

RowSpace cyclic_submodule(const FiniteModule& M, const Vec& v) {
  return submodule_closure(M, {v});
}

RowSpace submodule_closure(const FiniteModule& M, const std::vector<Vec>& gens) {
  const PrimeField& F = M.ring()->field();
  RowSpace S(F, M.dim());
  std::vector<Vec> queue;
  for (const auto& g : gens)
    if (S.grow(g)) queue.push_back(g);
  while (!queue.empty()) {
    Vec v = queue.back();
    queue.pop_back();
    for (int k = 0; k < M.ring()->dim(); ++k) {
      Vec w = apply(F, M.action_of_basis(k), v);
      if (S.grow(w)) queue.push_back(w);
    }
  }
  return S;
}

namespace {

std::vector<RowSpace> distinct_cyclic_submodules(const FiniteModule& M) {
  if (M.size_capped(enum_cap()) > enum_cap())
    throw skew_error(errc::too_large, "module element scan exceeds cap");
  std::map<std::string, RowSpace> cyc;
  VecRange(M.ring()->field(), M.dim()).for_each([&](const Vec& v) {
    if (is_zero_vec(v)) return;
    RowSpace C = cyclic_submodule(M, v);
    cyc.emplace(C.key(), C);
  });
  std::vector<RowSpace> out;
  for (auto& [k, s] : cyc) out.push_back(s);
  return out;
}

}  // namespace

std::vector<RowSpace> all_submodules(const FiniteModule& M) {
  auto cyc = distinct_cyclic_submodules(M);
  std::map<std::string, RowSpace> all;
  RowSpace zero(M.ring()->field(), M.dim());
  all.emplace(zero.key(), zero);
  std::vector<RowSpace> queue{zero};
  while (!queue.empty()) {
    RowSpace S = queue.back();
    queue.pop_back();
    for (const auto& C : cyc) {
      RowSpace T = S.sum(C);
      if (all.emplace(T.key(), T).second) queue.push_back(T);
    }
  }
  std::vector<RowSpace> out;
  for (auto& [k, s] : all) out.push_back(s);
  return out;
}

RowSpace socle(const FiniteModule& M, const Ideal& ring_radical) {
  const PrimeField& F = M.ring()->field();
  Mat stacked(0, M.dim());
  for (int r = 0; r < ring_radical.dim(); ++r) {
    Vec j = ring_radical.space().basis().row(r);
    Mat act(M.dim(), M.dim());
    for (int col = 0; col < M.dim(); ++col) {
      Vec img = M.act([&] {
        Vec e(M.dim(), 0);
        e[col] = 1;
        return e;
      }(), j);
      for (int row = 0; row < M.dim(); ++row) act.at(row, col) = img[row];
    }
    stacked = stack_rows(stacked, act);
  }
  if (ring_radical.dim() == 0) return RowSpace::full(F, M.dim());
  return RowSpace(F, M.dim(), kernel(F, stacked));
}

int udim_socle(const FiniteModule& M, const Ideal& ring_radical) {
  if (M.dim() == 0) return 0;
  const PrimeField& F = M.ring()->field();
  RowSpace soc = socle(M, ring_radical);
  if (pow_cap(F.p(), soc.dim(), 1 << 20) > (1 << 20))
    throw skew_error(errc::too_large, "socle element scan exceeds cap");

  // Composition length of the (semisimple) socle: repeatedly adjoin the
  // cyclic submodule with the smallest dimension growth; each step adds
  // one simple summand.
  int length = 0;
  RowSpace S(F, M.dim());
  while (S.dim() < soc.dim()) {
    int best_growth = soc.dim() + 1;
    Vec best_gen;
    RowSpace best(F, M.dim());
    bool found = false;
    for_each_in_space(soc, [&](const Vec& v) {
      if (is_zero_vec(v) || S.contains(v)) return;
      RowSpace C = cyclic_submodule(M, v);
      int growth = S.sum(C).dim() - S.dim();
      if (growth > best_growth) return;
      if (growth < best_growth ||
          (growth == best_growth &&
           std::lexicographical_compare(v.begin(), v.end(), best_gen.begin(), best_gen.end()))) {
        best_growth = growth;
        best_gen = v;
        best = C;
        found = true;
      }
    });
    if (!found) throw std::logic_error("socle peel stalled");
    S = S.sum(best);
    ++length;
  }
  return length;
}

int udim_oracle(const FiniteModule& M) {
  if (M.dim() == 0) return 0;
  auto cyc = distinct_cyclic_submodules(M);
  std::sort(cyc.begin(), cyc.end(),
            [](const RowSpace& a, const RowSpace& b) { return a.dim() < b.dim(); });

  int best = 0;
  // Backtracking over families of cyclic submodules whose sum is direct
  // (dimensions add up).
  std::vector<int> chosen;
  auto rec = [&](auto&& self, size_t start, const RowSpace& sum, int count) -> void {
    best = std::max(best, count);
    for (size_t i = start; i < cyc.size(); ++i) {
      if (count + static_cast<int>(cyc.size() - i) <= best) break;  // cannot improve
      if (sum.dim() + cyc[i].dim() > M.dim()) continue;
      RowSpace s2 = sum.sum(cyc[i]);
      if (s2.dim() != sum.dim() + cyc[i].dim()) continue;
      self(self, i + 1, s2, count + 1);
    }
  };
  rec(rec, 0, RowSpace(M.ring()->field(), M.dim()), 0);
  return best;
}

namespace {
bool g_oracle_enabled = true;
}

bool oracle_enabled() { return g_oracle_enabled; }
void set_oracle_enabled(bool on) { g_oracle_enabled = on; }

int uniform_dimension(const FiniteModule& M, const Ideal& ring_radical) {
  int by_socle = udim_socle(M, ring_radical);
  if (g_oracle_enabled && M.size_capped(enum_cap()) <= enum_cap()) {
    int by_oracle = udim_oracle(M);
    if (by_oracle != by_socle)
      throw std::logic_error("uniform dimension: socle method and oracle disagree");
  }
  return by_socle;
}

int goldie_rank(const AlgebraPtr& A) {
  auto parts = simple_right_ideal_decomposition(A);  // throws NotSemiprime as needed
  int d = static_cast<int>(parts.size());
  Ideal zero_radical(A, RowSpace(A->field(), A->dim()));
  int ud = uniform_dimension(regular_module(A), zero_radical);
  if (ud != d) throw std::logic_error("goldie rank disagrees with uniform dimension");
  return d;
}

}  // namespace skewrank
