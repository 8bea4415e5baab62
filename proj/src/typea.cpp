#include "hatilt/typea.hpp"

#include "hatilt/errors.hpp"
#include "hatilt/homological.hpp"
#include "hatilt/presentation.hpp"

namespace hatilt {

namespace {

BoundQuiverAlgebra checked_auslander(int d, int n) {
  if (d < 1 || n < 1) throw PreconditionError("d and n must be positive");
  return build_auslander_algebra(n + 1, d);
}

}  // namespace

TypeAModel::TypeAModel(int d, int n) : d_(d), n_(n), bqa_(checked_auslander(d, n)) {}

Module TypeAModel::module_of(const LatticePath& p) const {
  if (p.d() != d_ + 1 || p.n() != n_) throw PreconditionError("path does not belong to L_{d+1,n}");
  return from_rep(bqa_, module_M(bqa_, coords(p)));
}

ProjComplex TypeAModel::complex_of(const UObject& u) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    const auto it = cache_.find(u.path);
    if (it != cache_.end()) return shift(it->second, d_ * u.shift);
  }
  ProjComplex x = minimal_proj_resolution(module_of(u.path), max_len(), path_label(u.path)).complex;
  std::lock_guard<std::mutex> lock(mu_);
  cache_.emplace(u.path, x);
  return shift(x, d_ * u.shift);
}

std::vector<ProjComplex> TypeAModel::complexes(const UCollection& us) const {
  std::vector<ProjComplex> out;
  for (const auto& u : us) out.push_back(complex_of(u));
  return out;
}

FDAlgebra TypeAModel::b0() const {
  const auto ps = build_P(d_, n_);
  std::vector<Module> ms;
  for (const auto& u : ps) ms.push_back(module_of(u.path));
  return endo_algebra(ms, path_labels(ps));
}

FDAlgebra TypeAModel::end_of_T() const {
  const auto ts = build_T(d_, n_);
  return endo_algebra(complexes(ts), path_labels(ts));
}

int combinatorial_hom(const UObject& u, const UObject& v, int k) {
  const int d = u.model_d();
  if (k % d != 0) return 0;
  return hom_dim(u, UObject{v.path, v.shift + k / d});
}

std::string path_label(const LatticePath& p) { return p.steps(); }

std::vector<std::string> path_labels(const UCollection& us) {
  std::vector<std::string> out;
  for (const auto& u : us) {
    std::string l = path_label(u.path);
    if (u.shift != 0) l += "[" + std::to_string(u.shift) + "]";
    out.push_back(std::move(l));
  }
  return out;
}

FDAlgebra build_B(const FDAlgebra& b0, int d, int n) { return replicate(b0, n + d); }
FDAlgebra build_Lambda(const FDAlgebra& b0, int d, int n) { return replicate(b0, n + d + 1); }
FDAlgebra build_Pi(const FDAlgebra& b0, int d, int n) { return trivial_ext_r(b0, n + d); }

PreprojectiveReport preprojective_graded_check(const TypeAModel& model) {
  const int d = model.d(), n = model.n();
  PreprojectiveReport rep;
  const auto ps = build_P(d, n);
  const auto pcs = model.complexes(ps);
  for (const auto& x : pcs) {
    const ProjComplex nx = derived_nakayama(x, model.max_len());
    for (const auto& y : pcs) rep.hom_p_nu_p += hom_complex_dim(y, nx, 0);
  }
  const FDAlgebra b0 = model.b0();
  rep.dim_b0 = b0.dim();
  const auto pi = std::make_shared<const FDAlgebra>(build_Pi(b0, d, n));
  rep.self_injective = nakayama_permutation(pi).has_value();
  rep.degree_zero_iso = iso_test(graded_part_zero(*pi), model.end_of_T()).status == IsoStatus::isomorphic;
  // Hom(P, nu^{i(n+d)+k-j} P) is nonzero exactly for i = 1, k = 1, j = n+d
  rep.vanishing = true;
  const int r = n + d;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= r; ++j)
      for (int k = 1; k <= r; ++k) {
        const int e = i * r + k - j;
        bool nonzero = false;
        for (const auto& u : ps)
          for (const auto& v : ps) nonzero = nonzero || combinatorial_hom(u, nakayama_pow(v, e), 0) != 0;
        const bool expected = i == 1 && k == 1 && j == r;
        if (nonzero != expected) {
          rep.vanishing = false;
          rep.detail = "unexpected Hom(P, nu^" + std::to_string(e) + " P) at i=" + std::to_string(i) +
                       " j=" + std::to_string(j) + " k=" + std::to_string(k);
        }
      }
  rep.passed = rep.hom_p_nu_p == rep.dim_b0 && rep.self_injective && rep.degree_zero_iso && rep.vanishing;
  return rep;
}

}  // namespace hatilt
