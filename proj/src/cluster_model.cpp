#include "hatilt/cluster_model.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "hatilt/errors.hpp"

namespace hatilt {

std::string UObject::to_string() const {
  return coords(path).label() + "@" + std::to_string(shift);
}

std::optional<OrderedSeq> tau_d(const OrderedSeq& x) {
  if (x.size() == 0 || x[0] == 1) return std::nullopt;
  std::vector<int> e = x.entries();
  for (auto& v : e) --v;
  return OrderedSeq(x.n(), x.d(), std::move(e));
}

namespace {

void check_same_model(const UObject& a, const UObject& b) {
  if (a.path.d() != b.path.d() || a.path.n() != b.path.n()) {
    throw PreconditionError("objects belong to different models");
  }
}

void check_coprime(int d, int n) {
  if (d < 1 || n < 1 || std::gcd(d, n) != 1) throw PreconditionError("model needs gcd(d, n) = 1");
}

}  // namespace

int hom_dim(const UObject& src, const UObject& dst) {
  check_same_model(src, dst);
  const OrderedSeq x = coords(src.path), y = coords(dst.path);
  const int di = dst.shift - src.shift;
  if (di == 0) return preceq(x, y) ? 1 : 0;
  if (di == 1) {
    auto t = tau_d(x);
    return t && preceq(y, *t) ? 1 : 0;
  }
  return 0;
}

bool compose_nonzero(const UObject& u1, const UObject& u2, const UObject& u3) {
  check_same_model(u1, u2);
  check_same_model(u2, u3);
  if (u1.shift != u2.shift || u2.shift != u3.shift) {
    throw PreconditionError("compose_nonzero handles degree-0 morphisms only");
  }
  if (hom_dim(u1, u2) == 0 || hom_dim(u2, u3) == 0) return false;
  return preceq(coords(u1.path), coords(u3.path));
}

UObject nakayama(const UObject& u) {
  return UObject{rotate(u.path), u.shift + (u.path.first_step() == 'H' ? 0 : 1)};
}

UObject nakayama_pow(const UObject& u, long long k) {
  UObject cur = u;
  if (k >= 0) {
    for (long long i = 0; i < k; ++i) cur = nakayama(cur);
  } else {
    for (long long i = 0; i < -k; ++i) {
      LatticePath prev = rotate_pow(cur.path, -1);
      cur = UObject{prev, cur.shift - (prev.first_step() == 'H' ? 0 : 1)};
    }
  }
  return cur;
}

bool is_projective_module(const UObject& u) { return u.shift == 0 && u.path.first_step() == 'H'; }
bool is_injective_module(const UObject& u) { return u.shift == 0 && u.path.last_step() == 'H'; }

UCollection build_P(int d, int n) {
  check_coprime(d, n);
  UCollection out;
  for (const auto& l : enumerate_dyck(d, n)) out.push_back(UObject{bar(l), 0});
  return out;
}

UCollection build_T(int d, int n) {
  const UCollection p = build_P(d, n);
  UCollection out;
  for (int i = 1; i <= n + d; ++i)
    for (const auto& u : p) out.push_back(nakayama_pow(u, i));
  std::sort(out.begin(), out.end());
  return out;
}

std::map<GridPoint, UCollection> nu_orbit_decomposition(int d, int n, int i) {
  check_coprime(d, n);
  if (i < 1 || i > n + d) throw PreconditionError("nu_orbit_decomposition index out of range");
  std::map<GridPoint, UCollection> out;
  for (const auto& D : delta_set(d, n, i)) {
    UCollection block;
    for (auto& l : region_members(d, n, delta_partner(d, n, D))) block.push_back(UObject{std::move(l), D.y});
    std::sort(block.begin(), block.end());
    out.emplace(D, std::move(block));
  }
  return out;
}

RigidityReport rigidity_check_T(int d, int n) {
  const UCollection t = build_T(d, n);
  RigidityReport r;
  for (const auto& a : t) {
    for (const auto& b : t) {
      r.end_dim += hom_dim(a, b);
      // Hom(a, b[k]) with k = d*m can only be nonzero for these two m
      for (int m : {a.shift - b.shift, a.shift - b.shift + 1}) {
        if (m == 0) continue;
        ++r.pairs_checked;
        UObject bs{b.path, b.shift + m};
        if (hom_dim(a, bs) != 0 && r.passed) {
          r.passed = false;
          r.violation = "Hom(" + a.to_string() + ", " + b.to_string() + "[" + std::to_string(d * m) + "]) != 0";
        }
      }
    }
  }
  return r;
}

GenerationCertificate generation_certificate(int d, int n) {
  check_coprime(d, n);
  GenerationCertificate cert;
  cert.d = d;
  cert.n = n;

  std::set<LatticePath> t_paths;
  for (const auto& u : build_T(d, n)) t_paths.insert(u.path);

  std::vector<CertificateEntry> entries;
  for (auto& p : enumerate_paths(d + 1, n)) {
    const AnchorData a = anchor_data(p);
    if (p.last_step() == 'H') {
      ++cert.injective_labels;
      if (a.h < 1) throw SearchFailure("injective label with anchor at height 0: " + coords(p).label());
    }
    if (a.h < 1) continue;
    CertificateEntry e;
    e.path = std::move(p);
    e.h = a.h;
    e.mu = a.mu;
    entries.push_back(std::move(e));
  }
  std::sort(entries.begin(), entries.end(), [](const CertificateEntry& a, const CertificateEntry& b) {
    if (a.h != b.h) return a.h > b.h;
    if (a.mu != b.mu) return a.mu < b.mu;
    return coords(a.path) < coords(b.path);
  });

  for (auto& e : entries) {
    if (e.mu.is_zero()) {
      const AnchorData a = anchor_data(e.path);
      if (!region_contains(a.anchor, e.path)) {
        throw SearchFailure("mu = 0 path outside its anchor region: " + coords(e.path).label());
      }
      if (!t_paths.count(e.path)) {
        throw SearchFailure("mu = 0 path is not a summand of T: " + coords(e.path).label());
      }
      e.in_T = true;
      continue;
    }
    const ResolvingWindow w = resolving_sequence(e.path);
    e.window = w.window;
    e.position = w.position;
    for (std::size_t k = 0; k < w.window.size(); ++k) {
      if (k == w.position) continue;
      std::vector<int> c = w.window;
      c.erase(c.begin() + static_cast<std::ptrdiff_t>(k));
      e.dependencies.push_back(path_from_coords(d + 1, n, c));
    }
  }
  cert.entries = std::move(entries);
  return cert;
}

bool verify_certificate(const GenerationCertificate& cert, std::string* why) {
  auto fail = [why](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  const int d = cert.d, n = cert.n;
  std::map<LatticePath, std::size_t> index;
  for (std::size_t i = 0; i < cert.entries.size(); ++i) {
    if (!index.emplace(cert.entries[i].path, i).second) return fail("duplicate entry");
  }
  for (const auto& p : enumerate_paths(d + 1, n)) {
    const AnchorData a = anchor_data(p);
    if (a.h >= 1 && !index.count(p)) return fail("uncovered path " + coords(p).label());
    if (a.h < 1 && index.count(p)) return fail("entry with h = 0");
  }
  for (std::size_t i = 0; i < cert.entries.size(); ++i) {
    const auto& e = cert.entries[i];
    const AnchorData a = anchor_data(e.path);
    if (a.h != e.h || a.mu != e.mu) return fail("stale key for " + coords(e.path).label());
    if (e.in_T) {
      if (!e.mu.is_zero() || !e.dependencies.empty()) return fail("in-T entry with mu > 0");
      continue;
    }
    std::vector<int> c = e.window;
    if (e.position >= c.size()) return fail("bad window position");
    c.erase(c.begin() + static_cast<std::ptrdiff_t>(e.position));
    if (path_from_coords(d + 1, n, c) != e.path) return fail("window does not recover path");
    if (e.dependencies.size() != e.window.size() - 1) return fail("dependency count");
    for (const auto& dep : e.dependencies) {
      auto it = index.find(dep);
      if (it == index.end()) return fail("dependency outside certificate");
      // acyclic: dependencies point strictly backward
      if (it->second >= i) return fail("dependency points forward");
      const auto& de = cert.entries[it->second];
      if (!(de.h > e.h || (de.h == e.h && de.mu < e.mu))) return fail("key does not decrease");
    }
  }
  return true;
}

}  // namespace hatilt
