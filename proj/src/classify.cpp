#include "skcf/classify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace skcf {

namespace {

// Kets are written out in full where the table factors a term, e.g.
// (|0>+|1>)|11> becomes |011> + |111>.
std::vector<RegistryEntry> build_registry() {
  std::vector<RegistryEntry> r = {
      // 2x2x2, including the states with non-maximal local ranks for B or C.
      {"ABC-1", 2, 2, {"l 0", "0 l+m"}, "|011> + |111> + |100>", {}},
      {"A:BC-1", 2, 2, {"l 0", "0 l"}, "|100> + |111>", {}},
      {"ABC-2", 2, 2, {"l m", "0 l"}, "|001> + |100> + |111>", {}},
      {"AC:B", 2, 2, {"0 0", "l m"}, "|011> + |110>", {}},
      {"AB:C", 2, 2, {"0 l", "0 m"}, "|011> + |101>", {}},
      {"A:B:C", 2, 2, {"0 0", "0 m"}, "|011>", {}},
      // 2x2x3
      {"ABC-3", 2, 3, {"l m 0", "0 0 l"}, "|001> + |100> + |112>", {}},
      {"ABC-4", 2, 3, {"l m 0", "0 l m"}, "|001> + |012> + |100> + |111>", {}},
      // 2x2x4
      {"ABC-5", 2, 4, {"l m 0 0", "0 0 l m"}, "|001> + |013> + |100> + |112>", {}},
      // 2x3x2
      {"ABC-6", 3, 2, {"l 0", "m 0", "0 l"}, "|010> + |100> + |121>", {}},
      {"ABC-7", 3, 2, {"l 0", "m l", "0 m"}, "|010> + |021> + |100> + |111>", {}},
      // 2x3x3
      {"ABC-8", 3, 3, {"l 0 0", "0 l+m 0", "0 0 m"}, "|100> + |011> + |111> + |022>", {}},
      {"ABC-9", 3, 3, {"l 0 0", "0 l 0", "0 0 l+m"}, "|100> + |111> + |022>", {}},
      {"A:BC-2", 3, 3, {"l 0 0", "0 l 0", "0 0 l"}, "|100> + |111> + |122>", {}},
      {"ABC-10", 3, 3, {"l m 0", "0 l 0", "0 0 l"}, "|001> + |100> + |111> + |122>", {}},
      {"ABC-11", 3, 3, {"l m 0", "0 l 0", "0 0 l+m"}, "|001> + |100> + |111> + |022> + |122>", {}},
      {"ABC-12", 3, 3, {"l m 0", "0 l m", "0 0 l"}, "|001> + |012> + |100> + |111> + |122>", {}},
      {"ABC-13", 3, 3, {"l m 0", "0 0 m", "0 0 l"}, "|001> + |012> + |100> + |122>", {}},
      // 2x3x4
      {"ABC-14", 3, 4, {"l m 0 0", "0 0 l 0", "0 0 0 l"}, "|001> + |100> + |112> + |123>", {}},
      {"ABC-15", 3, 4, {"l m 0 0", "0 0 l 0", "0 0 0 l+m"},
       "|001> + |100> + |112> + |023> + |123>", {}},
      {"ABC-16", 3, 4, {"l m 0 0", "0 0 l m", "0 0 0 l"},
       "|001> + |013> + |100> + |112> + |123>", {}},
      {"ABC-17", 3, 4, {"l m 0 0", "0 l m 0", "0 0 0 l"},
       "|001> + |012> + |100> + |111> + |123>", {}},
      {"ABC-18", 3, 4, {"l m 0 0", "0 l m 0", "0 0 l m"},
       "|001> + |012> + |023> + |100> + |111> + |122>", {}},
      // 2x3x5
      {"ABC-19", 3, 5, {"l m 0 0 0", "0 0 l m 0", "0 0 0 0 l"},
       "|001> + |013> + |100> + |112> + |124>", {}},
      {"ABC-20", 3, 5, {"l m 0 0 0", "0 0 l m 0", "0 0 0 l m"},
       "|001> + |013> + |024> + |100> + |112> + |123>", {}},
      // 2x3x6
      {"ABC-21", 3, 6, {"l m 0 0 0 0", "0 0 l m 0 0", "0 0 0 0 l m"},
       "|001> + |013> + |025> + |100> + |112> + |124>", {}},
  };
  for (auto& e : r) e.form = canonical_form(kronecker_structure(parse_pencil_rows(e.pencil)));
  return r;
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

// Non-decreasing lists of positive parts with sum(part + extra) <= budget.
void for_each_index_list(std::size_t budget, int extra, std::vector<int>& cur,
                         const std::function<void(const std::vector<int>&, std::size_t)>& fn) {
  fn(cur, budget);
  int start = cur.empty() ? 1 : cur.back();
  for (int part = start; static_cast<std::size_t>(part + extra) <= budget; ++part) {
    cur.push_back(part);
    for_each_index_list(budget - static_cast<std::size_t>(part + extra), extra, cur, fn);
    cur.pop_back();
  }
}

std::vector<SizeSignature> partitions_up_to(int total) {
  std::vector<SizeSignature> out;
  std::function<void(int, int, SizeSignature&)> rec = [&](int left, int min_part, SizeSignature& cur) {
    if (left == 0) {
      if (!cur.empty()) out.push_back(cur);
      return;
    }
    for (int p = min_part; p <= left; ++p) {
      cur.push_back(p);
      rec(left - p, p, cur);
      cur.pop_back();
    }
  };
  for (int s = 1; s <= total; ++s) {
    SizeSignature cur;
    rec(s, 1, cur);
  }
  return out;
}

int signature_size(const SizeSignature& s) {
  int t = 0;
  for (int x : s) t += x;
  return t;
}

// Multisets of signatures (one per eigenvalue) with total size `total`.
void for_each_signature_multiset(int total, const std::function<void(const std::vector<SizeSignature>&)>& fn) {
  auto sigs = partitions_up_to(total);
  std::vector<SizeSignature> cur;
  std::function<void(int, std::size_t)> rec = [&](int left, std::size_t from) {
    if (left == 0) {
      fn(cur);
      return;
    }
    for (std::size_t i = from; i < sigs.size(); ++i) {
      int sz = signature_size(sigs[i]);
      if (sz > left) continue;
      cur.push_back(sigs[i]);
      rec(left - sz, i);
      cur.pop_back();
    }
  };
  rec(total, 0);
}

}  // namespace

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> table = build_registry();
  return table;
}

const RegistryEntry* find_registry(const std::string& label) {
  for (const auto& e : registry())
    if (e.label == label) return &e;
  return nullptr;
}

Pencil parse_pencil_rows(const std::vector<std::string>& rows) {
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    std::istringstream is(row);
    std::vector<std::string> c;
    for (std::string tok; is >> tok;) c.push_back(tok);
    if (!cells.empty() && c.size() != cells.front().size()) throw InputError("ragged pencil rows");
    cells.push_back(std::move(c));
  }
  if (cells.empty() || cells.front().empty()) throw InputError("empty pencil");
  Pencil p = Pencil::zero(cells.size(), cells.front().size());
  for (std::size_t i = 0; i < cells.size(); ++i)
    for (std::size_t j = 0; j < cells[i].size(); ++j) {
      const auto& t = cells[i][j];
      if (t == "l" || t == "l+m" || t == "m+l") p.s(i, j) = Scalar(1);
      if (t == "m" || t == "l+m" || t == "m+l") p.r(i, j) = Scalar(1);
      if (t != "0" && t != "l" && t != "m" && t != "l+m" && t != "m+l")
        throw InputError("unknown pencil entry '" + t + "'");
    }
  return p;
}

bool same_class(const CanonicalForm& a, const CanonicalForm& b, double tol) {
  CanonicalForm x = a, y = b;
  x.h = x.g = y.h = y.g = 0;
  return same_form(x, y, tol);
}

std::optional<std::string> paper_label(const CanonicalForm& cf, std::size_t m, std::size_t n) {
  if (m < cf.h || n < cf.g || m - cf.h > 3) return std::nullopt;
  for (const auto& e : registry())
    if (same_class(cf, e.form, cf.tol)) return e.label;
  return std::nullopt;
}

std::string structural_label(const CanonicalForm& cf) {
  std::ostringstream os;
  os << "h" << cf.h << "g" << cf.g << "|e:" << join(cf.eps) << "|n:" << join(cf.nu) << "|eigs:";
  std::size_t pos = 0;
  for (const auto& grp : cf.eta)
    for (std::size_t i = 0; i < grp.count; ++i, ++pos)
      os << (pos ? ";" : "") << "(" << join(grp.sig) << ")@" << cf.xhat.at(pos).to_string();
  return os.str();
}

State representative_state(const CanonicalForm& cf) {
  return state_of_pencil(build_pencil(structure_of(cf)));
}

std::vector<ClassEntry> enumerate_classes(std::size_t m, std::size_t n, bool include_degenerate) {
  if (m == 0 || n == 0) throw InputError("enumerate: dimensions must be positive");
  std::vector<ClassEntry> out;
  const std::size_t h_max = include_degenerate ? m : 0;
  const std::size_t g_max = include_degenerate ? n : 0;
  for (std::size_t h = 0; h <= h_max; ++h)
    for (std::size_t g = 0; g <= g_max; ++g) {
      if (h == m && g == n) continue;  // zero state
      const std::size_t rows = m - h, cols = n - g;
      std::vector<int> eps_cur;
      for_each_index_list(rows, 0, eps_cur, [&](const std::vector<int>& eps, std::size_t rows_left) {
        std::vector<int> nu_cur;
        for_each_index_list(rows_left, 1, nu_cur, [&](const std::vector<int>& nu, std::size_t reg) {
          std::size_t used_cols = reg;
          for (int e : eps) used_cols += static_cast<std::size_t>(e) + 1;
          for (int v : nu) used_cols += static_cast<std::size_t>(v);
          if (used_cols != cols) return;
          for_each_signature_multiset(static_cast<int>(reg), [&](const std::vector<SizeSignature>& sigs) {
            if (sigs.size() > 3)
              throw InputError("enumerate: 2x" + std::to_string(m) + "x" + std::to_string(n) +
                               " contains continuous families of classes");
            KroneckerStructure ks;
            ks.h = h;
            ks.g = g;
            ks.eps = eps;
            ks.nu = nu;
            for (std::size_t i = 0; i < sigs.size(); ++i)
              ks.eigs.push_back({ExtScalar(static_cast<long>(i)), sigs[i]});
            ClassEntry entry;
            entry.m = m;
            entry.n = n;
            entry.form = canonical_form(ks);
            entry.label = paper_label(entry.form, m, n).value_or(structural_label(entry.form));
            entry.ket = to_ket(representative_state(entry.form));
            out.push_back(std::move(entry));
          });
        });
      });
    }
  return out;
}

std::vector<ClassEntry> enumerate_classes_up_to(std::size_t m, std::size_t n_max,
                                                bool include_degenerate) {
  std::vector<ClassEntry> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (auto& e : enumerate_classes(m, n, include_degenerate)) {
      bool seen = std::any_of(out.begin(), out.end(),
                              [&](const ClassEntry& o) { return same_class(o.form, e.form); });
      if (!seen) out.push_back(std::move(e));
    }
  }
  return out;
}

namespace {

Scalar random_gauss(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
  return GaussRational(mpq_class(a, b), mpq_class(c, d));
}

ScalarMatrix random_invertible(std::size_t k, std::mt19937_64& rng) {
  for (;;) {
    ScalarMatrix mat(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) mat(i, j) = random_gauss(rng);
    if (rank_exact(mat) == k) return mat;
  }
}

}  // namespace

LocalOps random_local_ops(std::size_t m, std::size_t n, std::mt19937_64& rng) {
  LocalOps ops;
  ops.a = random_invertible(2, rng);
  ops.b = random_invertible(m, rng);
  ops.c = random_invertible(n, rng);
  return ops;
}

OrbitReport orbit_check(const State& s, std::size_t trials, std::uint64_t seed, double tol,
                        NormalizationMode mode) {
  if (trials == 0) throw InputError("orbit_check: trials must be positive");
  OrbitReport report;
  report.trials = trials;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  const CanonicalForm base = canonicalize(s, tol, mode);
  for (std::size_t t = 0; t < trials; ++t) {
    State moved = apply_local_ops(s, random_local_ops(s.m(), s.n(), rng), tol);
    CanonicalForm cf = canonicalize(moved, tol, mode);
    if (!same_form(base, cf, tol)) ++report.failures;
    if (cf.xhat.size() == base.xhat.size()) {
      for (std::size_t i = 0; i < cf.xhat.size(); ++i) {
        if (cf.xhat[i].is_inf() || base.xhat[i].is_inf()) continue;
        double dev = std::abs(cf.xhat[i].value().to_complex() - base.xhat[i].value().to_complex());
        report.max_eig_deviation = std::max(report.max_eig_deviation, dev);
      }
    }
  }
  return report;
}

}  // namespace skcf
