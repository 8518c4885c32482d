#include "fouralg/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fouralg {

namespace {

std::string table_key(const Algebra& a) {
  std::string key;
  Vec flat = flatten_symmetric(a.mult());
  key.reserve(4 * flat.size());
  for (const auto& x : flat) append_residue_key(key, x.residue());
  return key;
}

ClassEntry make_entry(Algebra rep, std::size_t count) {
  ClassEntry e{std::move(rep), 0, false, count};
  e.derived_dim = derived_algebra(e.representative).dim();
  e.metabelian = is_metabelian(e.representative);
  return e;
}

void sort_classes(std::vector<ClassEntry>& classes) {
  std::sort(classes.begin(), classes.end(),
            [](const ClassEntry& a, const ClassEntry& b) {
              if (a.derived_dim != b.derived_dim)
                return a.derived_dim < b.derived_dim;
              return vec_less(flatten_symmetric(a.representative.mult()),
                              flatten_symmetric(b.representative.mult()));
            });
}

}  // namespace

Algebra change_basis(const Algebra& a, const Matrix& phi) {
  auto inv = phi.inverse();
  if (!inv) throw Error("change_basis: matrix is not invertible");
  const std::size_t n = a.dim();
  Algebra out(a.field(), n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      out.set_product(i, j,
                      inv->apply(a.product(phi.col(i), phi.col(j))));
  return out;
}

std::vector<Matrix> gl_matrices(const FieldSpec& fs, std::size_t n,
                                bool force) {
  if (!fs.is_prime_field())
    throw UnsupportedOverRationals("gl_matrices needs a prime field");
  if (!force && power_count(fs.characteristic(), n * n) > 1e8)
    throw SizeGuard("gl_matrices: matrix space exceeds budget");
  std::vector<Matrix> out;
  for_each_vector(fs, n * n, [&](const Vec& flat) {
    Matrix m(fs, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = flat[i * n + j];
    if (m.invertible()) out.push_back(std::move(m));
  });
  return out;
}

std::size_t ClassificationReport::total_count() const {
  std::size_t total = 0;
  for (const auto& c : classes) total += c.count;
  return total;
}

ClassificationReport classify_brute(const FieldSpec& fs, std::size_t dim,
                                    bool force) {
  if (dim > 2 && !force)
    throw SizeGuard("classify_brute: dimension > 2 needs the force flag");
  std::map<std::string, Algebra> pending;
  for (Algebra& a : four_algebra_tables(fs, dim, force)) {
    std::string key = table_key(a);
    pending.emplace(std::move(key), std::move(a));
  }
  std::vector<Matrix> gl = gl_matrices(fs, dim, force);

  ClassificationReport report{dim, fs, {}};
  while (!pending.empty()) {
    // The first remaining key is the orbit minimum: orbits are closed under
    // basis change and previous orbits were removed whole.
    Algebra seed = pending.begin()->second;
    std::set<std::string> orbit;
    for (const Matrix& phi : gl) orbit.insert(table_key(change_basis(seed, phi)));
    for (const std::string& key : orbit) {
      auto it = pending.find(key);
      if (it == pending.end())
        throw Error("basis-change orbit left the valid table set");
      pending.erase(it);
    }
    report.classes.push_back(make_entry(std::move(seed), orbit.size()));
  }
  sort_classes(report.classes);
  return report;
}

ClassificationReport classify_via_twisted(const FieldSpec& fs,
                                          std::size_t dim, bool force) {
  if (dim > 2 && !force)
    throw SizeGuard("classify_via_twisted: dimension > 2 needs the force flag");
  std::vector<Matrix> gl = gl_matrices(fs, dim, force);
  auto canonical = [&](const Algebra& a) {
    Algebra best = a;
    std::string best_key = table_key(a);
    for (const Matrix& phi : gl) {
      Algebra cand = change_basis(a, phi);
      std::string key = table_key(cand);
      if (key < best_key) {
        best_key = std::move(key);
        best = std::move(cand);
      }
    }
    return std::pair<std::string, Algebra>(std::move(best_key),
                                           std::move(best));
  };

  std::map<std::string, std::pair<Algebra, std::size_t>> merged;
  for (std::size_t m = 0; m <= dim; ++m) {
    const std::size_t n = dim - m;  // abelian base dimension
    Algebra base = abelian(fs, n);
    for (const Algebra& v_alg : four_algebra_tables(fs, m, force)) {
      for_each_vector(fs, n * m * m, [&](const Vec& act_flat) {
        BilinearMap act(fs, n, m, m);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
              act.t(i, j, k) = act_flat[(i * m + j) * m + k];
        for_each_vector(fs, n * (n + 1) / 2 * m, [&](const Vec& f_flat) {
          BilinearMap f = unflatten_symmetric(fs, n, m, f_flat);
          CrossedData cd{base, m, act, f, v_alg.mult()};
          if (!validate_crossed_system(cd).pass()) return;
          Algebra e = crossed_product(cd, /*validate=*/false);
          if (derived_algebra(e).dim() != m) return;
          auto [key, rep] = canonical(e);
          auto it = merged.find(key);
          if (it == merged.end())
            merged.emplace(std::move(key),
                           std::make_pair(std::move(rep), std::size_t{1}));
          else
            ++it->second.second;
        });
      });
    }
  }

  ClassificationReport report{dim, fs, {}};
  for (auto& [key, entry] : merged)
    report.classes.push_back(make_entry(std::move(entry.first),
                                        entry.second));
  sort_classes(report.classes);
  return report;
}

}  // namespace fouralg
