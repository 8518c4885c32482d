#include "fouralg/io.hpp"

#include <filesystem>
#include <fstream>

namespace fouralg::io {

namespace {

json sparse_products(const BilinearMap& map, bool symmetric) {
  json out = json::array();
  for (std::size_t i = 0; i < map.left_dim(); ++i)
    for (std::size_t j = symmetric ? i : 0; j < map.right_dim(); ++j) {
      json coeffs = json::object();
      for (std::size_t k = 0; k < map.out_dim(); ++k)
        if (!map.t(i, j, k).is_zero())
          coeffs[std::to_string(k)] = map.t(i, j, k).str();
      if (!coeffs.empty())
        out.push_back({{"i", i}, {"j", j}, {"coeffs", std::move(coeffs)}});
    }
  return out;
}

void fill_sparse(BilinearMap& map, const FieldSpec& fs, const json& j,
                 bool symmetric, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected array");
  for (const auto& entry : j) {
    if (!entry.contains("i") || !entry.contains("j") ||
        !entry.contains("coeffs"))
      throw ParseError(std::string(what) +
                       ": entry needs fields i, j, coeffs");
    std::size_t i = entry.at("i").get<std::size_t>();
    std::size_t jj = entry.at("j").get<std::size_t>();
    if (i >= map.left_dim() || jj >= map.right_dim())
      throw ParseError(std::string(what) + ": index out of range");
    if (symmetric && i > jj)
      throw ParseError(std::string(what) + ": expected i <= j");
    Vec value = zero_vec(fs, map.out_dim());
    for (const auto& [k_str, scal] : entry.at("coeffs").items()) {
      std::size_t k = 0;
      try {
        k = std::stoul(k_str);
      } catch (const std::exception&) {
        throw ParseError(std::string(what) + ": bad coefficient index '" +
                         k_str + "'");
      }
      if (k >= map.out_dim())
        throw ParseError(std::string(what) + ": coefficient index out of range");
      value[k] = Scalar::parse(fs, scal.get<std::string>());
    }
    if (symmetric)
      map.set_symmetric(i, jj, value);
    else
      map.set_basis(i, jj, value);
  }
}

}  // namespace

json field_to_json(const FieldSpec& fs) {
  if (fs.is_prime_field())
    return json{{"kind", "Fp"}, {"p", fs.characteristic()}};
  return json{{"kind", "Q"}};
}

FieldSpec field_from_json(const json& j) {
  if (!j.contains("kind")) throw ParseError("field: missing 'kind'");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "Q") return FieldSpec::rationals();
  if (kind == "Fp") {
    if (!j.contains("p")) throw ParseError("field: Fp needs 'p'");
    return FieldSpec::prime(j.at("p").get<std::uint64_t>());
  }
  throw ParseError("field: kind must be 'Q' or 'Fp'");
}

json algebra_to_json(const Algebra& a) {
  json out;
  out["field"] = field_to_json(a.field());
  out["dim"] = a.dim();
  if (!a.labels.empty()) out["labels"] = a.labels;
  out["products"] = sparse_products(a.mult(), /*symmetric=*/true);
  return out;
}

Algebra algebra_from_json(const json& j) {
  if (!j.contains("field") || !j.contains("dim"))
    throw ParseError("algebra: missing 'field' or 'dim'");
  FieldSpec fs = field_from_json(j.at("field"));
  Algebra a(fs, j.at("dim").get<std::size_t>());
  if (j.contains("labels"))
    a.labels = j.at("labels").get<std::vector<std::string>>();
  if (j.contains("products"))
    fill_sparse(a.mult(), fs, j.at("products"), /*symmetric=*/true,
                "algebra products");
  return a;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Matrix matrix_from_json(const FieldSpec& fs, const json& j) {
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw ParseError("matrix: missing 'rows', 'cols' or 'entries'");
  std::size_t rows = j.at("rows").get<std::size_t>();
  std::size_t cols = j.at("cols").get<std::size_t>();
  const json& entries = j.at("entries");
  if (entries.size() != rows) throw ParseError("matrix: wrong row count");
  Matrix m(fs, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (entries[i].size() != cols)
      throw ParseError("matrix: wrong column count");
    for (std::size_t jj = 0; jj < cols; ++jj)
      m.at(i, jj) = Scalar::parse(fs, entries[i][jj].get<std::string>());
  }
  return m;
}

json crossed_to_json(const CrossedData& cd) {
  json out;
  out["A"] = algebra_to_json(cd.A);
  out["v_dim"] = cd.v_dim;
  out["act"] = sparse_products(cd.act, /*symmetric=*/false);
  out["f"] = sparse_products(cd.f, /*symmetric=*/true);
  out["multV"] = sparse_products(cd.mult_v, /*symmetric=*/true);
  return out;
}

CrossedData crossed_from_json(const json& j, const std::string& base_dir) {
  if (!j.contains("A") || !j.contains("v_dim"))
    throw ParseError("crossed system: missing 'A' or 'v_dim'");
  Algebra a = [&] {
    const json& aj = j.at("A");
    if (aj.is_string()) {
      std::filesystem::path p(aj.get<std::string>());
      if (p.is_relative() && !base_dir.empty())
        p = std::filesystem::path(base_dir) / p;
      return load_algebra(p.string());
    }
    return algebra_from_json(aj);
  }();
  const FieldSpec fs = a.field();
  std::size_t m = j.at("v_dim").get<std::size_t>();
  CrossedData cd = CrossedData::zero(a, m);
  if (j.contains("act"))
    fill_sparse(cd.act, fs, j.at("act"), /*symmetric=*/false, "act");
  if (j.contains("f"))
    fill_sparse(cd.f, fs, j.at("f"), /*symmetric=*/true, "f");
  if (j.contains("multV"))
    fill_sparse(cd.mult_v, fs, j.at("multV"), /*symmetric=*/true, "multV");
  return cd;
}

json validation_to_json(const CrossedValidation& v) {
  auto axiom = [](const AxiomResult& a) {
    json out{{"pass", a.pass}};
    if (!a.pass) out["witness"] = a.witness;
    return out;
  };
  return json{{"cs1", axiom(v.cs1)},
              {"cs2", axiom(v.cs2)},
              {"cs3", axiom(v.cs3)},
              {"pass", v.pass()}};
}

namespace {
json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}
}  // namespace

json quotient_to_json(const QuotientDesc& q) {
  json reps = json::array();
  for (const auto& r : q.representatives) reps.push_back(vec_to_json(r));
  return json{{"z2_dim", q.z2_dim},
              {"b2_dim", q.b2_dim},
              {"h2_dim", q.h2_dim},
              {"representatives", std::move(reps)}};
}

json class_set_to_json(const CohomologyClassSet& s) {
  json classes = json::array();
  for (const auto& c : s.classes)
    classes.push_back({{"representative", crossed_to_json(c.representative)},
                       {"orbit_size", c.orbit_size}});
  return json{{"decomposition_label", s.decomposition_label},
              {"class_count", s.classes.size()},
              {"total_systems", s.total_systems()},
              {"classes", std::move(classes)}};
}

json classification_to_json(const ClassificationReport& r) {
  json classes = json::array();
  for (const auto& c : r.classes)
    classes.push_back({{"representative", algebra_to_json(c.representative)},
                       {"derived_dim", c.derived_dim},
                       {"metabelian", c.metabelian},
                       {"count", c.count}});
  return json{{"dim", r.dim},
              {"field", field_to_json(r.field)},
              {"class_count", r.classes.size()},
              {"total_count", r.total_count()},
              {"classes", std::move(classes)}};
}

json galois_to_json(const GaloisGroup& g) {
  json elements = json::array();
  for (const auto& p : g.elements)
    elements.push_back(
        {{"r", matrix_to_json(p.r)}, {"alpha", matrix_to_json(p.alpha)}});
  // Cayley table: entry (i, j) is the index of elements[i] * elements[j].
  auto index_of = [&](const MorphismPair& p) -> std::size_t {
    for (std::size_t k = 0; k < g.elements.size(); ++k)
      if (g.elements[k].r == p.r && g.elements[k].alpha == p.alpha) return k;
    throw Error("galois_to_json: product escaped the group");
  };
  json table = json::array();
  for (const auto& p : g.elements) {
    json row = json::array();
    for (const auto& q : g.elements) row.push_back(index_of(pair_mul(p, q)));
    table.push_back(std::move(row));
  }
  return json{{"order", g.order()},
              {"elements", std::move(elements)},
              {"cayley_table", std::move(table)}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Algebra load_algebra(const std::string& path) {
  return algebra_from_json(load_json_file(path));
}

CrossedData load_crossed(const std::string& path) {
  return crossed_from_json(
      load_json_file(path),
      std::filesystem::path(path).parent_path().string());
}

}  // namespace fouralg::io
