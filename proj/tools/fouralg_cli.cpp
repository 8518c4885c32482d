// Command-line driver: JSON reports on stdout, diagnostics on stderr.
// Exit codes: 0 success/true, 1 mathematical-false, 2 usage/parse, 3 guard.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "fouralg/classify.hpp"
#include "fouralg/cohomology.hpp"
#include "fouralg/io.hpp"
#include "fouralg/morphgal.hpp"

namespace {

using fouralg::io::json;

struct GlobalOpts {
  bool force = false;
  unsigned threads = 1;
  std::uint64_t seed = 0;
};

fouralg::Vec parse_scalar_list(const fouralg::FieldSpec& fs,
                               const std::string& text) {
  fouralg::Vec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(fouralg::Scalar::parse(fs, item));
  }
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_validate(const std::string& path) {
  fouralg::Algebra a = fouralg::io::load_algebra(path);
  auto check = fouralg::is_four_algebra(a);
  auto ids = fouralg::check_linearized_identities(a);
  auto derived = fouralg::derived_algebra(a);
  json j;
  j["field"] = fouralg::io::field_to_json(a.field());
  j["dim"] = a.dim();
  j["commutative"] = check.commutative;
  j["four_algebra"] = check.ok();
  if (check.quadruple_witness) {
    j["quadruple_witness"] = *check.quadruple_witness;
  }
  j["linearized_identities"] = {{"sq_times_prod", ids.sq_times_prod},
                                {"sq_sq", ids.sq_sq},
                                {"sq_prod_prod", ids.sq_prod_prod},
                                {"pairing_sum", ids.pairing_sum}};
  j["derived_dim"] = derived.dim();
  j["metabelian"] = fouralg::is_metabelian(a);
  emit(j);
  return check.ok() ? 0 : 1;
}

int run_crossed_validate(const std::string& path) {
  auto cd = fouralg::io::load_crossed(path);
  auto v = fouralg::validate_crossed_system(cd);
  emit(fouralg::io::validation_to_json(v));
  return v.pass() ? 0 : 1;
}

int run_crossed_product(const std::string& path) {
  auto cd = fouralg::io::load_crossed(path);
  auto v = fouralg::validate_crossed_system(cd);
  if (!v.pass()) {
    std::cerr << "not a crossed system\n";
    emit(fouralg::io::validation_to_json(v));
    return 1;
  }
  emit(fouralg::io::algebra_to_json(fouralg::crossed_product(cd, false)));
  return 0;
}

int run_crossed_decompose(const std::string& path, const std::string& a_path,
                          const std::string& pi_path,
                          const std::string& s_path) {
  fouralg::Algebra e = fouralg::io::load_algebra(path);
  fouralg::Extension ext = [&]() {
    if (a_path.empty()) {
      return fouralg::derived_quotient_extension(e);
    }
    fouralg::Algebra a = fouralg::io::load_algebra(a_path);
    fouralg::Matrix pi = fouralg::io::matrix_from_json(
        e.field(), fouralg::io::load_json_file(pi_path));
    if (!s_path.empty()) {
      fouralg::Matrix s = fouralg::io::matrix_from_json(
          e.field(), fouralg::io::load_json_file(s_path));
      return fouralg::Extension{e, a, pi, s};
    }
    // No section supplied: solve pi * s_j = unit_j column by column.
    fouralg::Matrix s(e.field(), e.dim(), a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) {
      auto sol = fouralg::solve_affine(
          pi, fouralg::unit_vec(e.field(), a.dim(), j));
      if (!sol) throw fouralg::NotSurjective("projection is not surjective");
      for (std::size_t i = 0; i < e.dim(); ++i) s.at(i, j) = sol->particular[i];
    }
    return fouralg::Extension{e, a, pi, s};
  }();
  auto dec = fouralg::decompose(ext);
  json j;
  j["system"] = fouralg::io::crossed_to_json(dec.system);
  json vb = json::array();
  for (const auto& v : dec.v_basis) {
    json row = json::array();
    for (const auto& c : v) row.push_back(c.str());
    vb.push_back(row);
  }
  j["v_basis"] = vb;
  j["phi"] = fouralg::io::matrix_to_json(dec.phi);
  emit(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact construction, validation, decomposition, cohomology "
               "and classification of 4-algebras over Q and F_p (p >= 5)"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_flag("--force", g.force, "Override enumeration size guards");
  app.add_option("--threads", g.threads, "Worker threads for enumeration");
  app.add_option("--seed", g.seed, "RNG seed (sampled testing only)");

  std::string alg_path, crossed_path, a_path, v_path, pi_path, s_path;
  std::string lambda_text, method = "brute";
  std::size_t v_dim = 1, dim = 2;
  std::uint64_t p = 5;
  bool verify_iso = false;

  auto* validate = app.add_subcommand("validate", "Check the 4-algebra axioms");
  validate->add_option("algebra", alg_path, "Algebra JSON file")->required();

  auto* crossed = app.add_subcommand("crossed", "Crossed-system operations");
  crossed->require_subcommand(1);
  auto* cval = crossed->add_subcommand("validate", "Check (CS1)-(CS3)");
  cval->add_option("system", crossed_path, "Crossed-system JSON")->required();
  auto* cprod = crossed->add_subcommand("product", "Build the crossed product");
  cprod->add_option("system", crossed_path, "Crossed-system JSON")->required();
  auto* cdec = crossed->add_subcommand(
      "decompose", "Read the crossed system off an extension");
  cdec->add_option("algebra", alg_path, "Extension algebra JSON")->required();
  cdec->add_option("--A", a_path, "Quotient algebra JSON (default: E/E')");
  cdec->add_option("--pi", pi_path, "Projection matrix JSON")
      ->needs(cdec->get_option("--A"));
  cdec->add_option("--section", s_path, "Section matrix JSON");

  auto* coh = app.add_subcommand("cohomology", "Cohomology computations");
  coh->require_subcommand(1);
  auto* gh2c = coh->add_subcommand("gh2", "All crossed systems up to equivalence");
  gh2c->add_option("--A", a_path, "Base algebra JSON")->required();
  gh2c->add_option("--vdim", v_dim, "Kernel dimension")->required();
  auto* h2nabc = coh->add_subcommand(
      "h2nab", "Equivalence classes over a fixed kernel algebra");
  h2nabc->add_option("--A", a_path, "Base algebra JSON")->required();
  h2nabc->add_option("--V", v_path, "Kernel algebra JSON")->required();
  auto* h2actc = coh->add_subcommand(
      "h2action", "Abelian-kernel cohomology for a fixed action");
  h2actc->add_option("system", crossed_path,
                     "Crossed-system JSON (act is used; f, multV ignored)")
      ->required();
  auto* h2lamc = coh->add_subcommand(
      "h2lambda", "One-dimensional kernel, fixed functional");
  h2lamc->add_option("--A", a_path, "Base algebra JSON")->required();
  h2lamc->add_option("--lambda", lambda_text,
                     "Functional values on the basis, comma-separated")
      ->required();
  auto* cfc = coh->add_subcommand(
      "cf", "One-dimensional-kernel strata by functional");
  cfc->add_option("--A", a_path, "Base algebra JSON")->required();
  auto* ctc = coh->add_subcommand(
      "ct", "One-dimensional-base classes over a kernel algebra");
  ctc->add_option("--V", v_path, "Kernel algebra JSON")->required();
  auto* metc = coh->add_subcommand(
      "metabelian", "Abelian base and kernel: cocycles modulo coboundaries");
  metc->add_option("system", crossed_path,
                   "Crossed-system JSON (act is used; f, multV ignored)")
      ->required();

  auto* gal = app.add_subcommand(
      "galois", "Automorphisms of the crossed product fixing the kernel");
  gal->add_option("system", crossed_path, "Crossed-system JSON")->required();
  gal->add_flag("--verify-iso", verify_iso,
                "Independently enumerate the automorphism group and compare");

  auto* cls = app.add_subcommand("classify",
                                 "Isomorphism classes of a given dimension");
  cls->add_option("--dim", dim, "Dimension")->required();
  cls->add_option("--p", p, "Field characteristic (prime >= 5)")->required();
  cls->add_option("--method", method, "brute or twisted")
      ->check(CLI::IsMember({"brute", "twisted"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*validate) return run_validate(alg_path);
    if (*cval) return run_crossed_validate(crossed_path);
    if (*cprod) return run_crossed_product(crossed_path);
    if (*cdec) return run_crossed_decompose(alg_path, a_path, pi_path, s_path);
    if (*gh2c) {
      auto a = fouralg::io::load_algebra(a_path);
      emit(fouralg::io::class_set_to_json(fouralg::gh2(a, v_dim, g.force)));
      return 0;
    }
    if (*h2nabc) {
      auto a = fouralg::io::load_algebra(a_path);
      auto v = fouralg::io::load_algebra(v_path);
      emit(fouralg::io::class_set_to_json(fouralg::h2_nab(a, v, g.force)));
      return 0;
    }
    if (*h2actc) {
      auto cd = fouralg::io::load_crossed(crossed_path);
      emit(fouralg::io::quotient_to_json(
          fouralg::h2_action(cd.A, cd.v_dim, cd.act)));
      return 0;
    }
    if (*h2lamc) {
      auto a = fouralg::io::load_algebra(a_path);
      auto lambda = parse_scalar_list(a.field(), lambda_text);
      if (lambda.size() != a.dim()) {
        throw fouralg::ParseError("--lambda needs one value per basis vector");
      }
      emit(fouralg::io::quotient_to_json(fouralg::h2_lambda(a, lambda)));
      return 0;
    }
    if (*cfc) {
      auto a = fouralg::io::load_algebra(a_path);
      json out = json::array();
      for (const auto& stratum : fouralg::cf_strata(a, g.force)) {
        json sj;
        json lam = json::array();
        for (const auto& c : stratum.lambda) lam.push_back(c.str());
        sj["lambda"] = lam;
        sj["h2"] = fouralg::io::quotient_to_json(stratum.h2);
        out.push_back(sj);
      }
      emit(out);
      return 0;
    }
    if (*ctc) {
      auto v = fouralg::io::load_algebra(v_path);
      json out = json::array();
      for (const auto& cls_entry : fouralg::ct_classes(v, g.force)) {
        json cj;
        cj["theta"] = fouralg::io::matrix_to_json(cls_entry.representative.theta);
        json fv = json::array();
        for (const auto& c : cls_entry.representative.F) fv.push_back(c.str());
        cj["F"] = fv;
        cj["orbit_size"] = cls_entry.orbit_size;
        out.push_back(cj);
      }
      emit(out);
      return 0;
    }
    if (*metc) {
      auto cd = fouralg::io::load_crossed(crossed_path);
      emit(fouralg::io::quotient_to_json(
          fouralg::metabelian_h2(cd.field(), cd.A.dim(), cd.v_dim, cd.act)));
      return 0;
    }
    if (*gal) {
      auto cd = fouralg::io::load_crossed(crossed_path);
      auto group = fouralg::galois_group(cd, g.force);
      json j = fouralg::io::galois_to_json(group);
      bool ok = true;
      if (verify_iso) {
        ok = fouralg::verify_galois_isomorphism(cd, g.force);
        j["isomorphism_verified"] = ok;
      }
      emit(j);
      return ok ? 0 : 1;
    }
    if (*cls) {
      auto fs = fouralg::FieldSpec::prime(p);
      auto report = method == "brute"
                        ? fouralg::classify_brute(fs, dim, g.force)
                        : fouralg::classify_via_twisted(fs, dim, g.force);
      emit(fouralg::io::classification_to_json(report));
      return 0;
    }
  } catch (const fouralg::SizeGuard& e) {
    std::cerr << "size guard: " << e.what() << " (pass --force to override)\n";
    return 3;
  } catch (const fouralg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const fouralg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
