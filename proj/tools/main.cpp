#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "bdryext/cayley.hpp"
#include "bdryext/extension.hpp"
#include "bdryext/fem.hpp"
#include "bdryext/forms.hpp"
#include "bdryext/geometry.hpp"
#include "bdryext/presets.hpp"
#include "bdryext/spectral.hpp"
#include "bdryext/unitary.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;
using namespace bdryext;

struct Options {
  std::string config_path;
  std::string out_path;  // empty = stdout
  std::uint64_t seed = 0;
  bool no_timestamp = false;
  bool raw_coords = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open " + opt.out_path);
  out << text;
}

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string timestamp_line() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[64];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return std::string("# generated ") + buf + "\n";
}

// The hat-coordinate reweighting of a raw-coordinate matrix: D A D^{-1}
// with D the raw->hat diagonal. Identity on the interval.
ComplexMatrix hat_conjugate(const BoundaryGeometry& geom,
                            const ComplexMatrix& A) {
  RealVector d = sobolev_weights(geom, -0.5);
  return d.cast<Complex>().asDiagonal() * A *
         d.cwiseInverse().cast<Complex>().asDiagonal();
}

struct ExtensionSpec {
  ComplexMatrix U;
  bool had_param = false;
  SelfAdjointParam param;
};

ExtensionSpec parse_extension(const json& cfg, const BoundaryGeometry& geom,
                              bool raw_coords) {
  const auto& ext = cfg.at("extension");
  int specs = ext.contains("preset") + ext.contains("unitary") +
              ext.contains("param");
  if (specs != 1)
    throw std::invalid_argument(
        "extension must contain exactly one of preset/unitary/param");

  ExtensionSpec spec;
  if (ext.contains("preset")) {
    const double alpha = ext.value("alpha", 0.0);
    spec.U = preset_unitary(ext.at("preset").get<std::string>(), geom, alpha);
  } else if (ext.contains("unitary")) {
    spec.U = unitary_from_json(ext.at("unitary").dump());
    if (raw_coords) {
      spec.U = hat_conjugate(geom, spec.U);
      if (!is_unitary(spec.U, 1e-8))
        throw std::invalid_argument(
            "raw-coordinate unitary is not unitary in hat coordinates");
    }
  } else {
    spec.param = param_from_json(ext.at("param").dump());
    if (raw_coords) {
      ComplexMatrix D =
          sobolev_weights(geom, -0.5).cast<Complex>().asDiagonal();
      ComplexMatrix X = D * spec.param.basis;
      Eigen::HouseholderQR<ComplexMatrix> qr(X);
      ComplexMatrix Q = qr.householderQ() *
                        ComplexMatrix::Identity(X.rows(), X.cols());
      ComplexMatrix R =
          qr.matrixQR().topRows(X.cols()).triangularView<Eigen::Upper>();
      spec.param.basis = Q;
      spec.param.M = R * spec.param.M * R.adjoint();
      spec.param.M = 0.5 * (spec.param.M + spec.param.M.adjoint()).eval();
    }
    spec.had_param = true;
    spec.U = param_to_unitary(spec.param);
  }
  if (spec.U.rows() != geom.boundary_dim())
    throw std::invalid_argument("extension dimension does not match geometry");
  if (!is_unitary(spec.U, 1e-8))
    throw std::invalid_argument("extension matrix is not unitary");
  return spec;
}

std::string spectrum_csv(const SpectrumResult& res, bool no_timestamp) {
  std::ostringstream out;
  if (!no_timestamp) out << timestamp_line();
  out << "index,eigenvalue,multiplicity,residual\n";
  for (std::size_t i = 0; i < res.eigenvalues.size(); ++i)
    out << i << ',' << fmt17(res.eigenvalues[i]) << ','
        << res.multiplicities[i] << ',' << fmt17(res.residuals[i]) << '\n';
  return out.str();
}

json k_u_json(const ComplexMatrix& U) {
  FormOperator op = k_u(U);
  json jq = json::parse(unitary_to_json(op.Q));
  json jk = json::parse(op.K.size() > 0 ? unitary_to_json(op.K) : "[]");
  return json{{"Q", jq}, {"K", jk}};
}

int run_spectrum(const Options& opt) {
  json cfg = json::parse(read_file(opt.config_path));
  BoundaryGeometry geom = geometry_from_json(cfg.at("geometry").dump());
  ExtensionSpec ext = parse_extension(cfg, geom, opt.raw_coords);
  const auto& w = cfg.at("window");
  const int grid = cfg.value("grid", 2000);
  SpectrumResult res = scan_spectrum(geom, ext.U, w.at(0).get<double>(),
                                     w.at(1).get<double>(), grid);
  write_output(opt, spectrum_csv(res, opt.no_timestamp));
  return 0;
}

int run_convert(const Options& opt) {
  json cfg = json::parse(read_file(opt.config_path));
  BoundaryGeometry geom = geometry_from_json(cfg.at("geometry").dump());
  ExtensionSpec ext = parse_extension(cfg, geom, opt.raw_coords);
  json out;
  out["unitary"] = json::parse(unitary_to_json(ext.U));
  out["param"] = json::parse(param_to_json(
      ext.had_param ? ext.param : unitary_to_param(ext.U)));
  out["K_U"] = k_u_json(ext.U);
  write_output(opt, out.dump(2) + "\n");
  return 0;
}

int run_check_sa(const Options& opt) {
  json cfg = json::parse(read_file(opt.config_path));
  BoundaryGeometry geom = geometry_from_json(cfg.at("geometry").dump());
  ExtensionSpec ext = parse_extension(cfg, geom, opt.raw_coords);
  IsotropyReport rep = maximal_isotropy_report(wu_basis(ext.U));
  json out{{"isotropy", rep.isotropic},
           {"maximal", rep.maximal},
           {"certified", rep.certified()},
           {"dim", rep.dim},
           {"gamma_max_defect", rep.gamma_max_defect},
           {"projector_distance", rep.projector_distance}};
  write_output(opt, out.dump(2) + "\n");
  return 0;
}

DomainFunction pick_state(const json& cfg, const BoundaryGeometry& geom) {
  const auto& st = cfg.at("state");
  if (st.contains("catalog")) {
    const std::string name = st.at("catalog").get<std::string>();
    for (const auto& f : catalog_corpus(geom))
      if (f.name() == name) return f;
    throw std::invalid_argument("unknown catalog state: " + name);
  }
  throw std::invalid_argument("state must name a catalog entry");
}

int run_form(const Options& opt) {
  json cfg = json::parse(read_file(opt.config_path));
  BoundaryGeometry geom = geometry_from_json(cfg.at("geometry").dump());
  ExtensionSpec ext = parse_extension(cfg, geom, opt.raw_coords);
  DomainFunction psi = pick_state(cfg, geom);
  json out;
  try {
    FormValue fv = form_value(ext.U, psi);
    out = json{{"t_U", fv.total},
               {"dirichlet_part", fv.dirichlet_part},
               {"boundary_part", fv.boundary_part},
               {"domain_ok", fv.domain_ok}};
  } catch (const DomainError&) {
    out = json{{"t_U", nullptr},
               {"dirichlet_part", nullptr},
               {"boundary_part", nullptr},
               {"domain_ok", false}};
  }
  write_output(opt, out.dump(2) + "\n");
  return 0;
}

int run_oracle(const Options& opt) {
  json cfg = json::parse(read_file(opt.config_path));
  BoundaryGeometry geom = geometry_from_json(cfg.at("geometry").dump());
  ExtensionSpec ext = parse_extension(cfg, geom, opt.raw_coords);
  const auto& w = cfg.at("window");
  const int grid = cfg.value("grid", 2000);
  const int count = cfg.value("count", 5);
  const int fem_n = cfg.value("fem_n", 1024);
  SpectrumResult res = scan_spectrum(geom, ext.U, w.at(0).get<double>(),
                                     w.at(1).get<double>(), grid);
  std::vector<double> fem = fem_spectrum(geom, ext.U, fem_n, count);
  ComparisonReport rep = compare_spectra(res, fem, count);

  std::ostringstream csv;
  if (!opt.no_timestamp) csv << timestamp_line();
  csv << "index,eigenvalue,multiplicity,residual\n";
  for (std::size_t i = 0; i < res.eigenvalues.size(); ++i)
    csv << i << ',' << fmt17(res.eigenvalues[i]) << ','
        << res.multiplicities[i] << ',' << fmt17(res.residuals[i]) << '\n';
  write_output(opt, csv.str());

  json jrep;
  jrep["pass"] = rep.pass;
  jrep["entries"] = json::array();
  for (const auto& e : rep.entries)
    jrep["entries"].push_back({{"mode_value", e.mode_value},
                               {"fem_value", e.fem_value},
                               {"abs_dev", e.abs_dev},
                               {"rel_dev", e.rel_dev},
                               {"pass", e.pass}});
  const std::string report_text = jrep.dump(2) + "\n";
  if (cfg.contains("report_out")) {
    std::ofstream rout(cfg.at("report_out").get<std::string>(),
                       std::ios::binary);
    if (!rout) throw std::invalid_argument("cannot open report_out path");
    rout << report_text;
  } else {
    std::cerr << report_text;
  }
  return rep.pass ? 0 : 2;
}

void add_common(CLI::App* sub, Options& opt) {
  sub->add_option("--config", opt.config_path, "JSON config path")
      ->required();
  sub->add_option("--out", opt.out_path, "output path (default: stdout)");
  sub->add_option("--seed", opt.seed, "RNG seed (reserved)");
  sub->add_flag("--no-timestamp", opt.no_timestamp,
                "suppress the CSV timestamp header");
  sub->add_flag("--raw-coords", opt.raw_coords,
                "interpret extension data in raw L^2 boundary coordinates");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"self-adjoint Laplacian extensions: spectra, conversions, "
               "certificates, quadratic forms"};
  app.require_subcommand(1);
  Options opt;
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of T_U");
  auto* convert = app.add_subcommand("convert", "unitary <-> (X, L) data");
  auto* check_sa =
      app.add_subcommand("check-sa", "maximal-isotropy certificate");
  auto* form = app.add_subcommand("form", "quadratic form t_U on a state");
  auto* oracle =
      app.add_subcommand("oracle", "secular spectrum vs FEM comparison");
  for (auto* sub : {spectrum, convert, check_sa, form, oracle})
    add_common(sub, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (spectrum->parsed()) return run_spectrum(opt);
    if (convert->parsed()) return run_convert(opt);
    if (check_sa->parsed()) return run_check_sa(opt);
    if (form->parsed()) return run_form(opt);
    if (oracle->parsed()) return run_oracle(opt);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const EigenvalueOneError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
