#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "hb/bounds.hpp"
#include "hb/io.hpp"
#include "hb/kernels.hpp"
#include "hb/matcore.hpp"
#include "hb/selfcheck.hpp"
#include "hb/witness.hpp"

namespace {

using nlohmann::json;

// Human-readable rendering: 6 significant digits; JSON keeps full precision.

std::string fmt6(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << x;
  return os.str();
}

std::string fmt_complex(double re, double im) {
  if (im == 0.0) return fmt6(re);
  std::ostringstream os;
  os << fmt6(re) << (im < 0.0 ? " - " : " + ") << fmt6(std::abs(im)) << "i";
  return os.str();
}

std::string fmt_entry(const json& e) {
  if (e.is_number()) return fmt6(e.get<double>());
  return fmt_complex(e[0].get<double>(), e[1].get<double>());
}

bool is_matrix_json(const json& j) {
  return j.is_object() && j.contains("rows") && j.contains("cols") && j.contains("data");
}

bool is_scalar_array(const json& j) {
  if (!j.is_array()) return false;
  for (const json& e : j)
    if (!e.is_number() && !(e.is_array() && e.size() == 2 && e[0].is_number())) return false;
  return true;
}

void render_matrix(const json& j, int indent, std::string& out) {
  const auto rows = j["rows"].get<std::int64_t>();
  const auto cols = j["cols"].get<std::int64_t>();
  const json& data = j["data"];
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  std::vector<std::string> cells(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) cells[i] = fmt_entry(data[i]);
  std::vector<std::size_t> width(static_cast<std::size_t>(cols > 0 ? cols : 0), 0);
  for (std::int64_t r = 0; r < rows; ++r)
    for (std::int64_t c = 0; c < cols; ++c) {
      const auto& cell = cells[static_cast<std::size_t>(r * cols + c)];
      width[static_cast<std::size_t>(c)] = std::max(width[static_cast<std::size_t>(c)], cell.size());
    }
  for (std::int64_t r = 0; r < rows; ++r) {
    out += pad + "[ ";
    for (std::int64_t c = 0; c < cols; ++c) {
      const auto& cell = cells[static_cast<std::size_t>(r * cols + c)];
      out += std::string(width[static_cast<std::size_t>(c)] - cell.size(), ' ') + cell;
      if (c + 1 < cols) out += "  ";
    }
    out += " ]\n";
  }
}

std::string render_primitive(const json& j) {
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  if (j.is_number()) return fmt6(j.get<double>());
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void render_table(const json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (is_matrix_json(j)) {
    render_matrix(j, indent, out);
    return;
  }
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_matrix_json(value)) {
        out += pad + key + ": " + render_primitive(value["rows"]) + "x" +
               render_primitive(value["cols"]) + " matrix\n";
        render_matrix(value, indent + 2, out);
      } else if (value.is_object()) {
        out += pad + key + ":\n";
        render_table(value, indent + 2, out);
      } else if (is_scalar_array(value)) {
        out += pad + key + ": [";
        for (std::size_t i = 0; i < value.size(); ++i)
          out += (i ? ", " : "") + fmt_entry(value[i]);
        out += "]\n";
      } else if (value.is_array()) {
        for (std::size_t i = 0; i < value.size(); ++i) {
          out += pad + key + "[" + std::to_string(i) + "]:\n";
          render_table(value[i], indent + 2, out);
        }
        if (value.empty()) out += pad + key + ": []\n";
      } else {
        out += pad + key + ": " + render_primitive(value) + "\n";
      }
    }
    return;
  }
  out += pad + render_primitive(j) + "\n";
}

struct Ctx {
  hb::Tolerances tol;
  std::uint64_t seed = 0;
};

using Outcome = std::pair<int, json>;

hb::HermitianView load_hermitian(const std::string& path, const hb::Tolerances& tol) {
  return hb::HermitianView(hb::load_matrix(path), tol);
}

void require_files(const std::vector<std::string>& files, std::size_t count, const char* what) {
  if (files.size() != count)
    throw hb::UsageError(std::string(what) + ": expected " + std::to_string(count) +
                         " input file(s), got " + std::to_string(files.size()));
}

Outcome outcome_from_report(const hb::BoundReport& report) {
  return {report.certificate.accepted ? 0 : 1, hb::report_to_json(report)};
}

// ---- bound ----------------------------------------------------------------

Outcome do_bound(const std::string& mode, const std::vector<std::string>& files, const Ctx& ctx) {
  if (mode == "main") {
    require_files(files, 2, "bound --main");
    return outcome_from_report(main_lower_bound(hb::GramFactor(hb::load_matrix(files[0])),
                                                hb::GramFactor(hb::load_matrix(files[1])),
                                                ctx.tol));
  }
  if (mode == "compressed") {
    require_files(files, 3, "bound --compressed");
    return outcome_from_report(compressed_lower_bound(hb::load_matrix(files[0]),
                                                      hb::GramFactor(hb::load_matrix(files[1])),
                                                      hb::GramFactor(hb::load_matrix(files[2])),
                                                      ctx.tol));
  }
  if (mode == "multiplier") {
    if (files.size() < 3 || files.size() % 3 != 0)
      throw hb::UsageError("bound --multiplier: expected file triplets M u y, got " +
                           std::to_string(files.size()) + " file(s)");
    std::vector<hb::HermitianView> Ms;
    std::vector<hb::Vector> us, ys;
    for (std::size_t i = 0; i < files.size(); i += 3) {
      Ms.push_back(load_hermitian(files[i], ctx.tol));
      us.push_back(hb::load_vector(files[i + 1]));
      ys.push_back(hb::load_vector(files[i + 2]));
    }
    return outcome_from_report(multiplier_lower_bound(Ms, us, ys, ctx.tol));
  }
  if (mode == "multifactor") {
    if (files.size() < 2 || files.size() % 2 != 0)
      throw hb::UsageError("bound --multifactor: expected an even number of factor files, got " +
                           std::to_string(files.size()));
    std::vector<hb::GramFactor> factors;
    for (const std::string& f : files) factors.emplace_back(hb::load_matrix(f));
    return outcome_from_report(
        multifactor_lower_bound(factors, static_cast<hb::Index>(files.size() / 2), ctx.tol));
  }
  if (mode == "classical") {
    require_files(files, 2, "bound --classical");
    const hb::ClassicalBounds bounds = classical_bounds(load_hermitian(files[0], ctx.tol),
                                                        load_hermitian(files[1], ctx.tol),
                                                        ctx.tol);
    json reports = json::array();
    bool all_accepted = true;
    for (const hb::BoundReport& r : bounds.reports) {
      reports.push_back(hb::report_to_json(r));
      all_accepted = all_accepted && r.certificate.accepted;
    }
    return {all_accepted ? 0 : 1, json{{"reports", std::move(reports)},
                                       {"omitted", bounds.omitted}}};
  }
  if (mode == "hkv") {
    require_files(files, 2, "bound --hkv");
    return outcome_from_report(
        hkv_equal_gram_bound(hb::load_matrix(files[0]), hb::load_matrix(files[1]), ctx.tol));
  }
  if (mode == "upper") {
    require_files(files, 2, "bound --upper");
    return outcome_from_report(upper_bound(load_hermitian(files[0], ctx.tol),
                                           load_hermitian(files[1], ctx.tol), ctx.tol));
  }
  require_files(files, 2, "bound --sqrt");
  return outcome_from_report(sqrt_bound(load_hermitian(files[0], ctx.tol),
                                        load_hermitian(files[1], ctx.tol), ctx.tol));
}

// ---- verify ---------------------------------------------------------------

Outcome do_verify(const std::string& mode, const std::vector<std::string>& files, const Ctx& ctx) {
  if (mode == "loewner") {
    require_files(files, 2, "verify --loewner");
    const hb::LoewnerCertificate cert = loewner_geq(load_hermitian(files[0], ctx.tol),
                                                    load_hermitian(files[1], ctx.tol), ctx.tol);
    return {cert.accepted ? 0 : 1, hb::certificate_to_json(cert)};
  }
  if (mode == "psd") {
    require_files(files, 1, "verify --psd");
    const hb::LoewnerCertificate cert = certify_psd(load_hermitian(files[0], ctx.tol), ctx.tol);
    return {cert.accepted ? 0 : 1, hb::certificate_to_json(cert)};
  }
  require_files(files, 4, "verify --identity");
  const hb::Matrix M = hb::load_matrix(files[0]);
  const hb::Matrix N = hb::load_matrix(files[1]);
  const hb::Vector u = hb::load_vector(files[2]);
  const hb::Vector v = hb::load_vector(files[3]);
  const double residual = hb::bilinear_trace_residual(M, N, u, v);
  const double scale = hb::bilinear_trace_scale(M, N, u, v);
  const double allowed = 1e3 * std::numeric_limits<double>::epsilon() * scale;
  const bool within = residual <= allowed;
  return {within ? 0 : 1, json{{"residual", residual},
                               {"scale", scale},
                               {"allowed", allowed},
                               {"within", within}}};
}

// ---- kernel ---------------------------------------------------------------

Outcome do_kernel(const std::string& mode, const std::vector<std::string>& files,
                  double lambda, bool lambda_set, int power, const Ctx& ctx) {
  if (mode == "cosine") {
    require_files(files, 1, "kernel --cosine");
    const hb::PointSet ps = hb::load_point_set(files[0]);
    const hb::HermitianView gram =
        kernel_gram(hb::KernelSpec{hb::KernelKind::cosine, 1.0}, ps, ctx.tol);
    const hb::LoewnerCertificate cert = certify_psd(gram, ctx.tol);
    return {cert.accepted ? 0 : 1, json{{"kernel", "cosine"},
                                        {"gram", hb::matrix_to_json(gram.matrix())},
                                        {"certificate", hb::certificate_to_json(cert)}}};
  }
  if (mode == "gaussian") {
    if (files.empty()) throw hb::UsageError("kernel --gaussian: expected point set file(s)");
    if (files.size() == 1) {
      const hb::HermitianView gram =
          gaussian_gram(hb::load_point_set(files[0]), lambda, ctx.tol);
      const hb::LoewnerCertificate cert = certify_psd(gram, ctx.tol);
      return {cert.accepted ? 0 : 1, json{{"kernel", "gaussian"},
                                          {"lambda", lambda},
                                          {"gram", hb::matrix_to_json(gram.matrix())},
                                          {"certificate", hb::certificate_to_json(cert)}}};
    }
    if (lambda_set && lambda != 1.0)
      throw hb::UsageError(
          "kernel --gaussian: --lambda applies to a single point set; the multi-set floor "
          "matrix fixes the width at 1");
    std::vector<hb::PointSet> sets;
    for (const std::string& f : files) sets.push_back(hb::load_point_set(f));
    const hb::HermitianView floor_matrix = gaussian_novak_matrix(sets, ctx.tol);
    const hb::LoewnerCertificate cert = certify_psd(floor_matrix, ctx.tol);
    return {cert.accepted ? 0 : 1, json{{"kernel", "gaussian_floor"},
                                        {"matrix", hb::matrix_to_json(floor_matrix.matrix())},
                                        {"certificate", hb::certificate_to_json(cert)}}};
  }
  if (mode == "novak") {
    if (files.empty()) throw hb::UsageError("kernel --novak: expected point set file(s)");
    std::vector<std::vector<double>> lists;
    for (const std::string& f : files) {
      const hb::PointSet ps = hb::load_point_set(f);
      for (hb::Index c = 0; c < ps.dim(); ++c) {
        std::vector<double> xs(static_cast<std::size_t>(ps.size()));
        for (hb::Index i = 0; i < ps.size(); ++i) xs[static_cast<std::size_t>(i)] =
            ps.coords()(i, c);
        lists.push_back(std::move(xs));
      }
    }
    const hb::HermitianView floor_matrix = novak_matrix(lists, ctx.tol);
    const hb::LoewnerCertificate cert = certify_psd(floor_matrix, ctx.tol);
    return {cert.accepted ? 0 : 1, json{{"kernel", "cosine_floor"},
                                        {"matrix", hb::matrix_to_json(floor_matrix.matrix())},
                                        {"certificate", hb::certificate_to_json(cert)}}};
  }
  if (mode == "product") {
    if (files.empty()) throw hb::UsageError("kernel --product: expected Gram matrix file(s)");
    std::vector<hb::HermitianView> grams;
    std::vector<double> ells;
    for (const std::string& f : files) {
      grams.push_back(load_hermitian(f, ctx.tol));
      if (grams.back().size() == 0)
        throw hb::DomainError("kernel --product: empty Gram matrix in " + f);
      ells.push_back(grams.back().matrix()(0, 0).real());
    }
    return outcome_from_report(product_kernel_lower_bound(grams, ells, ctx.tol));
  }
  require_files(files, 1, "kernel --power-preserver");
  return outcome_from_report(entrywise_power_preserver_check(
      load_hermitian(files[0], ctx.tol), static_cast<hb::Index>(power), ctx.tol));
}

// ---- witness ---------------------------------------------------------------

hb::Index integral_count(double value, const char* name) {
  if (!(value >= 1.0) || value != std::floor(value) || value > 1e6)
    throw hb::UsageError(std::string("witness: --") + name +
                         " must be a positive integer, got " + fmt6(value));
  return static_cast<hb::Index>(value);
}

Outcome do_witness_tight(double n, double a, double r, double s, const Ctx& ctx) {
  const hb::TightWitness witness =
      tight_example(integral_count(n, "n"), integral_count(a, "a"), integral_count(r, "r"),
                    integral_count(s, "s"), ctx.seed, ctx.tol);
  const hb::BoundReport report =
      main_lower_bound(hb::GramFactor(witness.A), hb::GramFactor(witness.B), ctx.tol);
  const double slack = ctx.tol.psd_rtol * std::max(1.0, report.certificate.scale);
  const hb::Matrix inflated =
      (1.001 * report.gamma) * (report.d * report.d.adjoint());
  const hb::LoewnerCertificate pushed = loewner_geq(
      hb::HermitianView(report.lhs, ctx.tol), hb::HermitianView(inflated, ctx.tol), ctx.tol);
  const bool confirmed = report.certificate.accepted &&
                         std::abs(report.certificate.lambda_min) <= slack && !pushed.accepted;

  json j = hb::tight_witness_to_json(witness, ctx.seed);
  j["report"] = hb::report_to_json(report);
  j["inflated_rejected"] = !pushed.accepted;
  j["confirmed"] = confirmed;
  return {confirmed ? 0 : 1, std::move(j)};
}

Outcome do_witness_dnn(double a, double b, double c, const Ctx& ctx) {
  const hb::DnnCounterexample example = dnn_counterexample(a, b, c, ctx.tol);
  // Success means the negative result is confirmed: the defect must fail.
  const bool confirmed = !example.defect_certificate.accepted;
  return {confirmed ? 0 : 1, hb::dnn_to_json(example)};
}

Outcome do_witness_embed(const std::vector<std::string>& files, double m, const Ctx& ctx) {
  require_files(files, 2, "witness --embed");
  const hb::GramFactor A(hb::load_matrix(files[0]));
  const hb::GramFactor B(hb::load_matrix(files[1]));
  const hb::BoundReport before = main_lower_bound(A, B, ctx.tol);
  const auto [A2, B2] = dimension_embedding(A, B, integral_count(m, "m"));
  const hb::BoundReport after = main_lower_bound(A2, B2, ctx.tol);
  const bool unchanged = before.gamma == after.gamma;
  const bool ok = unchanged && after.certificate.accepted;
  json j{{"family", "embed"},
         {"parameters", {{"m", integral_count(m, "m")}, {"n", A.rows()}}},
         {"seed", ctx.seed},
         {"margin", after.certificate.lambda_min},
         {"gamma_before", before.gamma},
         {"gamma_after", after.gamma},
         {"gamma_unchanged", unchanged},
         {"A", hb::matrix_to_json(A2.factor)},
         {"B", hb::matrix_to_json(B2.factor)},
         {"report", hb::report_to_json(after)}};
  return {ok ? 0 : 1, std::move(j)};
}

// ---- selfcheck --------------------------------------------------------------

Outcome do_selfcheck(hb::Index n_max, int trials, const Ctx& ctx) {
  const hb::SelfcheckReport report = hb::selfcheck(ctx.seed, n_max, trials, ctx.tol);
  json properties = json::array();
  for (const hb::PropertyResult& p : report.properties) {
    json item{{"name", p.name},
              {"trials", p.trials},
              {"failures", p.failures},
              {"passed", p.passed()}};
    if (!p.detail.empty()) item["detail"] = p.detail;
    properties.push_back(std::move(item));
  }
  return {report.all_passed() ? 0 : 1, json{{"seed", ctx.seed},
                                            {"n_max", n_max},
                                            {"trials", trials},
                                            {"properties", std::move(properties)},
                                            {"all_passed", report.all_passed()}}};
}

std::string pick_mode(const std::vector<std::pair<std::string, bool>>& flags, const char* sub) {
  std::string chosen;
  int count = 0;
  for (const auto& [name, set] : flags)
    if (set) {
      chosen = name;
      ++count;
    }
  if (count != 1) {
    std::string all;
    for (const auto& [name, set] : flags) all += (all.empty() ? "--" : "|--") + name;
    throw hb::UsageError(std::string(sub) + ": choose exactly one of " + all);
  }
  return chosen;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank-one Loewner lower bounds for Hadamard products of PSD matrices"};
  app.require_subcommand(1);

  hb::Tolerances tol;
  bool env_bad = false;
  std::string env_message;
  if (const char* env = std::getenv("HB_DEFAULT_TOL")) {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(value > 0.0) || !(value < 1.0)) {
      env_bad = true;
      env_message = std::string("HB_DEFAULT_TOL: expected a number in (0, 1), got \"") + env +
                    "\"";
    } else {
      tol.rank_rtol = value;
      tol.psd_rtol = value;
    }
  }

  std::string format = "table";
  std::string out_path;
  std::uint64_t seed = 0;
  app.add_option("--tol-rank", tol.rank_rtol, "relative rank cutoff, in (0, 1)");
  app.add_option("--tol-psd", tol.psd_rtol, "relative PSD acceptance slack, in (0, 1)");
  app.add_option("--seed", seed, "seed for generated witnesses and the selfcheck battery");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--out", out_path, "write the report to this file instead of stdout");

  auto* bound = app.add_subcommand("bound", "compute a bound and certify it");
  bound->fallthrough();
  bool b_main = false, b_compressed = false, b_multiplier = false, b_multifactor = false;
  bool b_classical = false, b_hkv = false, b_upper = false, b_sqrt = false;
  bound->add_flag("--main", b_main, "A.json B.json: Gram factors");
  bound->add_flag("--compressed", b_compressed, "C.json A.json B.json");
  bound->add_flag("--multiplier", b_multiplier, "M.json u.json y.json triplets");
  bound->add_flag("--multifactor", b_multifactor, "2l square factor files");
  bound->add_flag("--classical", b_classical, "M.json N.json: Hermitian matrices");
  bound->add_flag("--hkv", b_hkv, "A.json B.json: real factors with equal Gram matrices");
  bound->add_flag("--upper", b_upper, "M.json N.json: PSD matrices");
  bound->add_flag("--sqrt", b_sqrt, "M.json N.json: PSD matrices, square-root factors");
  std::vector<std::string> bound_files;
  bound->add_option("files", bound_files, "input files")->check(CLI::ExistingFile);

  auto* verify = app.add_subcommand("verify", "check a single certificate or identity");
  verify->fallthrough();
  bool v_loewner = false, v_psd = false, v_identity = false;
  verify->add_flag("--loewner", v_loewner, "X.json Y.json: certify X >= Y");
  verify->add_flag("--psd", v_psd, "X.json: certify X >= 0");
  verify->add_flag("--identity", v_identity,
                   "M.json N.json u.json v.json: bilinear trace identity residual");
  std::vector<std::string> verify_files;
  verify->add_option("files", verify_files, "input files")->check(CLI::ExistingFile);

  auto* kernel = app.add_subcommand("kernel", "kernel Gram matrices and their floors");
  kernel->fallthrough();
  bool k_cosine = false, k_gaussian = false, k_novak = false, k_product = false,
       k_power = false;
  kernel->add_flag("--cosine", k_cosine, "points.json (1-d): cosine kernel Gram matrix");
  kernel->add_flag("--gaussian", k_gaussian,
                   "points.json [...]: Gaussian Gram matrix, or the floor matrix for several "
                   "point sets");
  kernel->add_flag("--novak", k_novak,
                   "points.json [...]: product cosine-squared floor matrix");
  kernel->add_flag("--product", k_product, "G.json [...]: product kernel rank-one floor");
  kernel->add_flag("--power-preserver", k_power,
                   "M.json: entrywise power floor for a real correlation matrix");
  double lambda = 1.0;
  int power = 1;
  kernel->add_option("--lambda", lambda, "Gaussian width (single point set only)");
  kernel->add_option("--power", power, "entrywise power exponent k in x^(2k)")
      ->check(CLI::PositiveNumber);
  std::vector<std::string> kernel_files;
  kernel->add_option("files", kernel_files, "input files")->check(CLI::ExistingFile);

  auto* witness = app.add_subcommand("witness", "extremal and negative examples");
  witness->fallthrough();
  bool w_tight = false, w_dnn = false, w_embed = false;
  witness->add_flag("--tight", w_tight, "zero-margin factor pair (needs --n --a --r --s)");
  witness->add_flag("--dnn", w_dnn,
                    "3x3 doubly non-negative counterexample (needs --a --b --c)");
  witness->add_flag("--embed", w_embed, "A.json B.json --m M: zero-row embedding");
  double w_n = 0, w_a = 0, w_r = 0, w_s = 0, w_b = 0, w_c = 0, w_m = 0;
  witness->add_option("--n", w_n, "row count");
  witness->add_option("--a", w_a, "column count (tight) or corner parameter (dnn)");
  witness->add_option("--r", w_r, "first block size");
  witness->add_option("--s", w_s, "second block size");
  witness->add_option("--b", w_b, "center parameter (dnn)");
  witness->add_option("--c", w_c, "off-diagonal parameter (dnn)");
  witness->add_option("--m", w_m, "target row count (embed)");
  std::vector<std::string> witness_files;
  witness->add_option("files", witness_files, "input files")->check(CLI::ExistingFile);

  auto* selfcheck = app.add_subcommand("selfcheck", "run the seeded property battery");
  selfcheck->fallthrough();
  int sc_trials = 100;
  double sc_nmax = 6;
  selfcheck->add_option("--trials", sc_trials, "trials per property")
      ->check(CLI::PositiveNumber);
  selfcheck->add_option("--n-max", sc_nmax, "largest matrix size")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (env_bad) throw hb::UsageError(env_message);
    tol.validate();
    const Ctx ctx{tol, seed};

    Outcome outcome;
    if (bound->parsed()) {
      const std::string mode = pick_mode({{"main", b_main},
                                          {"compressed", b_compressed},
                                          {"multiplier", b_multiplier},
                                          {"multifactor", b_multifactor},
                                          {"classical", b_classical},
                                          {"hkv", b_hkv},
                                          {"upper", b_upper},
                                          {"sqrt", b_sqrt}},
                                         "bound");
      outcome = do_bound(mode, bound_files, ctx);
    } else if (verify->parsed()) {
      const std::string mode = pick_mode(
          {{"loewner", v_loewner}, {"psd", v_psd}, {"identity", v_identity}}, "verify");
      outcome = do_verify(mode, verify_files, ctx);
    } else if (kernel->parsed()) {
      const std::string mode = pick_mode({{"cosine", k_cosine},
                                          {"gaussian", k_gaussian},
                                          {"novak", k_novak},
                                          {"product", k_product},
                                          {"power-preserver", k_power}},
                                         "kernel");
      outcome = do_kernel(mode, kernel_files, lambda, kernel->count("--lambda") > 0, power, ctx);
    } else if (witness->parsed()) {
      const std::string mode =
          pick_mode({{"tight", w_tight}, {"dnn", w_dnn}, {"embed", w_embed}}, "witness");
      if (mode == "tight")
        outcome = do_witness_tight(w_n, w_a, w_r, w_s, ctx);
      else if (mode == "dnn")
        outcome = do_witness_dnn(w_a, w_b, w_c, ctx);
      else
        outcome = do_witness_embed(witness_files, w_m, ctx);
    } else {
      outcome = do_selfcheck(integral_count(sc_nmax, "n-max"), sc_trials, ctx);
    }

    std::string text;
    if (format == "json") {
      text = outcome.second.dump(2) + "\n";
    } else {
      render_table(outcome.second, 0, text);
    }
    if (out_path.empty())
      std::cout << text;
    else
      hb::write_text_file(out_path, text);
    return outcome.first;
  } catch (const hb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
