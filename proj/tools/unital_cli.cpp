// unital: command-line front end for the unital-channel toolkit.
//
// Every command prints one JSON object {command, inputs, outputs, status} on
// stdout. Exit codes: 0 ok, 2 usage, 3 malformed input file, 4 parameter out
// of range or failed precondition, 1 anything else.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "unital/io.hpp"
#include "unital/unital.hpp"

using nlohmann::json;
using namespace unital;

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2, kBadFile = 3, kBadParameter = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File loaders report shape problems as format errors.
template <class F>
auto from_file(const std::string& path, F&& parse) {
  try {
    return parse(io::read_json_file(path));
  } catch (const DimensionError& e) {
    throw FormatError(path + ": " + e.what());
  } catch (const PreconditionError& e) {
    throw FormatError(path + ": " + e.what());
  }
}

KrausChannel load_channel(const std::string& path) {
  return from_file(path, [](const json& j) { return io::channel_from_json(j); });
}

CMatrix load_matrix(const std::string& path) {
  return from_file(path, [](const json& j) {
    CMatrix m = io::matrix_from_json(j.is_object() && j.contains("matrix") ? j["matrix"] : j);
    if (m.rows() != m.cols()) throw FormatError("matrix must be square");
    return m;
  });
}

ChoiState load_choi(const std::string& path) {
  return from_file(path, [](const json& j) { return io::choi_from_json(j); });
}

json vector_to_json(const RVector& v) {
  json a = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) a.push_back(v(k));
  return a;
}

json coords_json(const CovariantCoords& c) { return {{"x", c.x}, {"y", c.y}}; }

json state_json(const CovariantState& s) { return {{"q0", s.q0}, {"q1", s.q1}, {"q2", s.q2}}; }

double unitarity_defect(const CMatrix& u) {
  return (u * u.adjoint() - CMatrix::Identity(u.rows(), u.cols())).norm();
}

// ---------------------------------------------------------------------------
// figure data

struct Csv {
  std::ofstream out;
  int rows = 0;

  explicit Csv(const std::string& path) : out(path) {
    if (!out) throw FormatError("cannot write " + path);
    out.precision(12);
  }
  void header(const std::string& h) { out << h << "\n"; }
  void row(const std::string& series, double a, double b) {
    out << series << "," << a << "," << b << "\n";
    ++rows;
  }
  void row(double a, double b, double c) {
    out << a << "," << b << "," << c << "\n";
    ++rows;
  }
};

int figure_covariant(int d, const std::string& path) {
  if (d < 2) throw RangeError("figure covariant: d >= 2 required");
  Csv csv(path);
  csv.header("series,x_F,y_dP0");
  for (auto [x, y] : {std::pair{1.0, double(d)}, {-1.0, 0.0}, {1.0, 0.0}, {1.0, double(d)}})
    csv.row("states", x, y);
  for (auto [x, y] : {std::pair{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}, {0.0, 0.0}})
    csv.row("entanglement_breaking", x, y);
  if (d % 2 == 0) {
    for (auto [x, y] : {std::pair{1.0, double(d)}, {-1.0, 0.0}, {1.0, 0.0}, {1.0, double(d)}})
      csv.row("unitary_mixtures", x, y);
    return csv.rows;
  }
  const double x0 = -1.0 + 2.0 / d;
  const int n = 100;
  for (int k = 0; k <= n; ++k) {
    const double x = x0 + (1.0 - x0) * k / n;
    const double m = m_curve(x, d);
    csv.row("unitary_mixtures", x, d * m * m);
  }
  csv.row("unitary_mixtures", 1.0, 0.0);
  csv.row("unitary_mixtures", x0, 0.0);
  csv.row("unitary_mixtures", x0, d * m_curve(x0, d) * m_curve(x0, d));
  for (int k = 0; k <= 50; ++k) {
    const CovariantCoords c = coords_of_state(covariant_family(d, 2.0 / d * k / 50));
    csv.row("epsilon_family", c.x, c.y);
  }
  return csv.rows;
}

int figure_negativity(int d, const std::string& path) {
  if (d < 2) throw RangeError("figure negativity: d >= 2 required");
  Csv csv(path);
  csv.header("x_F,y_dP0,negativity");
  const int n = 40;
  for (int i = 0; i <= n; ++i) {
    const double x = -1.0 + 2.0 * i / n;
    const double top = 0.5 * d * (1.0 + x);
    for (int j = 0; j <= n; ++j) {
      const double y = top * j / n;
      CovariantState s = state_from_coords({x, y}, d);
      s.q0 = std::max(0.0, s.q0);
      s.q1 = std::max(0.0, s.q1);
      s.q2 = std::max(0.0, s.q2);
      csv.row(x, y, negativity(s));
    }
  }
  return csv.rows;
}

int figure_two_copy(int d, const std::string& path) {
  if (d != 3) throw RangeError("figure two-copy: only d = 3 is available");
  Csv csv(path);
  csv.header("series,x_F,y_F12");
  for (auto [x, y] : {std::pair{1.0, 1.0}, {-1.0, 1.0}, {0.0, -1.0}, {1.0, 1.0}}) csv.row("states", x, y);
  const int n = 100;
  for (int k = 0; k <= n; ++k) {
    const TwoCopyCoords c = theta_curve(M_PI / 2 * k / n);
    csv.row("unitary_mixtures", c.f, c.f12);
  }
  csv.row("unitary_mixtures", 1.0 / 9.0, -7.0 / 9.0);
  csv.row("unitary_mixtures", 1.0, 1.0);
  csv.row("unitary_mixtures", theta_curve(0.0).f, 1.0);
  for (int k = 0; k <= 50; ++k) {
    const double x = -1.0 / 3.0 - 2.0 / 3.0 * k / 50;
    csv.row("product_family", x, x * x);
  }
  const double xs = -1.0 / 3.0 - epsilon_star();
  csv.row("epsilon_star", xs, xs * xs);
  return csv.rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unital quantum channels: representations, extremality, witnesses, "
               "covariant channels and the asymptotic quantum Birkhoff property."};
  app.require_subcommand(1);

  json inputs = json::object();
  std::string command;

  // check / choi
  std::string channel_path;
  auto* check = app.add_subcommand("check", "Report complete positivity, trace preservation and unitality "
                                            "of a channel given by Kraus operators or a Choi state.");
  check->add_option("file", channel_path, "JSON file with {\"kraus\": [...]} or {\"rho\": ...}")->required();
  double tol = 1e-10;
  check->add_option("--tol", tol, "Tolerance")->capture_default_str();

  auto* choi = app.add_subcommand("choi", "Print the normalized Choi state of a channel.");
  choi->add_option("file", channel_path, "JSON file with {\"kraus\": [...]}")->required();

  // decompose
  auto* decompose = app.add_subcommand("decompose", "Write a unital channel as an affine combination of "
                                                    "unitary conjugations or as the average of two "
                                                    "Hilbert-Schmidt unitaries.");
  decompose->require_subcommand(1);
  std::uint64_t seed = 0;
  int generators = 0;
  auto* affine = decompose->add_subcommand("affine", "Affine combination of unitary conjugations with real "
                                                     "coefficients summing to one.");
  affine->add_option("file", channel_path, "Channel JSON file")->required();
  affine->add_option("--seed", seed, "Seed for the random generator family")->required();
  affine->add_option("--generators", generators, "Number of random unitaries (default (d^2-1)^2+2)");
  auto* hs = decompose->add_subcommand("hs", "Superoperator as the average of two unitaries on "
                                             "Hilbert-Schmidt space.");
  hs->add_option("file", channel_path, "Channel JSON file")->required();
  hs->add_option("--seed", seed, "Accepted for uniformity; the construction is deterministic");

  // extremal
  auto* extremal = app.add_subcommand("extremal", "Test extremality among all channels and among unital "
                                                  "channels via the rank of the Kraus Gram systems.");
  extremal->add_option("file", channel_path, "Channel JSON file");
  bool appendix_b = false;
  extremal->add_flag("--appendix-b", appendix_b, "Use the built-in qutrit channel with four Kraus "
                                                 "operators that is extremal only among unital channels");

  // witness
  auto* witness = app.add_subcommand("witness", "Tight flip-operator witness W = (B (x) 1) F (B^dagger (x) 1) "
                                                "+ w 1 and, optionally, its value on a Choi state.");
  std::string b_path, rho_path;
  witness->add_option("--b", b_path, "JSON file with a square matrix B")->required();
  witness->add_option("--rho", rho_path, "JSON file with a Choi state {\"rho\": ...}");

  // covariant
  auto* covariant = app.add_subcommand("covariant", "Orthogonally covariant channels: coordinates "
                                                    "(<F>, <d P0>), membership in the unitary mixtures, "
                                                    "and negativity.");
  covariant->require_subcommand(1);
  int d = 0;
  std::optional<double> q0, q1, q2, epsilon;
  for (const char* name : {"coords", "membership", "negativity"}) {
    auto* sub = covariant->add_subcommand(name, std::string(name) == "coords"
                                                    ? "Coordinates of a covariant state."
                                                : std::string(name) == "membership"
                                                    ? "Whether a covariant state is a mixture of unitary channels."
                                                    : "Base-norm distance to the unitary mixtures.");
    sub->add_option("--d", d, "Dimension")->required();
    auto* oq0 = sub->add_option("--q0", q0, "Weight on the maximally entangled projector");
    auto* oq1 = sub->add_option("--q1", q1, "Weight on the antisymmetric projector");
    auto* oq2 = sub->add_option("--q2", q2, "Weight on the symmetric traceless part");
    auto* oe = sub->add_option("--epsilon", epsilon, "Member of the family (1-1/d+e/2) rho_- + (1/d-e/2) rho_+ "
                                                     "(odd d)");
    oe->excludes(oq0)->excludes(oq1)->excludes(oq2);
  }

  // birkhoff
  auto* birkhoff = app.add_subcommand("birkhoff", "Two-copy and ancilla-assisted restoration of the unitary "
                                                  "mixture property.");
  birkhoff->require_subcommand(1);
  int big_d = 0;
  auto* two_copy = birkhoff->add_subcommand("two-copy", "Coordinates (<F>, <F (x) F>) of T (x) T for the qutrit "
                                                        "family and the membership verdict.");
  two_copy->add_option("--epsilon", epsilon, "Family parameter in [0, 2/3]")->required();
  auto* depol = birkhoff->add_subcommand("depolarizing", "<Y> of T (x) depolarizing_D and whether it is "
                                                         "reached by unitary mixtures.");
  depol->add_option("--d", d, "Odd dimension")->required();
  depol->add_option("--D", big_d, "Ancilla dimension")->required();
  depol->add_option("--epsilon", epsilon, "Family parameter in [0, 2/d]")->required();
  auto* quaternion = birkhoff->add_subcommand("quaternion", "Quaternionic unitary certificate for "
                                                            "min tr[U conj(U)^T2] at D = 2.");
  quaternion->add_option("--d", d, "3 or 5")->required();

  // optimize
  auto* optimize = app.add_subcommand("optimize", "Multistart Riemannian descent on the unitary group for "
                                                  "tr[U conj(U)^T2]/(dD) or its symmetrized variant.");
  std::string objective;
  OptimizeOptions opt;
  optimize->add_option("--objective", objective, "tr-u-ubar-t2 or tr-usym-pt")->required();
  optimize->add_option("--d", d, "First factor dimension")->required();
  optimize->add_option("--D", big_d, "Second factor dimension")->required();
  optimize->add_option("--restarts", opt.restarts, "Random starts")->capture_default_str();
  optimize->add_option("--seed", opt.seed, "Seed of the first start")->required();
  optimize->add_option("--max-iter", opt.max_iter, "Iterations per start")->capture_default_str();
  optimize->add_option("--tol", opt.tol, "Gradient norm tolerance")->capture_default_str();

  // figure
  auto* figure = app.add_subcommand("figure", "CSV data for plotting the covariant state space, the "
                                              "negativity landscape, or the two-copy coordinates.");
  figure->require_subcommand(1);
  std::string out_path;
  for (const char* name : {"covariant", "negativity", "two-copy"}) {
    auto* sub = figure->add_subcommand(name, std::string(name) == "covariant"
                                                 ? "State triangle, unitary-mixture region, entanglement-"
                                                   "breaking square and the epsilon family."
                                             : std::string(name) == "negativity"
                                                 ? "Negativity on a grid over the state triangle."
                                                 : "State triangle, unitary-mixture region, product family "
                                                   "and the crossing point (d = 3).");
    sub->add_option("--d", d, "Dimension")->required();
    sub->add_option("--out", out_path, "Output CSV path")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  auto fail = [&](int code, const std::exception& e) {
    std::cout << json{{"command", command}, {"inputs", inputs}, {"status", "error"}, {"message", e.what()}}.dump(2)
              << "\n";
    return code;
  };

  json outputs = json::object();
  try {
    if (check->parsed()) {
      command = "check";
      inputs = {{"file", channel_path}, {"tol", tol}};
      const json j = from_file(channel_path, [](const json& x) { return x; });
      if (j.is_object() && j.contains("kraus")) {
        const KrausChannel ch = load_channel(channel_path);
        outputs = {{"d", ch.d},
                   {"n_kraus", ch.kraus.size()},
                   {"cp", is_cp(ch, tol)},
                   {"tp", is_tp(ch, tol)},
                   {"unital", is_unital(ch, tol)}};
      } else {
        const ChoiState c = load_choi(channel_path);
        outputs = {{"d", c.d}, {"cp", is_cp(c, tol)}, {"tp", is_tp(c, tol)}, {"unital", is_unital(c, tol)}};
      }
    } else if (choi->parsed()) {
      command = "choi";
      inputs = {{"file", channel_path}};
      std::string warning;
      outputs = io::choi_to_json(kraus_to_choi(load_channel(channel_path), &warning));
      if (!warning.empty()) outputs["warning"] = warning;
    } else if (affine->parsed()) {
      command = "decompose affine";
      const KrausChannel ch = load_channel(channel_path);
      const int n = generators > 0 ? generators : min_affine_generators(ch.d);
      inputs = {{"file", channel_path}, {"seed", seed}, {"generators", n}};
      const AffineUnitaryCombo c = affine_unitary_decomposition(ch, n, seed);
      json us = json::array();
      for (const auto& u : c.unitaries) us.push_back(io::matrix_to_json(u));
      outputs = {{"coefficients", vector_to_json(c.coefficients)},
                 {"coefficient_sum", c.coefficients.sum()},
                 {"residual", c.residual},
                 {"attempts", c.attempts},
                 {"unitaries", us}};
    } else if (hs->parsed()) {
      command = "decompose hs";
      inputs = {{"file", channel_path}};
      const Superoperator t = to_superoperator(load_channel(channel_path));
      const HsDecomposition h = hs_contraction_decomposition(t);
      const CMatrix rec = h.weight_plus * h.w_plus + h.weight_minus * h.w_minus;
      outputs = {{"weights", {h.weight_plus, h.weight_minus}},
                 {"w_plus", io::matrix_to_json(h.w_plus)},
                 {"w_minus", io::matrix_to_json(h.w_minus)},
                 {"reconstruction_error", (rec - t.that).norm()},
                 {"unitarity_defect", std::max(unitarity_defect(h.w_plus), unitarity_defect(h.w_minus))}};
    } else if (extremal->parsed()) {
      command = "extremal";
      if (appendix_b == !channel_path.empty()) throw UsageError("extremal: give a channel file or --appendix-b");
      inputs = appendix_b ? json{{"appendix_b", true}} : json{{"file", channel_path}};
      const KrausChannel ch = appendix_b ? appendix_b_channel() : load_channel(channel_path);
      const ExtremalityReport r = extremality_test(ch);
      outputs = {{"d", r.d},
                 {"n_kraus", r.n_kraus},
                 {"rank_full", r.rank_full},
                 {"rank_unital", r.rank_unital},
                 {"extremal_in_all", r.extremal_in_all},
                 {"extremal_in_unital", r.extremal_in_unital},
                 {"min_gram_eigenvalue_full", r.min_gram_eigenvalue_full},
                 {"min_gram_eigenvalue_unital", r.min_gram_eigenvalue_unital}};
      if (appendix_b) outputs["x_eigenvalues"] = vector_to_json(hermitian_eigenvalues(unital_extremal_x()));
    } else if (witness->parsed()) {
      command = "witness";
      inputs = {{"b", b_path}};
      const CMatrix b = load_matrix(b_path);
      const Witness w = flip_witness(b);
      outputs = {{"d", w.d}, {"w", w.w}, {"singular_values", vector_to_json(singular_values(b))}};
      if (!rho_path.empty()) {
        inputs["rho"] = rho_path;
        const ChoiState rho = load_choi(rho_path);
        if (rho.d != w.d) throw FormatError("rho dimension does not match B");
        const double value = evaluate(w, rho);
        outputs["value"] = value;
        outputs["detected"] = value < -1e-12;
      }
    } else if (covariant->parsed()) {
      const CLI::App* sub = covariant->get_subcommands().front();
      command = "covariant " + sub->get_name();
      CovariantState s{};
      if (epsilon) {
        inputs = {{"d", d}, {"epsilon", *epsilon}};
        s = twirl(covariant_family(d, *epsilon));
      } else {
        if (!q0 || !q1 || !q2) throw UsageError(command + ": give --q0 --q1 --q2 or --epsilon");
        inputs = {{"d", d}, {"q0", *q0}, {"q1", *q1}, {"q2", *q2}};
        if (d < 2) throw RangeError("d >= 2 required");
        s = {d, *q0, *q1, *q2};
        if (s.q0 < -kCovariantTol || s.q1 < -kCovariantTol || s.q2 < -kCovariantTol ||
            std::abs(s.q0 + s.q1 + s.q2 - 1.0) > 1e-8)
          throw RangeError("weights must form a probability vector");
      }
      const CovariantCoords c = coords(s);
      outputs = {{"state", state_json(s)}, {"coords", coords_json(c)}};
      if (sub->get_name() == "membership") outputs["in_unitary_mixtures"] = membership_in_U(c, d);
      if (sub->get_name() == "negativity") outputs["negativity"] = negativity(s);
    } else if (two_copy->parsed()) {
      command = "birkhoff two-copy";
      inputs = {{"epsilon", *epsilon}};
      const ChoiState t = covariant_family(3, *epsilon);
      const TwoCopyCoords c = two_copy_coords_of_states(t, t);
      outputs = {{"f", c.f},
                 {"f12", c.f12},
                 {"curve_f", theta_curve_f_at(c.f12)},
                 {"epsilon_star", epsilon_star()},
                 {"in_unitary_mixtures", two_copy_membership(c)}};
    } else if (depol->parsed()) {
      command = "birkhoff depolarizing";
      inputs = {{"d", d}, {"D", big_d}, {"epsilon", *epsilon}};
      const DepolarizingVerdict v = depolarizing_verdict(d, big_d, *epsilon);
      outputs = {{"y", v.y},
                 {"lower_bound", v.lower_bound},
                 {"bound_source", v.bound_source},
                 {"verdict", to_string(v.verdict)}};
    } else if (quaternion->parsed()) {
      command = "birkhoff quaternion";
      inputs = {{"d", d}};
      const QuaternionCertificate c = quaternion_certificate(d);
      const double tol_cert = 1e-10;
      outputs = {{"y", c.y},
                 {"hermitian", c.hermitian_defect < tol_cert},
                 {"unitary", c.unitary_defect < tol_cert},
                 {"hermitian_defect", c.hermitian_defect},
                 {"unitary_defect", c.unitary_defect},
                 {"polynomial_defect", c.polynomial_defect}};
    } else if (optimize->parsed()) {
      command = "optimize";
      inputs = {{"objective", objective}, {"d", d},           {"D", big_d},
                {"restarts", opt.restarts}, {"seed", opt.seed}, {"max_iter", opt.max_iter},
                {"tol", opt.tol}};
      const OptimizeResult r = manifold_minimize(parse_objective(objective), d, big_d, opt);
      outputs = {{"value", r.value},
                 {"residuals", {{"stationarity", r.stationarity_residual}, {"grad_norm", r.grad_norm}}},
                 {"restarts", r.restarts_used},
                 {"iterations", r.iterations},
                 {"converged", r.converged}};
    } else if (figure->parsed()) {
      const CLI::App* sub = figure->get_subcommands().front();
      command = "figure " + sub->get_name();
      inputs = {{"d", d}, {"out", out_path}};
      int rows = 0;
      if (sub->get_name() == "covariant") rows = figure_covariant(d, out_path);
      else if (sub->get_name() == "negativity") rows = figure_negativity(d, out_path);
      else rows = figure_two_copy(d, out_path);
      outputs = {{"rows", rows}, {"out", out_path}};
    }
  } catch (const UsageError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    return fail(kBadFile, e);
  } catch (const std::invalid_argument& e) {
    return fail(kBadParameter, e);
  } catch (const std::out_of_range& e) {
    return fail(kBadParameter, e);
  } catch (const std::exception& e) {
    return fail(kFailure, e);
  }

  std::cout << json{{"command", command}, {"inputs", inputs}, {"outputs", outputs}, {"status", "ok"}}.dump(2) << "\n";
  return kOk;
}
