#include "quatlin/cli/commands.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "quatlin/cli/document.hpp"
#include "quatlin/decomposition.hpp"
#include "quatlin/random.hpp"
#include "quatlin/small_svd.hpp"

namespace quatlin::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;
  std::string input;
  std::string side = "left";
  std::string quaternion_arg;
  std::string other_input;
  double tolerance = kDefaultEqualityTolerance;
  std::size_t terms = 0;
  std::uint64_t seed = 0;
  std::string output = "-";
};

Quaternion parse_quaternion_arg(const std::string& text, const std::string& flag) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string piece;
  while (std::getline(stream, piece, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(piece, &used));
      if (piece.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(piece);
    } catch (const std::logic_error&) {
      throw UsageError(fmt::format("{}: '{}' is not a number", flag, piece));
    }
  }
  if (values.size() != 4) {
    throw UsageError(fmt::format("{}: expected four comma-separated reals w,x,y,z", flag));
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw UsageError(flag + ": components must be finite");
  }
  return Quaternion(values[0], values[1], values[2], values[3]);
}

GeneralLinearFunction load(const std::string& path, std::istream& in) {
  return parse_function_document(read_text(path, in));
}

Json sigma_json(const std::array<double, 4>& sigma) { return Json::array({sigma[0], sigma[1], sigma[2], sigma[3]}); }

std::string format_sigma(const std::array<double, 4>& sigma) {
  return fmt::format("{}, {}, {}, {}", format_real(sigma[0]), format_real(sigma[1]), format_real(sigma[2]),
                     format_real(sigma[3]));
}

void print_matrix(std::ostream& out, const Matrix4& m) {
  out << "matrix (row e_r, column e_c of e_r q e_c):\n";
  for (const auto& row : m) {
    out << fmt::format("  [{}, {}, {}, {}]\n", format_real(row[0]), format_real(row[1]), format_real(row[2]),
                       format_real(row[3]));
  }
}

Quaternion pure(const PureQuaternion& p) { return p.as_quaternion(); }

int cmd_canonize(const Options& opt, std::ostream& out, std::istream& in) {
  const auto m = function_matrix(load(opt.input, in));
  const auto factors = svd(m.entries());
  const std::size_t rank = numeric_rank<4>(factors.sigma);

  std::string form;
  std::string shape;
  std::vector<std::pair<std::string, Quaternion>> roles;
  if (opt.side == "left") {
    const auto cf = canonic_left(m);
    form = "canonic-left";
    shape = "f(q) = A q + B q i + C q j + D q k";
    roles = {{"A", cf.a}, {"B", cf.b}, {"C", cf.c}, {"D", cf.d}};
  } else if (opt.side == "right") {
    const auto cf = canonic_right(m);
    form = "canonic-right";
    shape = "f(q) = q A + i q B + j q C + k q D";
    roles = {{"A", cf.a}, {"B", cf.b}, {"C", cf.c}, {"D", cf.d}};
  } else {
    const auto mf = mixed_form(m);
    form = "mixed";
    shape = "f(q) = A q + q b + v1 q i + v3 q j + v5 q k";
    roles = {{"A", mf.a}, {"b", pure(mf.b)}, {"v1", pure(mf.v1)}, {"v3", pure(mf.v3)}, {"v5", pure(mf.v5)}};
  }

  if (opt.json) {
    Json coefficients = Json::object();
    for (const auto& [role, q] : roles) coefficients[role] = quaternion_json(q);
    out << dump_json(Json{{"command", "canonize"},
                          {"form", form},
                          {"coefficients", std::move(coefficients)},
                          {"matrix", matrix_json(m.entries())},
                          {"rank", rank},
                          {"singular_values", sigma_json(factors.sigma)}});
    return kSuccess;
  }
  out << "form: " << form << "\n" << shape << "\n";
  for (const auto& [role, q] : roles) out << role << " = " << format_quaternion(q) << "\n";
  print_matrix(out, m.entries());
  out << "rank: " << rank << "\n";
  out << "singular values: " << format_sigma(factors.sigma) << "\n";
  return kSuccess;
}

int cmd_minimize(const Options& opt, std::ostream& out, std::istream& in) {
  const auto m = function_matrix(load(opt.input, in));
  const auto dec = minimal_decomposition(m);
  if (opt.json) {
    Json terms = Json::array();
    for (const auto& t : dec.terms) {
      terms.push_back(Json{{"left", quaternion_json(t.left)}, {"right", quaternion_json(t.right)}});
    }
    out << dump_json(Json{{"command", "minimize"},
                          {"form", "minimal"},
                          {"terms", std::move(terms)},
                          {"matrix", matrix_json(m.entries())},
                          {"rank", dec.rank()},
                          {"singular_values", sigma_json(dec.singular_values)}});
    return kSuccess;
  }
  out << "form: minimal\n";
  out << "f(q) = sum_k L_k q R_k with " << dec.rank() << (dec.rank() == 1 ? " term\n" : " terms\n");
  for (std::size_t k = 0; k < dec.terms.size(); ++k) {
    out << fmt::format("term {}: L = {}; R = {}\n", k + 1, format_quaternion(dec.terms[k].left),
                       format_quaternion(dec.terms[k].right));
  }
  print_matrix(out, m.entries());
  out << "rank: " << dec.rank() << "\n";
  out << "singular values: " << format_sigma(dec.singular_values) << "\n";
  return kSuccess;
}

int cmd_eval(const Options& opt, std::ostream& out, std::istream& in) {
  const auto f = load(opt.input, in);
  const auto q = parse_quaternion_arg(opt.quaternion_arg, "--q");
  const auto value = evaluate(f, q);
  if (opt.json) {
    out << dump_json(Json{{"command", "eval"}, {"q", quaternion_json(q)}, {"result", quaternion_json(value)}});
  } else {
    out << "f(q) = " << format_quaternion(value) << "\n";
  }
  return kSuccess;
}

int cmd_solve(const Options& opt, std::ostream& out, std::istream& in) {
  const auto f = load(opt.input, in);
  const auto r = parse_quaternion_arg(opt.quaternion_arg, "--r");
  const auto q = solve(f, r);
  const double residual = norm(evaluate(f, q) - r);
  if (opt.json) {
    out << dump_json(Json{{"command", "solve"},
                          {"r", quaternion_json(r)},
                          {"q", quaternion_json(q)},
                          {"residual", residual}});
  } else {
    out << "q = " << format_quaternion(q) << "\n";
    out << "residual: " << format_real(residual) << "\n";
  }
  return kSuccess;
}

int cmd_equal(const Options& opt, std::ostream& out, std::istream& in) {
  if (!(opt.tolerance >= 0.0)) throw UsageError("--tol must be nonnegative");
  const auto a = function_matrix(load(opt.input, in));
  const auto b = function_matrix(load(opt.other_input, in));
  const bool equal = matrices_equal(a, b, opt.tolerance);
  const double difference = max_abs_difference(a.entries(), b.entries());
  if (opt.json) {
    out << dump_json(Json{{"command", "equal"},
                          {"equal", equal},
                          {"max_difference", difference},
                          {"tolerance", opt.tolerance}});
  } else if (equal) {
    out << "equal\n";
  } else {
    out << "not equal (max entry difference " << format_real(difference) << ")\n";
  }
  return equal ? kSuccess : kNotEqual;
}

int cmd_random(const Options& opt, std::ostream& out) {
  const std::string text = dump_json(function_json(random_function(opt.terms, opt.seed)));
  if (opt.output == "-") {
    out << text;
    return kSuccess;
  }
  std::ofstream file(opt.output, std::ios::binary | std::ios::trunc);
  file << text;
  file.close();
  if (!file) {
    throw std::runtime_error("cannot write " + opt.output);
  }
  return kSuccess;
}

int cmd_meister_demo(const Options& opt, std::ostream& out) {
  FixtureRng rng(opt.seed);
  const MeisterForm mf = rng.meister();
  const auto meister_matrix = build_meister(mf);
  const auto meister_sigma = svd(meister_matrix.entries()).sigma;
  const std::size_t meister_rank = numeric_rank<4>(meister_sigma);

  constexpr std::size_t kGeneralTerms = 10;
  const auto general = function_matrix(rng.function(kGeneralTerms));
  const auto general_sigma = svd(general.entries()).sigma;
  const std::size_t general_rank = numeric_rank<4>(general_sigma);

  const bool representable = meister_rank >= general_rank && matrices_equal(meister_matrix, general, 1e-10);
  const std::string verdict =
      representable ? "the Meister form happens to represent this function"
                    : fmt::format("the Meister form A q + q B + C q D (rank {}) cannot represent a general "
                                  "linear function (rank {}), so it is not canonic",
                                  meister_rank, general_rank);

  if (opt.json) {
    out << dump_json(Json{{"command", "meister-demo"},
                          {"seed", opt.seed},
                          {"meister",
                           {{"A", quaternion_json(mf.a)},
                            {"B", quaternion_json(mf.b)},
                            {"C", quaternion_json(mf.c)},
                            {"D", quaternion_json(mf.d)},
                            {"matrix", matrix_json(meister_matrix.entries())},
                            {"rank", meister_rank},
                            {"singular_values", sigma_json(meister_sigma)}}},
                          {"general",
                           {{"terms", kGeneralTerms},
                            {"matrix", matrix_json(general.entries())},
                            {"rank", general_rank},
                            {"singular_values", sigma_json(general_sigma)}}},
                          {"representable", representable},
                          {"verdict", verdict}});
    return kSuccess;
  }
  out << "seed: " << opt.seed << "\n";
  out << "Meister form f(q) = A q + q B + C q D\n";
  out << "A = " << format_quaternion(mf.a) << "\n";
  out << "B = " << format_quaternion(mf.b) << "\n";
  out << "C = " << format_quaternion(mf.c) << "\n";
  out << "D = " << format_quaternion(mf.d) << "\n";
  print_matrix(out, meister_matrix.entries());
  out << "rank: " << meister_rank << "\n";
  out << "singular values: " << format_sigma(meister_sigma) << "\n";
  out << "random " << kGeneralTerms << "-term function\n";
  print_matrix(out, general.entries());
  out << "rank: " << general_rank << "\n";
  out << "singular values: " << format_sigma(general_sigma) << "\n";
  out << "verdict: " << verdict << "\n";
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Canonic forms and minimal decompositions of linear quaternion functions", "quatlin"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json", opt.json, "Emit structured JSON instead of text");

  auto* canonize = app.add_subcommand("canonize", "Reduce a function to a 16-coefficient canonic form");
  canonize->add_option("input", opt.input, "Function document ('-' for stdin)")->required();
  canonize->add_option("--side", opt.side, "Which canonic form")
      ->check(CLI::IsMember({"left", "right", "mixed"}));

  auto* minimize = app.add_subcommand("minimize", "Decompose into rank(M) double-sided terms");
  minimize->add_option("input", opt.input, "Function document ('-' for stdin)")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate f(q)");
  eval->add_option("input", opt.input, "Function document ('-' for stdin)")->required();
  eval->add_option("--q", opt.quaternion_arg, "Argument as w,x,y,z")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Find q with f(q) = r");
  solve_cmd->add_option("input", opt.input, "Function document ('-' for stdin)")->required();
  solve_cmd->add_option("--r", opt.quaternion_arg, "Right-hand side as w,x,y,z")->required();

  auto* equal = app.add_subcommand("equal", "Compare two functions through their coefficient matrices");
  equal->add_option("a", opt.input, "First function document")->required();
  equal->add_option("b", opt.other_input, "Second function document")->required();
  equal->add_option("--tol", opt.tolerance, "Relative tolerance");

  auto* random = app.add_subcommand("random", "Write a seeded random function document");
  random->add_option("--terms", opt.terms, "Number of terms P")->required();
  random->add_option("--seed", opt.seed, "Generator seed")->required();
  random->add_option("--out", opt.output, "Output path ('-' for stdout)");

  auto* meister = app.add_subcommand("meister-demo", "Show that A q + q B + C q D is not canonic");
  meister->add_option("--seed", opt.seed, "Generator seed")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kParseError;
  }

  try {
    if (*canonize) return cmd_canonize(opt, out, in);
    if (*minimize) return cmd_minimize(opt, out, in);
    if (*eval) return cmd_eval(opt, out, in);
    if (*solve_cmd) return cmd_solve(opt, out, in);
    if (*equal) return cmd_equal(opt, out, in);
    if (*random) return cmd_random(opt, out);
    if (*meister) return cmd_meister_demo(opt, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const SingularFunction& e) {
    err << "error: " << e.what() << "\n";
    return kSingular;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace quatlin::cli
