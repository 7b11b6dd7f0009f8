#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "quatlin/decomposition.hpp"
#include "quatlin/linear_function.hpp"
#include "quatlin/random.hpp"
#include "quatlin/small_svd.hpp"

namespace py = pybind11;
using namespace quatlin;

namespace {

using TermTuple = std::pair<Quaternion, Quaternion>;

GeneralLinearFunction make_function(const std::vector<TermTuple>& terms) {
  GeneralLinearFunction f;
  for (const auto& [left, right] : terms) f.add_term(left, right);
  return f;
}

std::vector<TermTuple> term_tuples(const std::vector<TermPair>& terms) {
  std::vector<TermTuple> out;
  for (const auto& t : terms) out.emplace_back(t.left, t.right);
  return out;
}

template <std::size_t N>
Matrix<N> to_matrix(const std::vector<std::vector<double>>& rows) {
  Matrix<N> m{};
  for (std::size_t r = 0; r < N; ++r) {
    if (rows[r].size() != N) throw py::value_error("matrix must be square");
    for (std::size_t c = 0; c < N; ++c) m[r][c] = rows[r][c];
  }
  return m;
}

template <std::size_t N>
py::tuple svd_tuple(const std::vector<std::vector<double>>& rows) {
  const auto f = svd(to_matrix<N>(rows));
  return py::make_tuple(f.u, f.sigma, f.v);
}

CoefficientMatrix coefficient_matrix(const Matrix4& m) { return CoefficientMatrix(m); }

std::string quaternion_repr(const Quaternion& q) {
  std::ostringstream os;
  os.precision(17);
  os << "Quaternion(" << q.w() << ", " << q.x() << ", " << q.y() << ", " << q.z() << ")";
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Canonic forms and minimal decompositions of linear quaternion functions.";

  py::register_exception<SingularFunction>(m, "SingularFunction", PyExc_ArithmeticError);
  py::register_exception<NoConvergence>(m, "NoConvergence", PyExc_RuntimeError);

  py::class_<Quaternion>(m, "Quaternion")
      .def(py::init<>())
      .def(py::init<double, double, double, double>(), py::arg("w"), py::arg("x"), py::arg("y"), py::arg("z"))
      .def_static("from_vector", &Quaternion::from_vector)
      .def_static("basis", &Quaternion::basis)
      .def_property_readonly("w", &Quaternion::w)
      .def_property_readonly("x", &Quaternion::x)
      .def_property_readonly("y", &Quaternion::y)
      .def_property_readonly("z", &Quaternion::z)
      .def("as_vector", &Quaternion::as_vector)
      .def("conjugate", [](const Quaternion& q) { return conjugate(q); })
      .def("norm", [](const Quaternion& q) { return norm(q); })
      .def(py::self * py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * double())
      .def(double() * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__repr__", &quaternion_repr);

  py::class_<PureQuaternion>(m, "PureQuaternion")
      .def(py::init<>())
      .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
      .def_property_readonly("x", &PureQuaternion::x)
      .def_property_readonly("y", &PureQuaternion::y)
      .def_property_readonly("z", &PureQuaternion::z)
      .def("as_quaternion", &PureQuaternion::as_quaternion)
      .def("as_vector", &PureQuaternion::as_vector);

  py::class_<GeneralLinearFunction>(m, "GeneralLinearFunction")
      .def(py::init<>())
      .def(py::init(&make_function), py::arg("terms"))
      .def_property_readonly("terms", [](const GeneralLinearFunction& f) { return term_tuples(f.terms()); })
      .def("__len__", &GeneralLinearFunction::size)
      .def("__call__", [](const GeneralLinearFunction& f, const Quaternion& q) { return evaluate(f, q); });

  py::class_<CanonicFormLeft>(m, "CanonicFormLeft")
      .def_readonly("a", &CanonicFormLeft::a)
      .def_readonly("b", &CanonicFormLeft::b)
      .def_readonly("c", &CanonicFormLeft::c)
      .def_readonly("d", &CanonicFormLeft::d)
      .def("__call__", [](const CanonicFormLeft& cf, const Quaternion& q) { return evaluate(cf, q); })
      .def("to_function", [](const CanonicFormLeft& cf) { return to_function(cf); });

  py::class_<CanonicFormRight>(m, "CanonicFormRight")
      .def_readonly("a", &CanonicFormRight::a)
      .def_readonly("b", &CanonicFormRight::b)
      .def_readonly("c", &CanonicFormRight::c)
      .def_readonly("d", &CanonicFormRight::d)
      .def("__call__", [](const CanonicFormRight& cf, const Quaternion& q) { return evaluate(cf, q); })
      .def("to_function", [](const CanonicFormRight& cf) { return to_function(cf); });

  py::class_<MixedForm>(m, "MixedForm")
      .def_readonly("a", &MixedForm::a)
      .def_readonly("b", &MixedForm::b)
      .def_readonly("v1", &MixedForm::v1)
      .def_readonly("v3", &MixedForm::v3)
      .def_readonly("v5", &MixedForm::v5)
      .def("__call__", [](const MixedForm& mf, const Quaternion& q) { return evaluate(mf, q); })
      .def("to_function", [](const MixedForm& mf) { return to_function(mf); });

  py::class_<PureBilateralForm>(m, "PureBilateralForm")
      .def_readonly("a", &PureBilateralForm::a)
      .def_readonly("b", &PureBilateralForm::b)
      .def_property_readonly("pairs",
                             [](const PureBilateralForm& pf) {
                               std::vector<std::pair<PureQuaternion, PureQuaternion>> out;
                               for (const auto& p : pf.pairs) out.emplace_back(p.left, p.right);
                               return out;
                             })
      .def("__call__", [](const PureBilateralForm& pf, const Quaternion& q) { return evaluate(pf, q); })
      .def("to_function", [](const PureBilateralForm& pf) { return to_function(pf); });

  py::class_<MeisterForm>(m, "MeisterForm")
      .def(py::init([](const Quaternion& a, const Quaternion& b, const Quaternion& c, const Quaternion& d) {
             return MeisterForm{a, b, c, d};
           }),
           py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"))
      .def_readonly("a", &MeisterForm::a)
      .def_readonly("b", &MeisterForm::b)
      .def_readonly("c", &MeisterForm::c)
      .def_readonly("d", &MeisterForm::d);

  py::class_<MinimalDecomposition>(m, "MinimalDecomposition")
      .def_property_readonly("terms", [](const MinimalDecomposition& d) { return term_tuples(d.terms); })
      .def_readonly("singular_values", &MinimalDecomposition::singular_values)
      .def_property_readonly("rank", &MinimalDecomposition::rank)
      .def("as_function", &MinimalDecomposition::as_function);

  m.def("term_matrix", [](const Quaternion& left, const Quaternion& right) {
    return term_matrix({left, right}).entries();
  });
  m.def("function_matrix", [](const GeneralLinearFunction& f) { return function_matrix(f).entries(); });
  m.def("canonic_left", [](const Matrix4& mat) { return canonic_left(coefficient_matrix(mat)); });
  m.def("canonic_right", [](const Matrix4& mat) { return canonic_right(coefficient_matrix(mat)); });
  m.def("mixed_form", [](const Matrix4& mat) { return mixed_form(coefficient_matrix(mat)); });
  m.def("pure_bilateral_form", [](const Matrix4& mat) { return pure_bilateral_form(coefficient_matrix(mat)); });
  m.def("minimal_decomposition",
        [](const Matrix4& mat) { return minimal_decomposition(coefficient_matrix(mat)); });
  m.def("build_meister", [](const MeisterForm& mf) { return build_meister(mf).entries(); });
  m.def("evaluate", [](const GeneralLinearFunction& f, const Quaternion& q) { return evaluate(f, q); });
  m.def("action_matrix", &action_matrix);
  m.def("solve", &solve);
  m.def("functions_equal", &functions_equal, py::arg("f"), py::arg("g"),
        py::arg("tol") = kDefaultEqualityTolerance);
  m.def(
      "svd",
      [](const std::vector<std::vector<double>>& rows) -> py::tuple {
        switch (rows.size()) {
          case 1: return svd_tuple<1>(rows);
          case 2: return svd_tuple<2>(rows);
          case 3: return svd_tuple<3>(rows);
          case 4: return svd_tuple<4>(rows);
          default: throw py::value_error("svd supports 1x1 through 4x4 matrices");
        }
      },
      "Returns (u, sigma, v) with m = u diag(sigma) v^T.");
  m.def("numeric_rank", [](const std::vector<std::vector<double>>& rows) -> std::size_t {
    switch (rows.size()) {
      case 1: return numeric_rank(to_matrix<1>(rows));
      case 2: return numeric_rank(to_matrix<2>(rows));
      case 3: return numeric_rank(to_matrix<3>(rows));
      case 4: return numeric_rank(to_matrix<4>(rows));
      default: throw py::value_error("numeric_rank supports 1x1 through 4x4 matrices");
    }
  });
  m.def("random_function", &random_function, py::arg("terms"), py::arg("seed"));
}
