#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "pathideal/alexander.hpp"
#include "pathideal/betti.hpp"
#include "pathideal/covers.hpp"
#include "pathideal/decomposition.hpp"
#include "pathideal/harness.hpp"
#include "pathideal/hilbert.hpp"
#include "pathideal/simplicial.hpp"

namespace py = pybind11;
using namespace pathideal;

namespace {

// exact integers cross the boundary via their decimal form
py::int_ to_py(const BigInt& v) { return py::int_(py::str(v.str())); }

py::list to_py_list(const std::vector<BigInt>& values) {
    py::list out;
    for (const auto& v : values) out.append(to_py(v));
    return out;
}

py::list poly_coeffs(const IntPolynomial& p) { return to_py_list(p.coefficients()); }

py::list family_to_py(const CoverFamily& family) {
    py::list out;
    for (const auto& c : family.covers) out.append(c.members);
    return out;
}

MonomialIdeal ideal_from_strings(int ambient, const std::vector<std::string>& gens) {
    std::vector<Monomial> ms;
    ms.reserve(gens.size());
    for (const auto& g : gens) ms.push_back(Monomial::parse(g, ambient));
    return MonomialIdeal::from_generators(ambient, std::move(ms));
}

py::list gens_to_py(const MonomialIdeal& ideal) {
    py::list out;
    for (const auto& g : ideal.generators()) out.append(g.str());
    return out;
}

}  // namespace

PYBIND11_MODULE(pathideal_lab, m) {
    m.doc() = "exact computation for powers of path ideals of line graphs: Hilbert series, "
              "multiplicities, associated primes, Alexander duality and Betti numbers";

    py::class_<MonomialIdeal>(m, "MonomialIdeal")
        .def(py::init(&ideal_from_strings), py::arg("ambient"), py::arg("generators"),
             "build from generator strings like 'x1^2*x3'")
        .def_property_readonly("ambient", &MonomialIdeal::ambient)
        .def_property_readonly("generators", &gens_to_py)
        .def("__str__", &MonomialIdeal::str)
        .def("__repr__",
             [](const MonomialIdeal& i) {
                 return "MonomialIdeal(" + std::to_string(i.ambient()) + ", " + i.str() + ")";
             })
        .def("__eq__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; })
        .def("is_zero", &MonomialIdeal::is_zero)
        .def("is_unit", &MonomialIdeal::is_unit)
        .def("is_squarefree", &MonomialIdeal::is_squarefree)
        .def("contains", [](const MonomialIdeal& i, const std::string& m) {
                 return i.contains(Monomial::parse(m, i.ambient()));
             })
        .def("radical", &MonomialIdeal::radical)
        .def("support", &MonomialIdeal::support)
        .def("sum", [](const MonomialIdeal& a, const MonomialIdeal& b) { return sum(a, b); })
        .def("product",
             [](const MonomialIdeal& a, const MonomialIdeal& b) { return product(a, b); })
        .def("intersect",
             [](const MonomialIdeal& a, const MonomialIdeal& b) { return intersect(a, b); })
        .def("colon",
             [](const MonomialIdeal& a, const MonomialIdeal& b) { return colon(a, b); })
        .def("power", [](const MonomialIdeal& i, int s) { return power(i, s); }, py::arg("s"))
        .def("dual", [](const MonomialIdeal& i) { return alexander_dual(i); });

    m.def("path_ideal", &path_ideal, py::arg("n"), py::arg("t"),
          "generators x_i...x_{i+t-1} of the t-path ideal of the n-vertex line graph");
    m.def("facet_complex_facets",
          [](int n, int t) { return facet_complex(n, t).facets(); }, py::arg("n"), py::arg("t"));
    m.def("minimal_covers",
          [](const MonomialIdeal& i) { return family_to_py(minimal_covers(support_complex(i))); },
          "minimal vertex covers of the support complex of a squarefree ideal");
    m.def("cnt_member", &cnt_member, py::arg("subset"), py::arg("n"), py::arg("t"));
    m.def("alexander_dual", &alexander_dual);
    m.def("deg_max", &deg_max);
    m.def("height", &height);
    m.def("m_grade", &m_grade);
    m.def("enumerate_T", &enumerate_T, py::arg("a"), py::arg("t"));
    m.def("enumerate_X", &enumerate_X, py::arg("n"), py::arg("t"));

    m.def("k_polynomial", [](const MonomialIdeal& i) { return poly_coeffs(k_polynomial(i)); },
          "coefficients of the Hilbert series numerator over (1-z)^n");
    m.def("k_polynomial_str", [](const MonomialIdeal& i) { return k_polynomial(i).str(); });
    m.def("q_polynomial", [](const MonomialIdeal& i) { return poly_coeffs(q_polynomial(i)); });
    m.def("q_polynomial_str", [](const MonomialIdeal& i) { return q_polynomial(i).str(); });
    m.def("taylor_oracle", [](const MonomialIdeal& i) { return poly_coeffs(taylor_oracle(i)); });
    m.def("dimension", &dimension);
    m.def("multiplicity", [](const MonomialIdeal& i) { return to_py(multiplicity(i)); });
    m.def("hilbert_coefficients",
          [](const MonomialIdeal& i) { return to_py_list(hilbert_coefficients(i)); });

    m.def("irreducible_decomposition", &irreducible_decomposition);
    m.def("associated_primes",
          [](const MonomialIdeal& i) { return family_to_py(associated_primes(i)); });
    m.def("local_length", [](const MonomialIdeal& i, const std::vector<int>& prime) {
              return to_py(local_length(i, PrimeSupport(i.ambient(), prime)));
          });
    m.def("verify_ntf", &verify_ntf, py::arg("n"), py::arg("t"), py::arg("s_max") = 3);

    m.def("betti_table", [](const MonomialIdeal& i) {
              py::dict out;
              for (const auto& [key, v] : betti_table(i).entries)
                  out[py::make_tuple(key.first, key.second)] = v;
              return out;
          });
    m.def("projective_dimension", &projective_dimension);
    m.def("regularity", &regularity);

    m.def("multiplicity_closed_form", [](int n, int t, int s) {
              return to_py(multiplicity_closed_form(n, t, s));
          });
    m.def("verify_main", [](int n, int t, int s) {
              MainFormulaCheck r = verify_main(n, t, s);
              py::dict out;
              out["engine"] = to_py(r.engine);
              out["formula"] = to_py(r.formula);
              out["oracle"] = to_py(r.oracle);
              out["match"] = r.match;
              return out;
          });
    m.def("verify_recursions", [](int n, int t, int s) {
              RecursionCheck r = verify_recursions(n, t, s);
              return py::make_tuple(r.ok, r.branch);
          });
    m.def("verify_colon_identities", &verify_colon_identities);
    m.def("verify_degree_in_s", &verify_degree_in_s);
    m.def("verify_theorem_minimal_primes", &verify_theorem_minimal_primes);

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "0.1.0";
#endif
}
