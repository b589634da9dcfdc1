// Python bindings for the main operations: construction, certification,
// density bounds, and the Gram-approximation pipeline.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "museq/approx.hpp"
#include "museq/construct.hpp"
#include "museq/core.hpp"
#include "museq/density.hpp"
#include "museq/enumerate.hpp"
#include "museq/reduce.hpp"

namespace py = pybind11;
using namespace museq;

namespace {

py::int_ to_py(const Integer& z) {
    PyObject* obj = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

Integer to_mpz(const py::int_& v) { return parse_integer(py::str(v)); }

py::list to_py_vec(const IVec& v) {
    py::list out;
    for (const auto& e : v) out.append(to_py(e));
    return out;
}

IVec to_ivec(const py::sequence& seq) {
    IVec out;
    for (auto item : seq) out.push_back(to_mpz(py::cast<py::int_>(item)));
    return out;
}

QMat to_qmat(const py::sequence& rows) {
    QMat G;
    for (auto row : rows) {
        QVec r;
        for (auto item : py::cast<py::sequence>(row)) {
            // accepts ints and (num, den) pairs
            if (py::isinstance<py::int_>(item)) {
                r.emplace_back(to_mpz(py::cast<py::int_>(item)));
            } else {
                auto pair = py::cast<py::sequence>(item);
                Rational q(to_mpz(py::cast<py::int_>(pair[0])),
                           to_mpz(py::cast<py::int_>(pair[1])));
                q.canonicalize();
                r.push_back(std::move(q));
            }
        }
        G.push_back(std::move(r));
    }
    return G;
}

py::dict report_dict(long n, const construct::ExtensionReport& rep) {
    py::dict d;
    d["n"] = n;
    d["s_n"] = to_py(rep.term);
    d["f"] = to_py(rep.pair_count);
    d["bound_first"] = rep.bound_first.to_double();
    d["bound_second"] = rep.bound_second.to_double();
    d["sigma_tilde"] = rep.sigma_tilde.to_double();
    return d;
}

}  // namespace

PYBIND11_MODULE(_museq, m) {
    m.doc() = "mu-sequences and dense kernel lattices";

    m.def(
        "build_sequence",
        [](py::int_ mu, long n_max, const std::string& strategy, double sigma, double eps) {
            construct::BuildOptions opt;
            opt.strategy = (strategy == "interval") ? construct::Strategy::Interval
                                                    : construct::Strategy::Greedy;
            opt.sigma = sigma;
            opt.eps = eps;
            auto res = construct::build_sequence(to_mpz(mu), n_max, opt);
            py::dict d;
            d["mu"] = to_py(res.seq.mu);
            d["terms"] = to_py_vec(res.seq.terms);
            py::list steps;
            for (size_t i = 0; i < res.steps.size(); ++i)
                steps.append(report_dict(static_cast<long>(i) + 1, res.steps[i]));
            d["steps"] = steps;
            d["complete"] = res.complete;
            return d;
        },
        py::arg("mu"), py::arg("n_max"), py::arg("strategy") = "greedy",
        py::arg("sigma") = -1.0, py::arg("eps") = 0.1);

    m.def(
        "validate",
        [](py::int_ mu, const py::sequence& terms) {
            MuSequence seq(to_mpz(mu), to_ivec(terms));
            auto res = validate_mu_sequence(seq);
            py::dict d;
            d["pass"] = res.pass;
            if (!res.pass) {
                d["failing_prefix_len"] = res.failing_prefix_len;
                d["minimum_found"] = to_py(res.minimum_found);
                d["witness"] = to_py_vec(res.witness);
            }
            return d;
        },
        py::arg("mu"), py::arg("terms"));

    m.def(
        "forbidden_values",
        [](py::int_ mu, const py::sequence& terms) {
            auto f = construct::forbidden_values(MuSequence(to_mpz(mu), to_ivec(terms)));
            py::dict d;
            d["values"] = to_py_vec(f.values);
            d["f"] = to_py(f.pair_count);
            return d;
        },
        py::arg("mu"), py::arg("terms"));

    m.def(
        "greedy_extend",
        [](py::int_ mu, const py::sequence& terms) {
            MuSequence prefix(to_mpz(mu), to_ivec(terms));
            auto rep = construct::greedy_extend(prefix);
            return report_dict(static_cast<long>(prefix.length()), rep);
        },
        py::arg("mu"), py::arg("terms"));

    m.def(
        "shortest_vector",
        [](const py::sequence& weights) {
            auto cert = reduce::shortest_vector(reduce::kernel_basis(to_ivec(weights)));
            return py::make_tuple(to_py(cert.minimum), to_py_vec(cert.witness));
        },
        py::arg("weights"));

    m.def(
        "count_norm_le",
        [](int n, py::int_ mu) { return to_py(enumerate::count_norm_le(n, to_mpz(mu))); },
        py::arg("n"), py::arg("mu"));

    m.def("unit_ball_volume",
          [](long n) { return density::unit_ball_volume(n).to_double(); });
    m.def("theta_constant", []() { return density::theta_constant().to_double(); });
    m.def(
        "theorem_bound_sn",
        [](py::int_ mu, long n) {
            auto [a, b] = density::theorem_bound_sn(to_mpz(mu), n);
            return py::make_tuple(a.to_double(), b.to_double());
        },
        py::arg("mu"), py::arg("n"));
    m.def(
        "corollary_density_bound",
        [](py::int_ mu, long n) {
            return density::corollary_density_bound(to_mpz(mu), n).to_double();
        },
        py::arg("mu"), py::arg("n"));

    m.def(
        "approximate",
        [](const py::sequence& gram, py::int_ kappa) {
            auto res = approx::approximate(to_qmat(gram), to_mpz(kappa));
            py::dict d;
            d["kappa"] = to_py(res.kappa);
            d["v"] = to_py_vec(res.v);
            d["s"] = to_py_vec(res.s);
            d["error"] = Real(res.error_exact).to_double();
            d["error_num"] = to_py(res.error_exact.get_num());
            d["error_den"] = to_py(res.error_exact.get_den());
            return d;
        },
        py::arg("gram"), py::arg("kappa"));
}
