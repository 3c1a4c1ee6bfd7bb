#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "satake/jobs.hpp"
#include "satake/kacmoody.hpp"

namespace py = pybind11;
using namespace satake;

namespace {

std::vector<long long> poly_coeffs(const QPolynomial& p) { return p.coeffs(); }

AffineCartanDatum affine_of(const std::string& type) {
    return AffineCartanDatum::untwisted(CartanDatum::of_label(type));
}

} // namespace

PYBIND11_MODULE(_satake, m) {
    m.doc() = "exact graded weight multiplicities, affine characters and quiver "
              "Coulomb-branch series";

    m.def("rank", [](const std::string& type) { return CartanDatum::of_label(type).rank(); });

    m.def("positive_roots", [](const std::string& type) {
        std::vector<std::vector<long long>> out;
        for (const auto& r : positive_roots(CartanDatum::of_label(type))) out.push_back(r.coords);
        return out;
    });

    m.def("weyl_dimension", [](const std::string& type, const Weight& lambda) {
        return weyl_dimension(CartanDatum::of_label(type), lambda);
    });

    m.def("weight_multiplicity", [](const std::string& type, const Weight& lambda,
                                    const Weight& mu) {
        return freudenthal_multiplicity(CartanDatum::of_label(type), lambda, mu);
    });

    m.def("kostka", [](const std::string& type, const Weight& lambda, const Weight& mu) {
        return poly_coeffs(lusztig_q_analog(CartanDatum::of_label(type), lambda, mu));
    });

    m.def("graded_section_multiplicity",
          [](const std::string& type, const Weight& lambda, const Weight& mu, int trunc) {
              return graded_section_multiplicity(CartanDatum::of_label(type), lambda, mu, trunc)
                  .coeffs();
          });

    m.def("verify_eq1", [](const std::string& type, const Weight& lambda, const Weight& mu,
                           int trunc) {
        auto rep = verify_eq1(CartanDatum::of_label(type), lambda, mu, trunc);
        py::dict d;
        d["type"] = rep.type;
        d["lambda"] = rep.lambda;
        d["mu"] = rep.mu;
        d["lhs"] = rep.lhs.coeffs();
        d["rhs"] = rep.rhs.coeffs();
        d["match"] = rep.match;
        d["first_mismatch"] =
            rep.first_mismatch ? py::object(py::int_(*rep.first_mismatch)) : py::none();
        return d;
    });

    m.def("tensor_multiplicity", [](const std::string& type, const Weight& a, const Weight& b,
                                    const Weight& nu) {
        return tensor_multiplicity(CartanDatum::of_label(type), a, b, nu);
    });

    m.def("affine_multiplicity",
          [](const std::string& type, const std::vector<long long>& lambda,
             const std::vector<long long>& drop, int depth) {
              AffineCartanDatum d = affine_of(type);
              AffineWeight lam{lambda, 0};
              AffineWeight mu = affine_weight_from_drop(d, lam, drop);
              return affine_freudenthal(d, lam, mu, depth);
          });

    m.def("monopole_hilbert_series", [](const std::string& quiver_json, int max_t) {
        QuiverGaugeDatum d = quiver_from_json(nlohmann::json::parse(quiver_json));
        return monopole_hilbert_series(d, max_t).coeffs();
    });

    m.def("sym_power_orbifold_series", [](long long ell, long long k, int max_t) {
        return sym_power_orbifold_series(ell, k, max_t).coeffs();
    });

    m.def("run_job", [](const std::string& jobspec_json) {
        JobSpec spec = JobSpec::from_json(nlohmann::json::parse(jobspec_json));
        JobResult r = run_job(spec);
        return py::make_tuple(r.exit_code, r.report);
    });
}
