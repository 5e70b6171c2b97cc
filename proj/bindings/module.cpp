#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "dqs/f_family.hpp"
#include "dqs/matrix_system.hpp"
#include "dqs/r_derivatives.hpp"
#include "dqs/report_json.hpp"
#include "dqs/verifier.hpp"

namespace py = pybind11;

namespace {

py::int_ big_int(const dqs::Int& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::dict ball_dict(const dqs::CBall& v) {
    py::dict d;
    d["re"] = v.re_str();
    d["im"] = v.im_str();
    d["radius"] = v.radius();
    return d;
}

py::dict report_dict(const dqs::CheckReport& r) {
    py::dict d;
    d["check_id"] = r.check_id;
    d["status"] = r.pass ? "pass" : "fail";
    if (r.residual) d["residual"] = *r.residual;
    if (r.budget) d["budget"] = *r.budget;
    if (r.window) d["window"] = py::make_tuple(r.window->first, r.window->second);
    if (!r.detail.empty()) d["detail"] = r.detail;
    d["elapsed_ms"] = r.elapsed_ms;
    return d;
}

std::vector<std::vector<long>> matrix_rows(const dqs::PolyMatrix& m) {
    std::vector<std::vector<long>> rows(m.dim(), std::vector<long>(m.dim()));
    for (unsigned r = 0; r < m.dim(); ++r)
        for (unsigned c = 0; c < m.dim(); ++c)
            rows[r][c] = static_cast<long>(m.at(r, c).z_coeff(0).numerator().get_si());
    return rows;
}

double tail_for(unsigned l, unsigned k, unsigned nu, long T, const dqs::Rational& re,
                const dqs::Rational& im, dqs::Precision prec) {
    if (k == 1) return 0.0;
    const dqs::CBall lg = dqs::log_paper(re, im, prec);
    const double z2 = re.abs_double_upper() * re.abs_double_upper() +
                      im.abs_double_upper() * im.abs_double_upper();
    return dqs::y_entry_tail_bound(l, k, nu, 1, T + 1, std::sqrt(z2) * (1.0 - 1e-9),
                                   lg.abs_upper());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact Apery-type log-power series and their difference-equation system";
    m.attr("__version__") = dqs::kArtifactVersion;

    m.def("binomial",
          [](unsigned long n, long k) { return big_int(dqs::binomial(n, k)); },
          py::arg("n"), py::arg("k"), "binomial coefficient C(n, k), 0 outside 0 <= k <= n");

    m.def("power_sum",
          [](unsigned p, long a, long b) { return dqs::power_sum(p, a, b).str(); },
          py::arg("p"), py::arg("a"), py::arg("b"),
          "sum_{k=a}^{b} 1/k^p as an exact rational string");

    m.def("r_value",
          [](const std::string& t, unsigned nu) {
              return dqs::r_eval(dqs::RPoint(dqs::parse_rational(t), nu)).str();
          },
          py::arg("t"), py::arg("nu"), "R(t, nu) as an exact rational string");

    m.def("r_derivative",
          [](unsigned p, unsigned mm, const std::string& t, unsigned nu) {
              dqs::RPoint pt(dqs::parse_rational(t), nu);
              if (p == 0) return dqs::r_eval(pt).pow(mm).str();
              return dqs::d_r_pow(dqs::DerivOrder(p, mm), pt).str();
          },
          py::arg("p"), py::arg("m"), py::arg("t"), py::arg("nu"),
          "exact (d/dt)^p (R^m)(t, nu) as a rational string");

    m.def("zero_order_check", &dqs::zero_order_check, py::arg("l"), py::arg("nu"));

    m.def("tail_bound", &dqs::tail_bound, py::arg("l"), py::arg("p"), py::arg("nu"),
          py::arg("t0"), py::arg("z_abs"));

    m.def("f1_at_one",
          [](unsigned l, unsigned nu) {
              dqs::LogSeries f = dqs::build_f1(l, nu);
              dqs::Rational v(0);
              for (int e = f.e_min(); e <= f.e_max(); ++e) v += f.coeff(0, e).coeff(0);
              return big_int(v.numerator());
          },
          py::arg("l"), py::arg("nu"), "the binomial-sum polynomial evaluated at z = 1");

    m.def("eval_f",
          [](unsigned l, unsigned k, unsigned nu, const std::string& z, unsigned prec, long T) {
              dqs::FamilyIndex idx(l, k, nu);
              if (T <= 0) T = dqs::default_truncation(nu);
              auto [re, im] = dqs::parse_complex(z);
              dqs::Precision p(prec);
              dqs::EvalPoint pt = (k == 1) ? dqs::EvalPoint::for_polynomial(re, im, p)
                                           : dqs::EvalPoint::make(re, im, p);
              dqs::LogSeries f = dqs::build_f(idx, T);
              return ball_dict(
                  dqs::ls_eval(f, pt, dqs::TailBound(tail_for(l, k, nu, T, re, im, p))));
          },
          py::arg("l"), py::arg("k"), py::arg("nu"), py::arg("z"), py::arg("prec") = 192,
          py::arg("T") = 0,
          "evaluate the (l,k) family member (vee form for k in {5,7}) at an exact point");

    m.def("log_branch",
          [](const std::string& z, unsigned prec) {
              auto [re, im] = dqs::parse_complex(z);
              return ball_dict(dqs::log_paper(re, im, dqs::Precision(prec)));
          },
          py::arg("z"), py::arg("prec") = 192,
          "log z with -3pi/2 < arg(z) <= pi/2");

    m.def("dump_matrix_s", [](unsigned l) { return matrix_rows(dqs::s_matrix(l)); },
          py::arg("l"));
    m.def("dump_matrix_v",
          [](unsigned l, unsigned i) { return matrix_rows(dqs::v_matrix(l, i)); }, py::arg("l"),
          py::arg("i"));

    m.def("check_identities",
          [](unsigned l) {
              py::dict d;
              for (const auto& c : dqs::check_identities(l).checks) d[c.id.c_str()] = c.pass;
              return d;
          },
          py::arg("l"), "the four structural matrix identities");

    m.def("verify_recurrence_exact",
          [](unsigned l, unsigned k, unsigned nu_min, unsigned nu_max, long T) {
              py::list out;
              for (unsigned nu = nu_min; nu <= nu_max; ++nu) {
                  long t_eff = T > 0 ? T : dqs::default_truncation(nu);
                  dqs::ExactCheckSpec spec(l, k, nu, nu, t_eff);
                  for (const auto& r : dqs::verify_eq16_exact(spec)) out.append(report_dict(r));
                  for (const auto& r : dqs::verify_eq17_exact(spec)) out.append(report_dict(r));
              }
              return out;
          },
          py::arg("l"), py::arg("k"), py::arg("nu_min") = 2, py::arg("nu_max") = 4,
          py::arg("T") = 0);

    m.def("verify_recurrence_numeric",
          [](unsigned l, unsigned k, unsigned nu, const std::string& z, unsigned prec, long T) {
              auto [re, im] = dqs::parse_complex(z);
              if (T <= 0) T = dqs::default_truncation(nu);
              dqs::NumericCheckSpec spec(l, k, nu,
                                         dqs::EvalPoint::make(re, im, dqs::Precision(prec)), T);
              py::list out;
              out.append(report_dict(dqs::verify_numeric(spec, dqs::RecEq::Eq16)));
              out.append(report_dict(dqs::verify_numeric(spec, dqs::RecEq::Eq17)));
              return out;
          },
          py::arg("l"), py::arg("k"), py::arg("nu"), py::arg("z"), py::arg("prec") = 192,
          py::arg("T") = 0);
}
