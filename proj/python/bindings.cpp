#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gfc/verify.hpp"

namespace py = pybind11;
using namespace gfc;

namespace {

std::pair<int64_t, int> parse_q(int64_t q) {
  for (int64_t p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      int h = 0;
      int64_t v = q;
      while (v % p == 0) {
        v /= p;
        ++h;
      }
      require(v == 1, errc::invalid_parameter, "q must be a prime power");
      return {p, h};
    }
  }
  return {q, 1};
}

CurveSpec curve_of(const std::string& family, int64_t q, int64_t n, int64_t m,
                   const std::vector<int64_t>& params) {
  auto fam = family_from_name(family);
  require(fam.has_value(), errc::invalid_parameter, "unknown family " + family);
  auto [p, h] = parse_q(q);
  return make_curve(*fam, make_field(p, h), n, m, params);
}

py::list elem_list(const Elem& e) {
  py::list out;
  std::function<void(const Elem&)> flat = [&](const Elem& a) {
    if (a.coords().empty()) {
      out.append(a.residue());
    } else {
      for (const Elem& c : a.coords()) flat(c);
    }
  };
  flat(e);
  return out;
}

}  // namespace

PYBIND11_MODULE(_gfc, m) {
  m.doc() = "generalized Fermat curves over finite fields: exact models, genera, orbit censuses "
            "and automorphism groups, with brute-force cross-checks";

  py::register_exception<error>(m, "GfcError");

  m.def("field_order", [](int64_t q) {
    auto [p, h] = parse_q(q);
    return make_field(p, h)->order();
  });

  m.def("find_nonsquare", [](int64_t q) {
    auto [p, h] = parse_q(q);
    auto F = make_field(p, h);
    return elem_list(find_nonsquare(F));
  });

  m.def("root_of_unity_index", [](int64_t q, int64_t n) {
    auto [p, h] = parse_q(q);
    auto F = make_field(p, h);
    return F->index_of(root_of_unity(F, n));
  });

  m.def(
      "genus",
      [](const std::string& family, int64_t q, int64_t n, int64_t m,
         const std::vector<int64_t>& params) {
        CurveSpec C = curve_of(family, q, n, m, params);
        py::dict out;
        out["closed"] = genus_closed_form(C);
        out["rh"] = genus_riemann_hurwitz(C);
        return out;
      },
      py::arg("family"), py::arg("q"), py::arg("n"), py::arg("m"), py::arg("params"));

  m.def("place_count", [](const std::string& family, int64_t q, int64_t n, int64_t m,
                          const std::vector<int64_t>& params, int L) {
    return rational_place_count(curve_of(family, q, n, m, params), L);
  });

  m.def("orbit_report", [](const std::string& family, int64_t q, int64_t n, int64_t m,
                           const std::vector<int64_t>& params) {
    CurveSpec C = curve_of(family, q, n, m, params);
    OrbitReport R = g_orbits(C);
    FrobCase fc = frobenius_orbit_action(C, R);
    py::dict out;
    out["L"] = R.L;
    out["full_census"] = R.full_census;
    out["total_places"] = R.total_places;
    out["short_sizes"] = R.short_sizes;
    out["frobenius_case"] = frob_case_name(fc);
    out["genus_from_orbits"] = R.genus_rhp;
    return out;
  });

  m.def("aut_group", [](const std::string& family, int64_t q, int64_t n, int64_t m,
                        const std::vector<int64_t>& params) {
    CurveSpec C = curve_of(family, q, n, m, params);
    GeneratorCatalog cat = generator_catalog(C);
    GroupTable T = generated_group(cat.gens);
    py::dict out;
    out["order"] = T.order();
    out["structure"] = recognize_group(T).str();
    py::list gens;
    for (const CurveAut& g : cat.gens) gens.append(g.str());
    out["generators"] = gens;
    out["coefficient_extension_degree"] = cat.coefficient_extension_degree;
    return out;
  });

  m.def("dickson", [](int64_t q) {
    auto [p, h] = parse_q(q);
    AuditReport a = dickson_audit(p, h);
    py::dict out;
    out["q"] = a.q;
    out["group_order"] = a.group_order;
    out["pass"] = a.pass();
    py::dict hist;
    for (auto& [k, v] : a.orders_histogram) hist[py::int_(k)] = v;
    out["orders_histogram"] = hist;
    return out;
  });

  m.def("quotient", [](int64_t q, int64_t n, const std::string& kind) {
    auto [p, h] = parse_q(q);
    FieldPtr F = make_field(p, h);
    QuotientDatum d =
        kind == "split" ? split_quotient(F, n) : nonsplit_quotient(Tower::make(F), n);
    py::dict out;
    out["kind"] = kind;
    out["n"] = d.n;
    out["map_degree"] = d.invariant.map_degree();
    py::list num, den;
    for (int j = 0; j <= d.invariant.num().deg(); ++j)
      num.append(elem_list(d.invariant.num().coeff(j)));
    for (int j = 0; j <= d.invariant.den().deg(); ++j)
      den.append(elem_list(d.invariant.den().coeff(j)));
    out["inv_num"] = num;
    out["inv_den"] = den;
    return out;
  });

  m.def(
      "verify",
      [](const std::string& suite, const std::vector<int64_t>& qset, int64_t max_exp,
         int workers) {
        VerifyConfig cfg;
        cfg.fields.clear();
        for (int64_t q : qset) cfg.fields.push_back(parse_q(q));
        cfg.max_exp = max_exp;
        cfg.workers = workers;
        std::vector<SuiteReport> reports;
        if (suite == "all") {
          reports = run_all(cfg);
        } else {
          reports.push_back(run_suite(suite, cfg));
        }
        py::list out;
        for (const auto& r : reports) {
          py::dict d;
          d["suite"] = r.suite;
          d["passed"] = r.passed;
          d["failed"] = r.failed;
          d["ok"] = r.ok();
          py::list fails;
          for (const auto& c : r.checks)
            if (!c.pass) fails.append(c.name + " [" + c.anchor + "]");
          d["failures"] = fails;
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "all",
      py::arg("qset") = std::vector<int64_t>{5, 7, 9, 11, 13}, py::arg("max_exp") = 10,
      py::arg("workers") = 1);

  m.def("suites", [] { return suite_names(); });
}
