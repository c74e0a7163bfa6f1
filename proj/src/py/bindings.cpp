#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "commgraph/census.hpp"
#include "commgraph/constructions.hpp"
#include "commgraph/m9.hpp"
#include "commgraph/verify.hpp"

namespace py = pybind11;

namespace {

using cg::json;

json int_json(const cg::Int& v) {
    static const cg::Int lo = cg::Int(std::numeric_limits<long long>::min());
    static const cg::Int hi = cg::Int(std::numeric_limits<long long>::max());
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str();
}

std::string distance_json(const cg::Matrix& A, const cg::Matrix& B,
                          const std::string& method, const std::optional<std::string>& budget) {
    cg::DistanceResult r;
    if (method == "le2") {
        r = cg::distance_le2(A, B);
    } else if (method == "le3") {
        r = budget ? cg::distance_le3_finite(A, B, cg::Int(*budget))
                   : cg::distance_le3_finite(A, B);
    } else if (method == "census") {
        cg::CensusGraph g = budget ? cg::census_build(A.field(), A.rows(), cg::Int(*budget))
                                   : cg::census_build(A.field(), A.rows());
        r = cg::census_distance(g, A, B);
    } else if (method == "path4") {
        auto path = cg::path_length4(A, B);
        cg::require(cg::validate_path(path, A, B), cg::Err::Internal,
                    "constructed path failed validation");
        json out;
        out["length"] = static_cast<int>(path.size()) - 1;
        json pj = json::array();
        for (const auto& m : path) pj.push_back(cg::matrix_to_json(m));
        out["path"] = std::move(pj);
        return out.dump();
    } else {
        r = cg::distance(A, B);
    }
    json out;
    out["verdict"] = cg::verdict_name(r.verdict);
    out["lower_bound"] = r.lower_bound;
    if (r.witness_path) {
        json pj = json::array();
        for (const auto& m : *r.witness_path) pj.push_back(cg::matrix_to_json(m));
        out["witness_path"] = std::move(pj);
        out["length"] = static_cast<int>(r.witness_path->size()) - 1;
    } else {
        out["witness_path"] = nullptr;
    }
    if (r.exhaustion)
        out["exhaustion"] = {{"method", r.exhaustion->method},
                             {"field", r.exhaustion->field},
                             {"examined", int_json(r.exhaustion->examined)},
                             {"total", int_json(r.exhaustion->total)},
                             {"note", r.exhaustion->note}};
    else
        out["exhaustion"] = nullptr;
    return out.dump();
}

cg::VerifyOptions options_from(std::uint64_t seed, std::optional<int> trials, bool deep,
                               bool tamper, const std::optional<std::string>& budget,
                               const std::optional<std::string>& census_budget,
                               std::optional<int> n, std::optional<std::uint64_t> q,
                               const std::optional<std::string>& specA,
                               const std::optional<std::string>& specB) {
    cg::VerifyOptions o;
    o.seed = seed;
    o.trials = trials;
    o.deep = deep;
    o.tamper = tamper;
    if (budget) o.budget = cg::Int(*budget);
    if (census_budget) o.census_budget = cg::Int(*census_budget);
    o.n = n;
    o.q = q;
    o.specA = specA;
    o.specB = specB;
    return o;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact centralizer and commuting-distance kernel";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const cg::Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<cg::Field>(m, "Field")
        .def_static("rationals", &cg::Field::rationals)
        .def_static(
            "finite",
            [](std::uint64_t p, unsigned k) { return cg::Field::finite(p, k); },
            py::arg("p"), py::arg("k") = 1)
        .def_static("from_spec",
                    [](const std::string& line) { return cg::field_from_line(line); })
        .def("spec_line", &cg::Field::spec_line)
        .def("is_finite", &cg::Field::is_finite)
        .def("order", [](const cg::Field& f) { return f.order().str(); })
        .def("__eq__", [](const cg::Field& a, const cg::Field& b) { return a == b; })
        .def("__repr__",
             [](const cg::Field& f) { return "<Field " + f.spec_line() + ">"; });

    py::class_<cg::Matrix>(m, "Matrix")
        .def_static("from_text",
                    [](const cg::Field& f, const std::string& text) {
                        return cg::matrix_from_text(f, text);
                    })
        .def_static("from_ints",
                    [](const cg::Field& f, const std::vector<std::vector<long long>>& rows) {
                        cg::require(!rows.empty(), cg::Err::ShapeMismatch, "no rows");
                        int r = static_cast<int>(rows.size());
                        int cc = static_cast<int>(rows[0].size());
                        std::vector<cg::Fe> es;
                        es.reserve(static_cast<std::size_t>(r) * cc);
                        for (const auto& row : rows) {
                            cg::require(static_cast<int>(row.size()) == cc,
                                        cg::Err::ShapeMismatch, "ragged rows");
                            for (long long v : row) es.push_back(f.from_int(v));
                        }
                        return cg::Matrix::from_entries(f, r, cc, std::move(es));
                    })
        .def_static("from_json",
                    [](const std::string& text) {
                        return cg::matrix_from_json(json::parse(text));
                    })
        .def("to_text", [](const cg::Matrix& a) { return cg::matrix_to_text(a); })
        .def("to_json", [](const cg::Matrix& a) { return cg::matrix_to_json(a).dump(); })
        .def_property_readonly("field", &cg::Matrix::field)
        .def_property_readonly("n", &cg::Matrix::rows)
        .def("rank", &cg::Matrix::rank)
        .def("det", [](const cg::Matrix& a) { return a.field().to_string(a.det()); })
        .def("is_scalar", &cg::Matrix::is_scalar)
        .def("__mul__", [](const cg::Matrix& a, const cg::Matrix& b) { return a * b; })
        .def("__add__", [](const cg::Matrix& a, const cg::Matrix& b) { return a + b; })
        .def("__sub__", [](const cg::Matrix& a, const cg::Matrix& b) { return a - b; })
        .def("__eq__", [](const cg::Matrix& a, const cg::Matrix& b) { return a == b; })
        .def("__repr__", [](const cg::Matrix& a) {
            return "<Matrix " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                   " over " + a.field().spec_line() + ">";
        });

    m.def("commute", [](const cg::Matrix& a, const cg::Matrix& b) { return a * b == b * a; });
    m.def("is_minimal", &cg::is_minimal);
    m.def("centralizer_dim",
          [](const cg::Matrix& A) { return cg::centralizer(A).space.dim(); });
    m.def("centralizer_basis",
          [](const cg::Matrix& A) { return cg::centralizer(A).space.basis_matrices(); });

    m.def("structure_json", [](const cg::Matrix& A) {
        cg::StructureReport r = cg::structure_report(A);
        json out;
        out["minimal"] = r.minimal;
        out["maximal"] = r.maximal;
        out["semisimple"] = r.semisimple;
        out["rank_one_equiv"] = r.rank_one_equiv;
        out["min_poly_degree"] = r.min_poly_degree;
        out["centralizer_dim"] = cg::centralizer(A).space.dim();
        out["notes"] = r.notes;
        return out.dump();
    });

    m.def("distance_json", &distance_json, py::arg("A"), py::arg("B"),
          py::arg("method") = "auto", py::arg("budget") = std::nullopt);

    m.def(
        "family_json",
        [](const cg::Field& f, const std::string& name, const std::string& alpha,
           const std::optional<std::string>& lambda_,
           const std::optional<std::vector<std::string>>& eigs, std::optional<int> n) {
            cg::FamilyInstance inst = [&] {
                if (name == "n3") return cg::family_n3(f, f.parse(alpha));
                if (name == "n4") {
                    cg::require(lambda_.has_value(), cg::Err::ParseError,
                                "the n4 family needs lambda");
                    return cg::family_n4(f, f.parse(alpha), f.parse(*lambda_));
                }
                cg::require(name == "n5", cg::Err::ParseError, "unknown family: " + name);
                cg::require(eigs.has_value(), cg::Err::ParseError,
                            "the n5 family needs eigenvalues");
                std::vector<cg::Fe> ev;
                for (const auto& e : *eigs) ev.push_back(f.parse(e));
                return cg::family_n5plus(f, n.value_or(static_cast<int>(ev.size())),
                                         f.parse(alpha), ev);
            }();
            json j;
            j["n"] = inst.n;
            j["alpha"] = f.to_string(inst.alpha);
            if (inst.lambda) j["lambda"] = f.to_string(*inst.lambda);
            j["X"] = cg::matrix_to_json(inst.X);
            json aux = json::object();
            for (const auto& [k, v] : inst.aux) aux[k] = cg::matrix_to_json(v);
            j["aux"] = std::move(aux);
            return j.dump();
        },
        py::arg("field"), py::arg("name"), py::arg("alpha"),
        py::arg("lambda_") = std::nullopt, py::arg("eigs") = std::nullopt,
        py::arg("n") = std::nullopt);

    m.def(
        "theorem5_json",
        [](const cg::Field& f, const std::string& specA, const std::string& specB) {
            cg::Theorem5Instance inst = cg::theorem5_instance(
                f, cg::parse_jordan_spec(f, specA), cg::parse_jordan_spec(f, specB));
            json j;
            j["field"] = f.spec_line();
            j["A"] = cg::matrix_to_json(inst.A);
            j["S"] = cg::matrix_to_json(inst.S);
            j["Bprime"] = cg::matrix_to_json(inst.Bprime);
            return j.dump();
        },
        py::arg("field"), py::arg("specA"), py::arg("specB"));

    m.def("m9_json", [] {
        cg::M9Certificate c = cg::m9_certificate();
        json j;
        j["intersection_dim"] = c.intersection_dim;
        j["scalar_count"] = c.scalar_count;
        j["subfield_nonscalar_count"] = c.subfield_nonscalar_count;
        j["full_count"] = c.full_count;
        j["A"] = cg::matrix_to_json(c.A);
        j["B"] = cg::matrix_to_json(c.B);
        j["V"] = cg::matrix_to_json(c.V);
        j["N"] = cg::matrix_to_json(c.N);
        return j.dump();
    });

    m.def(
        "verify_json",
        [](const std::string& claim, std::uint64_t seed, std::optional<int> trials,
           bool deep, bool tamper, const std::optional<std::string>& budget,
           const std::optional<std::string>& census_budget, std::optional<int> n,
           std::optional<std::uint64_t> q, const std::optional<std::string>& specA,
           const std::optional<std::string>& specB) {
            cg::VerifyOptions o = options_from(seed, trials, deep, tamper, budget,
                                               census_budget, n, q, specA, specB);
            if (claim == "all") return cg::verify_all(o).dump();
            if (claim == "census") return cg::verify_census(o).dump();
            return cg::verify_claim(claim, o).dump();
        },
        py::arg("claim"), py::arg("seed") = 0, py::arg("trials") = std::nullopt,
        py::arg("deep") = false, py::arg("tamper") = false,
        py::arg("budget") = std::nullopt, py::arg("census_budget") = std::nullopt,
        py::arg("n") = std::nullopt, py::arg("q") = std::nullopt,
        py::arg("specA") = std::nullopt, py::arg("specB") = std::nullopt);

    m.def("claim_ids", [] { return cg::claim_ids(); });

    m.def(
        "census_json",
        [](const cg::Field& f, int n, const std::optional<std::string>& budget,
           bool diameter) {
            cg::CensusGraph g = budget ? cg::census_build(f, n, cg::Int(*budget))
                                       : cg::census_build(f, n);
            json out = g.to_json();
            if (diameter) {
                json wrapped;
                wrapped["graph"] = std::move(out);
                wrapped["diameter"] = cg::diameter_report_to_json(g, cg::census_diameter(g));
                out = std::move(wrapped);
            }
            return out.dump();
        },
        py::arg("field"), py::arg("n"), py::arg("budget") = std::nullopt,
        py::arg("diameter") = false);
}
