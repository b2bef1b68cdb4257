#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jacobsthal/classic_sequences.hpp"
#include "jacobsthal/errors.hpp"
#include "jacobsthal/identity_suite.hpp"
#include "jacobsthal/kvalue.hpp"
#include "jacobsthal/matrix_sequences.hpp"
#include "jacobsthal/report_json.hpp"
#include "jacobsthal/scalar_sequences.hpp"

namespace py = pybind11;
using namespace jacobsthal;

namespace {

using Grid = std::pair<long, long>;

py::int_ to_pyint(const Integer& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

SequenceFamily sequence_family(const std::string& name) {
    static const std::map<std::string, SequenceFamily> families{
        {"J", SequenceFamily::J}, {"j", SequenceFamily::j}, {"T", SequenceFamily::T}, {"t", SequenceFamily::t}};
    const auto it = families.find(name);
    if (it == families.end()) throw UsageError("unknown sequence family '" + name + "'");
    return it->second;
}

MatrixFamily matrix_family(const std::string& name) {
    static const std::map<std::string, MatrixFamily> families{
        {"M", MatrixFamily::M}, {"N", MatrixFamily::N}, {"Jn", MatrixFamily::Jmat}, {"jn", MatrixFamily::jmat}};
    const auto it = families.find(name);
    if (it == families.end()) throw UsageError("unknown matrix family '" + name + "'");
    return it->second;
}

std::vector<KValue> k_values(const std::optional<std::vector<std::string>>& ks) {
    if (!ks) return default_k_set();
    std::vector<KValue> out;
    for (const auto& s : *ks) out.push_back(KValue::parse(s));
    return out;
}

IndexRange to_range(const Grid& g) {
    if (g.first > g.second) throw UsageError("empty index range");
    return {g.first, g.second};
}

std::optional<IndexRange> to_range(const std::optional<Grid>& g) {
    if (!g) return std::nullopt;
    return to_range(*g);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact generalized third-order Jacobsthal sequences and matrices";

    auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);
    (void)domain_error;

    m.def("term", [](const std::string& family, const std::string& k, long n) {
        return render(evaluate_term(sequence_family(family), KValue::parse(k), n).value);
    }, py::arg("family"), py::arg("k"), py::arg("n"),
          "Term n of J, j, T or t at k (a positive rational string or 'sym').");

    m.def("binet", [](const std::string& k, long n) { return render(evaluate_binet(KValue::parse(k), n)); },
          py::arg("k"), py::arg("n"), "J_n computed through the Binet-type formula.");

    m.def("matrix", [](const std::string& family, const std::string& k, long n) {
        return render(evaluate_matrix(matrix_family(family), KValue::parse(k), n).matrix);
    }, py::arg("family"), py::arg("k"), py::arg("n"), "Matrix M, N, Jn or jn as rows of strings.");

    m.def("det_J", [](const std::string& k, long n) {
        return render(with_k(KValue::parse(k), [n](const auto& kk) { return AnyScalar(det_J(kk, n)); }));
    }, py::arg("k"), py::arg("n"));
    m.def("det_j", [](const std::string& k, long n) {
        return render(with_k(KValue::parse(k), [n](const auto& kk) { return AnyScalar(det_j(kk, n)); }));
    }, py::arg("k"), py::arg("n"));

    m.def("residue_z", &residue_z, py::arg("n"));
    m.def("residue_y", &residue_y, py::arg("n"));
    m.def("jac3_classic", [](long n) { return to_pyint(jac3_classic(n)); }, py::arg("n"));
    m.def("modified_lucas_classic", [](long n) { return to_pyint(modified_lucas_classic(n)); }, py::arg("n"));
    m.def("lucas3_classic", [](long n) { return to_pyint(lucas3_classic(n)); }, py::arg("n"));
    m.def("jac3_multi_index", [](long r, long n) { return to_pyint(jac3_multi_index(r, n)); },
          py::arg("r"), py::arg("n"));

    m.def("identity_names", [] {
        std::vector<std::string> names;
        for (const auto& def : identity_registry()) names.push_back(def.name);
        return names;
    });

    m.def("_verify_json", [](const std::string& identity, const std::optional<std::vector<std::string>>& k,
                             const Grid& n, const std::optional<Grid>& mr) {
        return report_to_json(verify_identity(identity, k_values(k), to_range(n), to_range(mr))).dump();
    }, py::arg("identity"), py::arg("k"), py::arg("n"), py::arg("m"));

    m.def("_verify_all_json", [](const std::optional<std::vector<std::string>>& k, const Grid& n,
                                 const Grid& mr) {
        return reports_to_json(verify_all(k_values(k), to_range(n), to_range(mr))).dump();
    }, py::arg("k"), py::arg("n"), py::arg("m"));
}
