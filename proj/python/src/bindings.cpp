#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "symcover/class_algebra.hpp"
#include "symcover/covering.hpp"
#include "symcover/error.hpp"
#include "symcover/generic_table.hpp"
#include "symcover/verification.hpp"
#include "symcover/workspace.hpp"

namespace py = pybind11;
using namespace symcover;

namespace {

Workspace& workspace() {
  static Workspace ws;
  return ws;
}

py::int_ to_py(const BigInt& value) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(to_string(value).c_str(), nullptr, 10));
}

py::tuple to_py(const Partition& p) {
  py::tuple out(p.length());
  for (std::size_t i = 0; i < p.length(); ++i) out[i] = p[i];
  return out;
}

Partition from_py(const std::vector<Partition::Part>& parts) { return Partition(parts); }

Partition checked(unsigned n, const std::vector<Partition::Part>& parts) {
  Partition p = from_py(parts);
  if (p.size() != n) throw InvalidArgument(p.to_string() + " is not a partition of " + std::to_string(n));
  return p;
}

py::list to_py(const std::vector<Partition>& ps) {
  py::list out;
  for (const Partition& p : ps) out.append(to_py(p));
  return out;
}

py::dict to_py(const Decomposition& d) {
  py::dict out;
  for (const auto& [p, m] : d.multiplicities()) out[to_py(p)] = to_py(m);
  return out;
}

py::object optional_k(const std::optional<unsigned>& k) { return k ? py::object(py::int_(*k)) : py::object(py::none()); }

py::dict to_py(const CoveringReport& report) {
  py::list chars;
  for (const CoveringRecord& r : report.records) {
    py::dict c;
    c["id"] = r.id;
    c["degree"] = to_py(r.degree);
    c["linear"] = r.linear();
    c["e"] = optional_k(r.e);
    c["d"] = optional_k(r.d);
    c["e_witness_k"] = r.e_witness_k;
    c["d_witness_k"] = r.d_witness_k;
    c["faithful"] = r.faithful;
    c["center_order"] = to_py(r.center_order);
    c["distinct_values"] = r.distinct_values;
    chars.append(c);
  }
  py::dict out;
  out["group"] = report.group;
  out["e_max"] = optional_k(report.e_max);
  out["d_max"] = optional_k(report.d_max);
  out["characters"] = chars;
  return out;
}

py::dict to_py(const VerificationReport& report) {
  py::list checks;
  for (const Check& c : report.checks()) checks.append(py::make_tuple(c.label, c.passed, c.detail));
  py::dict out;
  out["name"] = report.name();
  out["passed"] = report.passed();
  out["checks"] = checks;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Covering numbers of characters of symmetric groups";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<NotACharacter>(m, "NotACharacter", PyExc_ValueError);
  py::register_exception<TableError>(m, "TableError", PyExc_RuntimeError);
  py::register_exception<CacheError>(m, "CacheError", PyExc_OSError);

  m.def("partitions_of", [](unsigned n) { return to_py(partitions_of(n)); }, py::arg("n"),
        "Partitions of n in canonical order: (n) first, (1,...,1) last.");
  m.def("partition_count", [](unsigned n) { return to_py(partition_count(n)); }, py::arg("n"));
  m.def("conjugate", [](const std::vector<Partition::Part>& p) { return to_py(conjugate(from_py(p))); },
        py::arg("partition"));

  m.def(
      "character_value",
      [](const std::vector<Partition::Part>& lambda, const std::vector<Partition::Part>& cycle_type) {
        return to_py(mn_value(from_py(lambda), from_py(cycle_type)));
      },
      py::arg("partition"), py::arg("cycle_type"));

  m.def(
      "character_table",
      [](unsigned n) {
        const CharacterTable& t = workspace().table(n);
        py::list sizes, rows;
        for (const BigInt& s : t.class_sizes()) sizes.append(to_py(s));
        for (std::size_t r = 0; r < t.size(); ++r) {
          py::list row;
          for (const BigInt& v : t.row(r)) row.append(to_py(v));
          rows.append(row);
        }
        py::dict out;
        out["n"] = n;
        out["partitions"] = to_py(t.partitions());
        out["class_sizes"] = sizes;
        out["values"] = rows;
        return out;
      },
      py::arg("n"), "Rows are irreducibles, columns are cycle types, both in canonical order.");

  m.def(
      "kronecker",
      [](unsigned n, const std::vector<Partition::Part>& lambda, const std::vector<Partition::Part>& mu) {
        const CharacterTable& t = workspace().table(n);
        return to_py(decompose(pointwise_product(character(t, checked(n, lambda)), character(t, checked(n, mu))), t));
      },
      py::arg("n"), py::arg("lam"), py::arg("mu"), "Multiplicities in chi_lam * chi_mu.");

  m.def(
      "power",
      [](unsigned n, const std::vector<Partition::Part>& lambda, unsigned k) {
        return to_py(power_exact(checked(n, lambda), k, workspace().table(n)));
      },
      py::arg("n"), py::arg("lam"), py::arg("k"), "Multiplicities in chi_lam^k.");

  m.def(
      "power_support",
      [](unsigned n, const std::vector<Partition::Part>& lambda, std::uint64_t k) {
        Workspace& ws = workspace();
        return to_py(power_support(checked(n, lambda), k, ws.table(n), ws.pairs(n)).members());
      },
      py::arg("n"), py::arg("lam"), py::arg("k"), "Irreducible constituents of chi_lam^k.");

  m.def(
      "covering",
      [](unsigned n, std::optional<std::vector<Partition::Part>> lambda) {
        Workspace& ws = workspace();
        if (!lambda) return to_py(covering_survey(ws.table(n), ws.pairs(n), ws.threads()));
        CoveringReport report;
        report.group = "S_" + std::to_string(n);
        report.records.push_back(covering_record(checked(n, *lambda), ws.table(n), ws.pairs(n)));
        report.compute_aggregates();
        return to_py(report);
      },
      py::arg("n"), py::arg("lam") = py::none(), "Covering numbers e and d for S_n.");

  m.def(
      "generic_covering",
      [](const std::string& json_text, double orthogonality_tol, double integrality_tol) {
        return to_py(generic_covering(parse_generic_table(json_text), {orthogonality_tol, integrality_tol}));
      },
      py::arg("table_json"), py::arg("orthogonality_tol") = 1e-9, py::arg("integrality_tol") = 1e-6,
      "Covering numbers from a character table given as JSON text.");
  m.def("dihedral_table_json", [](unsigned m) { return generic_table_to_json(dihedral_table(m)); },
        py::arg("m"), "Character table of the dihedral group of order 2m, m odd.");

  m.def("verify_theorem1", [](unsigned n) { return to_py(verify_theorem1(workspace(), n)); }, py::arg("n"));
  m.def("verify_table1", [] { return to_py(verify_table1(workspace())); });
  m.def("verify_non_rectangle", [](unsigned n) { return to_py(verify_lemma_nonrectangle(workspace(), n)); },
        py::arg("n"));
  m.def("verify_rectangle", [](unsigned n) { return to_py(verify_lemma_rectangle(workspace(), n)); }, py::arg("n"));
  m.def(
      "verify_theta_move",
      [](unsigned n, std::optional<unsigned> u, std::optional<unsigned> v) {
        return to_py(verify_theta_move(workspace(), n, u, v));
      },
      py::arg("n"), py::arg("u") = py::none(), py::arg("v") = py::none());
  m.def(
      "verify_semigroup",
      [](unsigned samples, unsigned max_size, std::uint64_t seed) {
        return to_py(verify_semigroup(workspace(), samples, max_size, seed));
      },
      py::arg("samples") = 200, py::arg("max_size") = 9, py::arg("seed") = 1);
  m.def("verify_brauer", [](unsigned n) { return to_py(verify_brauer(workspace(), n)); }, py::arg("n"));
}
