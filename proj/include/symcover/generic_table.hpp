#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "symcover/covering.hpp"

namespace symcover {

struct GenericClass {
  std::string name;
  std::uint64_t size = 0;
};

struct GenericIrreducible {
  std::string name;
  std::vector<std::complex<double>> values;
};

struct GenericTolerances {
  double orthogonality = 1e-9;
  double integrality = 1e-6;
};

/// Character table of an arbitrary finite group given as data. The first
/// class must be the identity.
class GenericCharTable {
 public:
  GenericCharTable(std::string name, std::vector<GenericClass> classes,
                   std::vector<GenericIrreducible> irreducibles);

  const std::string& name() const noexcept { return name_; }
  const std::vector<GenericClass>& classes() const noexcept { return classes_; }
  const std::vector<GenericIrreducible>& irreducibles() const noexcept { return irreducibles_; }
  std::uint64_t order() const noexcept { return order_; }

  /// (1/|G|) Σ |c| f(c) conj(g(c)).
  std::complex<double> inner_product(const std::vector<std::complex<double>>& f,
                                     const std::vector<std::complex<double>>& g) const;

  /// Throws TableError if row orthogonality fails beyond the tolerance or a
  /// degree is not a positive real.
  void validate(double tolerance) const;

 private:
  std::string name_;
  std::vector<GenericClass> classes_;
  std::vector<GenericIrreducible> irreducibles_;
  std::uint64_t order_ = 0;
};

/// Parses the JSON table format. Entries are [re, im] pairs whose parts are
/// numbers or "p/q" strings; a bare number or string is read as a real value.
/// Throws InvalidArgument on any schema violation.
GenericCharTable parse_generic_table(std::string_view json_text);
GenericCharTable load_generic_table(const std::filesystem::path& file);
std::string generic_table_to_json(const GenericCharTable& table);

/// D_{2m} for odd m >= 3.
GenericCharTable dihedral_table(unsigned m);

/// Validates the table, then runs the support dynamics with multiplicities
/// certified to be within `integrality` of an integer. Throws TableError on
/// failure of either check.
CoveringReport generic_covering(const GenericCharTable& table, const GenericTolerances& tolerances = {},
                                unsigned threads = 1);

}  // namespace symcover
