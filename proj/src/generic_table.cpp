#include "symcover/generic_table.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "symcover/error.hpp"
#include "symcover/parallel.hpp"

namespace symcover {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& what) { throw InvalidArgument("generic table: " + what); }

long long parse_integer(std::string_view s, const std::string& context) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) schema_error("bad rational '" + context + "'");
  return v;
}

double parse_real(const json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (!j.is_string()) schema_error(where + " must be a number or a \"p/q\" string");
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  if (slash == std::string::npos) return static_cast<double>(parse_integer(s, s));
  const long long p = parse_integer(std::string_view(s).substr(0, slash), s);
  const long long q = parse_integer(std::string_view(s).substr(slash + 1), s);
  if (q <= 0) schema_error("bad rational '" + s + "'");
  return static_cast<double>(p) / static_cast<double>(q);
}

std::complex<double> parse_value(const json& j, const std::string& where) {
  if (j.is_array()) {
    if (j.size() != 2) schema_error(where + " must be a [re, im] pair");
    return {parse_real(j[0], where), parse_real(j[1], where)};
  }
  return {parse_real(j, where), 0.0};
}

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) schema_error(where + " is missing \"" + key + "\"");
  return obj.at(key);
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_string()) schema_error(where + "." + key + " must be a string");
  return v.get<std::string>();
}

long long nearest_integer(std::complex<double> value, double tolerance, const std::string& what) {
  const double rounded = std::round(value.real());
  if (std::abs(value.imag()) > tolerance || std::abs(value.real() - rounded) > tolerance) {
    std::ostringstream msg;
    msg.precision(12);
    msg << what << " = " << value.real() << (value.imag() < 0 ? " - " : " + ") << std::abs(value.imag())
        << "i is not within " << tolerance << " of an integer";
    throw TableError(msg.str());
  }
  return static_cast<long long>(rounded);
}

}  // namespace

GenericCharTable::GenericCharTable(std::string name, std::vector<GenericClass> classes,
                                   std::vector<GenericIrreducible> irreducibles)
    : name_(std::move(name)), classes_(std::move(classes)), irreducibles_(std::move(irreducibles)) {
  if (classes_.empty()) throw InvalidArgument("generic table needs at least one class");
  if (classes_.front().size != 1) throw InvalidArgument("first class must be the identity (size 1)");
  if (irreducibles_.size() != classes_.size()) {
    throw InvalidArgument("generic table needs as many irreducibles as classes");
  }
  for (const auto& c : classes_) {
    if (c.size == 0) throw InvalidArgument("class '" + c.name + "' has size 0");
    order_ += c.size;
  }
  for (const auto& chi : irreducibles_) {
    if (chi.values.size() != classes_.size()) {
      throw InvalidArgument("irreducible '" + chi.name + "' has the wrong number of values");
    }
  }
}

std::complex<double> GenericCharTable::inner_product(const std::vector<std::complex<double>>& f,
                                                     const std::vector<std::complex<double>>& g) const {
  std::complex<double> sum = 0;
  for (std::size_t c = 0; c < classes_.size(); ++c) sum += static_cast<double>(classes_[c].size) * f[c] * std::conj(g[c]);
  return sum / static_cast<double>(order_);
}

void GenericCharTable::validate(double tolerance) const {
  for (const auto& chi : irreducibles_) {
    const auto deg = chi.values.front();
    if (std::abs(deg.imag()) > tolerance || deg.real() <= 0) {
      throw TableError("irreducible '" + chi.name + "' has no positive real degree");
    }
  }
  for (std::size_t a = 0; a < irreducibles_.size(); ++a) {
    for (std::size_t b = a; b < irreducibles_.size(); ++b) {
      const auto ip = inner_product(irreducibles_[a].values, irreducibles_[b].values);
      const double expected = (a == b) ? 1.0 : 0.0;
      if (std::abs(ip - expected) > tolerance) {
        std::ostringstream msg;
        msg << "row orthogonality fails for '" << irreducibles_[a].name << "', '" << irreducibles_[b].name
            << "': inner product " << ip.real() << " + " << ip.imag() << "i";
        throw TableError(msg.str());
      }
    }
  }
}

GenericCharTable parse_generic_table(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    schema_error(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_error("top level must be an object");
  const std::string name = require_string(doc, "name", "table");

  const json& classes_json = require(doc, "classes", "table");
  if (!classes_json.is_array() || classes_json.empty()) schema_error("\"classes\" must be a non-empty array");
  std::vector<GenericClass> classes;
  for (std::size_t i = 0; i < classes_json.size(); ++i) {
    const std::string where = "classes[" + std::to_string(i) + "]";
    const json& c = classes_json[i];
    GenericClass cls;
    cls.name = require_string(c, "name", where);
    const json& size = require(c, "size", where);
    if (!size.is_number_integer() || size.get<long long>() <= 0) schema_error(where + ".size must be a positive integer");
    cls.size = size.get<std::uint64_t>();
    classes.push_back(std::move(cls));
  }

  const json& irr_json = require(doc, "irreducibles", "table");
  if (!irr_json.is_array()) schema_error("\"irreducibles\" must be an array");
  std::vector<GenericIrreducible> irreducibles;
  for (std::size_t i = 0; i < irr_json.size(); ++i) {
    const std::string where = "irreducibles[" + std::to_string(i) + "]";
    GenericIrreducible chi;
    chi.name = require_string(irr_json[i], "name", where);
    const json& values = require(irr_json[i], "values", where);
    if (!values.is_array() || values.size() != classes.size()) {
      schema_error(where + ".values must have one entry per class");
    }
    for (std::size_t c = 0; c < values.size(); ++c) {
      chi.values.push_back(parse_value(values[c], where + ".values[" + std::to_string(c) + "]"));
    }
    irreducibles.push_back(std::move(chi));
  }
  try {
    return GenericCharTable(name, std::move(classes), std::move(irreducibles));
  } catch (const InvalidArgument& e) {
    schema_error(e.what());
  }
}

GenericCharTable load_generic_table(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InvalidArgument("cannot read " + file.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_generic_table(buffer.str());
}

std::string generic_table_to_json(const GenericCharTable& table) {
  nlohmann::ordered_json doc;
  doc["name"] = table.name();
  doc["classes"] = nlohmann::ordered_json::array();
  for (const auto& c : table.classes()) doc["classes"].push_back({{"name", c.name}, {"size", c.size}});
  doc["irreducibles"] = nlohmann::ordered_json::array();
  for (const auto& chi : table.irreducibles()) {
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (const auto& v : chi.values) values.push_back({v.real(), v.imag()});
    doc["irreducibles"].push_back({{"name", chi.name}, {"values", values}});
  }
  return doc.dump(2);
}

GenericCharTable dihedral_table(unsigned m) {
  if (m < 3 || m % 2 == 0) throw InvalidArgument("dihedral table needs odd m >= 3");
  const unsigned half = (m - 1) / 2;
  std::vector<GenericClass> classes{{"1", 1}};
  for (unsigned j = 1; j <= half; ++j) classes.push_back({"r^" + std::to_string(j), 2});
  classes.push_back({"s", m});

  std::vector<GenericIrreducible> irreducibles;
  GenericIrreducible trivial{"trivial", std::vector<std::complex<double>>(classes.size(), 1.0)};
  GenericIrreducible sign{"sign", std::vector<std::complex<double>>(classes.size(), 1.0)};
  sign.values.back() = -1.0;
  irreducibles.push_back(std::move(trivial));
  irreducibles.push_back(std::move(sign));
  for (unsigned j = 1; j <= half; ++j) {
    GenericIrreducible chi{"chi_" + std::to_string(j), {}};
    chi.values.push_back(2.0);
    for (unsigned k = 1; k <= half; ++k) {
      chi.values.push_back(2.0 * std::cos(2.0 * std::numbers::pi * j * k / m));
    }
    chi.values.push_back(0.0);
    irreducibles.push_back(std::move(chi));
  }
  return GenericCharTable("D_" + std::to_string(2 * m), std::move(classes), std::move(irreducibles));
}

CoveringReport generic_covering(const GenericCharTable& table, const GenericTolerances& tolerances, unsigned threads) {
  table.validate(tolerances.orthogonality);
  const auto& irr = table.irreducibles();
  const std::size_t k = irr.size();
  const double tol = tolerances.integrality;

  // pair[i * k + j] = c(χ_i χ_j), filled for i <= j.
  std::vector<PowerOrbit::Bits> pair(k * k);
  parallel_for(k, threads, [&](std::size_t i) {
    std::vector<std::complex<double>> product(table.classes().size());
    for (std::size_t j = i; j < k; ++j) {
      for (std::size_t c = 0; c < product.size(); ++c) product[c] = irr[i].values[c] * irr[j].values[c];
      PowerOrbit::Bits bits(k);
      for (std::size_t l = 0; l < k; ++l) {
        const long long m = nearest_integer(table.inner_product(product, irr[l].values), tol,
                                            "<" + irr[i].name + "*" + irr[j].name + ", " + irr[l].name + ">");
        if (m < 0) throw TableError("negative multiplicity in " + irr[i].name + "*" + irr[j].name);
        if (m > 0) bits.set(l);
      }
      pair[i * k + j] = std::move(bits);
    }
  });
  auto pair_bits = [&](std::size_t i, std::size_t j) -> const PowerOrbit::Bits& {
    return i <= j ? pair[i * k + j] : pair[j * k + i];
  };

  CoveringReport report;
  report.group = table.name();
  report.records.resize(k);
  parallel_for(k, threads, [&](std::size_t i) {
    const auto& values = irr[i].values;
    const std::complex<double> degree = values.front();
    CoveringRecord rec;
    rec.id = irr[i].name;
    rec.degree = nearest_integer(degree, tol, "degree of " + irr[i].name);

    std::uint64_t kernel = 0, center = 0;
    std::vector<std::complex<double>> distinct;
    for (std::size_t c = 0; c < values.size(); ++c) {
      if (std::abs(values[c] - degree) <= tol) kernel += table.classes()[c].size;
      if (std::abs(std::abs(values[c]) - degree.real()) <= tol) center += table.classes()[c].size;
      const bool seen = std::any_of(distinct.begin(), distinct.end(),
                                    [&](const auto& v) { return std::abs(v - values[c]) <= tol; });
      if (!seen) distinct.push_back(values[c]);
    }
    rec.faithful = (kernel == 1);
    rec.center_order = center;
    rec.distinct_values = distinct.size();

    PowerOrbit::Bits start(k);
    start.set(i);
    const PowerOrbit orbit = explore_orbit(start, [&](const PowerOrbit::Bits& s) {
      PowerOrbit::Bits out(k);
      for (std::size_t j = s.find_first(); j != PowerOrbit::Bits::npos; j = s.find_next(j)) out |= pair_bits(j, i);
      return out;
    });
    rec.e = orbit.e;
    rec.d = orbit.d;
    rec.e_witness_k = orbit.e_witness_k;
    rec.d_witness_k = orbit.d_witness_k;
    rec.stabilizes = orbit.stabilizes;
    report.records[i] = std::move(rec);
  });
  report.compute_aggregates();
  return report;
}

}  // namespace symcover
