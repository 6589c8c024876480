#include "symcover/format.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "symcover/error.hpp"

namespace symcover {

namespace {

using ojson = nlohmann::ordered_json;

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

std::string paren(const Partition& p) { return "(" + p.to_string() + ")"; }

std::string optional_text(const std::optional<unsigned>& v) { return v ? std::to_string(*v) : "none"; }

ojson optional_json(const std::optional<unsigned>& v) { return v ? ojson(*v) : ojson("none"); }

// Right-aligned columns, first column left-aligned.
std::string aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string pad(width[c] - row[c].size(), ' ');
      if (c == 0) {
        line += row[c] + pad;
      } else {
        line += "  " + pad + row[c];
      }
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw InvalidArgument("unknown format '" + std::string(name) + "'");
}

std::string format_table(const CharacterTable& table, Format format) {
  const auto& parts = table.partitions();
  std::ostringstream out;
  switch (format) {
    case Format::json: {
      ojson doc;
      doc["n"] = table.n();
      doc["partitions"] = ojson::array();
      for (const auto& p : parts) doc["partitions"].push_back(p.to_string());
      doc["class_sizes"] = ojson::array();
      for (const auto& s : table.class_sizes()) doc["class_sizes"].push_back(s.str());
      doc["values"] = ojson::array();
      for (std::size_t r = 0; r < table.size(); ++r) {
        ojson row = ojson::array();
        for (const auto& v : table.row(r)) row.push_back(v.str());
        doc["values"].push_back(std::move(row));
      }
      out << doc.dump() << '\n';
      break;
    }
    case Format::csv: {
      out << "irreducible";
      for (const auto& p : parts) out << ',' << quoted(p.to_string());
      out << '\n';
      for (std::size_t r = 0; r < table.size(); ++r) {
        out << quoted(parts[r].to_string());
        for (const auto& v : table.row(r)) out << ',' << v;
        out << '\n';
      }
      break;
    }
    case Format::text: {
      std::vector<std::vector<std::string>> rows;
      std::vector<std::string> header{"S_" + std::to_string(table.n())};
      std::vector<std::string> sizes{"class size"};
      for (std::size_t c = 0; c < table.size(); ++c) {
        header.push_back(paren(parts[c]));
        sizes.push_back(table.class_sizes()[c].str());
      }
      rows.push_back(std::move(header));
      rows.push_back(std::move(sizes));
      for (std::size_t r = 0; r < table.size(); ++r) {
        std::vector<std::string> row{paren(parts[r])};
        for (const auto& v : table.row(r)) row.push_back(v.str());
        rows.push_back(std::move(row));
      }
      out << aligned(rows);
      break;
    }
  }
  return out.str();
}

std::string format_decomposition(const Decomposition& decomposition, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::json: {
      ojson doc;
      doc["n"] = decomposition.n();
      doc["mult"] = ojson::object();
      for (const auto& [p, m] : decomposition.multiplicities()) doc["mult"][p.to_string()] = m.str();
      out << doc.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "partition,multiplicity\n";
      for (const auto& [p, m] : decomposition.multiplicities()) out << quoted(p.to_string()) << ',' << m << '\n';
      break;
    case Format::text: {
      std::vector<std::vector<std::string>> rows{{"partition", "multiplicity"}};
      for (const auto& [p, m] : decomposition.multiplicities()) rows.push_back({paren(p), m.str()});
      out << aligned(rows);
      break;
    }
  }
  return out.str();
}

std::string format_support(const SupportSet& support, unsigned k, Format format) {
  std::ostringstream out;
  const auto members = support.members();
  switch (format) {
    case Format::json: {
      ojson doc;
      doc["n"] = support.n();
      doc["k"] = k;
      doc["support"] = ojson::array();
      for (const auto& p : members) doc["support"].push_back(p.to_string());
      out << doc.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "partition\n";
      for (const auto& p : members) out << quoted(p.to_string()) << '\n';
      break;
    case Format::text:
      out << "support of power " << k << " (" << members.size() << " of " << support.index().size() << "):\n";
      for (const auto& p : members) out << "  " << paren(p) << '\n';
      break;
  }
  return out.str();
}

std::string format_report(const CoveringReport& report, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::json: {
      ojson doc;
      doc["group"] = report.group;
      doc["e_max"] = optional_json(report.e_max);
      doc["d_max"] = optional_json(report.d_max);
      doc["characters"] = ojson::array();
      for (const auto& r : report.records) {
        ojson rec;
        rec["id"] = r.id;
        rec["degree"] = r.degree.str();
        rec["linear"] = r.linear();
        rec["e"] = optional_json(r.e);
        rec["d"] = optional_json(r.d);
        rec["e_witness_k"] = r.e_witness_k;
        rec["d_witness_k"] = r.d_witness_k;
        rec["faithful"] = r.faithful;
        rec["center_order"] = r.center_order.str();
        rec["distinct_values"] = r.distinct_values;
        doc["characters"].push_back(std::move(rec));
      }
      out << doc.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "id,degree,e,d,e_witness_k,d_witness_k,faithful,center_order,distinct_values\n";
      for (const auto& r : report.records) {
        out << quoted(r.id) << ',' << r.degree << ',' << optional_text(r.e) << ',' << optional_text(r.d) << ','
            << r.e_witness_k << ',' << r.d_witness_k << ',' << (r.faithful ? "true" : "false") << ','
            << r.center_order << ',' << r.distinct_values << '\n';
      }
      break;
    case Format::text: {
      std::vector<std::vector<std::string>> rows{
          {"character", "degree", "e", "d", "e_k", "d_k", "faithful", "|Z(chi)|", "#values"}};
      for (const auto& r : report.records) {
        rows.push_back({r.id, r.degree.str(), optional_text(r.e), optional_text(r.d), std::to_string(r.e_witness_k),
                        std::to_string(r.d_witness_k), r.faithful ? "yes" : "no", r.center_order.str(),
                        std::to_string(r.distinct_values)});
      }
      out << report.group << '\n' << aligned(rows);
      out << "e_max = " << optional_text(report.e_max) << '\n';
      out << "d_max = " << optional_text(report.d_max) << '\n';
      break;
    }
  }
  return out.str();
}

std::string format_verification(const std::vector<VerificationReport>& reports, Format format) {
  std::size_t passed = 0, total = 0;
  for (const auto& r : reports) {
    passed += r.passed_count();
    total += r.checks().size();
  }
  std::ostringstream out;
  switch (format) {
    case Format::json: {
      ojson doc;
      doc["reports"] = ojson::array();
      for (const auto& r : reports) {
        ojson rep;
        rep["name"] = r.name();
        rep["passed"] = r.passed();
        rep["checks"] = ojson::array();
        for (const auto& c : r.checks()) {
          ojson check{{"label", c.label}, {"passed", c.passed}};
          if (!c.detail.empty()) check["detail"] = c.detail;
          rep["checks"].push_back(std::move(check));
        }
        doc["reports"].push_back(std::move(rep));
      }
      doc["passed"] = passed;
      doc["total"] = total;
      out << doc.dump() << '\n';
      break;
    }
    case Format::csv:
      out << "report,check,status,detail\n";
      for (const auto& r : reports) {
        for (const auto& c : r.checks()) {
          out << quoted(r.name()) << ',' << quoted(c.label) << ',' << (c.passed ? "pass" : "fail") << ','
              << quoted(c.passed ? "" : c.detail) << '\n';
        }
      }
      break;
    case Format::text:
      for (const auto& r : reports) {
        for (const auto& c : r.checks()) {
          out << (c.passed ? "PASS " : "FAIL ") << c.label;
          if (!c.passed && !c.detail.empty()) out << ": " << c.detail;
          out << '\n';
        }
        out << "-- " << r.name() << ": " << r.passed_count() << "/" << r.checks().size() << " passed\n";
      }
      out << "total: " << passed << "/" << total << " checks passed\n";
      break;
  }
  return out.str();
}

}  // namespace symcover
