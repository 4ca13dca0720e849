#include "spinc/report.hpp"

#include <json.hpp>
#include <ostream>

namespace spinc {

using Json = nlohmann::ordered_json;

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

Json matrix_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(z.to_string());
  return out;
}

std::string join(const Vector& v, char sep) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += sep;
    s += v[k].to_string();
  }
  return s;
}

Json pair_json(int a, int b) { return Json::array({a, b}); }

}  // namespace

void write_rep(std::ostream& out, const CliffordRep& rep, OutputFormat fmt) {
  const Signature& sig = rep.signature();
  const auto& gens = rep.generators();
  switch (fmt) {
    case OutputFormat::Json: {
      Json j;
      j["signature"] = pair_json(sig.p, sig.q);
      j["spinor_dim"] = rep.spinor_dim();
      Json list = Json::array();
      for (std::size_t k = 0; k < gens.size(); ++k)
        list.push_back(Json{{"index", k + 1}, {"matrix", matrix_json(gens[k])}});
      j["generators"] = std::move(list);
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      out << "generator,row,col,value\n";
      for (std::size_t k = 0; k < gens.size(); ++k)
        for (std::size_t r = 0; r < gens[k].rows(); ++r)
          for (std::size_t c = 0; c < gens[k].cols(); ++c)
            out << k + 1 << ',' << r + 1 << ',' << c + 1 << ',' << csv_field(gens[k](r, c).to_string()) << "\n";
      break;
    case OutputFormat::Pretty:
      out << "Clifford representation of signature " << sig.to_string() << ", spinor dimension " << rep.spinor_dim()
          << "\n";
      for (std::size_t k = 0; k < gens.size(); ++k) {
        out << "\nPhi(e_" << k + 1 << "):\n";
        for (std::size_t r = 0; r < gens[k].rows(); ++r) out << "  [" << join(gens[k].row(r), ' ') << "]\n";
      }
      break;
  }
}

void write_invariants(std::ostream& out, const InvariantSpaceResult& res, OutputFormat fmt) {
  const std::string family = res.spec ? std::string(family_name(res.spec->family)) : "";
  const int pp = res.spec ? res.spec->p_prime : 0;
  const int qq = res.spec ? res.spec->q_prime : 0;
  switch (fmt) {
    case OutputFormat::Json: {
      Json j;
      j["family"] = family;
      j["params"] = pair_json(pp, qq);
      j["ambient"] = pair_json(res.ambient.p, res.ambient.q);
      j["N"] = res.n_invariants;
      Json basis = Json::array();
      for (const auto& v : res.basis) basis.push_back(vector_json(v.coords));
      j["basis"] = std::move(basis);
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      out << "family,p_prime,q_prime,ambient_p,ambient_q,N,vector,coords\n";
      for (std::size_t k = 0; k < res.basis.size(); ++k)
        out << csv_field(family) << ',' << pp << ',' << qq << ',' << res.ambient.p << ',' << res.ambient.q << ','
            << res.n_invariants << ',' << k + 1 << ',' << csv_field(join(res.basis[k].coords, ';')) << "\n";
      if (res.basis.empty())
        out << csv_field(family) << ',' << pp << ',' << qq << ',' << res.ambient.p << ',' << res.ambient.q << ",0,,\n";
      break;
    case OutputFormat::Pretty:
      out << (res.spec ? res.spec->label() : std::string("generators")) << " in so" << res.ambient.to_string()
          << ": N = " << res.n_invariants << "\n";
      for (std::size_t k = 0; k < res.basis.size(); ++k)
        out << "  v" << k + 1 << " = (" << join(res.basis[k].coords, ' ') << ")\n";
      break;
  }
}

void write_table1(std::ostream& out, int bound, const std::vector<Table1Row>& rows, OutputFormat fmt) {
  bool all = true;
  for (const auto& r : rows) all = all && r.match;
  switch (fmt) {
    case OutputFormat::Json: {
      Json j;
      j["bound"] = bound;
      Json list = Json::array();
      for (const auto& r : rows) {
        Json row;
        row["family"] = std::string(family_name(r.spec.family));
        row["params"] = pair_json(r.spec.p_prime, r.spec.q_prime);
        row["printed_ambient"] = r.printed_ambient;
        row["computed_ambient"] = pair_json(r.computed_ambient.p, r.computed_ambient.q);
        row["algebra_dimension"] = r.algebra_dimension;
        row["expected_N"] = r.expected_n;
        row["computed_N"] = r.computed_n;
        row["match"] = r.match;
        list.push_back(std::move(row));
      }
      j["rows"] = std::move(list);
      j["all_match"] = all;
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      out << "family,p_prime,q_prime,printed_ambient,computed_ambient,algebra_dimension,expected_N,computed_N,match\n";
      for (const auto& r : rows)
        out << csv_field(family_name(r.spec.family)) << ',' << r.spec.p_prime << ',' << r.spec.q_prime << ','
            << csv_field(r.printed_ambient) << ',' << csv_field("SO" + r.computed_ambient.to_string()) << ','
            << r.algebra_dimension << ',' << r.expected_n << ',' << r.computed_n << ','
            << (r.match ? "true" : "false") << "\n";
      break;
    case OutputFormat::Pretty: {
      char line[160];
      std::snprintf(line, sizeof line, "%-16s %-12s %-12s %5s %6s %6s  %s\n", "holonomy", "printed", "computed", "dim",
                    "N exp", "N got", "match");
      out << line;
      for (const auto& r : rows) {
        std::snprintf(line, sizeof line, "%-16s %-12s %-12s %5zu %6zu %6zu  %s\n", r.spec.label().c_str(),
                      r.printed_ambient.c_str(), ("SO" + r.computed_ambient.to_string()).c_str(), r.algebra_dimension,
                      r.expected_n, r.computed_n, r.match ? "yes" : "NO");
        out << line;
      }
      out << (all ? "all rows match\n" : "MISMATCH in at least one row\n");
      break;
    }
  }
}

void write_selfcheck(std::ostream& out, const std::vector<SuiteResult>& suites, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Json: {
      Json list = Json::array();
      for (const auto& s : suites)
        list.push_back(Json{{"suite", s.name},
                            {"checks", s.checks},
                            {"failures", s.failures},
                            {"passed", s.passed()},
                            {"first_failure", s.first_failure}});
      out << list.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      out << "suite,checks,failures,passed,first_failure\n";
      for (const auto& s : suites)
        out << csv_field(s.name) << ',' << s.checks << ',' << s.failures << ',' << (s.passed() ? "true" : "false")
            << ',' << csv_field(s.first_failure) << "\n";
      break;
    case OutputFormat::Pretty:
      for (const auto& s : suites) {
        out << (s.passed() ? "PASS " : "FAIL ") << s.name << " (" << s.checks << " checks";
        if (!s.passed()) out << ", " << s.failures << " failed; first: " << s.first_failure;
        out << ")\n";
      }
      break;
  }
}

}  // namespace spinc
