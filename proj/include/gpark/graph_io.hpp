#pragma once

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gpark/graph_enumeration.hpp"
#include "gpark/monomial_ideal.hpp"
#include "gpark/multigraph.hpp"
#include "gpark/verification.hpp"

namespace gpark {

namespace detail {

inline std::size_t line_of_byte(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

}  // namespace detail

/// Parses the graph file format: a UTF-8 JSON document
///   { "n": <int>, "edges": [[u, v, multiplicity], ...] }
/// with 0-indexed vertices, root 0, and duplicate pairs accumulating.
inline Multigraph parse_graph_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("graph file: JSON parse error at line " +
                                std::to_string(detail::line_of_byte(text, e.byte)) + ": " +
                                e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("graph file: top level must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw std::invalid_argument("graph file: missing integer field \"n\"");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw std::invalid_argument("graph file: missing array field \"edges\"");
  const long long n = doc["n"].get<long long>();
  if (n < 1) throw std::invalid_argument("graph file: \"n\" must be >= 1");
  std::vector<std::array<long long, 3>> triples;
  for (const auto& entry : doc["edges"]) {
    if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer() || !entry[2].is_number_integer())
      throw std::invalid_argument(
          "graph file: each edge must be a [u, v, multiplicity] triple of integers, got " +
          entry.dump());
    triples.push_back({entry[0].get<long long>(), entry[1].get<long long>(),
                       entry[2].get<long long>()});
  }
  return Multigraph::from_edges(static_cast<int>(n), triples);
}

/// Canonical serialization: edges sorted with u < v, multiplicities merged.
inline std::string graph_to_json(const Multigraph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.inner_vertex_count();
  doc["edges"] = nlohmann::json::array();
  for (const auto& [u, v, m] : g.edge_triples()) doc["edges"].push_back({u, v, m});
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Monomial text syntax: `x1^2*x3`, with `1` for the empty product.
// ---------------------------------------------------------------------------

inline std::string monomial_to_string(const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < m.nvars(); ++i) {
    const long long e = m.exponent(i);
    if (e == 0) continue;
    if (!first) os << "*";
    os << "x" << (i + 1);
    if (e > 1) os << "^" << e;
    first = false;
  }
  if (first) return "1";
  return os.str();
}

inline Monomial parse_monomial(const std::string& text, int nvars) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("monomial: empty input");
  std::vector<long long> exps(nvars, 0);
  if (s == "1") return Monomial(std::move(exps));
  std::size_t pos = 0;
  auto read_number = [&]() {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw std::invalid_argument("monomial: expected a number at position " +
                                  std::to_string(pos) + " in '" + text + "'");
    long long value = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      value = value * 10 + (s[pos] - '0');
      if (value > 1000000000000LL) throw std::invalid_argument("monomial: number too large");
      ++pos;
    }
    return value;
  };
  while (true) {
    if (pos >= s.size() || s[pos] != 'x')
      throw std::invalid_argument("monomial: expected 'x' at position " + std::to_string(pos) +
                                  " in '" + text + "'");
    ++pos;
    const long long var = read_number();
    if (var < 1 || var > nvars)
      throw std::invalid_argument("monomial: variable x" + std::to_string(var) +
                                  " out of range 1.." + std::to_string(nvars));
    long long exp = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      exp = read_number();
    }
    exps[var - 1] += exp;
    if (pos == s.size()) break;
    if (s[pos] != '*')
      throw std::invalid_argument("monomial: expected '*' at position " + std::to_string(pos) +
                                  " in '" + text + "'");
    ++pos;
  }
  return Monomial(std::move(exps));
}

/// One generator per line; blank lines and `#` comments are skipped.
inline MonomialIdeal parse_ideal(const std::string& text, int nvars) {
  std::vector<Monomial> gens;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    try {
      gens.push_back(parse_monomial(line.substr(begin, end - begin + 1), nvars));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("ideal: line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return MonomialIdeal::minimalize(nvars, std::move(gens));
}

inline std::string ideal_to_string(const MonomialIdeal& ideal) {
  std::ostringstream os;
  for (const Monomial& g : ideal.generators()) os << monomial_to_string(g) << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Report writers
// ---------------------------------------------------------------------------

enum class ReportFormat { csv, text };

inline ReportFormat parse_report_format(const std::string& s) {
  if (s == "csv") return ReportFormat::csv;
  if (s == "text") return ReportFormat::text;
  throw std::invalid_argument("unknown report format '" + s + "' (expected csv or text)");
}

/// Census rows plus the weighted sum and the determinant comparison.
inline void write_tu_report(std::ostream& os, const TUReport& report, const BigInt& det_q,
                            ReportFormat format) {
  const bool match = (report.weighted_sum == det_q);
  if (format == ReportFormat::csv) {
    os << "c,count\n";
    for (const auto& [c, count] : report.census) os << c << "," << count << "\n";
    os << "\n";
    os << "# weighted_sum: " << report.weighted_sum.get_str() << "\n";
    os << "# det_q: " << det_q.get_str() << "\n";
    os << "# match: " << (match ? "yes" : "no") << "\n";
  } else {
    os << "census by unicyclic component count:\n";
    for (const auto& [c, count] : report.census)
      os << "  c=" << c << ": " << count << " subgraph(s)\n";
    os << "weighted sum: " << report.weighted_sum.get_str() << "\n";
    os << "det Q: " << det_q.get_str() << "\n";
    os << (match ? "MATCH" : "MISMATCH") << "\n";
  }
}

/// Suite rows as CSV (or an aligned text table) followed by a summary block.
inline void write_suite_report(std::ostream& os, const SuiteResult& result, ReportFormat format) {
  if (format == ReportFormat::csv) {
    for (std::size_t i = 0; i < result.csv_header.size(); ++i)
      os << (i ? "," : "") << result.csv_header[i];
    os << "\n";
    for (const auto& row : result.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
      os << "\n";
    }
    os << "\n";
    os << "# suite: " << result.name << "\n";
    os << "# cases: " << result.cases << "\n";
    os << "# failures: " << result.failures << "\n";
    os << "# verdict: " << (result.passed ? "pass" : "FAIL") << "\n";
    for (const auto& note : result.notes) os << "# " << note << "\n";
  } else {
    os << "suite: " << result.name << "\n";
    os << "cases: " << result.cases << ", failures: " << result.failures << "\n";
    os << "verdict: " << (result.passed ? "pass" : "FAIL") << "\n";
    for (const auto& note : result.notes) os << "note: " << note << "\n";
  }
}

}  // namespace gpark
