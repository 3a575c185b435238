#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

namespace airyherm {

// Fixed 17-significant-digit formatting: round-trip exact for doubles and
// byte-stable across runs, which the report/CSV determinism contract
// depends on.
inline std::string format_sig17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string format_sig10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

// |a - b| / max(|a|, |b|); zero when both magnitudes are negligible.
inline double relative_error(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  if (scale < 1e-300) return 0.0;
  return std::abs(a - b) / scale;
}

struct CaseResult {
  std::string name;
  std::map<std::string, std::string> params;
  double metric = 0;
  double tol = 0;
  bool pass = false;
};

inline CaseResult make_case(std::string name,
                            std::map<std::string, std::string> params,
                            double metric, double tol) {
  CaseResult c;
  c.name = std::move(name);
  c.params = std::move(params);
  c.metric = metric;
  c.tol = tol;
  c.pass = metric <= tol;
  return c;
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out;
}

// Named case list with metric/tolerance verdicts.  Serialization is
// deterministic: cases sorted by name, object keys in sorted order, floats
// at 17 significant digits.
struct VerificationReport {
  std::string suite;
  std::vector<CaseResult> cases;

  void add(CaseResult c) { cases.push_back(std::move(c)); }

  void sort_cases() {
    std::sort(cases.begin(), cases.end(),
              [](const CaseResult& a, const CaseResult& b) {
                return a.name < b.name;
              });
  }

  int total() const { return static_cast<int>(cases.size()); }
  int passed() const {
    int n = 0;
    for (const auto& c : cases) n += c.pass ? 1 : 0;
    return n;
  }
  int failed() const { return total() - passed(); }
  bool all_pass() const { return failed() == 0; }

  const CaseResult* first_failure() const {
    for (const auto& c : cases)
      if (!c.pass) return &c;
    return nullptr;
  }

  std::string to_json() const {
    VerificationReport copy = *this;
    copy.sort_cases();
    std::string out = "{\"cases\":[";
    for (std::size_t i = 0; i < copy.cases.size(); ++i) {
      const CaseResult& c = copy.cases[i];
      if (i) out += ",";
      out += "{\"metric\":" + format_sig17(c.metric);
      out += ",\"name\":\"" + json_escape(c.name) + "\"";
      out += ",\"params\":{";
      bool first = true;
      for (const auto& [k, v] : c.params) {
        if (!first) out += ",";
        out += "\"" + json_escape(k) + "\":\"" + json_escape(v) + "\"";
        first = false;
      }
      out += "},\"pass\":";
      out += c.pass ? "true" : "false";
      out += ",\"tol\":" + format_sig17(c.tol) + "}";
    }
    out += "],\"suite\":\"" + json_escape(copy.suite) + "\"";
    out += ",\"summary\":{\"failed\":" + std::to_string(failed());
    out += ",\"passed\":" + std::to_string(passed());
    out += ",\"total\":" + std::to_string(total()) + "}}";
    return out;
  }
};

inline std::string reports_to_json(const std::vector<VerificationReport>& rs) {
  std::vector<VerificationReport> sorted = rs;
  std::sort(sorted.begin(), sorted.end(),
            [](const VerificationReport& a, const VerificationReport& b) {
              return a.suite < b.suite;
            });
  int total = 0, passed = 0;
  std::string out = "{\"suites\":[";
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i) out += ",";
    out += sorted[i].to_json();
    total += sorted[i].total();
    passed += sorted[i].passed();
  }
  out += "],\"summary\":{\"failed\":" + std::to_string(total - passed);
  out += ",\"passed\":" + std::to_string(passed);
  out += ",\"total\":" + std::to_string(total) + "}}";
  return out;
}

struct GridRow {
  double t;
  double x;
  double value;
};

// CSV grid output: header t,x,value, rows in row-major order, values at
// 17 significant digits.
inline std::string grid_to_csv(const std::vector<GridRow>& rows) {
  std::string out = "t,x,value\n";
  for (const auto& r : rows) {
    out += format_sig17(r.t);
    out += ",";
    out += format_sig17(r.x);
    out += ",";
    out += format_sig17(r.value);
    out += "\n";
  }
  return out;
}

}  // namespace airyherm
