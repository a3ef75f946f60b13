#include "serialize.hpp"

#include <string>

namespace lcmq::cli {

namespace {

std::string policy_name(MPolicy p) {
  switch (p) {
    case MPolicy::all: return "all";
    case MPolicy::half_ceil: return "half_ceil";
    case MPolicy::fixed: return "fixed";
    case MPolicy::frontier: return "frontier";
  }
  return "?";
}

// The zero polynomial is listed as its constant term.
Json int_poly_json(const IntPoly& p) {
  Json arr = Json::array();
  for (const auto& v : p.coeffs()) arr.push_back(int_json(v));
  if (arr.empty()) arr.push_back(0);
  return arr;
}

void write_csv_line(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
  out << '\n';
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

Json int_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json log_json(const Real& x) { return Json(std::stod(format_real(x))); }

Json to_json(const DivisorReport& r) {
  Json j;
  j["L"] = int_json(r.L);
  j["numerator"] = int_json(r.numerator);
  j["denominator"] = int_json(r.denominator);
  j["D"] = r.D.get_str();
  j["D_num"] = int_json(r.D.get_num());
  j["D_den"] = int_json(r.D.get_den());
  j["quotient"] = int_json(r.quotient);
  j["hc"] = int_json(r.hc_value);
  j["hc_bound"] = int_json(r.hc_bound);
  j["star_x"] = int_json(r.star_x);
  j["star_y"] = int_json(r.star_y);
  return j;
}

Json to_json(const OonChecks& o) {
  Json j;
  j["binom_ok"] = o.binom_ok;
  j["two_n_ok"] = o.two_n_ok ? Json(*o.two_n_ok) : Json(nullptr);
  return j;
}

Json to_json(const BoundReport& b) {
  Json j;
  j["logL"] = log_json(b.logL);
  Json bounds = Json::object();
  for (Bound name : kAllBounds) {
    const BoundValue& v = b[name];
    Json e;
    e["applicable"] = v.applicable;
    e["log_value"] = v.applicable ? log_json(v.log_value) : Json(nullptr);
    e["holds"] = v.applicable ? Json(v.holds) : Json(nullptr);
    bounds[std::string(bound_name(name))] = std::move(e);
  }
  j["bounds"] = std::move(bounds);
  return j;
}

Json to_json(const BezoutCertificate& cert) {
  Json j;
  j["c"] = int_json(cert.c);
  j["k"] = cert.k;
  j["d"] = int_json(cert.d);
  Json alpha = Json::array();
  for (const auto& v : cert.alpha.coeffs()) {
    alpha.push_back(Json::array({int_json(v.re().get_num()), int_json(v.re().get_den()),
                                 int_json(v.im().get_num()), int_json(v.im().get_den())}));
  }
  j["alpha"] = std::move(alpha);
  j["r"] = int_poly_json(cert.r);
  j["s"] = int_poly_json(cert.s);
  j["A"] = int_poly_json(cert.A);
  j["B"] = int_poly_json(cert.B);
  return j;
}

Json to_json(const SweepRow& row) {
  Json j;
  j["c"] = row.c;
  j["m"] = row.m;
  j["n"] = row.n;
  if (row.divisor) {
    const DivisorReport& d = *row.divisor;
    j["L"] = int_json(d.L);
    j["D_num"] = int_json(d.D.get_num());
    j["D_den"] = int_json(d.D.get_den());
    j["quotient"] = int_json(d.quotient);
    j["hc"] = int_json(d.hc_value);
    j["hc_bound"] = int_json(d.hc_bound);
    j["star_x"] = int_json(d.star_x);
    j["star_y"] = int_json(d.star_y);
  }
  if (row.bounds) {
    j["logL"] = log_json(row.bounds->logL);
    Json bounds = Json::object();
    for (Bound name : kAllBounds) {
      const BoundValue& v = (*row.bounds)[name];
      bounds[std::string(bound_name(name))] = v.applicable ? log_json(v.log_value) : Json(nullptr);
    }
    j["bounds"] = std::move(bounds);
  }
  j["ok"] = row.ok();
  j["violation"] = row.violation;
  return j;
}

std::vector<std::string> sweep_csv_header() {
  std::vector<std::string> h = {"c",  "m",        "n",      "L",      "D_num",  "D_den",
                                "quotient", "hc", "hc_bound", "star_x", "star_y", "logL"};
  for (Bound b : kAllBounds) h.emplace_back(bound_name(b));
  h.emplace_back("status");
  return h;
}

void write_sweep_csv(std::span<const SweepRow> rows, std::ostream& out) {
  write_csv_line(out, sweep_csv_header());
  for (const SweepRow& row : rows) {
    std::vector<std::string> cells = {std::to_string(row.c), std::to_string(row.m), std::to_string(row.n)};
    if (row.divisor) {
      const DivisorReport& d = *row.divisor;
      for (const Integer* z : {&d.L, &d.D.get_num(), &d.D.get_den(), &d.quotient, &d.hc_value, &d.hc_bound,
                               &d.star_x, &d.star_y})
        cells.push_back(z->get_str());
    } else {
      cells.insert(cells.end(), 8, "NA");
    }
    if (row.bounds) {
      cells.push_back(format_real(row.bounds->logL));
      for (Bound b : kAllBounds) {
        const BoundValue& v = (*row.bounds)[b];
        cells.push_back(v.applicable ? format_real(v.log_value) : "NA");
      }
    } else {
      cells.insert(cells.end(), 1 + kBoundCount, "NA");
    }
    cells.push_back(row.ok() ? "ok" : csv_escape("VIOLATION: " + row.violation));
    write_csv_line(out, cells);
  }
}

void write_sweep_json(std::span<const SweepRow> rows, const SweepConfig& config, std::ostream& out) {
  Json doc;
  Json cfg;
  cfg["c_min"] = config.c_min;
  cfg["c_max"] = config.c_max;
  cfg["n_min"] = config.n_min;
  cfg["n_max"] = config.n_max;
  cfg["m_policy"] = policy_name(config.m_policy);
  if (config.m_policy == MPolicy::fixed) cfg["m"] = config.fixed_m;
  doc["config"] = std::move(cfg);
  Json arr = Json::array();
  bool ok = true;
  for (const SweepRow& row : rows) {
    ok = ok && row.ok();
    arr.push_back(to_json(row));
  }
  doc["rows"] = std::move(arr);
  doc["ok"] = ok;
  out << doc.dump(2) << '\n';
}

std::vector<std::string> table_csv_header() {
  std::vector<std::string> h = {"c", "n", "m", "logL"};
  for (Bound b : kAllBounds) h.emplace_back(bound_name(b));
  return h;
}

void write_table_csv(std::span<const SweepRow> rows, std::ostream& out) {
  write_csv_line(out, table_csv_header());
  for (const SweepRow& row : rows) {
    std::vector<std::string> cells = {std::to_string(row.c), std::to_string(row.n), std::to_string(row.m)};
    if (!row.bounds) {
      cells.insert(cells.end(), 1 + kBoundCount, "NA");
      write_csv_line(out, cells);
      continue;
    }
    const BoundReport& b = *row.bounds;
    cells.push_back(format_real(b.logL));
    for (Bound name : kAllBounds) {
      const BoundValue& v = b[name];
      cells.push_back(v.applicable ? format_real(v.log_value / b.logL) : "NA");
    }
    write_csv_line(out, cells);
  }
}

}  // namespace lcmq::cli
