#pragma once

// Report encodings. Exact integers are JSON numbers when they fit in 64 bits
// and decimal strings otherwise; rationals are split into numerator and
// denominator; logs are decimals with 15 significant digits.

#include <nlohmann/json.hpp>

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "lcmq/bounds.hpp"
#include "lcmq/poly.hpp"
#include "lcmq/sweep.hpp"

namespace lcmq::cli {

using Json = nlohmann::ordered_json;

Json int_json(const Integer& z);
Json log_json(const Real& x);

Json to_json(const DivisorReport& r);
Json to_json(const OonChecks& o);
Json to_json(const BoundReport& b);
Json to_json(const BezoutCertificate& cert);
Json to_json(const SweepRow& row);

/// c,m,n,L,D_num,D_den,quotient,hc,hc_bound,star_x,star_y,logL, one column
/// per bound name (log value or NA), status.
std::vector<std::string> sweep_csv_header();
void write_sweep_csv(std::span<const SweepRow> rows, std::ostream& out);
void write_sweep_json(std::span<const SweepRow> rows, const SweepConfig& config, std::ostream& out);

/// c,n,m,logL, then log(bound)/log L per bound name (NA when not applicable).
std::vector<std::string> table_csv_header();
void write_table_csv(std::span<const SweepRow> rows, std::ostream& out);

}  // namespace lcmq::cli
