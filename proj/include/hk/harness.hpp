#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hk/core.hpp"

namespace hk {

enum class CampaignName { Maincomp, Pansu, Bessel, Hps, Tables, Series, Lifting, All };

const char* to_string(CampaignName c);
CampaignName campaign_from_string(std::string_view s);

struct Campaign {
    CampaignName name;
    std::vector<VerificationRecord> records;
    int exit_status;
};

// 0.1 <= tolerance_multiplier <= 100. Claims run in parallel; records are
// returned in natural claim_id order.
Campaign run_campaign(CampaignName name, double tolerance_multiplier = 1.0);

// Claim ids of a campaign without evaluating anything.
std::vector<std::string> campaign_claim_ids(CampaignName name);

// Orders digit runs numerically: "m9" < "m10".
bool natural_less(std::string_view a, std::string_view b);

// A printed decimal such as "2.7378e-2", carrying half a unit in its last digit.
Value printed_value(std::string_view text);

enum class Format { Text, Csv, Json };
Format format_from_string(std::string_view s);

using Cell = std::variant<Value, std::string>;

struct ReportTable {
    std::string name;
    std::vector<std::string> headers;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> provenance;
};

enum class TableName { Cn, GammaTilde, Quotients, Constants, Routes };
TableName table_from_string(std::string_view s);

// max_n limits the n range of the cn, gamma_tilde and constants tables (1..13).
ReportTable build_table(TableName name, int max_n = 13);

void emit_table(const ReportTable& t, Format f, std::ostream& out);
void emit_records(const std::vector<VerificationRecord>& records, Format f, std::ostream& out);

// "%.9e"
std::string format_number(double x);

// RFC 4180 field quoting.
std::string csv_field(std::string_view s);

}  // namespace hk
