#pragma once

#include "config.hpp"

#include "htlab/cm/cm.hpp"

#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace htlab::cli {

/// One output row. Values are kept as text so that files round-trip
/// exactly; numbers are written with 15 significant digits and radii with 3.
struct ReportRow {
    std::string experiment;
    std::string input;
    std::vector<std::pair<std::string, std::string>> fields;

    const std::string& at(const std::string& name) const;
    friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

/// Header from the first row's field names. All rows must share them.
std::string to_csv(const std::vector<ReportRow>& rows);
std::vector<ReportRow> from_csv(const std::string& text, const std::string& experiment);

/// {"experiment": ..., "meta": {...}, "rows": [{"input": ..., "values": {...}}]}
std::string to_json(const std::string& experiment, const Params& meta, const std::vector<ReportRow>& rows);
std::vector<ReportRow> from_json(const std::string& text);

std::string render(Format f, const std::string& experiment, const Params& meta, const std::vector<ReportRow>& rows);

std::string fmt(const Real& x);
std::string fmt_radius(const Real& r);

/// D, class_number, then value/radius pairs for each height, provenance
/// columns (precision, version) and the per-D error text.
ReportRow cm_row(const CMRecord& r);

/// Plot data: "X Y Y_err" lines after a '#' header.
std::string plot_data(const std::string& x_name, const std::string& y_name,
                      const std::vector<std::tuple<long, std::string, std::string>>& points);

}  // namespace htlab::cli
