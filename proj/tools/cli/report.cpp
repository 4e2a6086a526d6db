#include "report.hpp"

#include "htlab/version.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace htlab::cli {

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

// Splits one CSV record starting at `pos`; advances past the line end.
std::vector<std::string> csv_record(const std::string& text, std::size_t& pos) {
    std::vector<std::string> cells;
    std::string cur;
    bool quoted = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (quoted) {
            if (c == '"' && pos + 1 < text.size() && text[pos + 1] == '"') {
                cur += '"';
                ++pos;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            cells.push_back(std::move(cur));
            cur.clear();
        } else if (c == '\n') {
            ++pos;
            break;
        } else {
            cur += c;
        }
    }
    cells.push_back(std::move(cur));
    return cells;
}

}  // namespace

const std::string& ReportRow::at(const std::string& name) const {
    for (const auto& [k, v] : fields)
        if (k == name) return v;
    throw std::out_of_range("no field " + name);
}

std::string to_csv(const std::vector<ReportRow>& rows) {
    std::string out;
    if (rows.empty()) return out;
    for (std::size_t k = 0; k < rows[0].fields.size(); ++k) out += (k ? "," : "") + csv_escape(rows[0].fields[k].first);
    out += "\n";
    for (const auto& r : rows) {
        if (r.fields.size() != rows[0].fields.size()) throw std::invalid_argument("rows with different columns");
        for (std::size_t k = 0; k < r.fields.size(); ++k) out += (k ? "," : "") + csv_escape(r.fields[k].second);
        out += "\n";
    }
    return out;
}

std::vector<ReportRow> from_csv(const std::string& text, const std::string& experiment) {
    std::vector<ReportRow> rows;
    std::size_t pos = 0;
    if (text.empty()) return rows;
    auto header = csv_record(text, pos);
    while (pos < text.size()) {
        auto cells = csv_record(text, pos);
        if (cells.size() != header.size()) throw std::invalid_argument("CSV row has the wrong number of cells");
        ReportRow r;
        r.experiment = experiment;
        for (std::size_t k = 0; k < cells.size(); ++k) r.fields.emplace_back(header[k], cells[k]);
        r.input = r.fields.empty() ? "" : r.fields[0].first + "=" + r.fields[0].second;
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string to_json(const std::string& experiment, const Params& meta, const std::vector<ReportRow>& rows) {
    nlohmann::ordered_json j;
    j["experiment"] = experiment;
    j["meta"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : meta) j["meta"][k] = v;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["input"] = r.input;
        row["values"] = nlohmann::ordered_json::object();
        for (const auto& [k, v] : r.fields) row["values"][k] = v;
        j["rows"].push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

std::vector<ReportRow> from_json(const std::string& text) {
    auto j = nlohmann::ordered_json::parse(text);
    std::vector<ReportRow> rows;
    std::string experiment = j.at("experiment").get<std::string>();
    for (const auto& r : j.at("rows")) {
        ReportRow row;
        row.experiment = experiment;
        row.input = r.at("input").get<std::string>();
        for (const auto& [k, v] : r.at("values").items()) row.fields.emplace_back(k, v.get<std::string>());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string render(Format f, const std::string& experiment, const Params& meta, const std::vector<ReportRow>& rows) {
    return f == Format::csv ? to_csv(rows) : to_json(experiment, meta, rows);
}

std::string fmt(const Real& x) { return x.to_string(15); }
std::string fmt_radius(const Real& r) { return r.to_string(3); }

ReportRow cm_row(const CMRecord& r) {
    ReportRow row;
    row.experiment = "cm-scan";
    row.input = "D=" + std::to_string(r.D);
    auto add = [&](const std::string& k, std::string v) { row.fields.emplace_back(k, std::move(v)); };
    auto ball = [&](const std::string& k, const BigFloat& b) {
        add(k, r.error.empty() ? fmt(b.mid()) : "");
        add(k + "_err", r.error.empty() ? fmt_radius(b.radius()) : "");
    };
    add("D", std::to_string(r.D));
    add("class_number", std::to_string(r.class_number));
    ball("j_height", r.j_height);
    ball("faltings_height", r.faltings_height);
    ball("theta_height_est", r.theta_height_est);
    ball("residual", r.residual);
    ball("ratio", r.ratio);
    add("precision", std::to_string(r.digits));
    add("version", kVersion);
    add("errors", r.error);
    if (r.class_poly) add("class_poly", r.class_poly->to_string());
    return row;
}

std::string plot_data(const std::string& x_name, const std::string& y_name,
                      const std::vector<std::tuple<long, std::string, std::string>>& points) {
    std::ostringstream out;
    out << "# " << x_name << " " << y_name << " " << y_name << "_err\n";
    for (const auto& [x, y, e] : points) out << x << " " << y << " " << e << "\n";
    return out.str();
}

}  // namespace htlab::cli
