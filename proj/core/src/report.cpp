#include "kp2/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace kp2 {

std::string format_double_17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') out += '"';
    }
    out += '"';
    return out;
}

std::string cell_to_string(const CellValue& v) {
    if (std::holds_alternative<double>(v)) return format_double_17(std::get<double>(v));
    if (std::holds_alternative<std::int64_t>(v)) return std::to_string(std::get<std::int64_t>(v));
    return csv_escape(std::get<std::string>(v));
}

}  // namespace

void emit_report(const std::vector<ReportRow>& rows, const std::vector<std::string>& schema,
                 const std::string& destination_stem) {
    for (const auto& row : rows)
        if (row.size() != schema.size())
            throw std::invalid_argument("emit_report: row width does not match schema");

    {
        std::ofstream csv(destination_stem + ".csv", std::ios::trunc);
        if (!csv) throw std::runtime_error("emit_report: cannot write " + destination_stem + ".csv");
        for (std::size_t c = 0; c < schema.size(); ++c)
            csv << (c ? "," : "") << csv_escape(schema[c]);
        csv << "\n";
        for (const auto& row : rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                csv << (c ? "," : "") << cell_to_string(row[c]);
            csv << "\n";
        }
    }
    {
        std::ofstream jl(destination_stem + ".jsonl", std::ios::trunc);
        for (const auto& row : rows) {
            nlohmann::ordered_json obj;
            for (std::size_t c = 0; c < row.size(); ++c) {
                const auto& v = row[c];
                if (std::holds_alternative<double>(v))
                    obj[schema[c]] = std::get<double>(v);
                else if (std::holds_alternative<std::int64_t>(v))
                    obj[schema[c]] = std::get<std::int64_t>(v);
                else
                    obj[schema[c]] = std::get<std::string>(v);
            }
            jl << obj.dump() << "\n";
        }
    }
    {
        std::ofstream py(destination_stem + "_plot.py", std::ios::trunc);
        py << "#!/usr/bin/env python3\n"
           << "# Plots every numeric column of the CSV against the first column.\n"
           << "import csv, sys\n"
           << "import matplotlib\n"
           << "matplotlib.use('Agg')\n"
           << "import matplotlib.pyplot as plt\n"
           << "path = '" << destination_stem << ".csv'\n"
           << "rows = list(csv.reader(open(path)))\n"
           << "hdr, data = rows[0], rows[1:]\n"
           << "def col(i):\n"
           << "    try: return [float(r[i]) for r in data]\n"
           << "    except ValueError: return None\n"
           << "x = col(0) or list(range(len(data)))\n"
           << "for i in range(1, len(hdr)):\n"
           << "    y = col(i)\n"
           << "    if y is not None: plt.plot(x, y, marker='.', label=hdr[i])\n"
           << "plt.xlabel(hdr[0]); plt.legend(); plt.tight_layout()\n"
           << "plt.savefig('" << destination_stem << ".png', dpi=130)\n"
           << "print('wrote " << destination_stem << ".png')\n";
    }
}

std::vector<std::vector<std::string>> parse_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("parse_csv: cannot open " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> row;
        std::string cell;
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            const char c = line[i];
            if (quoted) {
                if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                    cell += '"';
                    ++i;
                } else if (c == '"') {
                    quoted = false;
                } else {
                    cell += c;
                }
            } else if (c == '"') {
                quoted = true;
            } else if (c == ',') {
                row.push_back(std::move(cell));
                cell.clear();
            } else {
                cell += c;
            }
        }
        row.push_back(std::move(cell));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace kp2
