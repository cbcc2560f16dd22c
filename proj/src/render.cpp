#include "tableaux/render.hpp"

#include <json.hpp>

#include <cctype>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace tableaux {

namespace {

std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

/// Splits one CSV line, honoring double-quoted fields.
std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

constexpr const char* kTableHeader = "shape,imbalance,v,h,d,vs,hs,black,white";

std::string table_csv_row(const ImbalanceRecord& r) {
    std::ostringstream out;
    out << csv_quote(shape_arg(r.shape)) << ',' << r.imbalance << ',' << r.v << ','
        << r.h << ',' << r.d << ',' << r.vs << ',' << r.hs << ',' << r.black << ','
        << r.white;
    return out.str();
}

nlohmann::json record_json(const ImbalanceRecord& r) {
    return nlohmann::json{{"shape", r.shape.parts()}, {"imbalance", r.imbalance},
                          {"v", r.v},                 {"h", r.h},
                          {"d", r.d},                 {"vs", r.vs},
                          {"hs", r.hs},               {"black", r.black},
                          {"white", r.white}};
}

ImbalanceRecord record_from_json(const nlohmann::json& j) {
    ImbalanceRecord r;
    r.shape = Shape(j.at("shape").get<std::vector<int>>());
    r.imbalance = j.at("imbalance").get<long long>();
    r.v = j.at("v").get<int>();
    r.h = j.at("h").get<int>();
    r.d = j.at("d").get<int>();
    r.vs = j.at("vs").get<int>();
    r.hs = j.at("hs").get<int>();
    r.black = j.at("black").get<int>();
    r.white = j.at("white").get<int>();
    return r;
}

std::string table_plain(const std::vector<ImbalanceRecord>& records) {
    size_t width = 5;  // "shape"
    for (const ImbalanceRecord& r : records)
        width = std::max(width, r.shape.str().size());
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(width)) << "shape" << std::right
        << std::setw(11) << "imbalance" << std::setw(4) << "v" << std::setw(4) << "h"
        << std::setw(4) << "d" << std::setw(4) << "vs" << std::setw(4) << "hs"
        << std::setw(7) << "black" << std::setw(7) << "white" << '\n';
    for (const ImbalanceRecord& r : records) {
        out << std::left << std::setw(static_cast<int>(width)) << r.shape.str()
            << std::right << std::setw(11) << r.imbalance << std::setw(4) << r.v
            << std::setw(4) << r.h << std::setw(4) << r.d << std::setw(4) << r.vs
            << std::setw(4) << r.hs << std::setw(7) << r.black << std::setw(7)
            << r.white << '\n';
    }
    return out.str();
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "plain") return OutputFormat::plain;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw std::invalid_argument("unknown format: " + name);
}

std::string render_table(const std::vector<ImbalanceRecord>& records, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::plain:
            return table_plain(records);
        case OutputFormat::csv: {
            std::string out = std::string(kTableHeader) + "\n";
            for (const ImbalanceRecord& r : records) out += table_csv_row(r) + "\n";
            return out;
        }
        case OutputFormat::json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const ImbalanceRecord& r : records) arr.push_back(record_json(r));
            return arr.dump(2) + "\n";
        }
    }
    return {};
}

std::string render_record(const ImbalanceRecord& r, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::plain: {
            std::ostringstream out;
            out << "shape=" << r.shape.str() << " imbalance=" << r.imbalance
                << " v=" << r.v << " h=" << r.h << " d=" << r.d << " vs=" << r.vs
                << " hs=" << r.hs << " black=" << r.black << " white=" << r.white
                << '\n';
            return out.str();
        }
        case OutputFormat::csv:
            return std::string(kTableHeader) + "\n" + table_csv_row(r) + "\n";
        case OutputFormat::json:
            return record_json(r).dump(2) + "\n";
    }
    return {};
}

std::string render_reports(const std::vector<VerificationReport>& reports,
                           OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::plain: {
            std::ostringstream out;
            for (const VerificationReport& rep : reports) {
                out << (rep.pass ? "PASS" : "FAIL") << "  " << std::left << std::setw(10)
                    << rep.claim << std::setw(36) << rep.parameters << std::right
                    << "  computed: " << rep.computed << "  expected: " << rep.expected
                    << "  (" << std::fixed << std::setprecision(1) << rep.elapsed_ms
                    << " ms)\n";
            }
            return out.str();
        }
        case OutputFormat::csv: {
            std::string out = "claim,parameters,computed,expected,pass,elapsed_ms\n";
            for (const VerificationReport& rep : reports) {
                std::ostringstream line;
                line << csv_quote(rep.claim) << ',' << csv_quote(rep.parameters) << ','
                     << csv_quote(rep.computed) << ',' << csv_quote(rep.expected) << ','
                     << (rep.pass ? "true" : "false") << ',' << std::fixed
                     << std::setprecision(3) << rep.elapsed_ms;
                out += line.str() + "\n";
            }
            return out;
        }
        case OutputFormat::json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const VerificationReport& rep : reports)
                arr.push_back({{"claim", rep.claim},
                               {"parameters", rep.parameters},
                               {"computed", rep.computed},
                               {"expected", rep.expected},
                               {"pass", rep.pass},
                               {"elapsed_ms", rep.elapsed_ms}});
            return arr.dump(2) + "\n";
        }
    }
    return {};
}

std::vector<ImbalanceRecord> parse_table_csv(const std::string& text) {
    std::vector<ImbalanceRecord> records;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line != kTableHeader)
                throw std::invalid_argument("unexpected CSV header: " + line);
            continue;
        }
        const std::vector<std::string> f = csv_split(line);
        if (f.size() != 9) throw std::invalid_argument("bad CSV row: " + line);
        ImbalanceRecord r;
        r.shape = parse_shape_arg(f[0]);
        r.imbalance = std::stoll(f[1]);
        r.v = std::stoi(f[2]);
        r.h = std::stoi(f[3]);
        r.d = std::stoi(f[4]);
        r.vs = std::stoi(f[5]);
        r.hs = std::stoi(f[6]);
        r.black = std::stoi(f[7]);
        r.white = std::stoi(f[8]);
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<ImbalanceRecord> parse_table_json(const std::string& text) {
    std::vector<ImbalanceRecord> records;
    for (const nlohmann::json& j : nlohmann::json::parse(text))
        records.push_back(record_from_json(j));
    return records;
}

Shape parse_shape_arg(const std::string& text) {
    std::string trimmed;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
    if (trimmed.empty()) return Shape{};

    std::vector<int> parts;
    size_t pos = 0;
    while (true) {
        const size_t comma = trimmed.find(',', pos);
        const std::string token = trimmed.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad shape part: '" + token + "'");
        }
        if (used != token.size())
            throw std::invalid_argument("bad shape part: '" + token + "'");
        parts.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Shape(std::move(parts));
}

std::string shape_arg(const Shape& s) {
    std::string out;
    for (size_t i = 0; i < s.parts().size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(s.parts()[i]);
    }
    return out;
}

}  // namespace tableaux
