#include "kloo/serial.hpp"

#include <sstream>

namespace kloo {

std::string hex_string(std::uint64_t v) {
    std::ostringstream os;
    os << "0x" << std::hex << v;
    return os.str();
}

Json json_document(const std::string& kind) {
    Json doc;
    doc["schema"] = "1";
    doc["kind"] = kind;
    return doc;
}

Json json_of(const FieldSpec& spec) {
    Json j;
    j["r"] = spec.r;
    j["modulus_hex"] = hex_string(spec.modulus);
    return j;
}

Json json_of(const MomentTable& table) {
    Json j;
    j["q"] = table.q;
    j["c"] = table.c;
    j["h_max"] = table.h_max();
    Json rows = Json::array();
    for (int h = 0; h <= table.h_max(); ++h) {
        Json row;
        row["h"] = h;
        row["mk"] = table.mk[h].get_str();
        row["t0k"] = table.t0k[h].get_str();
        row["t1k"] = table.t1k[h].get_str();
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json json_of(const TraceDistribution& dist) {
    Json j;
    j["group"] = group_code_name(dist.which);
    Json counts = Json::object();
    for (std::size_t b = 0; b < dist.count.size(); ++b)
        counts[hex_string(b)] = dist.count[b];
    j["counts"] = std::move(counts);
    return j;
}

Json json_of(const std::map<std::int64_t, std::int64_t>& spectrum) {
    Json j = Json::object();
    for (const auto& [w, c] : spectrum) j[std::to_string(w)] = c;
    return j;
}

Json json_of(const WeightDistribution& wd) {
    Json j;
    j["n"] = wd.n;
    j["mode"] = wd.full ? "full" : "truncated";
    j["j_max"] = wd.j_max();
    Json counts = Json::array();
    for (const mpz_class& c : wd.counts) counts.push_back(c.get_str());
    j["counts"] = std::move(counts);
    return j;
}

Json json_of(const VerificationReport& report) {
    Json rows = Json::array();
    for (const CheckResult& row : report.rows) {
        Json r;
        r["r"] = row.r;
        r["check"] = row.check;
        r["pass"] = row.pass;
        r["detail"] = row.detail;
        rows.push_back(std::move(r));
    }
    Json j;
    j["rows"] = std::move(rows);
    j["all_pass"] = report.all_pass();
    return j;
}

namespace {

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

}  // namespace

std::string render_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i)
        os << (i ? "," : "") << csv_cell(header[i]);
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
        os << '\n';
    }
    return os.str();
}

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], row[i].size());

    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << "  ";
            os << row[i];
            if (i + 1 < row.size())
                os << std::string(width[i] - std::min(width[i], row[i].size()), ' ');
        }
        os << '\n';
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    return os.str();
}

}  // namespace kloo
