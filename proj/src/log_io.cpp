#include "ehpo/log.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ehpo/text_num.hpp"
#include "json.hpp"

namespace ehpo {

namespace {

using ordered_json = nlohmann::ordered_json;

void append_json_string(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    out += '"';
}

void append_hp_point(std::string& out, const HpPoint& p) {
    out += '{';
    bool first = true;
    for (const auto& [dim, v] : p.coordinates()) {
        if (!first) out += ',';
        first = false;
        append_json_string(out, dim);
        out += ':';
        out += format_real(v);
    }
    out += '}';
}

void append_config(std::string& out, const HyperHpConfig& config) {
    out += '{';
    if (config.is_grid()) {
        out += "\"kind\":\"grid\",\"points\":{";
        bool first = true;
        for (const auto& [dim, values] : config.grid().points) {
            if (!first) out += ',';
            first = false;
            append_json_string(out, dim);
            out += ":[";
            for (std::size_t i = 0; i < values.size(); ++i) {
                if (i) out += ',';
                out += format_real(values[i]);
            }
            out += ']';
        }
        out += '}';
    } else {
        const auto& rs = config.random_search();
        out += "\"kind\":\"random_search\",\"trials\":" + std::to_string(rs.trials) +
               ",\"distribution\":{";
        if (rs.distribution.kind == SamplingRule::Kind::Discrete) {
            out += "\"kind\":\"discrete\",\"support\":[";
            const auto& d = rs.distribution.discrete;
            for (std::size_t i = 0; i < d.support().size(); ++i) {
                if (i) out += ',';
                append_hp_point(out, d.support()[i]);
            }
            out += "],\"weights\":[";
            for (std::size_t i = 0; i < d.weights().size(); ++i) {
                if (i) out += ',';
                out += format_real(d.weights()[i]);
            }
            out += ']';
        } else {
            out += "\"kind\":\"per_dimension\",\"ranges\":[";
            for (std::size_t i = 0; i < rs.distribution.ranges.size(); ++i) {
                const auto& r = rs.distribution.ranges[i];
                if (i) out += ',';
                out += "{\"name\":";
                append_json_string(out, r.name);
                out += ",\"kind\":\"";
                out += (r.kind == DimensionRange::Kind::Uniform ? "uniform" : "log_uniform");
                out += "\",\"lo\":" + format_real(r.lo) + ",\"hi\":" + format_real(r.hi) + '}';
            }
            out += ']';
        }
        out += '}';
    }
    out += '}';
}

HpPoint parse_hp_point(const ordered_json& j) {
    std::vector<std::pair<std::string, double>> coords;
    for (auto it = j.begin(); it != j.end(); ++it)
        coords.emplace_back(it.key(), it.value().get<double>());
    return HpPoint(std::move(coords));
}

HyperHpConfig parse_config(const ordered_json& j) {
    HyperHpConfig config;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "grid") {
        GridConfig g;
        for (auto it = j.at("points").begin(); it != j.at("points").end(); ++it)
            g.points.emplace_back(it.key(), it.value().get<std::vector<double>>());
        config.value = g;
    } else if (kind == "random_search") {
        RandomSearchConfig rs;
        rs.trials = j.at("trials").get<std::uint64_t>();
        const auto& dist = j.at("distribution");
        const std::string dkind = dist.at("kind").get<std::string>();
        if (dkind == "discrete") {
            std::vector<HpPoint> support;
            for (const auto& p : dist.at("support")) support.push_back(parse_hp_point(p));
            rs.distribution.kind = SamplingRule::Kind::Discrete;
            rs.distribution.discrete =
                DiscreteDistribution(std::move(support), dist.at("weights").get<std::vector<double>>());
        } else if (dkind == "per_dimension") {
            rs.distribution.kind = SamplingRule::Kind::PerDimension;
            for (const auto& r : dist.at("ranges")) {
                DimensionRange range;
                range.name = r.at("name").get<std::string>();
                const std::string rkind = r.at("kind").get<std::string>();
                if (rkind == "uniform")
                    range.kind = DimensionRange::Kind::Uniform;
                else if (rkind == "log_uniform")
                    range.kind = DimensionRange::Kind::LogUniform;
                else
                    throw Error("unknown range kind '" + rkind + "'");
                range.lo = r.at("lo").get<double>();
                range.hi = r.at("hi").get<double>();
                rs.distribution.ranges.push_back(range);
            }
        } else {
            throw Error("unknown distribution kind '" + dkind + "'");
        }
        config.value = rs;
    } else {
        throw Error("unknown hyper-HP config kind '" + kind + "'");
    }
    return config;
}

} // namespace

void write_log(const Log& log, std::ostream& out) {
    std::string line;
    line += "{\"schema_version\":";
    append_json_string(line, log.header.schema_version);
    line += ",\"procedure_id\":";
    append_json_string(line, log.header.procedure_id);
    line += ",\"hyper_hp_config\":";
    append_config(line, log.header.hyper_hp_config);
    line += ",\"master_seed\":" + std::to_string(log.header.master_seed);
    line += ",\"best_hp\":";
    append_hp_point(line, log.header.best_hp);
    line += ",\"total_time\":" + std::to_string(log.header.total_time);
    line += "}\n";
    out << line;

    for (const auto& t : log.trials) {
        line.clear();
        line += "{\"algorithm_id\":";
        append_json_string(line, t.algorithm_id);
        line += ",\"hp\":";
        append_hp_point(line, t.hp);
        line += ",\"seed_index\":" + std::to_string(t.seed_index);
        line += ",\"metric\":" + format_real(t.metric);
        line += ",\"cost\":" + std::to_string(t.cost);
        line += "}\n";
        out << line;
    }
}

void write_log_file(const Log& log, const std::string& path) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw IoError("cannot open '" + tmp + "' for writing");
        write_log(log, out);
    }
    std::filesystem::rename(tmp, path);
}

Log read_log(std::istream& in) {
    Log log;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        ordered_json j;
        try {
            j = ordered_json::parse(line);
        } catch (const std::exception& e) {
            throw IoError(std::string("malformed log record: ") + e.what(), line_no);
        }
        try {
            if (!have_header) {
                const std::string version = j.at("schema_version").get<std::string>();
                if (version != kLogSchemaVersion)
                    throw Error("unsupported schema version '" + version + "', expected '" +
                                std::string(kLogSchemaVersion) + "'");
                log.header.schema_version = version;
                log.header.procedure_id = j.at("procedure_id").get<std::string>();
                log.header.hyper_hp_config = parse_config(j.at("hyper_hp_config"));
                log.header.master_seed = j.at("master_seed").get<std::uint64_t>();
                log.header.best_hp = parse_hp_point(j.at("best_hp"));
                log.header.total_time = j.at("total_time").get<std::uint64_t>();
                have_header = true;
            } else {
                TrialRecord t;
                t.algorithm_id = j.at("algorithm_id").get<std::string>();
                t.hp = parse_hp_point(j.at("hp"));
                t.seed_index = j.at("seed_index").get<std::uint64_t>();
                t.metric = j.at("metric").get<double>();
                t.cost = j.at("cost").get<std::uint64_t>();
                log.trials.push_back(std::move(t));
            }
        } catch (const IoError&) {
            throw;
        } catch (const std::exception& e) {
            throw IoError(std::string("invalid log record: ") + e.what(), line_no);
        }
    }
    if (!have_header) throw IoError("log stream has no header record", 1);
    if (log.header.total_time != log.trials.size())
        throw IoError("header total_time does not match trial count", 1);
    return log;
}

Log read_log_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return read_log(in);
}

} // namespace ehpo
