#include "archtest/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "archtest/version.hpp"

namespace archtest {

std::string format_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_rejection_csv(const RejectionTable& table, std::ostream& os) {
    os << "dgp,T";
    for (const auto& model : table.model_labels) {
        os << "," << model;
    }
    os << "\n";
    for (const auto& dgp : table.dgp_names) {
        for (int T : table.sample_sizes) {
            os << dgp << "," << T;
            for (const auto& model : table.model_labels) {
                os << "," << format_full(table.frequency.at(CellKey{dgp, model, T}));
            }
            os << "\n";
        }
    }
}

std::string render_rejection_text(const RejectionTable& table, const std::string& title) {
    std::ostringstream os;
    os << title << "\n";
    const int name_width = 10;
    os << std::string(name_width, ' ');
    for (const auto& model : table.model_labels) {
        char buf[24];
        std::snprintf(buf, sizeof(buf), "%10s", model.c_str());
        os << buf;
    }
    os << "\n";
    for (const auto& dgp : table.dgp_names) {
        os << "DGP" << dgp << "\n";
        for (int T : table.sample_sizes) {
            char label[24];
            std::snprintf(label, sizeof(label), "T=%-8d", T);
            os << label;
            for (const auto& model : table.model_labels) {
                char buf[24];
                std::snprintf(buf, sizeof(buf), "%10.3f",
                              table.frequency.at(CellKey{dgp, model, T}));
                os << buf;
            }
            os << "\n";
        }
    }
    return os.str();
}

void write_critical_values_csv(const RejectionTable& layout,
                               const CriticalValueTable& table, std::ostream& os) {
    os << "dgp,T";
    for (const auto& model : layout.model_labels) {
        os << "," << model;
    }
    os << "\n";
    for (const auto& dgp : layout.dgp_names) {
        for (int T : layout.sample_sizes) {
            os << dgp << "," << T;
            for (const auto& model : layout.model_labels) {
                os << "," << format_full(table.critical_value.at(CellKey{dgp, model, T}));
            }
            os << "\n";
        }
    }
}

void write_series_csv(const TimeSeries& series, std::ostream& os) {
    for (std::size_t t = 0; t < series.size(); ++t) {
        os << (t + 1) << "," << format_full(series[t]) << "\n";
    }
}

namespace {

bool parse_double(const std::string& field, double& out) {
    const char* begin = field.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    if (end == begin) return false;
    while (*end != '\0') {
        if (!std::isspace(static_cast<unsigned char>(*end))) return false;
        ++end;
    }
    return true;
}

std::string last_field(const std::string& line) {
    const auto pos = line.rfind(',');
    return pos == std::string::npos ? line : line.substr(pos + 1);
}

}  // namespace

TimeSeries read_series_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open input file: " + path);
    }
    TimeSeries series;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        // Skip blank lines and a single leading header line.
        std::string field = last_field(line);
        double value = 0.0;
        if (!parse_double(field, value)) {
            if (line_no == 1) continue;  // header
            bool blank = std::all_of(line.begin(), line.end(), [](unsigned char c) {
                return std::isspace(c);
            });
            if (blank) continue;
            throw std::runtime_error(path + ": non-numeric entry at line " +
                                     std::to_string(line_no) + ": '" + line + "'");
        }
        series.push_back(value);
    }
    if (series.empty()) {
        throw std::runtime_error(path + ": no observations found");
    }
    return series;
}

MeanModelSpec parse_model_name(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        }
    }
    std::replace(s.begin(), s.end(), '_', '-');

    int lags = 0;
    std::string head = s;
    const auto open = s.find('(');
    if (open != std::string::npos) {
        if (s.back() != ')') {
            throw std::runtime_error("bad model name: '" + text + "'");
        }
        head = s.substr(0, open);
        const std::string inside = s.substr(open + 1, s.size() - open - 2);
        try {
            lags = std::stoi(inside);
        } catch (const std::exception&) {
            throw std::runtime_error("bad model lag in: '" + text + "'");
        }
    } else {
        throw std::runtime_error("model name needs a lag, e.g. ar(2): '" + text + "'");
    }

    if (head == "ar") return MeanModelSpec::ar(lags);
    if (head == "t2") return MeanModelSpec::taylor(lags, 2);
    if (head == "t3") return MeanModelSpec::taylor(lags, 3);
    if (head == "np-pl" || head == "nppl") {
        return MeanModelSpec::nadaraya_watson(lags, BandwidthRule::PlugIn);
    }
    if (head == "np-cv" || head == "npcv") {
        return MeanModelSpec::nadaraya_watson(lags, BandwidthRule::CrossValidation);
    }
    throw std::runtime_error("unknown model name: '" + text + "'");
}

ExperimentFile load_experiment_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file: " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path + ": invalid JSON: " + e.what());
    }

    try {
        if (j.at("schema_version").get<int>() != 1) {
            throw std::runtime_error("unsupported schema_version");
        }
        ExperimentFile def;
        def.name = j.at("name").get<std::string>();
        def.kind = j.at("kind").get<std::string>();
        if (def.kind != "size" && def.kind != "power") {
            throw std::runtime_error("kind must be \"size\" or \"power\"");
        }
        def.config.replications = j.at("replications").get<int>();
        def.config.sample_sizes = j.at("sample_sizes").get<std::vector<int>>();
        def.config.level = j.value("level", 0.05);
        def.config.base_seed = j.at("base_seed").get<std::uint64_t>();
        def.config.arch_lag = j.value("arch_lag", 1);
        for (const auto& m : j.at("models")) {
            def.config.models.push_back(parse_model_name(m.get<std::string>()));
        }
        for (const auto& d : j.at("dgps")) {
            def.config.dgps.push_back(preset(d.get<std::string>()));
        }
        if (def.kind == "power") {
            def.gamma1 = j.at("gamma1").get<double>();
            if (def.gamma1 <= 0.0) {
                throw std::runtime_error("power runs need gamma1 > 0");
            }
            def.size_corrected = j.value("size_corrected", false);
        }
        return def;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path + ": bad config: " + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(path + ": bad config: " + e.what());
    }
}

namespace {

nlohmann::json config_echo(const ExperimentFile& def) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["name"] = def.name;
    j["kind"] = def.kind;
    j["replications"] = def.config.replications;
    j["sample_sizes"] = def.config.sample_sizes;
    j["level"] = def.config.level;
    j["base_seed"] = def.config.base_seed;
    j["arch_lag"] = def.config.arch_lag;
    std::vector<std::string> models;
    for (const auto& m : def.config.models) models.push_back(m.label());
    j["models"] = models;
    std::vector<std::string> dgps;
    for (const auto& d : def.config.dgps) dgps.push_back(d.name);
    j["dgps"] = dgps;
    if (def.kind == "power") {
        j["gamma1"] = def.gamma1;
        j["size_corrected"] = def.size_corrected;
    }
    return j;
}

}  // namespace

nlohmann::json make_run_manifest(const ExperimentFile& def,
                                 const std::vector<const RejectionTable*>& tables,
                                 const std::vector<std::string>& output_paths,
                                 double total_seconds) {
    nlohmann::json j;
    j["tool"] = "archtest";
    j["tool_version"] = kVersion;
    j["config"] = config_echo(def);
    j["base_seed"] = def.config.base_seed;
    j["outputs"] = output_paths;
    j["total_seconds"] = total_seconds;

    nlohmann::json cells = nlohmann::json::array();
    for (const auto* table : tables) {
        for (const auto& [key, freq] : table->frequency) {
            nlohmann::json c;
            c["dgp"] = key.dgp;
            c["model"] = key.model;
            c["T"] = key.sample_size;
            c["frequency"] = freq;
            c["mc_se"] = table->monte_carlo_se.at(key);
            c["errors"] = table->errors.at(key);
            c["seconds"] = table->seconds.at(key);
            cells.push_back(std::move(c));
        }
        break;  // per-cell rows from the primary table only
    }
    j["cells"] = std::move(cells);
    return j;
}

}  // namespace archtest
