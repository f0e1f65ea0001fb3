#include "qrepnet/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "qrepnet/errors.hpp"

namespace qrepnet {

namespace {

std::string _trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> _split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(_trim(item));
    if (!s.empty() && s.back() == sep) parts.push_back("");
    return parts;
}

Real _parse_real(const std::string& key, const std::string& value) {
    try {
        size_t used = 0;
        const Real v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw InvalidConfigError("config key '" + key + "': cannot parse number '" + value + "'");
    }
}

long _parse_long(const std::string& key, const std::string& value) {
    try {
        size_t used = 0;
        const long v = std::stol(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw InvalidConfigError("config key '" + key + "': cannot parse integer '" + value + "'");
    }
}

std::uint64_t _parse_u64(const std::string& key, const std::string& value) {
    try {
        size_t used = 0;
        const std::uint64_t v = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw InvalidConfigError("config key '" + key + "': cannot parse integer '" + value + "'");
    }
}

bool _parse_bool(const std::string& key, const std::string& value) {
    if (value == "true") return true;
    if (value == "false") return false;
    throw InvalidConfigError("config key '" + key + "': expected true or false, got '" + value + "'");
}

std::vector<Real> _parse_real_list(const std::string& key, const std::string& value) {
    std::vector<Real> out;
    for (const std::string& item : _split(value, ',')) out.push_back(_parse_real(key, item));
    if (out.empty()) throw InvalidConfigError("config key '" + key + "': empty list");
    return out;
}

std::vector<int> _parse_int_list(const std::string& key, const std::string& value) {
    std::vector<int> out;
    for (const std::string& item : _split(value, ','))
        out.push_back(static_cast<int>(_parse_long(key, item)));
    if (out.empty()) throw InvalidConfigError("config key '" + key + "': empty list");
    return out;
}

std::string _format_real(Real v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string _format_real_list(const std::vector<Real>& values) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += _format_real(values[i]);
    }
    return out;
}

std::string _format_int_list(const std::vector<int>& values) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out;
}

const char* _state_name(InputStateKind s) {
    switch (s) {
        case InputStateKind::zero: return "zero";
        case InputStateKind::one: return "one";
        case InputStateKind::plus: return "plus";
        case InputStateKind::minus: return "minus";
    }
    return "zero";
}

const char* _decoder_name(DecoderKind d) { return d == DecoderKind::mwm ? "mwm" : "lut"; }
const char* _mapping_name(FlipMapping m) {
    return m == FlipMapping::bitflip ? "bitflip" : "werner";
}
const char* _backend_name(QueueBackend b) {
    switch (b) {
        case QueueBackend::markov: return "markov";
        case QueueBackend::analytic: return "analytic";
        case QueueBackend::des: return "des";
    }
    return "markov";
}

InputStateKind _parse_state(const std::string& key, const std::string& v) {
    if (v == "zero") return InputStateKind::zero;
    if (v == "one") return InputStateKind::one;
    if (v == "plus") return InputStateKind::plus;
    if (v == "minus") return InputStateKind::minus;
    throw InvalidConfigError("config key '" + key + "': unknown state '" + v + "'");
}

DecoderKind _parse_decoder(const std::string& key, const std::string& v) {
    if (v == "mwm") return DecoderKind::mwm;
    if (v == "lut") return DecoderKind::lut;
    throw InvalidConfigError("config key '" + key + "': unknown decoder '" + v + "'");
}

FlipMapping _parse_mapping(const std::string& key, const std::string& v) {
    if (v == "werner") return FlipMapping::werner;
    if (v == "bitflip") return FlipMapping::bitflip;
    throw InvalidConfigError("config key '" + key + "': unknown mapping '" + v + "'");
}

QueueBackend _parse_backend(const std::string& key, const std::string& v) {
    if (v == "markov") return QueueBackend::markov;
    if (v == "analytic") return QueueBackend::analytic;
    if (v == "des") return QueueBackend::des;
    throw InvalidConfigError("config key '" + key + "': unknown queue backend '" + v + "'");
}

}  // namespace

ExperimentConfig ExperimentConfig::parse_text(const std::string& text) {
    ExperimentConfig cfg;
    std::map<std::string, std::function<void(const std::string&, const std::string&)>> setters;

    setters["light_speed_mps"] = [&](const std::string& k, const std::string& v) {
        cfg.light_speed_mps = _parse_real(k, v);
    };
    setters["attenuation_db_per_km"] = [&](const std::string& k, const std::string& v) {
        cfg.attenuation_db_per_km = _parse_real(k, v);
    };
    setters["memory_time_constant_ms"] = [&](const std::string& k, const std::string& v) {
        cfg.memory_time_constant_ms = _parse_real(k, v);
    };
    setters["input_state"] = [&](const std::string& k, const std::string& v) {
        cfg.input_state = _parse_state(k, v);
    };
    setters["queue_lambda_mhz"] = [&](const std::string& k, const std::string& v) {
        cfg.queue_lambda_mhz = _parse_real_list(k, v);
    };
    setters["queue_gamma_mhz"] = [&](const std::string& k, const std::string& v) {
        cfg.queue_gamma_mhz = _parse_real_list(k, v);
    };
    setters["queue_capacities"] = [&](const std::string& k, const std::string& v) {
        cfg.queue_capacities = _parse_int_list(k, v);
    };
    setters["sweep_length_km"] = [&](const std::string& k, const std::string& v) {
        cfg.sweep_length_km = _parse_real_list(k, v);
    };
    setters["sweep_edge_counts"] = [&](const std::string& k, const std::string& v) {
        cfg.sweep_edge_counts = _parse_int_list(k, v);
    };
    setters["sweep_capacities"] = [&](const std::string& k, const std::string& v) {
        cfg.sweep_capacities = _parse_int_list(k, v);
    };
    setters["sweep_lambda_mhz"] = [&](const std::string& k, const std::string& v) {
        cfg.sweep_lambda_mhz = _parse_real(k, v);
    };
    setters["sweep_gamma_mhz"] = [&](const std::string& k, const std::string& v) {
        cfg.sweep_gamma_mhz = _parse_real(k, v);
    };
    setters["code_length_km"] = [&](const std::string& k, const std::string& v) {
        cfg.code_length_km = _parse_real(k, v);
    };
    setters["code_edge_counts"] = [&](const std::string& k, const std::string& v) {
        cfg.code_edge_counts = _parse_int_list(k, v);
    };
    setters["code_qubits"] = [&](const std::string& k, const std::string& v) {
        cfg.code_qubits = _parse_int_list(k, v);
    };
    setters["code_capacities"] = [&](const std::string& k, const std::string& v) {
        cfg.code_capacities = _parse_int_list(k, v);
    };
    setters["code_lambda_mhz"] = [&](const std::string& k, const std::string& v) {
        cfg.code_lambda_mhz = _parse_real(k, v);
    };
    setters["code_gamma_mhz"] = [&](const std::string& k, const std::string& v) {
        cfg.code_gamma_mhz = _parse_real(k, v);
    };
    setters["decoder"] = [&](const std::string& k, const std::string& v) {
        cfg.decoder = _parse_decoder(k, v);
    };
    setters["mapping"] = [&](const std::string& k, const std::string& v) {
        cfg.mapping = _parse_mapping(k, v);
    };
    setters["queue_backend"] = [&](const std::string& k, const std::string& v) {
        cfg.queue_backend = _parse_backend(k, v);
    };
    setters["fidelity_threshold"] = [&](const std::string& k, const std::string& v) {
        cfg.fidelity_threshold = _parse_real(k, v);
    };
    setters["seed"] = [&](const std::string& k, const std::string& v) {
        cfg.seed = _parse_u64(k, v);
    };
    setters["trials"] = [&](const std::string& k, const std::string& v) {
        cfg.trials = _parse_long(k, v);
    };
    setters["des_served"] = [&](const std::string& k, const std::string& v) {
        cfg.des_served = _parse_long(k, v);
    };
    setters["dwell_per_edge"] = [&](const std::string& k, const std::string& v) {
        cfg.dwell_per_edge = _parse_bool(k, v);
    };
    setters["doubled_swap_exponent"] = [&](const std::string& k, const std::string& v) {
        cfg.doubled_swap_exponent = _parse_bool(k, v);
    };
    setters["constraint_on_cost"] = [&](const std::string& k, const std::string& v) {
        cfg.constraint_on_cost = _parse_bool(k, v);
    };

    std::set<std::string> seen;
    std::stringstream ss(text);
    std::string line;
    int line_no = 0;
    while (std::getline(ss, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = _trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InvalidConfigError("config line " + std::to_string(line_no) +
                                     ": expected 'key = value'");
        const std::string key = _trim(line.substr(0, eq));
        const std::string value = _trim(line.substr(eq + 1));
        const auto it = setters.find(key);
        if (it == setters.end())
            throw InvalidConfigError("config line " + std::to_string(line_no) +
                                     ": unknown key '" + key + "'");
        if (!seen.insert(key).second)
            throw InvalidConfigError("config line " + std::to_string(line_no) +
                                     ": key '" + key + "' repeated");
        it->second(key, value);
    }
    return cfg;
}

ExperimentConfig ExperimentConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidConfigError("cannot open config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

std::string ExperimentConfig::to_text() const {
    std::ostringstream out;
    out << "light_speed_mps = " << _format_real(light_speed_mps) << "\n";
    out << "attenuation_db_per_km = " << _format_real(attenuation_db_per_km) << "\n";
    out << "memory_time_constant_ms = " << _format_real(memory_time_constant_ms) << "\n";
    out << "input_state = " << _state_name(input_state) << "\n";
    out << "queue_lambda_mhz = " << _format_real_list(queue_lambda_mhz) << "\n";
    out << "queue_gamma_mhz = " << _format_real_list(queue_gamma_mhz) << "\n";
    out << "queue_capacities = " << _format_int_list(queue_capacities) << "\n";
    out << "sweep_length_km = " << _format_real_list(sweep_length_km) << "\n";
    out << "sweep_edge_counts = " << _format_int_list(sweep_edge_counts) << "\n";
    out << "sweep_capacities = " << _format_int_list(sweep_capacities) << "\n";
    out << "sweep_lambda_mhz = " << _format_real(sweep_lambda_mhz) << "\n";
    out << "sweep_gamma_mhz = " << _format_real(sweep_gamma_mhz) << "\n";
    out << "code_length_km = " << _format_real(code_length_km) << "\n";
    out << "code_edge_counts = " << _format_int_list(code_edge_counts) << "\n";
    out << "code_qubits = " << _format_int_list(code_qubits) << "\n";
    out << "code_capacities = " << _format_int_list(code_capacities) << "\n";
    out << "code_lambda_mhz = " << _format_real(code_lambda_mhz) << "\n";
    out << "code_gamma_mhz = " << _format_real(code_gamma_mhz) << "\n";
    out << "decoder = " << _decoder_name(decoder) << "\n";
    out << "mapping = " << _mapping_name(mapping) << "\n";
    out << "queue_backend = " << _backend_name(queue_backend) << "\n";
    out << "fidelity_threshold = " << _format_real(fidelity_threshold) << "\n";
    out << "seed = " << seed << "\n";
    out << "trials = " << trials << "\n";
    out << "des_served = " << des_served << "\n";
    out << "dwell_per_edge = " << (dwell_per_edge ? "true" : "false") << "\n";
    out << "doubled_swap_exponent = " << (doubled_swap_exponent ? "true" : "false") << "\n";
    out << "constraint_on_cost = " << (constraint_on_cost ? "true" : "false") << "\n";
    return out.str();
}

PureState ExperimentConfig::make_input_state() const {
    switch (input_state) {
        case InputStateKind::zero: return PureState::zero();
        case InputStateKind::one: return PureState::one();
        case InputStateKind::plus: return PureState::plus();
        case InputStateKind::minus: return PureState::minus();
    }
    return PureState::zero();
}

PathOptions ExperimentConfig::make_path_options(std::uint64_t des_seed) const {
    PathOptions opts;
    opts.backend = queue_backend;
    opts.dwell = dwell_per_edge ? DwellMode::per_edge : DwellMode::once_per_path;
    opts.exponent = doubled_swap_exponent ? SwapExponent::doubled : SwapExponent::standard;
    opts.des_served = des_served;
    opts.des_seed = des_seed;
    return opts;
}

}  // namespace qrepnet
