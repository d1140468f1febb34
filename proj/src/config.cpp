#include "scic/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace scic {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value) {
    size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw config_error("config: key '" + key + "' has non-numeric value '" + value + "'");
    }
    if (pos != value.size()) {
        throw config_error("config: key '" + key + "' has trailing junk in '" + value + "'");
    }
    return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw config_error("config: key '" + key + "' expects a boolean, got '" + value + "'");
}

// comma list or start:stop:step range
std::vector<double> parse_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    if (value.find(':') != std::string::npos) {
        std::stringstream ss(value);
        std::string a, b, c;
        if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c)) {
            throw config_error("config: key '" + key + "' range needs start:stop:step");
        }
        const double start = parse_double(key, trim(a));
        const double stop = parse_double(key, trim(b));
        const double step = parse_double(key, trim(c));
        if (!(step > 0.0) || stop < start) {
            throw config_error("config: key '" + key + "' has an empty range");
        }
        for (int i = 0;; ++i) {
            const double v = start + i * step;
            if (v > stop + step * 1e-9) break;
            out.push_back(v);
        }
    } else {
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) {
            out.push_back(parse_double(key, trim(item)));
        }
    }
    if (out.empty()) {
        throw config_error("config: key '" + key + "' has an empty list");
    }
    return out;
}

} // namespace

RunConfig default_run_config() {
    RunConfig cfg;
    cfg.scenario.budget = default_budget(1e-10, 1e-10);
    cfg.lengths_km = {0, 5, 10, 15, 20, 25, 30, 35, 40, 45, 50, 55, 60, 65, 70, 75, 80,
                      85, 90, 95, 100};
    cfg.n_sents = {1e10, 3.1622776601683792e10, 1e11, 3.1622776601683795e11, 1e12};
    return cfg;
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg = default_run_config();
    Scenario& sc = cfg.scenario;
    double eps_s = 1e-10, eps_c = 1e-10;
    double theta = 0.03;
    bool explicit_phases = false;
    PhaseIntervals phases = PhaseIntervals::symmetric(theta);

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::set<std::string> seen;
    while (std::getline(in, line)) {
        ++line_no;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw config_error("config line " + std::to_string(line_no) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw config_error("config line " + std::to_string(line_no) + ": empty key or value");
        }
        if (!seen.insert(key).second) {
            throw config_error("config: duplicate key '" + key + "'");
        }

        if (key == "run.lengths_km") {
            cfg.lengths_km = parse_list(key, value);
        } else if (key == "run.n_sent") {
            cfg.n_sents = parse_list(key, value);
        } else if (key == "run.asymptotic") {
            sc.fluct.asymptotic = parse_bool(key, value);
        } else if (key == "run.gamma_mode") {
            if (value == "auto") sc.gamma_mode = GammaMode::Automatic;
            else if (value == "restricted") sc.gamma_mode = GammaMode::Restricted;
            else if (value == "general") sc.gamma_mode = GammaMode::General;
            else throw config_error("config: run.gamma_mode must be auto|restricted|general");
        } else if (key == "run.conservative_trailing_terms") {
            sc.fluct.conservative_trailing = parse_bool(key, value);
        } else if (key == "run.q_mode") {
            if (value == "basis") sc.fluct.q_mode = QMode::Basis;
            else if (value == "event_rate") sc.fluct.q_mode = QMode::EventRate;
            else throw config_error("config: run.q_mode must be basis|event_rate");
        } else if (key == "run.seed") {
            cfg.seed = static_cast<std::uint64_t>(parse_double(key, value));
        } else if (key == "tagging.case") {
            if (value == "I") sc.tagging = TaggingCase::I;
            else if (value == "II") sc.tagging = TaggingCase::II;
            else throw config_error("config: tagging.case must be I or II");
        } else if (key == "tagging.rate") {
            sc.tag_rate = parse_double(key, value);
        } else if (key == "tagging.p_fail") {
            sc.p_fail = parse_double(key, value);
        } else if (key == "security.eps_s") {
            eps_s = parse_double(key, value);
        } else if (key == "security.eps_c") {
            eps_c = parse_double(key, value);
        } else if (key == "source.theta") {
            theta = parse_double(key, value);
        } else if (key == "source.r_k1") {
            sc.r_k1 = parse_double(key, value);
        } else if (key == "source.r_k2") {
            sc.r_k2 = parse_double(key, value);
        } else if (key == "source.mu_k3_upper") {
            sc.mu_k3_upper = parse_double(key, value);
        } else if (key == "source.p_a_z") {
            sc.p_a_z = parse_double(key, value);
        } else if (key == "source.p_k1") {
            sc.p_k1 = parse_double(key, value);
        } else if (key == "source.p_k2") {
            sc.p_k2 = parse_double(key, value);
        } else if (key == "source.mu_k1") {
            cfg.fixed_mu_k1 = parse_double(key, value);
        } else if (key == "source.mu_k2") {
            cfg.fixed_mu_k2 = parse_double(key, value);
        } else if (key == "source.theta_l_0z") {
            phases.theta_l_0z = parse_double(key, value);
            explicit_phases = true;
        } else if (key == "source.theta_u_0z") {
            phases.theta_u_0z = parse_double(key, value);
            explicit_phases = true;
        } else if (key == "source.theta_l_1z") {
            phases.theta_l_1z = parse_double(key, value);
            explicit_phases = true;
        } else if (key == "source.theta_u_1z") {
            phases.theta_u_1z = parse_double(key, value);
            explicit_phases = true;
        } else if (key == "source.theta_l_0x") {
            phases.theta_l_0x = parse_double(key, value);
            explicit_phases = true;
        } else if (key == "source.theta_u_0x") {
            phases.theta_u_0x = parse_double(key, value);
            explicit_phases = true;
        } else if (key == "channel.loss_db_per_km") {
            sc.channel.loss_db_per_km = parse_double(key, value);
        } else if (key == "channel.eta_det") {
            sc.channel.eta_det = parse_double(key, value);
        } else if (key == "channel.p_dark") {
            sc.channel.p_dark = parse_double(key, value);
        } else if (key == "channel.e_mis") {
            sc.channel.e_mis = parse_double(key, value);
        } else if (key == "channel.p_b_z") {
            sc.channel.p_b_z = parse_double(key, value);
        } else if (key == "output.csv") {
            cfg.csv_path = value;
        } else if (key == "output.plot") {
            cfg.plot_path = value;
        } else {
            throw config_error("config: unknown key '" + key + "'");
        }
    }

    if ((cfg.fixed_mu_k1.has_value()) != (cfg.fixed_mu_k2.has_value())) {
        throw config_error("config: source.mu_k1 and source.mu_k2 must be given together");
    }
    sc.phases = explicit_phases ? phases : PhaseIntervals::symmetric(theta);
    sc.budget = default_budget(eps_s, eps_c);
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw config_error("config: cannot open '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

} // namespace scic
