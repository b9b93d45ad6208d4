#include "netsir/scenario.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "netsir/errors.hpp"

namespace netsir {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Entry {
    std::string value;
    int line = 0;
};

// section -> key -> occurrences (in file order)
using RawConfig = std::map<std::string, std::map<std::string, std::vector<Entry>>>;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

RawConfig parse_raw(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open scenario file '" + path + "'");

    RawConfig raw;
    std::string section;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(path + ":" + std::to_string(lineno) +
                                  ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                throw ConfigError(path + ":" + std::to_string(lineno) + ": empty section name");
            raw[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) +
                              ": expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(path + ":" + std::to_string(lineno) + ": empty key");
        if (section.empty())
            throw ConfigError(path + ":" + std::to_string(lineno) + ": key '" + key +
                              "' outside any [section]");
        raw[section][key].push_back({value, lineno});
    }
    return raw;
}

// Tracks consumed keys so leftovers can be rejected by name.
class Reader {
public:
    Reader(RawConfig raw, std::string path) : raw_(std::move(raw)), path_(std::move(path)) {}

    bool has(const std::string& section, const std::string& key) const {
        const auto s = raw_.find(section);
        return s != raw_.end() && s->second.count(key) > 0;
    }

    const Entry& single(const std::string& section, const std::string& key) {
        const auto& occurrences = raw_.at(section).at(key);
        if (occurrences.size() > 1)
            throw ConfigError(path_ + ":" + std::to_string(occurrences[1].line) +
                              ": duplicate key '" + key + "' in [" + section + "]");
        consumed_.insert(section + "." + key);
        return occurrences[0];
    }

    const std::vector<Entry>* repeated(const std::string& section, const std::string& key) {
        if (!has(section, key))
            return nullptr;
        consumed_.insert(section + "." + key);
        return &raw_.at(section).at(key);
    }

    double get_double(const std::string& section, const std::string& key, double fallback) {
        if (!has(section, key))
            return fallback;
        const Entry& e = single(section, key);
        return parse_double(e);
    }

    int get_int(const std::string& section, const std::string& key, int fallback) {
        if (!has(section, key))
            return fallback;
        const Entry& e = single(section, key);
        return static_cast<int>(parse_ll(e));
    }

    std::uint64_t get_u64(const std::string& section, const std::string& key,
                          std::uint64_t fallback) {
        if (!has(section, key))
            return fallback;
        const Entry& e = single(section, key);
        errno = 0;
        char* end = nullptr;
        const unsigned long long v = std::strtoull(e.value.c_str(), &end, 10);
        if (errno != 0 || end == e.value.c_str() || *end != '\0')
            fail(e, key, "an unsigned integer");
        return v;
    }

    bool get_bool(const std::string& section, const std::string& key, bool fallback) {
        if (!has(section, key))
            return fallback;
        const Entry& e = single(section, key);
        if (e.value == "true")
            return true;
        if (e.value == "false")
            return false;
        fail(e, key, "'true' or 'false'");
        return false;
    }

    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) {
        if (!has(section, key))
            return fallback;
        return single(section, key).value;
    }

    std::vector<int> get_int_list(const std::string& section, const std::string& key,
                                  std::vector<int> fallback) {
        if (!has(section, key))
            return fallback;
        const Entry& e = single(section, key);
        std::vector<int> out;
        std::string item;
        std::istringstream ss(e.value);
        std::string normalized = e.value;
        std::replace(normalized.begin(), normalized.end(), ',', ' ');
        std::istringstream ns(normalized);
        while (ns >> item) {
            errno = 0;
            char* end = nullptr;
            const long v = std::strtol(item.c_str(), &end, 10);
            if (errno != 0 || end == item.c_str() || *end != '\0')
                fail(e, key, "a list of integers");
            out.push_back(static_cast<int>(v));
        }
        if (out.empty())
            fail(e, key, "a nonempty list of integers");
        return out;
    }

    std::vector<double> split_doubles(const Entry& e, const std::string& key, std::size_t n) {
        std::string normalized = e.value;
        std::replace(normalized.begin(), normalized.end(), ',', ' ');
        std::istringstream ns(normalized);
        std::vector<double> out;
        std::string item;
        while (ns >> item) {
            errno = 0;
            char* end = nullptr;
            const double v = std::strtod(item.c_str(), &end);
            if (errno != 0 || end == item.c_str() || *end != '\0')
                fail(e, key, "a list of reals");
            out.push_back(v);
        }
        if (out.size() != n)
            fail(e, key, std::to_string(n) + " reals");
        return out;
    }

    double parse_double(const Entry& e) {
        errno = 0;
        char* end = nullptr;
        const double v = std::strtod(e.value.c_str(), &end);
        if (errno != 0 || end == e.value.c_str() || *end != '\0')
            throw ConfigError(path_ + ":" + std::to_string(e.line) + ": '" + e.value +
                              "' is not a real number");
        return v;
    }

    long long parse_ll(const Entry& e) {
        errno = 0;
        char* end = nullptr;
        const long long v = std::strtoll(e.value.c_str(), &end, 10);
        if (errno != 0 || end == e.value.c_str() || *end != '\0')
            throw ConfigError(path_ + ":" + std::to_string(e.line) + ": '" + e.value +
                              "' is not an integer");
        return v;
    }

    [[noreturn]] void fail(const Entry& e, const std::string& key, const std::string& want) {
        throw ConfigError(path_ + ":" + std::to_string(e.line) + ": key '" + key + "' expects " +
                          want + ", got '" + e.value + "'");
    }

    void reject_unconsumed(const std::set<std::string>& known_sections) {
        for (const auto& [section, keys] : raw_) {
            if (!known_sections.count(section))
                throw ConfigError(path_ + ": unknown section [" + section + "]");
            for (const auto& [key, occurrences] : keys)
                if (!consumed_.count(section + "." + key))
                    throw ConfigError(path_ + ":" + std::to_string(occurrences[0].line) +
                                      ": unknown key '" + key + "' in [" + section + "]");
        }
    }

    const RawConfig& raw() const { return raw_; }
    const std::string& path() const { return path_; }

private:
    RawConfig raw_;
    std::string path_;
    std::set<std::string> consumed_;
};

ThetaMode parse_theta_mode(const std::string& v, const std::string& where) {
    if (v == "summation")
        return ThetaMode::Summation;
    if (v == "closed")
        return ThetaMode::ClosedForm;
    throw ConfigError(where + ": theta_mode must be 'summation' or 'closed', got '" + v + "'");
}

const char* theta_mode_name(ThetaMode m) {
    return m == ThetaMode::Summation ? "summation" : "closed";
}

Infectivity parse_infectivity(const std::string& v, const std::string& where) {
    if (v == "degree")
        return Infectivity::DegreeProportional;
    if (v == "constant")
        return Infectivity::Constant;
    throw ConfigError(where + ": infectivity must be 'degree' or 'constant', got '" + v + "'");
}

const char* infectivity_name(Infectivity i) {
    return i == Infectivity::DegreeProportional ? "degree" : "constant";
}

} // namespace

void ScenarioConfig::validate() const {
    const auto bad = [](const std::string& field, const std::string& constraint) {
        throw ConfigError("scenario field '" + field + "' violates: " + constraint);
    };
    if (m < 1)
        bad("network.m", "m >= 1");
    if (k_max < m)
        bad("network.k_max", "k_max >= m");
    if (!(horizon > 0.0))
        bad("dynamics.horizon", "horizon > 0");
    if (!(step > 0.0))
        bad("dynamics.step", "step > 0");
    if (classes.empty())
        bad("dynamics.classes", "at least one degree class");
    for (std::size_t i = 0; i + 1 < classes.size(); ++i)
        if (classes[i] >= classes[i + 1])
            bad("dynamics.classes", "strictly ascending degrees");
    for (int k : classes)
        if (k < m || k > k_max)
            bad("dynamics.classes", "degree " + std::to_string(k) + " inside [m, k_max]");
    if (initial.size() != classes.size())
        bad("initial", "one state per class");
    for (std::size_t i = 0; i < initial.size(); ++i) {
        const auto& st = initial[i];
        for (double v : {st.s, st.i1, st.i2, st.r})
            if (!(v >= 0.0 && v <= 1.0))
                bad("initial.state_" + std::to_string(classes[i]), "components in [0,1]");
        if (std::abs(st.sum() - 1.0) > 1e-9)
            bad("initial.state_" + std::to_string(classes[i]),
                "components sum to 1 within 1e-9");
    }
    if (!(delta1 > 0.0) || !(delta2 > 0.0))
        bad("dynamics.delta", "spreading coefficients > 0");
    if (!(sigma1 > 0.0) || !(sigma2 > 0.0))
        bad("dynamics.sigma", "recovery coefficients > 0");
    if (!(a1 > 0.0) || !(a2 > 0.0) || !(b1 > 0.0) || !(b2 > 0.0))
        bad("cost", "slopes a_i, b_i > 0");
    if (!(g_coeff >= 0.0))
        bad("cost.g", "g >= 0");
    if (schedule_source == ScheduleSource::Threshold) {
        for (double v : {rule.level1, rule.level2, rule.gap1, rule.gap2, rule.c1, rule.c2,
                         rule.u1, rule.u2})
            if (!(v >= 0.0))
                bad("schedule", "threshold rule values >= 0");
    }
    for (const auto& e : events) {
        if (e.strain != 1 && e.strain != 2)
            bad("schedule.event", "strain in {1,2}");
        if (std::find(classes.begin(), classes.end(), e.k) == classes.end())
            bad("schedule.event", "class " + std::to_string(e.k) + " is simulated");
        if (!(e.tau > 0.0) || !(e.tau < horizon))
            bad("schedule.event", "time inside (0, horizon)");
        if (e.c < 0.0 || e.c > e.u_bar)
            bad("schedule.event", "intensity in [0, u_bar]");
    }
    if (!(optimizer.tol_tau > 0.0) || !(optimizer.tol_c > 0.0) ||
        !(optimizer.tol_stationarity > 0.0))
        bad("optimizer", "tolerances > 0");
    if (optimizer.max_sweeps < 1)
        bad("optimizer.max_sweeps", "max_sweeps >= 1");
    if (output_dir.empty())
        bad("output.dir", "nonempty output directory");
}

NetworkModel ScenarioConfig::network() const {
    return build_power_law_model(m, k_max);
}

EpidemicParams ScenarioConfig::epidemic_params() const {
    EpidemicParams p;
    p.delta1 = delta1;
    p.delta2 = delta2;
    p.sigma1 = sigma1;
    p.sigma2 = sigma2;
    p.theta_mode = theta_mode;
    p.infectivity = infectivity;
    return p;
}

CostModel ScenarioConfig::cost_model() const {
    CostModel c;
    c.a1 = a1;
    c.a2 = a2;
    c.b1 = b1;
    c.b2 = b2;
    c.g_coeff = g_coeff;
    c.impulse_cost_state = impulse_cost_state;
    return c;
}

Problem ScenarioConfig::problem() const {
    Problem p;
    p.model = network();
    p.params = epidemic_params();
    p.costs = cost_model();
    p.classes = classes;
    p.initial = initial;
    p.horizon = horizon;
    p.step = step;
    return p;
}

ImpulseSchedule ScenarioConfig::schedule() const {
    if (schedule_source == ScheduleSource::Explicit)
        return ImpulseSchedule{std::vector<ImpulseEvent>(events)};
    return generate_threshold_schedule(classes, initial, epidemic_params(), network(), rule,
                                       horizon, step);
}

bool ScenarioConfig::operator==(const ScenarioConfig& o) const {
    return name == o.name && m == o.m && k_max == o.k_max && theta_mode == o.theta_mode &&
           infectivity == o.infectivity && horizon == o.horizon && step == o.step &&
           classes == o.classes && delta1 == o.delta1 && delta2 == o.delta2 &&
           sigma1 == o.sigma1 && sigma2 == o.sigma2 && initial == o.initial && a1 == o.a1 &&
           a2 == o.a2 && b1 == o.b1 && b2 == o.b2 && g_coeff == o.g_coeff &&
           impulse_cost_state == o.impulse_cost_state &&
           schedule_source == o.schedule_source && rule == o.rule && events == o.events &&
           optimizer == o.optimizer && output_dir == o.output_dir && seed == o.seed;
}

ScenarioConfig load_scenario(const std::string& path) {
    Reader reader(parse_raw(path), path);
    ScenarioConfig cfg;

    cfg.name = reader.get_string("output", "name", cfg.name);
    cfg.output_dir = reader.get_string("output", "dir", cfg.output_dir);
    cfg.seed = reader.get_u64("output", "seed", cfg.seed);

    cfg.m = reader.get_int("network", "m", cfg.m);
    cfg.k_max = reader.get_int("network", "k_max", cfg.k_max);
    if (reader.has("network", "theta_mode")) {
        const Entry& e = reader.single("network", "theta_mode");
        cfg.theta_mode = parse_theta_mode(e.value, path + ":" + std::to_string(e.line));
    }
    if (reader.has("network", "infectivity")) {
        const Entry& e = reader.single("network", "infectivity");
        cfg.infectivity = parse_infectivity(e.value, path + ":" + std::to_string(e.line));
    }

    cfg.horizon = reader.get_double("dynamics", "horizon", cfg.horizon);
    cfg.step = reader.get_double("dynamics", "step", cfg.step);
    cfg.classes = reader.get_int_list("dynamics", "classes", cfg.classes);
    cfg.delta1 = reader.get_double("dynamics", "delta1", cfg.delta1);
    cfg.delta2 = reader.get_double("dynamics", "delta2", cfg.delta2);
    cfg.sigma1 = reader.get_double("dynamics", "sigma1", cfg.sigma1);
    cfg.sigma2 = reader.get_double("dynamics", "sigma2", cfg.sigma2);

    // Uniform initial state, overridable per class via state_<k>.
    DegreeClassState uniform;
    uniform.s = reader.get_double("initial", "s", 1.0);
    uniform.i1 = reader.get_double("initial", "i1", 0.0);
    uniform.i2 = reader.get_double("initial", "i2", 0.0);
    uniform.r = reader.get_double("initial", "r", 0.0);
    cfg.initial.assign(cfg.classes.size(), uniform);
    for (std::size_t i = 0; i < cfg.classes.size(); ++i) {
        const std::string key = "state_" + std::to_string(cfg.classes[i]);
        if (!reader.has("initial", key))
            continue;
        const Entry& e = reader.single("initial", key);
        const auto v = reader.split_doubles(e, key, 4);
        cfg.initial[i] = {v[0], v[1], v[2], v[3]};
    }

    cfg.a1 = reader.get_double("cost", "a1", cfg.a1);
    cfg.a2 = reader.get_double("cost", "a2", cfg.a2);
    cfg.b1 = reader.get_double("cost", "b1", cfg.b1);
    cfg.b2 = reader.get_double("cost", "b2", cfg.b2);
    cfg.g_coeff = reader.get_double("cost", "g", cfg.g_coeff);
    if (reader.has("cost", "impulse_cost_state")) {
        const Entry& e = reader.single("cost", "impulse_cost_state");
        if (e.value == "post")
            cfg.impulse_cost_state = ImpulseCostState::PostJump;
        else if (e.value == "pre")
            cfg.impulse_cost_state = ImpulseCostState::PreJump;
        else
            throw ConfigError(path + ":" + std::to_string(e.line) +
                              ": impulse_cost_state must be 'post' or 'pre'");
    }

    if (reader.has("schedule", "source")) {
        const Entry& e = reader.single("schedule", "source");
        if (e.value == "threshold")
            cfg.schedule_source = ScheduleSource::Threshold;
        else if (e.value == "explicit")
            cfg.schedule_source = ScheduleSource::Explicit;
        else
            throw ConfigError(path + ":" + std::to_string(e.line) +
                              ": schedule source must be 'threshold' or 'explicit'");
    }
    cfg.rule.level1 = reader.get_double("schedule", "level1", cfg.rule.level1);
    cfg.rule.level2 = reader.get_double("schedule", "level2", cfg.rule.level2);
    cfg.rule.gap1 = reader.get_double("schedule", "gap1", cfg.rule.gap1);
    cfg.rule.gap2 = reader.get_double("schedule", "gap2", cfg.rule.gap2);
    cfg.rule.c1 = reader.get_double("schedule", "c1", cfg.rule.c1);
    cfg.rule.c2 = reader.get_double("schedule", "c2", cfg.rule.c2);
    cfg.rule.u1 = reader.get_double("schedule", "u1", cfg.rule.u1);
    cfg.rule.u2 = reader.get_double("schedule", "u2", cfg.rule.u2);
    cfg.rule.proportional = reader.get_bool("schedule", "proportional", cfg.rule.proportional);
    if (const auto* entries = reader.repeated("schedule", "event")) {
        for (const Entry& e : *entries) {
            const auto v = reader.split_doubles(e, "event", 5);
            ImpulseEvent ev;
            ev.strain = static_cast<int>(v[0]);
            ev.k = static_cast<int>(v[1]);
            ev.tau = v[2];
            ev.c = v[3];
            ev.u_bar = v[4];
            cfg.events.push_back(ev);
        }
    }

    cfg.optimizer.tol_tau = reader.get_double("optimizer", "tol_tau", cfg.optimizer.tol_tau);
    cfg.optimizer.tol_c = reader.get_double("optimizer", "tol_c", cfg.optimizer.tol_c);
    cfg.optimizer.tol_stationarity =
        reader.get_double("optimizer", "tol_stationarity", cfg.optimizer.tol_stationarity);
    cfg.optimizer.max_sweeps = reader.get_int("optimizer", "max_sweeps",
                                              cfg.optimizer.max_sweeps);
    cfg.optimizer.boundary_band =
        reader.get_double("optimizer", "boundary_band", cfg.optimizer.boundary_band);

    reader.reject_unconsumed(
        {"network", "dynamics", "initial", "cost", "schedule", "optimizer", "output"});
    cfg.validate();
    return cfg;
}

void write_scenario(const ScenarioConfig& cfg, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");

    out << "[network]\n";
    out << "m = " << cfg.m << "\n";
    out << "k_max = " << cfg.k_max << "\n";
    out << "theta_mode = " << theta_mode_name(cfg.theta_mode) << "\n";
    out << "infectivity = " << infectivity_name(cfg.infectivity) << "\n\n";

    out << "[dynamics]\n";
    out << "horizon = " << fmt(cfg.horizon) << "\n";
    out << "step = " << fmt(cfg.step) << "\n";
    out << "classes =";
    for (std::size_t i = 0; i < cfg.classes.size(); ++i)
        out << (i ? "," : " ") << cfg.classes[i];
    out << "\n";
    out << "delta1 = " << fmt(cfg.delta1) << "\n";
    out << "delta2 = " << fmt(cfg.delta2) << "\n";
    out << "sigma1 = " << fmt(cfg.sigma1) << "\n";
    out << "sigma2 = " << fmt(cfg.sigma2) << "\n\n";

    out << "[initial]\n";
    for (std::size_t i = 0; i < cfg.classes.size(); ++i) {
        const auto& st = cfg.initial[i];
        out << "state_" << cfg.classes[i] << " = " << fmt(st.s) << " " << fmt(st.i1) << " "
            << fmt(st.i2) << " " << fmt(st.r) << "\n";
    }
    out << "\n";

    out << "[cost]\n";
    out << "a1 = " << fmt(cfg.a1) << "\n";
    out << "a2 = " << fmt(cfg.a2) << "\n";
    out << "b1 = " << fmt(cfg.b1) << "\n";
    out << "b2 = " << fmt(cfg.b2) << "\n";
    out << "g = " << fmt(cfg.g_coeff) << "\n";
    out << "impulse_cost_state = "
        << (cfg.impulse_cost_state == ImpulseCostState::PostJump ? "post" : "pre") << "\n\n";

    out << "[schedule]\n";
    out << "source = "
        << (cfg.schedule_source == ScheduleSource::Threshold ? "threshold" : "explicit")
        << "\n";
    out << "c1 = " << fmt(cfg.rule.c1) << "\n";
    out << "c2 = " << fmt(cfg.rule.c2) << "\n";
    out << "u1 = " << fmt(cfg.rule.u1) << "\n";
    out << "u2 = " << fmt(cfg.rule.u2) << "\n";
    out << "level1 = " << fmt(cfg.rule.level1) << "\n";
    out << "level2 = " << fmt(cfg.rule.level2) << "\n";
    out << "gap1 = " << fmt(cfg.rule.gap1) << "\n";
    out << "gap2 = " << fmt(cfg.rule.gap2) << "\n";
    out << "proportional = " << (cfg.rule.proportional ? "true" : "false") << "\n";
    for (const auto& e : cfg.events)
        out << "event = " << e.strain << " " << e.k << " " << fmt(e.tau) << " " << fmt(e.c)
            << " " << fmt(e.u_bar) << "\n";
    out << "\n";

    out << "[optimizer]\n";
    out << "tol_tau = " << fmt(cfg.optimizer.tol_tau) << "\n";
    out << "tol_c = " << fmt(cfg.optimizer.tol_c) << "\n";
    out << "tol_stationarity = " << fmt(cfg.optimizer.tol_stationarity) << "\n";
    out << "max_sweeps = " << cfg.optimizer.max_sweeps << "\n";
    out << "boundary_band = " << fmt(cfg.optimizer.boundary_band) << "\n\n";

    out << "[output]\n";
    out << "name = " << cfg.name << "\n";
    out << "dir = " << cfg.output_dir << "\n";
    out << "seed = " << cfg.seed << "\n";
    if (!out)
        throw IoError("failed while writing '" + path + "'");
}

namespace {

ScenarioConfig base_case() {
    ScenarioConfig cfg;
    cfg.m = 4;
    cfg.k_max = 100;
    cfg.theta_mode = ThetaMode::Summation;
    cfg.infectivity = Infectivity::DegreeProportional;
    cfg.horizon = 100.0;
    cfg.step = 0.01;
    cfg.delta1 = 0.075;
    cfg.delta2 = 0.1;
    cfg.sigma1 = 0.0005;
    cfg.sigma2 = 0.0003;
    cfg.a1 = 2.0;
    cfg.a2 = 3.0;
    cfg.b1 = 3.0;
    cfg.b2 = 4.0;
    cfg.g_coeff = 0.1;
    cfg.schedule_source = ScheduleSource::Threshold;
    cfg.rule.c1 = 0.1;
    cfg.rule.c2 = 0.08;
    cfg.rule.u1 = 0.1;
    cfg.rule.u2 = 0.08;
    cfg.rule.proportional = true;
    return cfg;
}

} // namespace

ScenarioConfig preset(const std::string& name) {
    // The initial recovered fraction closes the simplex: 1 - S0 - I1_0 - I2_0.
    const DegreeClassState initial{0.4, 0.3, 0.2, 0.1};
    if (name == "case1") {
        ScenarioConfig cfg = base_case();
        cfg.name = "case1";
        cfg.classes = {4};
        cfg.initial = {initial};
        cfg.rule.gap1 = 0.77;
        cfg.rule.gap2 = 0.77;
        cfg.rule.level1 = 0.0058;
        cfg.rule.level2 = 0.0033;
        return cfg;
    }
    if (name == "case2") {
        ScenarioConfig cfg = base_case();
        cfg.name = "case2";
        cfg.classes = {7};
        cfg.initial = {initial};
        cfg.rule.gap1 = 0.72;
        cfg.rule.gap2 = 0.72;
        cfg.rule.level1 = 0.0138;
        cfg.rule.level2 = 0.0048;
        return cfg;
    }
    if (name == "case3") {
        ScenarioConfig cfg = base_case();
        cfg.name = "case3";
        cfg.classes = {4};
        cfg.initial = {initial};
        cfg.delta1 = 0.1;
        cfg.delta2 = 0.2;
        cfg.rule.gap1 = 2.3;
        cfg.rule.gap2 = 1.78;
        cfg.rule.level1 = 0.003;
        cfg.rule.level2 = 0.002;
        return cfg;
    }
    throw ConfigError("unknown preset '" + name + "' (expected case1, case2 or case3)");
}

std::vector<std::string> preset_names() {
    return {"case1", "case2", "case3"};
}

} // namespace netsir
