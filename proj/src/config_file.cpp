#include "swarmtopo/config_file.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace swarmtopo {

namespace {

std::string trimmed(const std::string& text)
{
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

long long parse_int(const std::string& value, const std::string& key)
{
    try {
        std::size_t used = 0;
        const long long parsed = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return parsed;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer '" + value + "' for key '" + key + "'");
    }
}

std::vector<int> parse_int_list(const std::string& value, const std::string& key)
{
    std::vector<int> out;
    std::istringstream stream(value);
    std::string item;
    while (std::getline(stream, item, ','))
        out.push_back(static_cast<int>(parse_int(trimmed(item), key)));
    return out;
}

void apply(ExperimentConfig& cfg, const std::string& key, const std::string& value)
{
    if (key == "problem")
        cfg.problem = value;
    else if (key == "dims")
        cfg.dims = static_cast<int>(parse_int(value, key));
    else if (key == "scheme")
        cfg.scheme = value;
    else if (key == "topology")
        cfg.topology = value;
    else if (key == "swarm-size")
        cfg.m = static_cast<int>(parse_int(value, key));
    else if (key == "steps")
        cfg.T = static_cast<int>(parse_int(value, key));
    else if (key == "runs")
        cfg.runs = static_cast<int>(parse_int(value, key));
    else if (key == "seed")
        cfg.seed = static_cast<std::uint64_t>(parse_int(value, key));
    else if (key == "t-ref")
        cfg.t_ref = static_cast<int>(parse_int(value, key));
    else if (key == "lhs-candidates")
        cfg.lhs_candidates = static_cast<int>(parse_int(value, key));
    else if (key == "checkpoints")
        cfg.checkpoints = parse_int_list(value, key);
    else
        throw std::invalid_argument("unknown config key '" + key + "'");
}

} // namespace

std::vector<ExperimentConfig> parse_experiment_configs(std::istream& in)
{
    std::vector<ExperimentConfig> configs;
    ExperimentConfig defaults;
    bool in_experiment = false;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        const std::string line = trimmed(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        if (line == "[experiment]") {
            configs.push_back(defaults);
            in_experiment = true;
            continue;
        }
        if (line.front() == '[')
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": unknown section " + line);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("line " + std::to_string(line_no) +
                                        ": expected key = value");
        const std::string key = trimmed(line.substr(0, eq));
        const std::string value = trimmed(line.substr(eq + 1));
        apply(in_experiment ? configs.back() : defaults, key, value);
    }
    if (configs.empty())
        throw std::invalid_argument("config defines no [experiment] section");
    return configs;
}

std::vector<ExperimentConfig> load_experiment_configs(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file " + path.string());
    return parse_experiment_configs(in);
}

} // namespace swarmtopo
