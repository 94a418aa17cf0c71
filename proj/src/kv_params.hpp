#ifndef SWARMTOPO_KV_PARAMS_HPP
#define SWARMTOPO_KV_PARAMS_HPP

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace swarmtopo::detail {

// "a=1,b=2" -> {{"a","1"},{"b","2"}}; empty input -> empty map.
inline std::map<std::string, std::string> parse_kv(std::string_view text,
                                                   std::string_view context)
{
    std::map<std::string, std::string> out;
    std::string item;
    std::istringstream stream{std::string(text)};
    while (std::getline(stream, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expected key=value in '" +
                                        std::string(context) + "'");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

inline double to_number(const std::string& value, std::string_view context)
{
    try {
        std::size_t used = 0;
        const double parsed = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return parsed;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad numeric value '" + value + "' in '" +
                                    std::string(context) + "'");
    }
}

inline double number_or(const std::map<std::string, std::string>& params,
                        const std::string& key, double fallback,
                        std::string_view context)
{
    const auto it = params.find(key);
    return it == params.end() ? fallback : to_number(it->second, context);
}

} // namespace swarmtopo::detail

#endif
