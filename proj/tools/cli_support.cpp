#include "cli_support.hpp"

#include <charconv>
#include <fstream>
#include <numbers>

namespace birefsim::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view text, std::string_view what) {
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw usage_error("cannot parse " + std::string(what) + ": '" + std::string(text) + "'");
    return value;
}

} // namespace

double parse_angle(std::string_view text) {
    const std::string_view t = trim(text);
    if (t.empty()) throw usage_error("empty angle");
    if (t.size() >= 2 && t.substr(t.size() - 2) == "pi") {
        std::string_view factor = t.substr(0, t.size() - 2);
        if (factor.empty() || factor == "-" || factor == "+")
            return (factor == "-" ? -1.0 : 1.0) * std::numbers::pi;
        return parse_number(factor, "angle") * std::numbers::pi;
    }
    return parse_number(t, "angle");
}

SceneConfig load_scene_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open config file: " + path.string());

    SceneConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view s = line;
        if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;

        const auto eq = s.find('=');
        if (eq == std::string_view::npos)
            throw usage_error("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string_view key = trim(s.substr(0, eq));
        const std::string_view value = trim(s.substr(eq + 1));
        if (value.empty())
            throw usage_error("config line " + std::to_string(lineno) + ": empty value");

        if (key == "n_o") {
            cfg.n_o = parse_number(value, "n_o");
        } else if (key == "n_e") {
            cfg.n_e = parse_number(value, "n_e");
        } else if (key == "d_physical") {
            cfg.d_physical = parse_number(value, "d_physical");
            if (!(*cfg.d_physical > 0.0)) throw usage_error("d_physical must be positive");
        } else if (key == "beta") {
            cfg.beta = parse_angle(value);
        } else if (key == "ell") {
            cfg.ell = parse_number(value, "ell");
        } else if (key == "waveplate_index") {
            cfg.waveplate_index = static_cast<int>(parse_number(value, "waveplate_index"));
        } else {
            throw usage_error("config line " + std::to_string(lineno) + ": unknown key '" +
                              std::string(key) + "'");
        }
    }
    return cfg;
}

} // namespace birefsim::cli
