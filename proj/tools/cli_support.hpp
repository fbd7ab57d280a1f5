#pragma once

/**
 * Helpers for the birefsim command line: angle literals with a "pi" suffix
 * ("0.21pi", "pi") and the key = value scene-config file. Flag values
 * override config values, which override built-in defaults.
 */

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace birefsim::cli {

/// Bad flags or malformed config input (CLI exit code 2).
class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses "0.21pi", "pi", "-0.5pi" or a plain radian value like "1.57".
double parse_angle(std::string_view text);

/// Contents of a config file; every key optional.
struct SceneConfig {
    std::optional<double> n_o;
    std::optional<double> n_e;
    std::optional<double> d_physical; ///< meters, display conversion only
    std::optional<double> beta;       ///< radians
    std::optional<double> ell;        ///< pulse width / d
    std::optional<int> waveplate_index;
};

/// Reads a key = value file ('#' starts a comment). Unknown keys are errors.
SceneConfig load_scene_config(const std::filesystem::path& path);

} // namespace birefsim::cli
