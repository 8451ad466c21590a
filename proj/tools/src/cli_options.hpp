#ifndef PADELAB_TOOLS_CLI_OPTIONS_HPP
#define PADELAB_TOOLS_CLI_OPTIONS_HPP

#include <optional>
#include <string>

namespace padelab::cli {

enum class Mode { Float, Exact };
enum class Format { Json, Csv };

struct GlobalOptions {
    Mode mode = Mode::Float;
    Format format = Format::Json;
    int grid_density = 16;
    double tol = 1e-12;
    std::optional<std::string> out;
};

struct OracleOptions {
    std::string kind; // exp | geometric | polynomial | rational
    std::string poly_coeffs;
    std::string num_coeffs;
    std::string den_coeffs;
};

struct TableOptions {
    OracleOptions oracle;
    std::string center = "0";
    int p_max = 0;
    int q_max = 0;
    std::string region; // empty: disk of radius 1/2 about the center
};

struct MembershipOptions {
    OracleOptions oracle;
    std::string center = "0";
    int p = 0;
    int q = 0;
};

struct ConstructOptions {
    std::string kind; // poly | poly-smooth | rational | rational-smooth
    std::string poly_coeffs;
    std::string num_coeffs;
    std::string den_coeffs;
    int p = 0;
    int q = 0;
    double eps = 0.0;
    int smooth_order = 0;
    std::string region = "disk:0:1";   // T
    std::string centers = "points:0";  // verification centers
};

struct ConvergeOptions {
    OracleOptions oracle;
    std::string indices = "diagonal";
    int max_n = 1;
    std::string centers = "points:0"; // L
    std::string region = "disk:0:1";  // K
    int deriv_orders = 0;
};

} // namespace padelab::cli

#endif
