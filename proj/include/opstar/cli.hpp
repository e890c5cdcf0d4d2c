#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "opstar/io.hpp"

/// Batch entry point: `dn certify`, `dn falsify`, `algebra check`,
/// `embed run` and `gallery <name>`, each producing one versioned report.
namespace opstar::cli {

enum ExitCode : int { kExitPass = 0, kExitInput = 1, kExitCheck = 2, kExitOverflow = 3 };

inline const std::vector<std::string> kGalleryItems{
    "torus",  "fourier", "legendre",    "nikolskii", "joukowski", "hadamard",
    "taylor", "lambda-unit", "kinf-unit", "bump",    "ainf"};

struct RunConfig {
    std::string command;  ///< "dn certify", "dn falsify", "algebra check", "embed run", "gallery"
    std::string gallery;  ///< item name for "gallery"
    std::vector<std::string> inputs;

    std::vector<Eigen::Index> dims;  ///< empty: command default
    std::uint64_t seed = 1;
    std::optional<double> tol;
    std::optional<std::filesystem::path> out;
    bool emit_csv = true;
    bool emit_matrices = false;
    std::optional<std::size_t> probes;

    // dn
    std::string space = "s";
    int q = 1;
    std::vector<int> r{2};
    std::string alpha = "linear";
    double alpha_scale = 1.0;
    double alpha_power = 1.0;
    std::string family = "ainf";

    // falsification and A∞ table
    int n_max = 40;
    int p = 3;
    int p_max = 5;
    double threshold = 1e3;

    // embed
    std::string algebra;  ///< builtin such as "cyclic:3"; empty uses inputs[0]
    Eigen::Index ambient = 0;
    std::string method = "cholesky";
    bool permute = false;
    std::size_t pairs = 16;

    // gallery
    int torus_n = 1;
    Eigen::Index count = 10000;
    std::vector<int> sizes{7};
    int degree = 0;  ///< 0: item default
    std::vector<double> radii{1.2, 1.5, 2.0};
    std::vector<int> s_list{1, 2};
    std::vector<int> k_list{1, 2};
    std::vector<int> m_list{1, 2, 3, 4};
    std::vector<double> eps_list{1.0, 0.5, 0.25};
    int taylor_min = 5;
    int taylor_max = 15;
};

/// Build the report for a config. Throws io::InputError, std::invalid_argument
/// and friends for bad input; numeric overflow is recorded in the report.
io::Report execute(const RunConfig& config);

/// execute() plus output and exit-status mapping.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parse argv (with an optional --config JSON record) and run.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Builtin algebra by name: diagonal:d, cyclic:n, torus:AxB…, matrix:n,
/// zero:d, annihilator:d.
staralg::StarAlgebraSpec builtin_algebra(const std::string& name);

}  // namespace opstar::cli
