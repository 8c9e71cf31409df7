#pragma once

// Command-line front end. run_cli is the whole program minus main(),
// so tests can drive it directly.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/config error,
// 3 guard exhaustion.

#include <iosfwd>
#include <string>
#include <vector>

#include "qrep/report.hpp"

namespace qrep {

// "1>2,2>3" with 1-based vertices; reports the position of the first
// offending token
std::vector<Arrow> parse_arrows(const std::string& text, int rank);
Eigen::VectorXi parse_dim_vector(const std::string& text);
std::vector<long long> parse_prime_list(const std::string& text);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrep
