#pragma once

#include <string>

#include "fconn/formaltype.hpp"

namespace fconn {

// Literals such as "1/2", "zeta_3^2", "(1 + 2*zeta_4)".
Cyc parse_cyclotomic(const std::string& s);
// Sums of terms c*z^(p/q), optionally ending in O(z^(N)). Exponents must be
// multiples of 1/ram.
Series parse_series(const std::string& s, int ram = 1);

// {"n": 2, "ramification": 1, "precision": "3", "entries": [[1, 2, "z^(-1)"], ...]}
// with 1-based indices; a global precision also applies to absent entries.
Connection parse_connection(const std::string& json_text);
std::string connection_json(const LoopMatrix& m);
Connection load_connection(const std::string& path);

// {"partition": [2], "depth": "1/2", "coefficients": [[1, "-1/2", "1"], ...]}
FormalType parse_formal_type(const std::string& json_text);
std::string formal_type_json(const FormalType& a);
FormalType load_formal_type(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace fconn
