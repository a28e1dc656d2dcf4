#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rcr/cartan.hpp"

namespace rcr {

struct VerifyOptions {
    std::optional<AffineType> only_type;
    int rank_max = 4;
    int s_max = 2;
    int factors_max = 2;
    int workers = 1;
    unsigned seed = 2026;
    bool allow_large = false;
};

struct VerifyCell {
    std::string params;
    bool pass = true;
    std::string witness;
};

struct VerifyReport {
    std::string suite;
    std::string grid;
    std::vector<VerifyCell> cells;

    bool passed() const;
    size_t failures() const;
    std::string json() const;
};

// suite names accepted by run_suite / the CLI
const std::vector<std::string>& suite_names();

// runs one verification suite over its grid; order-independent aggregation,
// deterministic for fixed options regardless of worker count
VerifyReport run_suite(const std::string& suite, const VerifyOptions& opt);

// non-exceptional types with rank <= rank_max (optionally one type only)
std::vector<AffineType> grid_types(const VerifyOptions& opt);

}  // namespace rcr
