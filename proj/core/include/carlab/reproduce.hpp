#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace carlab {

struct ReproduceOptions {
    // R is divided first (floor of 100 replications); any leftover factor
    // divides N. Model parameters are never scaled.
    int scale = 5;
    int reps_override = 0;     // explicit replication count
    int per_stratum = 0;       // explicit N = per_stratum * M_s (appendix tables)
    std::string rows;          // filter, e.g. "2 2" (levels) or "3" (tableA5 row)
    std::uint64_t seed = 20250801;
    int threads = 0;
    std::string output_dir = ".";
};

// target is one of table1..table4, tableA1..tableA5. Writes <target>.csv
// with simulated values side by side with the published ones and returns
// the output path. `log` receives one progress line per table row.
std::string reproduce(const std::string& target, const ReproduceOptions& options,
                      std::ostream& log);

}  // namespace carlab
