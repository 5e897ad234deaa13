#pragma once

#include <stdexcept>
#include <string>

namespace prodseries {

// Thrown when an enumeration would exceed a configured cap. The CLI maps this
// to its own exit code so harnesses can tell "too big" from "wrong".
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Enumeration limits. Defaults keep desk-scale runs in the seconds range:
// 10! ~ 3.6e6 permutations, Bell(12) ~ 4.2e6 set partitions.
struct EnumerationCaps {
    int permutation_max = 10;
    int set_partition_max = 12;
};

}  // namespace prodseries
