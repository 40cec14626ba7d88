#pragma once

#include <map>
#include <string>
#include <vector>

#include "csf/ints.hpp"

namespace csf {

// A composition is a vector of non-negative integers; a partition is a
// composition whose parts are weakly decreasing with zero parts trimmed.
using Composition = std::vector<int>;
using Partition = std::vector<int>;

bool is_weakly_decreasing(const Composition& a);

// True iff all parts are >= 0 and weakly decreasing (trailing zeros allowed).
bool is_partition_shape(const Composition& a);

// Drops trailing zeros; requires a partition shape.
Partition trim_zeros(Composition a);

int weight(const Composition& a);

Partition conjugate(const Partition& lam);

// Pads (or trims zero parts) to exactly `len` entries.
Composition pad_to(const Partition& lam, int len);

// All partitions of n with at most max_len parts, in descending
// lexicographic order (e.g. (4), (3,1), (2,2), (2,1,1), (1,1,1,1)).
std::vector<Partition> partitions_of(int n, int max_len);

// Descending lexicographic order on partitions; used everywhere a
// deterministic ordering of partition-keyed maps is needed.
struct LexGreater {
  bool operator()(const Composition& a, const Composition& b) const {
    return a > b;  // lexicographic on vectors, larger first parts first
  }
};

template <class V>
using PartitionMap = std::map<Partition, V, LexGreater>;

// "3,1" <-> {3,1}; throws std::invalid_argument on malformed input.
Composition parse_csv_ints(const std::string& s);
std::string format_csv(const Composition& a);

// Number of distinct ways to arrange the parts of lam (a partition of n)
// over n ordered slots, padding with zeros: n! / (prod multiplicities!).
Int arrangement_count(const Partition& lam, int n);

Int factorial(int n);

}  // namespace csf
