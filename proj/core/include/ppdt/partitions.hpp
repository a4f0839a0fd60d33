#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ppdt/laurent_poly.hpp"

namespace ppdt {

/// Thrown when an enumeration request exceeds the configured size cap.
class cap_error : public std::runtime_error {
public:
    explicit cap_error(const std::string& what) : std::runtime_error(what) {}
};

/// Plane partition: ragged 2D array of positive integers, weakly decreasing
/// along rows and columns. rows[i][j] is the entry at row i, column j.
struct PlanePartition {
    std::vector<std::vector<int>> rows;

    long size() const;
    bool valid() const;

    friend bool operator==(const PlanePartition& a, const PlanePartition& b) {
        return a.rows == b.rows;
    }
};

/// Diagonal statistics: w0 over the diagonal, w_plus above, w_minus below.
struct StatTriple {
    long w0 = 0;
    long w_plus = 0;
    long w_minus = 0;

    long statistic(long delta) const { return delta * w0 + w_plus - w_minus; }
};

/// Default enumeration cap; counts grow towards 1e5 at n = 20 and the oracle
/// only needs small n.
inline constexpr int kEnumerationCap = 20;

/// Visits every plane partition of size exactly n once, in a deterministic
/// depth-first order (rows generated top-down, entries within a row chosen
/// in descending order, each row dominated elementwise by the previous one).
void enumerate(int n, const std::function<void(const PlanePartition&)>& visit,
               int cap = kEnumerationCap);

std::vector<PlanePartition> enumerate_all(int n, int cap = kEnumerationCap);

StatTriple stats(const PlanePartition& p);

PlanePartition transpose(const PlanePartition& p);

/// Sum over plane partitions of n of q^(delta*w0 + w_plus - w_minus),
/// computed by brute-force enumeration. Ground truth for the expansion engine.
LaurentPoly refined_poly_oracle(int n, long delta, int cap = kEnumerationCap);

/// Sum over plane partitions of n of w0^i * (w_plus - w_minus)^j, exact.
mpz_class joint_moment_oracle(int n, unsigned i, unsigned j, int cap = kEnumerationCap);

// Text format: rows separated by ';', entries by ','. The empty partition is
// an empty line.
std::string to_line(const PlanePartition& p);
PlanePartition from_line(const std::string& line);

}  // namespace ppdt
