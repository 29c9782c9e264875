#pragma once

#include <Eigen/Core>
#include <vector>

namespace pgspec {

/// Elementary divisors d_1 | d_2 | ... | d_r of an integer matrix, obtained
/// by reduction to Smith normal form. The returned list has min(rows, cols)
/// entries, all nonnegative, with trailing zeros for rank deficiency.
std::vector<long long> elementary_divisors(const Eigen::MatrixXi& m);

/// True iff the subgroup of Z^cols generated by the rows of m is all of
/// Z^cols, i.e. the matrix has full column rank over Z and every elementary
/// divisor equals 1.
bool rows_generate_full_lattice(const Eigen::MatrixXi& m);

} // namespace pgspec
