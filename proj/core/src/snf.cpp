#include "pgspec/snf.hpp"

#include <cstdlib>

namespace pgspec {

namespace {

using WideMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

// Location of the entry with smallest nonzero magnitude in the trailing
// submatrix starting at (s, s); false when that submatrix is zero.
bool find_pivot(const WideMatrix& a, Eigen::Index s, Eigen::Index& pi, Eigen::Index& pj)
{
    long long best = 0;
    bool found = false;
    for (Eigen::Index i = s; i < a.rows(); ++i) {
        for (Eigen::Index j = s; j < a.cols(); ++j) {
            const long long v = std::llabs(a(i, j));
            if (v != 0 && (!found || v < best)) {
                best = v;
                pi = i;
                pj = j;
                found = true;
            }
        }
    }
    return found;
}

} // namespace

std::vector<long long> elementary_divisors(const Eigen::MatrixXi& m)
{
    WideMatrix a = m.cast<long long>();
    const Eigen::Index n = std::min(a.rows(), a.cols());
    std::vector<long long> divisors(static_cast<std::size_t>(n), 0);

    for (Eigen::Index s = 0; s < n; ++s) {
        Eigen::Index pi = s, pj = s;
        if (!find_pivot(a, s, pi, pj))
            break; // remaining block is zero, divisors stay 0
        a.row(s).swap(a.row(pi));
        a.col(s).swap(a.col(pj));

        bool clean = false;
        while (!clean) {
            clean = true;
            // eliminate column s below the pivot
            for (Eigen::Index i = s + 1; i < a.rows(); ++i) {
                if (a(i, s) == 0) continue;
                const long long q = a(i, s) / a(s, s);
                a.row(i) -= q * a.row(s);
                if (a(i, s) != 0) {
                    // remainder is smaller than the pivot: swap up and restart
                    a.row(s).swap(a.row(i));
                    clean = false;
                }
            }
            if (!clean) continue;
            // eliminate row s right of the pivot
            for (Eigen::Index j = s + 1; j < a.cols(); ++j) {
                if (a(s, j) == 0) continue;
                const long long q = a(s, j) / a(s, s);
                a.col(j) -= q * a.col(s);
                if (a(s, j) != 0) {
                    a.col(s).swap(a.col(j));
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide every entry of the trailing block
            for (Eigen::Index i = s + 1; i < a.rows() && clean; ++i) {
                for (Eigen::Index j = s + 1; j < a.cols() && clean; ++j) {
                    if (a(i, j) % a(s, s) != 0) {
                        a.row(s) += a.row(i);
                        clean = false;
                    }
                }
            }
        }
        divisors[static_cast<std::size_t>(s)] = std::llabs(a(s, s));
    }
    return divisors;
}

bool rows_generate_full_lattice(const Eigen::MatrixXi& m)
{
    const Eigen::Index d = m.cols();
    if (d == 0) return true;
    if (m.rows() < d) return false;
    const auto divisors = elementary_divisors(m);
    for (Eigen::Index i = 0; i < d; ++i) {
        if (divisors[static_cast<std::size_t>(i)] != 1) return false;
    }
    return true;
}

} // namespace pgspec
