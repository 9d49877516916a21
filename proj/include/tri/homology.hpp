#ifndef TRI_HOMOLOGY_HPP
#define TRI_HOMOLOGY_HPP

#include <vector>

namespace tri {

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>; // row major

Mat mat_identity(int n);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_apply(const Mat& a, const Vec& x);
bool mat_equal(const Mat& a, const Mat& b);
long long mat_det(Mat m); // exact, fraction-free elimination

// Smith normal form: u * m * v = s with u, v unimodular and s diagonal with
// divisibility ordering; diag holds the non-negative diagonal entries.
struct SNF {
    Mat s, u, v;
    std::vector<long long> diag;
    int rank = 0;
};
SNF smith(Mat m);

// basis of the integer kernel {x : m x = 0}
std::vector<Vec> kernel(const Mat& m);
// integer solution of m x = b (throws when none exists)
Vec solve_integer(const Mat& m, const Vec& b);

// signature of a symmetric integer matrix (exact, by congruence reduction)
int signature(Mat m);

} // namespace tri

#endif
