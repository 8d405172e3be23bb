// Partial symmetric matrices on the closed 1-skeleton of a complex: the
// coordinate form of quadratics on a Stanley-Reisner variety.

#ifndef SRPOS_QUADRATIC_HPP
#define SRPOS_QUADRATIC_HPP

#include "srpos/complex.hpp"

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace srpos {

struct Tolerances
{
    double psd_tol = 1e-9;        ///< relative eigenvalue floor
    double rank_tol = 1e-8;       ///< relative singular value cutoff
    double completion_tol = 1e-9; ///< Dykstra residual target
    int max_iter = 20000;

    /// Defaults, with psd_tol taken from SR_TOL_PSD when set.
    static Tolerances from_env();
    /// Throws unless every field is positive.
    void validate() const;
};

class PartialMatrix
{
  public:
    /// The zero matrix on `c`.
    explicit PartialMatrix(SimplicialComplex c);
    /// `values` aligned with `c.closed_skeleton()`.
    PartialMatrix(SimplicialComplex c, Eigen::VectorXd values);

    const SimplicialComplex& complex() const { return c_; }
    const Eigen::VectorXd& values() const { return v_; }

    /// Throws off the closed skeleton.
    double operator()(int i, int j) const;
    double at(std::string_view a, std::string_view b) const;
    void set(int i, int j, double value);
    void set(std::string_view a, std::string_view b, double value);

    /// Dense |F| x |F| block in increasing vertex order; throws unless F is a face.
    Eigen::MatrixXd restrict(Face f) const;
    double max_abs() const;

    PartialMatrix& operator+=(const PartialMatrix& o);
    PartialMatrix& operator-=(const PartialMatrix& o);
    PartialMatrix& operator*=(double s);
    friend PartialMatrix operator+(PartialMatrix a, const PartialMatrix& b) { return a += b; }
    friend PartialMatrix operator-(PartialMatrix a, const PartialMatrix& b) { return a -= b; }
    friend PartialMatrix operator*(double s, PartialMatrix a) { return a *= s; }

  private:
    void require_same(const PartialMatrix& o) const;
    SimplicialComplex c_;
    Eigen::VectorXd v_;
};

/// Largest entrywise difference; throws on a complex mismatch.
double max_abs_diff(const PartialMatrix& a, const PartialMatrix& b);

/// Minimum eigenvalue >= -psd_tol * max(1, largest |entry|).
bool is_psd(const Eigen::MatrixXd& m, const Tolerances& tol);

/// Eigenvalues above rank_tol * max(largest eigenvalue magnitude, scale).
int numeric_rank(const Eigen::MatrixXd& m, const Tolerances& tol, double scale = 0.0);

/// Largest eigenvalue over the facet blocks; the common rank reference.
double spectral_scale(const PartialMatrix& x);

bool is_nonnegative(const PartialMatrix& x, const Tolerances& tol);

/// Throws if `x` is not nonnegative.
int local_rank(const PartialMatrix& x, const Tolerances& tol);

PartialMatrix hadamard(const PartialMatrix& x, const PartialMatrix& y);

/// Y_ij = X_{m(i), m(j)}. Throws unless `m` is valid and `x` lives on its codomain.
PartialMatrix pullback(const SimplicialMap& m, const PartialMatrix& x);

/// The codomain matrix whose pullback is `y`, if the fibers of every closed
/// skeleton pair carry equal values within rank_tol * max(1, |y|).
std::optional<PartialMatrix> in_pullback_image(const SimplicialMap& m, const PartialMatrix& y, const Tolerances& tol);

/// (D X)_ij = d_i d_j X_ij, with `d` indexed by vertex.
PartialMatrix diagonal_congruence(const PartialMatrix& x, const std::vector<double>& d);
PartialMatrix diagonal_congruence(const PartialMatrix& x, const std::map<std::string, double>& d);

/// Vertices whose diagonal exceeds rank_tol times the largest diagonal.
Face support(const PartialMatrix& x, const Tolerances& tol = {});
bool is_full_support(const PartialMatrix& x, const Tolerances& tol = {});

/// Unit-diagonal congruent copy. Throws without full support or nonnegativity.
PartialMatrix normalize(const PartialMatrix& x, const Tolerances& tol = {});

/// Restriction to the subcomplex induced on `keep`.
PartialMatrix restrict_to(const PartialMatrix& x, Face keep);

} // namespace srpos

#endif
