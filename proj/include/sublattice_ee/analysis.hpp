#pragma once

// Headline quantities assembled from the lower modules: antipodal mutual
// information, extensivity sweeps, and the data series behind the survey
// figures. Sweep rows are independent, so they may be computed on a small
// thread pool; SUBLATTICE_EE_THREADS caps the worker count and results are
// assembled in grid order regardless of scheduling.

#include <limits>
#include <string>
#include <vector>

namespace sublattice {

struct MutualInfoResult {
    int n_sites;
    double s_a, s_b;  // equal by translation symmetry; both reported
    double s_ab;
    double i_ab;      // s_a + s_b - s_ab
};

// A = single site 0, B = the antipodal site N/2: N even, >= 4. S_AB comes
// from the two-site sublattice of stride N/2. beta_m = +infinity selects
// the vacuum. Memory O(1), time O(N).
MutualInfoResult mutual_information_antipodal(int n_sites, double mass_eps,
                                              double beta_m);

// A small named table: one axis column plus derived columns, used for both
// sweeps and figure series.
struct SweepResult {
    std::string axis;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

// Entropy and entropy density over a mass_eps grid for several sublattice
// sizes at fixed stride. Rows are grouped by n_sub, grid-ordered within each
// group. Columns: mass_eps, n_sub, entropy, entropy_density, lambda_min,
// lambda_max.
SweepResult extensivity_profile(int stride, const std::vector<double>& mass_eps_grid,
                                const std::vector<int>& n_sub_values, double beta_m);

enum class SweepAxis { mass_eps, beta_m, n_sites, n_sub, stride };

struct SweepBase {
    int stride = 2;
    int n_sub = 10;
    double mass_eps = 1.0;
    double beta_m = std::numeric_limits<double>::infinity();
};

// Generic one-axis sweep of the sublattice entropy; integer axes take
// integral values. Columns: <axis>, entropy, entropy_density, lambda_min,
// lambda_max.
SweepResult parameter_sweep(SweepAxis axis, const std::vector<double>& values,
                            const SweepBase& base);

enum class FigureId { fig4, fig5, fig6, fig7 };

struct FigureOptions {
    int grid_points = 60;       // mass_eps resolution for fig4/fig5/fig6
    double mass_eps = 1e-6;     // fig7 only
    int n_max = 1024;           // fig7 only: largest ring, powers of two from 4
};

// Data series behind the survey figures:
//   fig4: vacuum extensivity, p = 2,  N_A in {5, 10, 500}
//   fig5: vacuum extensivity, p = 10, N_A in {1, 2, 100}
//   fig6: continuum lambda_0 and its per-site entropy over mass_eps
//   fig7: antipodal mutual information over even N (powers of two)
SweepResult figure_data(FigureId which, const FigureOptions& opt = {});

// Geometric grid, endpoints included, strictly increasing.
std::vector<double> log_spaced_grid(double lo, double hi, int points);

// Worker-thread cap: SUBLATTICE_EE_THREADS if set (positive integer,
// anything else is rejected), hardware concurrency otherwise.
unsigned max_worker_threads();

}  // namespace sublattice
