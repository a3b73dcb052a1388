#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace orbitsieve {

/// b = exp(log T / ceil(log T)): the unique base in (1,e] with
/// log T / log b a (positive) integer.
double choose_b(double T);

/// K_T(s) = (T^s b^{1-s} - T^{1-s} b^s) / (b^{1-s} - b^s), evaluated through
/// the cancellation-free sinh form in extended precision.  s = 1/2 rejected.
double kernel_K(double T, double b, double s);

/// L_T(s) = (T^{1-s} - T^s) / (b^{1-s} - b^s).
double kernel_L(double T, double b, double s);

/// Critical-line values at s = 1/2 + it (real-valued there):
///   K = T^{1/2} sin(t log(b/T)) / sin(t log b)
///   L = (T/b)^{1/2} sin(t log T) / sin(t log b).
double kernel_K_line(double T, double b, double t);
double kernel_L_line(double T, double b, double t);

/// Raw closed forms over complex s, for cross-checking the specialized
/// evaluators.
std::complex<double> kernel_K_closed(double T, double b, std::complex<double> s);
std::complex<double> kernel_L_closed(double T, double b, std::complex<double> s);

/// K_T(s) F_1 + L_T(s) F_b: grows the count at height T from the counts at
/// heights 1 and b.
double reconstruct(double T, double b, double s, double F1, double Fb);

double lambda_from_s(double s);
std::complex<double> lambda_from_s(std::complex<double> s);

/// lambda < 1/4 -> real s = 1/2 + sqrt(1/4-lambda); lambda >= 1/4 ->
/// s = 1/2 + i sqrt(lambda-1/4).
std::complex<double> s_from_lambda(double lambda);

/// Least-squares fit of log|O(T)| against log T.
struct GrowthFit {
    std::vector<double> heights;
    std::vector<std::uint64_t> counts;
    double delta_hat = 0.0;
    double c0_hat = 0.0;
    double residual = 0.0;  // max |fit - data| in log-log space
};

/// Requires >= 4 points, strictly increasing heights spanning at least two
/// decades, positive counts.  trim_first_decade drops heights below
/// 10 * min(T) before fitting.
GrowthFit fit_growth(const std::vector<std::pair<double, std::uint64_t>>& points,
                     bool trim_first_decade = false);

struct GapPreset {
    std::string name;
    double theta;
};

/// {gamburd: 5/6, kim_sarnak: 39/64, selberg_conj: 1/2}.
const std::vector<GapPreset>& gap_presets();

double theta_preset(const std::string& name);

}  // namespace orbitsieve
