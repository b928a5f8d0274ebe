#pragma once

// Every asymptotic O(.) statement exercised by this laboratory is tested as a
// concrete interval or coefficient at desk scale (x up to 1e7).  All such
// measured envelopes live here so they are auditable in one place.  They are
// empirical: loose enough to be stable across platforms, tight enough to
// detect real regressions.

namespace pnt::envelopes {

// --- Chebyshev bounds: pi(x) ln x / x and psi(x)/x on [1e3, 1e7] ---
inline constexpr double kPiRatioLo = 0.9;
inline constexpr double kPiRatioHi = 1.3;
inline constexpr double kPsiRatioLo = 0.8;
inline constexpr double kPsiRatioHi = 1.2;
// |psi(1e7)/1e7 - 1|
inline constexpr double kPsiRatioTolAt1e7 = 0.01;

// --- Mertens sums ---
// |sum_{p<=x} ln p / p - ln x| on [1e2, 1e7]
inline constexpr double kMertensABound = 2.0;
// pairwise spread of sum 1/p - ln ln x at x = 1e5, 1e6, 1e7
inline constexpr double kMertensBPairwise = 0.01;
// ln x * prod (1 - 1/p) at 1e7 (limit is e^-gamma ~ 0.5615)
inline constexpr double kMertensPLo = 0.53;
inline constexpr double kMertensPHi = 0.60;

// --- Logarithmic integral ---
inline constexpr double kPiOverLiLo = 0.995;
inline constexpr double kPiOverLiHi = 1.0005;
inline constexpr double kLiOracleRelTol = 1e-6;

// --- Exact-identity tolerances ---
// sum Lambda(n) floor(x/n) vs sum_{n<=x} ln n
inline constexpr double kFactorialIdentityRelTol = 1e-9;
// |sum Lambda(n)(floor(x/n) - 2 floor(x/2n)) - x ln 2| <= coef * ln x at x = 1e4
inline constexpr double kBinaryWeightedSlackCoef = 40.0;

// --- Summatory Moebius / Liouville at 1e6 ---
inline constexpr double kSummatoryRatioBound = 0.01;

// --- Zero-free functional (both the rational and Hecke versions) ---
// the truncated 3-4-1 sums are termwise nonnegative; floor absorbs rounding
inline constexpr double kThreeFourOneFloor = -1e-9;

// --- Mellin identity checks ---
// slack added on top of the rigorous combined truncation bound
inline constexpr double kMellinSlack = 1e-6;
// psi(x) <= coef * x, used for integral tail bounds
inline constexpr double kPsiUpperCoef = 2.0;
// psi_i(x) <= coef * x
inline constexpr double kGaussianPsiUpperCoef = 3.0;

// --- Gauss circle problem: |sum_{m<=n} r(m) - n pi| <= coef * sqrt(n) ---
inline constexpr double kCircleRemainderCoef = 5.0;

// --- Weyl sums over the ball: |S_h(x)| <= coef * sqrt(x) ln x ---
inline constexpr double kWeylEnvelopeCoef = 10.0;
// |S_h(1e6)| / 1e6 for h in {1,2,3}
inline constexpr double kWeylRatioBoundAt1e6 = 0.01;

// --- Hecke prime number theorem at x = 1e6 ---
inline constexpr double kGaussianPsiRatioLo = 0.93;   // psi_i(x) / 2x
inline constexpr double kGaussianPsiRatioHi = 1.07;
inline constexpr double kGaussianPiRatioLo = 1.0;     // pi_i(x) ln x / x
inline constexpr double kGaussianPiRatioHi = 1.15;
// |psi_i(x) - 4 sum_{canonical p} ln|p|| <= coef * sqrt(x) ln x
inline constexpr double kPrimePowerCorrectionCoef = 8.0;

// --- Angular equidistribution at x = 1e6 ---
inline constexpr double kEquidistMaxRelDev = 0.03;    // 8 equal sectors
inline constexpr double kEquidistWeylRatio = 0.05;    // (ln x / x)|sum e^{4ih arg p}|

// --- Tauberian integral trace ---
inline constexpr double kTauberianCauchyTol = 0.05;   // |T(1e6) - T(1e5)|

// --- Continuation / residue ---
inline constexpr double kResiduePiTol = 0.05;         // |(z-1) zeta_i(z) - pi| at z = 1.001

// --- Square-free density Q(x)/x at 1e4..1e6 (limit 6/pi^2 ~ 0.6079) ---
inline constexpr double kSquarefreeDensityLo = 0.60;
inline constexpr double kSquarefreeDensityHi = 0.62;

}  // namespace pnt::envelopes
