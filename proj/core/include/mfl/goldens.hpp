#pragma once

#include <array>

/// Reference values for the bundled reproduction targets.
/// Comparisons use |computed - golden| < 10^-decimals, which tolerates the
/// truncation (rather than rounding) used when the references were printed.
namespace mfl::goldens {

// table1: plain iteration of m -> sqrt(3 + 2m) from 4, and the secant runs
// on g(m) = m^2 - 2m - 3 seeded with (4, 3.316624790) and with 5 (companion
// seed sqrt(13)).
inline constexpr std::array<double, 5> kTable1Picard = {
    4.0, 3.316624790, 3.103747667, 3.034385495, 3.011440019};
inline constexpr int kTable1PicardDecimals = 9;

inline constexpr std::array<double, 5> kTable1SecantFrom4 = {
    4.0, 3.3166, 3.0595, 3.0043, 3.0001};
inline constexpr std::array<double, 5> kTable1SecantFrom5 = {
    5.0, 3.6056, 3.1833, 3.0232, 3.0010};
inline constexpr int kTable1SecantDecimals = 4;

// table2: the Aitken transform of the five iterates above, and the restart
// (Steffensen) outer sequence from 4.
inline constexpr std::array<double, 3> kTable2Aitken = {
    3.007431293, 3.000862083, 3.000097228};
inline constexpr int kTable2AitkenDecimals = 9;

// Outer iterates 2 and 3 of the restart scheme.
inline constexpr double kTable2SteffensenSecond = 3.000000510;
inline constexpr double kTable2SteffensenThird = 3.000000000000002;

// table3: scaled satisfaction network gamma* = 20, N0bar = 0.3,
// alpha = 1/30, cap 20, from m0 = 2.
inline constexpr std::array<double, 50> kTable3BanachPicard = {
    2.000000000000000,  7.333333333333333,  10.888888888888888,
    13.259259259259260, 14.839506172839506, 15.893004115226336,
    16.595336076817556, 17.063557384545035, 17.375704923030021,
    17.583803282020014, 17.722535521346675, 17.815023680897784,
    17.876682453931856, 17.917788302621240, 17.945192201747492,
    17.963461467831664, 17.975640978554441, 17.983760652369625,
    17.989173768246417, 17.992782512164279, 17.995188341442852,
    17.996792227628568, 17.997861485085714, 17.998574323390475,
    17.999049548926983, 17.999366365951325, 17.999577577300883,
    17.999718384867258, 17.999812256578171, 17.999874837718778,
    17.999916558479185, 17.999944372319455, 17.999962914879639,
    17.999975276586426, 17.999983517724285, 17.999989011816190,
    17.999992674544124, 17.999995116362747, 17.999996744241834,
    17.999997829494557, 17.999998552996370, 17.999999035330912,
    17.999999356887276, 17.999999571258183, 17.999999714172120,
    17.999999809448077, 17.999999872965383, 17.999999915310255,
    17.999999943540171, 17.999999962360114};

inline constexpr std::array<double, 26> kTable3ReverseIshikawa = {
    2.0,                10.888888888888888, 14.839506172839506,
    16.595336076817560, 17.375704923030028, 17.722535521346678,
    17.876682453931856, 17.945192201747496, 17.975640978554445,
    17.989173768246424, 17.995188341442855, 17.997861485085711,
    17.999049548926983, 17.999577577300883, 17.999812256578174,
    17.999916558479192, 17.999962914879639, 17.999983517724282,
    17.999992674544124, 17.999996744241830, 17.999998552996367,
    17.999999356887276, 17.999999714172120, 17.999999872965383,
    17.999999943540168, 17.999999974906743};
inline constexpr int kTable3Decimals = 12;

// Rows 1-4 of the reference restart column do not follow from the restart
// scheme under any single documented seeding; only the tail (rows 5-6) is
// compared, within 1e-13.
inline constexpr std::array<double, 6> kTable3Steffensen = {
    12.0, 14.0, 12.000000000000002, 9.000000000000002, 17.999999999999986,
    17.999999999999979};

// Reported end-state diagnostics for the same runs.
inline constexpr double kTable3PicardFinalResidual = 1.2547e-8;
inline constexpr double kTable3ReverseFinalResidual = 1.3941e-8;

} // namespace mfl::goldens
