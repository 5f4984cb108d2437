#pragma once

// Published reference values for the synthesized methods: damping weights
// (rational), error constants (5 significant digits), and coefficient /
// interval-length tables used as golden data by the unit and acceptance
// suites.

#include <map>
#include <utility>
#include <vector>

namespace golden {

struct Rational {
  long num;
  long den;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Damping weights Delta_j of the first-order family, k = 2..10.
inline const std::map<int, std::vector<Rational>> damping_weights = {
    {2, {{3, 16}, {13, 16}}},
    {3, {{5, 81}, {23, 81}, {53, 81}}},
    {4, {{7, 256}, {33, 256}, {79, 256}, {137, 256}}},
    {5, {{9, 625}, {43, 625}, {21, 125}, {187, 625}, {281, 625}}},
    {6, {{11, 1296}, {53, 1296}, {131, 1296}, {79, 432}, {121, 432}, {167, 432}}},
    {7, {{13, 2401}, {9, 343}, {157, 2401}, {41, 343}, {445, 2401}, {89, 343}, {813, 2401}}},
    {8,
     {{15, 4096},
      {73, 4096},
      {183, 4096},
      {337, 4096},
      {527, 4096},
      {745, 4096},
      {983, 4096},
      {1233, 4096}}},
    {9,
     {{17, 6561},
      {83, 6561},
      {209, 6561},
      {43, 729},
      {203, 2187},
      {289, 2187},
      {1153, 6561},
      {1459, 6561},
      {1777, 6561}}},
    {10,
     {{19, 10000},
      {93, 10000},
      {47, 2000},
      {437, 10000},
      {691, 10000},
      {989, 10000},
      {1323, 10000},
      {337, 2000},
      {2067, 10000},
      {2461, 10000}}},
};

// Error constants of the stabilized (p < k) methods, (k, p) -> C,
// printed to 5 significant digits.
inline const std::map<std::pair<int, int>, double> error_constants = {
    {{2, 1}, 0.75},     {{3, 1}, 1.0556},   {{3, 2}, 0.66667},  {{4, 1}, 1.375},
    {{4, 2}, 1.0380},   {{4, 3}, 0.62500},  {{5, 1}, 1.7},      {{5, 2}, 1.5208},
    {{5, 3}, 1.0227},   {{5, 4}, 0.59861},  {{6, 1}, 2.0278},   {{6, 2}, 2.1128},
    {{6, 3}, 1.5972},   {{6, 4}, 1.0120},   {{6, 5}, 0.57928},  {{7, 1}, 2.3571},
    {{7, 2}, 2.8134},   {{7, 3}, 2.3814},   {{7, 4}, 1.6471},   {{7, 5}, 1.0032},
    {{8, 1}, 2.6875},   {{8, 2}, 3.6223},   {{8, 3}, 3.4092},   {{8, 4}, 2.5751},
    {{8, 5}, 1.6825},   {{8, 6}, 0.99505},  {{9, 1}, 3.0185},   {{9, 2}, 4.5392},
    {{9, 3}, 4.7148},   {{9, 4}, 3.8788},   {{9, 5}, 2.7235},   {{9, 6}, 1.7079},
    {{10, 1}, 3.35},    {{10, 2}, 5.5643},  {{10, 3}, 6.3328},  {{10, 4}, 5.6524},
    {{10, 5}, 4.2616},  {{10, 6}, 2.8403},
};

struct MethodRow {
  int k;
  int p;
  double ell;
  std::vector<double> beta;
};

// Coefficients and interval lengths of the optimized methods, k <= 7
// (20-digit published values, stored to double precision).
inline const std::vector<MethodRow> coefficient_rows = {
    {3, 2, 2.0, {-0.25, 0.0, 1.25}},
    {3, 3, 0.545454545454545455,
     {0.41666666666666666667, -1.3333333333333333333, 1.9166666666666666667}},
    {4, 2, 2.914213562373095,
     {-0.14644660940673046069, -0.18198051533945963691, 0.30330085889911065590,
      1.0251262658470794417}},
    {4, 3, 1.2,
     {0.25, -0.33333333333333333333, -0.58333333333333333333, 1.6666666666666666667}},
    {4, 4, 0.3,
     {-0.375, 1.5416666666666666667, -2.4583333333333333333, 2.2916666666666666667}},
    {5, 2, 3.788854381999832,
     {-0.095491502812526287949, -0.17705098312484227231, 0.0, 0.41311896062463196872,
      0.85942352531273659154}},
    {5, 3, 1.793779334348686,
     {0.16437694101246125619, -0.0097910917750136439271, -0.54022170408305993867,
      -0.047691080558684215630, 1.4333269354042965420}},
    {5, 4, 0.75,
     {-0.25, 0.625, 0.041666666666666666667, -1.4583333333333333333, 2.0416666666666666667}},
    {5, 5, 0.1633393829401088,
     {0.34861111111111111111, -1.7694444444444444444, 3.6333333333333333333,
      -3.8527777777777777778, 2.6402777777777777778}},
    {6, 2, 4.642734410091836,
     {-0.066987298107786995665, -0.14711431702997807715, -0.089745962155603046598,
      0.12564434701786943107, 0.44134295108991756459, 0.73686027918558112375}},
    {6, 3, 2.347826086956522,
     {0.11574074074074731606, 0.087962962962956387640, -0.28703703703705018768,
      -0.40740740740739425676, 0.24537037037037694569, 1.2453703703703637950}},
    {6, 4, 1.181897711989360,
     {-0.17622805914576966884, 0.21777962430380174276, 0.51616209424248971734,
      -0.67621677042591625354, -0.68603094336199527180, 1.8045340543873897341}},
    {6, 5, 0.469157254561251,
     {0.24942129629629629629, -0.89849537037037037036, 0.72476851851851851851,
      1.1391203703703703704, -2.6056712962962962963, 2.3908564814814814815}},
    {7, 2, 5.484476959454063,
     {-0.049515566048790436882, -0.11912520277278577227, -0.11018250002552420585, 0.0,
      0.19832850004594357054, 0.43679241016688116501, 0.64370235863427567947}},
    {7, 3, 2.877558710633067,
     {0.085721156820309456282, 0.11154612811463327941, -0.11721033134808636645,
      -0.35463665779124584907, -0.21744000532205222576, 0.39557372791516432979,
      1.0964459816112773758}},
    {7, 4, 1.586803103995642,
     {-0.13027657069924974882, 0.040823321662060514133, 0.45157410201399110594,
      0.016001789308425411316, -0.79486796947441511195, -0.18702302114721451156,
      1.6037683483364023409}},
    {7, 5, 0.792362028995767,
     {0.18480570522895041008, -0.43546201769087620565, -0.24616437886876401181,
      1.2681635878048099022, -0.32830322506067306370, -1.5947509407373489642,
      2.1517112693239019330}},
};

// (k, p) combinations reported as non-convergent, k <= 10.
inline const std::vector<std::pair<int, int>> not_converged = {
    {7, 6}, {8, 7}, {9, 7}, {9, 8}, {10, 7}, {10, 8}, {10, 9},
};

}  // namespace golden
