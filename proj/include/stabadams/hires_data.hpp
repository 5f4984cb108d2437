#pragma once

#include <array>

namespace stabadams::hires_data {

// HIRES reaction constants and initial values, transcribed from
// Hairer & Wanner, "Solving Ordinary Differential Equations II",
// Section IV.10, problem (10.4).
inline constexpr double k1 = 1.71;
inline constexpr double k2 = 0.43;
inline constexpr double k3 = 8.32;
inline constexpr double k4 = 0.69;
inline constexpr double k5 = 0.035;
inline constexpr double k6 = 8.75;
inline constexpr double k7 = 10.03;
inline constexpr double k8 = 0.0007;
inline constexpr double k9 = 1.12;
inline constexpr double k10 = 1.745;
inline constexpr double k11 = 280.0;
inline constexpr double k12 = 1.81;

inline constexpr std::array<double, 8> initial = {1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0057};

}  // namespace stabadams::hires_data
