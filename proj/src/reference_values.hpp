#pragma once

// Published values used as reproduction targets. Rows follow the table
// layouts built in harness.cpp; n is implied by the row position.

namespace fejer::reference {

// m=5, m=10, m=sqrt(n), m_OP, m_ON MISE; avg m_OP, avg m_ON, m_TH
inline constexpr double density_table[18][8] = {
  { 0.000336, 0.000478, 0.000335, 0.000354, 0.000544, 7.41, 10.1, 6.73 },
  { 0.00226, 0.000877, 0.00118, 0.000926, 0.0011, 11.7, 14.8, 11.1 },
  { 0.000371, 0.000578, 0.000399, 0.000386, 0.000619, 5.5, 9.78, 6.69 },
  { 0.000613, 0.000667, 0.000534, 0.000561, 0.000759, 5.99, 10.3, 7.98 },
  { 0.00021, 0.000464, 0.000272, 0.000244, 0.0004, 5.94, 7.92, 5.57 },
  { 0.00116, 0.000775, 0.000788, 0.000838, 0.00101, 7.21, 12.9, 9.34 },
  { 0.00018, 0.000491, 0.000274, 1.88e-05, 0.000384, 5, 7.79, 4.52 },
  { 0.00022, 0.000467, 0.000279, 0.000251, 0.000401, 5.87, 7.75, 5.53 },
  { 0.000233, 0.000545, 0.000325, 6.61e-05, 0.00049, 1.67, 8.74, 4.94 },
  { 0.000133, 6.18e-05, 7.58e-05, 6.61e-05, 9.15e-05, 11.6, 15.5, 10.7 },
  { 0.0018, 0.000285, 0.00018, 0.000175, 0.00211, 18.2, 23.5, 17.6 },
  { 0.000128, 6.33e-05, 7.92e-05, 6.61e-05, 9.35e-06, 8.56, 15.2, 10.6 },
  { 0.000393, 9.73e-05, 9.91e-05, 0.000103, 0.000118, 9.34, 16.2, 12.7 },
  { 5.63e-05, 4.36e-05, 6.41e-05, 4.2e-05, 5.64e-05, 9.18, 11.5, 8.85 },
  { 0.000703, 0.000156, 0.000125, 0.000144, 0.000162, 11.2, 20.5, 14.8 },
  { 2.79e-05, 3.65e-05, 6.12e-05, 2.9e-05, 5.02e-05, 7.79, 11.3, 7.18 },
  { 5.74e-05, 4.44e-05, 6.46e-05, 4.3e-05, 0.00058, 9.08, 11.5, 8.77 },
  { 4.24e-05, 4.47e-05, 6.93e-05, 0.000567, 6.67e-05, 1.65, 13, 7.84 },
};

// same columns as density_table
inline constexpr double classical_table[18][8] = {
  { 0.000526, 0.00418, 0.000982, 0.00133, 0.00263, 7.62, 8.76, 7.5 },
  { 0.0029, 0.00541, 0.00241, 0.00379, 0.00586, 8.97, 10, 9.29 },
  { 0.000632, 0.00432, 0.00115, 0.00106, 0.00245, 6.77, 8.45, 7.48 },
  { 0.000942, 0.00449, 0.00137, 0.00136, 0.000265, 6.98, 8.48, 8.07 },
  { 0.000416, 0.00412, 0.000933, 0.00091, 0.00186, 6.95, 7.92, 6.92 },
  { 0.00156, 0.00474, 0.00169, 0.000195, 0.00416, 7.51, 9.44, 8.63 },
  { 0.000332, 0.00425, 0.000885, 0.000693, 0.00188, 6.45, 7.97, 6.32 },
  { 0.000425, 0.00408, 0.00094, 0.000899, 0.00187, 6.91, 7.91, 6.89 },
  { 0.000402, 0.00411, 0.00093, 0.000351, 0.00198, 4.07, 8.24, 6.57 },
  { 0.000164, 0.000322, 0.00189, 0.000231, 0.000449, 9.08, 10.5, 9.15 },
  { 0.00194, 0.000755, 0.00238, 0.000886, 0.0013, 10.9, 12.1, 11.3 },
  { 0.000163, 0.000317, 0.00184, 0.000171, 0.000371, 8.05, 10.1, 9.11 },
  { 0.000346, 0.000372, 0.00187, 0.000256, 0.000438, 8.39, 10.2, 9.85 },
  { 7.68e-05, 0.000281, 0.0019, 0.000141, 0.000261, 8.3, 9.25, 8.43 },
  { 0.000795, 0.000517, 0.00207, 0.000434, 0.000826, 9.03, 11.4, 10.5 },
  { 4.25e-05, 0.000266, 0.00183, 0.000101, 0.000245, 7.95, 9.29, 7.71 },
  { 7.78e-05, 0.000294, 0.00195, 0.000141, 0.00029, 8.23, 9.31, 8.4 },
  { 5.49e-05, 0.000259, 0.00176, 7.22e-05, 0.000265, 4, 9.72, 8.01 },
};

// none, WL(0.1), WL(0.2), U, each (param, nonpar); avg m_OP, avg m_ON
inline constexpr double rounded_table[16][10] = {
  { 0.00268, 0.0133, 0.00168, 0.00241, 0.00225, 0.00201, 0.00154, 0.00145, 10.9, 13.8 },
  { 0.00581, 0.0358, 0.00119, 0.00271, 0.00133, 0.00125, 0.000693, 0.000644, 13.6, 17.6 },
  { 0.0228, 0.0899, 0.00192, 0.00447, 0.0112, 0.00113, 0.00047, 0.000454, 16.9, 22.1 },
  { 0.0913, 0.962, 0.00436, 0.0167, 0.000989, 0.00125, 0.000315, 0.000398, 22.9, 45.3 },
  { 0.000169, 0.00038, 0.000162, 0.000272, 0.000156, 0.000181, 0.000161, 0.00025, 4.28, 7.48 },
  { 6.86e-05, 0.000408, 6.57e-05, 0.00013, 6.51e-05, 6.84e-05, 6.5e-05, 0.000963, 5.31, 9.82 },
  { 2.95e-05, 0.000458, 2.85e-05, 6.14e-05, 3.03e-05, 2.72e-05, 2.81e-05, 3.15e-05, 6.58, 11.4 },
  { 9.02e-06, 0.00177, 8.33e-06, 8.55e-05, 9.55e-06, 1.11e-05, 8.09e-06, 8.29e-06, 8.99, 15 },
  { 0.000404, 0.0005, 0.000368, 0.000408, 0.000371, 0.000378, 0.000359, 0.000388, 7.31, 7.81 },
  { 0.000186, 0.000674, 0.000167, 0.000226, 0.00019, 0.000189, 0.000162, 0.000174, 9.05, 10.1 },
  { 0.00174, 0.000965, 8.29e-05, 0.000141, 9.29e-05, 9.66e-05, 6.77e-05, 7.15e-05, 11.4, 12 },
  { 0.00355, 0.00547, 0.000215, 0.000288, 6.3e-05, 6.59e-05, 2.87e-05, 2.97e-05, 15.3, 15.7 },
  { 0.00244, 0.00276, 0.00148, 0.00153, 0.00205, 0.00208, 0.00132, 0.00135, 11.2, 11.1 },
  { 0.00694, 0.0116, 0.00141, 0.00167, 0.00151, 0.00151, 0.000805, 0.000815, 13.8, 14.3 },
  { 0.0272, 0.0312, 0.00214, 0.0023, 0.00113, 0.00113, 0.00454, 0.000457, 17.3, 17.6 },
  { 0.102, 0.207, 0.00485, 0.0074, 0.00108, 0.00113, 0.000347, 0.000357, 23.4, 27.8 },
};

// m=5, m=10, m=sqrt(n), m_OP MISE; avg m_OP, m_TH
inline constexpr double cdf_fixed_table[26][6] = {
  { 0.000237, 6.64e-05, 0.000114, 4.36e-05, 30.4, 29.3 },
  { 0.000449, 9.18e-05, 0.000189, 4.18e-05, 39, 38 },
  { 0.000584, 0.000685, 0.000572, 0.00082, 10.4, 9.03 },
  { 0.000199, 0.000238, 0.000215, 0.00024, 8.79, 7.78 },
  { 0.000363, 0.000308, 0.000318, 0.000357, 12.1, 11.3 },
  { 0.000373, 0.000593, 0.000472, 0.000505, 6.24, 5.19 },
  { 0.000191, 0.00018, 0.000177, 0.000193, 10.6, 11.5 },
  { 0.00018, 0.000129, 0.000141, 0.000136, 15.6, 17.8 },
  { 0.000223, 0.000215, 0.000209, 0.000249, 9.97, 9.73 },
  { 0.000203, 0.000109, 0.000137, 0.000104, 17.7, 19.6 },
  { 0.000204, 0.000254, 0.000223, 0.000255, 7.28, 6.8 },
  { 0.000242, 0.000233, 0.000227, 0.000264, 9.42, 9.15 },
  { 0.00022, 0.00031, 0.000252, 0.000244, 3.77, 6.69 },
  { 0.000168, 2.11e-05, 9.23e-06, 2.4e-06, 82.9, 82 },
  { 0.000362, 4.14e-05, 1.64e-05, 2.86e-06, 110, 109 },
  { 0.000216, 7.39e-05, 6.88e-05, 7.76e-05, 22.2, 21.1 },
  { 2.1e-05, 1.52e-05, 1.5e-05, 1.6e-05, 18.3, 17.5 },
  { 8.94e-05, 3.97e-05, 3.25e-05, 3.01e-05, 28.3, 27.8 },
  { 3.55e-05, 3.75e-05, 4.26e-05, 4.14e-05, 11, 10.2 },
  { 4.14e-05, 1.82e-05, 1.57e-05, 1.54e-05, 23.5, 28.2 },
  { 6.26e-05, 1.78e-05, 1.3e-05, 1.04e-05, 38.6, 46.9 },
  { 0.000537, 2.74e-05, 2.39e-05, 2.42e-05, 21.5, 23.2 },
  { 8.87e-05, 1.89e-05, 1.17e-05, 7.05e-06, 44.7, 52.3 },
  { 2.08e-05, 1.71e-05, 1.81e-05, 2.05e-05, 14.5, 14.7 },
  { 5.04e-05, 2.77e-05, 2.51e-05, 2.7e-05, 21, 21.5 },
  { 4.09e-05, 2.66e-05, 2.87e-05, 7.57e-05, 3.72, 14.4 },
};

// m=5, m=10, m=sqrt(n), m_OP MISE; avg m_OP, avg theta0, theta0_TH
inline constexpr double cdf_estimated_table[26][7] = {
  { 0.000247, 6.88e-05, 0.000119, 4.27e-05, 30.4, -3.14, -3.14 },
  { 0.000247, 6.88e-05, 0.000119, 4.27e-05, 30.4, -1.56, -1.57 },
  { 0.000247, 6.88e-05, 0.000119, 4.27e-05, 30.4, 0.01, 0 },
  { 0.000242, 0.000244, 0.000239, 0.000254, 8.87, -3.11, -3.14 },
  { 0.000242, 0.000244, 0.000239, 0.000254, 8.87, -1.55, -1.57 },
  { 0.000242, 0.000244, 0.000239, 0.000254, 8.87, 0.02, 0 },
  { 0.00027, 0.000241, 0.000249, 0.000256, 10.4, -2.4, -2.52 },
  { 0.000154, 0.000128, 0.000133, 0.000135, 14.1, -2.36, -2.36 },
  { 0.000228, 0.000242, 0.000232, 0.000244, 8, -1.94, -1.98 },
  { 0.000248, 0.000128, 0.000167, 0.000116, 18.4, -2.7, -2.94 },
  { 0.000303, 0.000341, 0.00032, 0.000325, 6.39, -2.37, -2.36 },
  { 0.000224, 0.000245, 0.000232, 0.000243, 7.18, -1.86, -1.85 },
  { 0.000525, 0.000522, 0.000514, 5.81e-05, 4.16, 1.58, 1.57 },
  { 0.000171, 2.17e-05, 9.62e-06, 2.72e-06, 83.3, -3.14, -3.14 },
  { 0.000171, 2.17e-05, 9.62e-06, 2.72e-06, 83.3, -1.57, -1.57 },
  { 0.000171, 2.17e-05, 9.62e-06, 2.72e-06, 83.3, 0, 0 },
  { 2.81e-05, 2.02e-05, 1.94e-05, 2e-05, 18.3, -3.13, -3.14 },
  { 2.81e-05, 2.02e-05, 1.94e-05, 2e-05, 18.3, -1.58, -1.57 },
  { 2.81e-05, 2.02e-05, 1.94e-05, 2e-05, 18.3, 0, 0 },
  { 3.62e-05, 1.8e-05, 1.57e-05, 1.55e-05, 22.3, -2.49, -2.52 },
  { 4.19e-05, 1.45e-05, 1.15e-05, 1e-05, 34, -2.36, -2.36 },
  { 0.000258, 2.05e-05, 2.02e-05, 2.09e-05, 15.5, -1.98, -1.98 },
  { 9.14e-05, 2.01e-05, 1.26e-05, 7.42e-06, 45.1, -2.88, -2.94 },
  { 1.89e-05, 1.82e-05, 1.9e-05, 1.95e-05, 11.6, -2.35, -2.36 },
  { 2.06e-05, 1.74e-05, 1.75e-05, 1.83e-05, 14, -1.85, -1.85 },
  { 6.78e-05, 3.89e-05, 3.57e-05, 9.73e-05, 4.1, 1.58, 1.57 },
};

// m, m(S1 + 3pi^3/40 - pi log m/(m+1)), m(S2 - 2pi^3/40 + pi log m/(m+1)), m(S1 + S2 + pi^3/40)
inline constexpr double appendix_b_table[9][4] = {
  { 50, 1.29874, -0.18366, 1.11508 },
  { 100, 1.26966, -0.1384, 1.13125 },
  { 200, 1.25469, -0.11518, 1.13951 },
  { 400, 1.2471, -0.10342, 1.14368 },
  { 800, 1.24328, -0.0975, 1.14578 },
  { 1600, 1.24136, -0.09453, 1.14683 },
  { 3200, 1.2404, -0.09305, 1.14735 },
  { 6400, 1.23992, -0.0923, 1.14762 },
  { 12800, 1.23968, -0.09193, 1.14775 },
};

} // namespace fejer::reference
