"""Frozen reference values for the metrics-sweep regression.

Row layout matches pwmix.bench.TABLE1_GRID ordering.  Columns:
(c_t, eps, r_eps, zeta_gm, zeta_lm, eps_lap,
 e_gm, e_lm, e_geo, e_lap, var_gm, var_lm, var_geo, var_lap,
 h_gm, h_lm, h_geo, h_lap).
The c_t/eps/r_eps keys are printed with 3-significant-digit rounding
(0.167 means 1/6, 1.67 means 5/3, and so on); compare rows by position.
"""

REFERENCE_ROWS = (
    (4.0, 0.1, 0.2, 0.152, 0.148, 0.154, 5.44, 5.46, 6.57, 6.5, 55.72, 55.91, 86.71, 84.86, 3.38, 3.39, 3.58, 3.57),
    (4.0, 0.1, 0.4, 0.212, 0.207, 0.218, 3.41, 3.42, 4.67, 4.59, 19.49, 19.62, 44.2, 42.32, 2.89, 2.89, 3.24, 3.22),
    (4.0, 0.1, 0.5, 0.235, 0.228, 0.241, 3.04, 3.05, 4.22, 4.14, 14.96, 15.07, 36.15, 34.5, 2.76, 2.76, 3.14, 3.12),
    (4.0, 0.1, 1.0, 0.334, 0.316, 0.339, 2.39, 2.39, 2.94, 2.93, 8.47, 8.48, 17.82, 17.45, 2.46, 2.46, 2.78, 2.77),
    (4.0, 0.167, 0.333, 0.228, 0.219, 0.231, 3.55, 3.57, 4.35, 4.32, 22.88, 23.04, 38.41, 37.55, 2.96, 2.96, 3.17, 3.16),
    (4.0, 0.167, 0.667, 0.297, 0.285, 0.304, 2.53, 2.55, 3.32, 3.28, 10.32, 10.41, 22.53, 21.72, 2.58, 2.58, 2.9, 2.88),
    (4.0, 0.167, 0.833, 0.326, 0.31, 0.333, 2.36, 2.36, 3.02, 2.99, 8.68, 8.74, 18.67, 18.1, 2.49, 2.49, 2.81, 2.79),
    (4.0, 0.167, 1.67, 0.501, 0.445, 0.491, 2.05, 2.04, 1.92, 2.02, 6.27, 6.19, 7.81, 8.38, 2.3, 2.29, 2.36, 2.4),
    (4.0, 0.2, 0.4, 0.263, 0.251, 0.267, 3.08, 3.11, 3.76, 3.74, 17.04, 17.2, 28.84, 28.23, 2.81, 2.82, 3.02, 3.02),
    (4.0, 0.2, 0.8, 0.335, 0.319, 0.343, 2.31, 2.32, 2.93, 2.9, 8.52, 8.6, 17.62, 17.11, 2.48, 2.48, 2.78, 2.76),
    (4.0, 0.2, 1.0, 0.368, 0.347, 0.375, 2.17, 2.18, 2.65, 2.65, 7.39, 7.44, 14.57, 14.28, 2.41, 2.41, 2.68, 2.67),
    (4.0, 0.2, 2.0, 0.597, 0.512, 0.572, 1.95, 1.93, 1.58, 1.72, 5.73, 5.62, 5.45, 6.19, 2.25, 2.24, 2.18, 2.25),
    (4.0, 0.25, 0.5, 0.313, 0.296, 0.317, 2.61, 2.64, 3.15, 3.14, 12.1, 12.25, 20.28, 19.93, 2.65, 2.65, 2.85, 2.84),
    (4.0, 0.25, 1.0, 0.391, 0.366, 0.398, 2.07, 2.08, 2.49, 2.5, 6.88, 6.94, 12.93, 12.71, 2.37, 2.38, 2.62, 2.61),
    (4.0, 0.25, 1.25, 0.431, 0.399, 0.436, 1.98, 1.98, 2.25, 2.28, 6.17, 6.2, 10.6, 10.61, 2.31, 2.31, 2.52, 2.52),
    (4.0, 0.25, 2.5, 0.761, 0.619, 0.706, 1.83, 1.81, 1.2, 1.39, 5.15, 5.0, 3.29, 4.09, 2.19, 2.18, 1.92, 2.04),
    (4.0, 0.5, 1.0, 0.548, 0.497, 0.554, 1.57, 1.62, 1.73, 1.78, 4.59, 4.74, 6.48, 6.59, 2.16, 2.17, 2.27, 2.28),
    (4.0, 0.5, 2.0, 0.654, 0.576, 0.652, 1.44, 1.47, 1.42, 1.51, 3.68, 3.74, 4.51, 4.79, 2.05, 2.05, 2.08, 2.12),
    (4.0, 0.5, 2.5, 0.744, 0.633, 0.723, 1.42, 1.44, 1.23, 1.35, 3.56, 3.58, 3.45, 3.91, 2.03, 2.03, 1.95, 2.02),
    (5.0, 0.1, 0.2, 0.145, 0.142, 0.146, 5.63, 5.64, 6.88, 6.82, 58.44, 58.63, 95.19, 93.37, 3.42, 3.42, 3.62, 3.61),
    (5.0, 0.1, 0.4, 0.194, 0.189, 0.198, 3.72, 3.73, 5.13, 5.05, 22.64, 22.75, 53.16, 51.34, 2.97, 2.97, 3.33, 3.31),
    (5.0, 0.1, 0.5, 0.211, 0.206, 0.216, 3.39, 3.39, 4.7, 4.63, 18.08, 18.17, 44.66, 43.05, 2.86, 2.86, 3.24, 3.23),
    (5.0, 0.1, 1.0, 0.289, 0.274, 0.292, 2.79, 2.78, 3.41, 3.42, 11.4, 11.36, 23.72, 23.6, 2.61, 2.61, 2.93, 2.93),
    (5.0, 0.167, 0.333, 0.216, 0.208, 0.219, 3.75, 3.77, 4.59, 4.57, 25.01, 25.17, 42.69, 41.93, 3.01, 3.01, 3.22, 3.21),
    (5.0, 0.167, 0.667, 0.269, 0.258, 0.274, 2.84, 2.85, 3.68, 3.64, 12.77, 12.85, 27.51, 26.81, 2.69, 2.69, 3.0, 2.99),
    (5.0, 0.167, 0.833, 0.291, 0.277, 0.295, 2.68, 2.69, 3.39, 3.37, 11.14, 11.18, 23.47, 23.0, 2.61, 2.61, 2.92, 2.91),
    (5.0, 0.167, 1.67, 0.428, 0.38, 0.414, 2.41, 2.39, 2.27, 2.4, 8.66, 8.54, 10.77, 11.73, 2.46, 2.45, 2.53, 2.57),
    (5.0, 0.2, 0.4, 0.249, 0.238, 0.252, 3.28, 3.3, 3.97, 3.96, 18.94, 19.09, 32.07, 31.58, 2.87, 2.87, 3.08, 3.07),
    (5.0, 0.2, 0.8, 0.303, 0.288, 0.308, 2.6, 2.61, 3.25, 3.23, 10.73, 10.79, 21.57, 21.17, 2.6, 2.6, 2.88, 2.87),
    (5.0, 0.2, 1.0, 0.328, 0.309, 0.332, 2.48, 2.49, 2.99, 3.0, 9.61, 9.63, 18.41, 18.25, 2.54, 2.54, 2.8, 2.8),
    (5.0, 0.2, 2.0, 0.506, 0.435, 0.479, 2.28, 2.27, 1.9, 2.07, 7.92, 7.77, 7.66, 8.81, 2.41, 2.41, 2.35, 2.43),
    (5.0, 0.25, 0.5, 0.297, 0.281, 0.3, 2.79, 2.82, 3.32, 3.32, 13.71, 13.86, 22.51, 22.28, 2.71, 2.72, 2.9, 2.9),
    (5.0, 0.25, 1.0, 0.353, 0.331, 0.357, 2.33, 2.35, 2.77, 2.78, 8.77, 8.82, 15.85, 15.73, 2.49, 2.5, 2.72, 2.72),
    (5.0, 0.25, 1.25, 0.383, 0.355, 0.384, 2.25, 2.26, 2.55, 2.59, 8.09, 8.1, 13.49, 13.62, 2.45, 2.45, 2.64, 2.65),
    (5.0, 0.25, 2.5, 0.637, 0.52, 0.582, 2.13, 2.11, 1.47, 1.7, 7.06, 6.89, 4.77, 5.99, 2.36, 2.35, 2.11, 2.23),
    (5.0, 0.5, 1.0, 0.529, 0.479, 0.532, 1.67, 1.72, 1.81, 1.86, 5.31, 5.47, 6.98, 7.15, 2.22, 2.24, 2.31, 2.32),
    (5.0, 0.5, 2.0, 0.593, 0.526, 0.59, 1.58, 1.62, 1.59, 1.67, 4.56, 4.64, 5.53, 5.83, 2.15, 2.16, 2.19, 2.22),
    (5.0, 0.5, 2.5, 0.649, 0.561, 0.632, 1.56, 1.6, 1.44, 1.56, 4.46, 4.51, 4.58, 5.09, 2.14, 2.14, 2.09, 2.15),
    (6.0, 0.1, 0.2, 0.139, 0.136, 0.14, 5.82, 5.83, 7.17, 7.12, 61.5, 61.67, 103.25, 101.58, 3.45, 3.45, 3.66, 3.66),
    (6.0, 0.1, 0.4, 0.179, 0.175, 0.182, 4.04, 4.05, 5.55, 5.48, 26.15, 26.25, 62.15, 60.39, 3.04, 3.05, 3.41, 3.4),
    (6.0, 0.1, 0.5, 0.193, 0.188, 0.197, 3.73, 3.73, 5.14, 5.08, 21.56, 21.63, 53.37, 51.8, 2.95, 2.95, 3.33, 3.32),
    (6.0, 0.1, 1.0, 0.257, 0.243, 0.257, 3.17, 3.16, 3.85, 3.88, 14.71, 14.64, 30.19, 30.34, 2.73, 2.73, 3.05, 3.05),
    (6.0, 0.167, 0.333, 0.207, 0.199, 0.209, 3.95, 3.96, 4.8, 4.78, 27.3, 27.46, 46.54, 45.91, 3.05, 3.06, 3.26, 3.26),
    (6.0, 0.167, 0.667, 0.248, 0.238, 0.251, 3.12, 3.13, 3.99, 3.97, 15.44, 15.5, 32.32, 31.73, 2.78, 2.78, 3.08, 3.07),
    (6.0, 0.167, 0.833, 0.265, 0.253, 0.268, 2.98, 2.99, 3.73, 3.72, 13.81, 13.83, 28.26, 27.92, 2.72, 2.72, 3.01, 3.01),
    (6.0, 0.167, 1.67, 0.374, 0.334, 0.36, 2.74, 2.72, 2.61, 2.76, 11.3, 11.15, 14.12, 15.48, 2.59, 2.59, 2.66, 2.71),
    (6.0, 0.2, 0.4, 0.239, 0.228, 0.241, 3.46, 3.48, 4.15, 4.14, 20.95, 21.1, 34.9, 34.51, 2.92, 2.93, 3.12, 3.12),
    (6.0, 0.2, 0.8, 0.28, 0.266, 0.283, 2.86, 2.87, 3.52, 3.52, 13.08, 13.14, 25.31, 25.01, 2.7, 2.7, 2.96, 2.95),
    (6.0, 0.2, 1.0, 0.299, 0.282, 0.301, 2.76, 2.77, 3.29, 3.31, 11.98, 11.99, 22.18, 22.14, 2.65, 2.65, 2.89, 2.89),
    (6.0, 0.2, 2.0, 0.439, 0.379, 0.413, 2.59, 2.57, 2.21, 2.4, 10.29, 10.11, 10.23, 11.79, 2.55, 2.54, 2.5, 2.58),
    (6.0, 0.25, 0.5, 0.286, 0.27, 0.288, 2.96, 2.98, 3.46, 3.46, 15.36, 15.51, 24.37, 24.22, 2.77, 2.77, 2.94, 2.94),
    (6.0, 0.25, 1.0, 0.327, 0.307, 0.33, 2.57, 2.58, 3.0, 3.02, 10.73, 10.78, 18.53, 18.5, 2.59, 2.59, 2.8, 2.8),
    (6.0, 0.25, 1.25, 0.349, 0.324, 0.349, 2.5, 2.51, 2.81, 2.85, 10.07, 10.08, 16.26, 16.49, 2.56, 2.56, 2.74, 2.75),
    (6.0, 0.25, 2.5, 0.545, 0.449, 0.496, 2.39, 2.38, 1.75, 2.0, 9.08, 8.89, 6.57, 8.22, 2.49, 2.48, 2.28, 2.39),
    (6.0, 0.5, 1.0, 0.517, 0.468, 0.519, 1.75, 1.8, 1.85, 1.91, 5.91, 6.09, 7.31, 7.5, 2.27, 2.28, 2.33, 2.35),
    (6.0, 0.5, 2.0, 0.556, 0.497, 0.554, 1.68, 1.73, 1.71, 1.78, 5.32, 5.43, 6.3, 6.61, 2.22, 2.23, 2.26, 2.28),
    (6.0, 0.5, 2.5, 0.591, 0.518, 0.579, 1.67, 1.71, 1.6, 1.7, 5.24, 5.32, 5.56, 6.04, 2.21, 2.22, 2.19, 2.24),
    (7.0, 0.1, 0.2, 0.134, 0.131, 0.135, 6.02, 6.03, 7.43, 7.38, 64.82, 64.99, 110.86, 109.31, 3.48, 3.48, 3.7, 3.69),
    (7.0, 0.1, 0.4, 0.168, 0.163, 0.17, 4.35, 4.36, 5.94, 5.88, 29.97, 30.06, 71.06, 69.37, 3.11, 3.11, 3.48, 3.47),
    (7.0, 0.1, 0.5, 0.179, 0.174, 0.182, 4.06, 4.06, 5.55, 5.5, 25.37, 25.42, 62.14, 60.66, 3.03, 3.03, 3.41, 3.4),
    (7.0, 0.1, 1.0, 0.232, 0.219, 0.231, 3.54, 3.53, 4.28, 4.32, 18.36, 18.27, 37.12, 37.57, 2.84, 2.84, 3.15, 3.16),
    (7.0, 0.167, 0.333, 0.2, 0.192, 0.201, 4.13, 4.15, 4.97, 4.96, 29.7, 29.86, 49.96, 49.47, 3.1, 3.1, 3.3, 3.3),
    (7.0, 0.167, 0.667, 0.232, 0.223, 0.235, 3.39, 3.4, 4.26, 4.25, 18.25, 18.3, 36.87, 36.37, 2.86, 2.86, 3.15, 3.14),
    (7.0, 0.167, 0.833, 0.246, 0.235, 0.248, 3.27, 3.27, 4.02, 4.03, 16.64, 16.65, 32.89, 32.67, 2.81, 2.81, 3.09, 3.09),
    (7.0, 0.167, 1.67, 0.334, 0.299, 0.321, 3.05, 3.03, 2.94, 3.1, 14.12, 13.94, 17.79, 19.52, 2.71, 2.7, 2.78, 2.83),
    (7.0, 0.2, 0.4, 0.231, 0.221, 0.233, 3.63, 3.65, 4.29, 4.29, 23.0, 23.15, 37.34, 37.05, 2.97, 2.97, 3.15, 3.15),
    (7.0, 0.2, 0.8, 0.263, 0.25, 0.265, 3.11, 3.12, 3.76, 3.76, 15.52, 15.57, 28.75, 28.56, 2.78, 2.78, 3.02, 3.02),
    (7.0, 0.2, 1.0, 0.278, 0.262, 0.279, 3.02, 3.02, 3.55, 3.58, 14.45, 14.45, 25.77, 25.82, 2.74, 2.74, 2.97, 2.97),
    (7.0, 0.2, 2.0, 0.388, 0.339, 0.366, 2.86, 2.85, 2.51, 2.72, 12.77, 12.58, 13.09, 15.03, 2.66, 2.65, 2.63, 2.7),
)
