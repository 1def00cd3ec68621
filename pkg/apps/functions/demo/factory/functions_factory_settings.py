MAX_POINTS = 4
MAX_METRIC_POINTS = 6
PLANE_SCALE = 4.0
