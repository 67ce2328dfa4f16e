from .cloud_io import load_point_cloud, parse_point_cloud
from .plot import plot_level_sets, render_svg
from .report import analysis_report, dumps
