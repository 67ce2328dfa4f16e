from .Classification import Classification, Kind
from .CriticalPointRecord import CriticalPointRecord
from .Gradient import ClarkeGenerators, Gradient
from .PointCloud import PointCloud, coinciding_pairs
from .ProjectionRecord import ProjectionRecord
from .classify import classify
from .enumeration import (
    critical_values,
    enumerate_critical,
    euler_characteristic,
)
from .gradient import (
    clarke_generators,
    clarke_min_norm_element,
    generalized_gradient,
)
from .probe import probe_local_model
from .projection import distance, projection_set, squared_distance
