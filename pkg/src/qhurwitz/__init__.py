"""Exact weighted Hurwitz numbers, their measures and semiclassical expansions."""

from .algebra import TruncatedSeries, parse_rational
from .characters import character, dimension
from .claims import ClaimRecord, claims_report
from .hurwitz import hurwitz_number, hurwitz_number_oracle
from .measures import (DEFAULT_CONVENTION, MeasureTable, measure_theta, measure_xi,
                       partition_function, weighted_hurwitz)
from .partitions import Partition, enumerate_partitions
from .semiclassics import partition_function_series, phi_series, weight_series, weighted_hurwitz_series
from .tau import content_product, tau_coefficient, verify_generating_identity, weight_gen_series
from .weights import E, EPRIME, EXP, H, WeightModel, phi, weight_profile

__version__ = "0.1.0"
