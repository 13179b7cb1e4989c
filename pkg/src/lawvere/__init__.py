"""Exact finite models of Lawvere metric spaces, their actions and approach spaces."""
from .quantale import INF, ExtendedRationals, FiniteChain, parse_quantale
from .order import FinitePoset
from .metric import MetricSpace, WeightTable
from .action import OrdAction
from .approach import ApproachSpace

__version__ = "0.1.0"

__all__ = [
    "INF",
    "ExtendedRationals",
    "FiniteChain",
    "parse_quantale",
    "FinitePoset",
    "MetricSpace",
    "WeightTable",
    "OrdAction",
    "ApproachSpace",
]
