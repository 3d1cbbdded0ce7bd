from importlib.metadata import PackageNotFoundError, version

from .conjugacy import classify, minimize, operator_complexity
from .euclid import euclid_complexity
from .exceptions import ThetaFlipException
from .flip_tree import distance, matrix_complexity
from .hexagon import Hexagon, standard_hexagon
from .manifolds import lens_report, torus_bundle_report
from .models import ExtRational, LatticeVector, UniMatrix

try:
    __version__ = version("thetaflip")
except PackageNotFoundError:
    __version__ = "thetaflip package not installed"
