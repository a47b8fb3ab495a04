"""Exact verification and construction of finite-dimensional Hopf quasigroups."""

from .exactlin import BasedSpace, LinMap, PrimeField, Q, compose, identity, swap, tensor
from .core import AlgebraicStructure, Morphism, convolution, convolution_inverse
from .laws import LAWS, SUITES, check_law, verify_suite

__version__ = "0.1.0"
