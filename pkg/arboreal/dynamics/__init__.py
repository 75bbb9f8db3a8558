"""Iteration, critical orbits, genericity tests and parametric discriminants."""

from .discriminants import *
from .genericity import *
from .maps import *
from .orbits import *
