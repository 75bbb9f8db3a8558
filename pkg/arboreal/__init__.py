"""
Arboreal computes Galois-theoretic statistics of iterated polynomials and
rational maps: exact cycle-pattern distributions of iterated wreath products,
genericity tests, parametric discriminants and finite-field census experiments.
"""

import pathlib

from . import algebra, cli, dynamics, experiments, random, wreath
from .caps import *
from .utils import *

__version__ = pathlib.Path(f"{pathlib.Path(__file__).parent}/VERSION").read_text(
    encoding="utf-8"
)
