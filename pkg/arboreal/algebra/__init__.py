"""Exact fields, polynomials, factorization and resultants."""

from .factorization import *
from .fields import *
from .polynomials import *
from .resultants import *
