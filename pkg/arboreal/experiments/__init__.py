"""Experiments over finite fields and the rationals."""

from .char2 import *
from .chebotarev import *
from .orbit_primes import *
