"""Seeded random number generation."""

from .random import *
