"""Iterated wreath powers of symmetric groups and their leaf actions."""

from .distributions import *
from .groups import *
from .permutations import *
from .trees import *
