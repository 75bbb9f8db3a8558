"""Command line interface and report encodings."""

from .main import *
from .serialization import *
