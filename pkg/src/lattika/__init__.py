"""Finite bounded lattices, monotone Galois connections and coclosed elements."""

__version__ = "0.1.0"

from lattika.kernels import BACKEND
from lattika.lattice import Lattice, Interval, chain, from_covers, from_order, interval, is_modular
from lattika.galois import GaloisConnection, MonotoneMap, connect, connection
from lattika.coclosure import classify
from lattika.hollow import hollow_dimension
from lattika.abelian import AbelianGroup, subgroups

__all__ = [
    "AbelianGroup",
    "BACKEND",
    "GaloisConnection",
    "Interval",
    "Lattice",
    "MonotoneMap",
    "chain",
    "classify",
    "connect",
    "connection",
    "from_covers",
    "from_order",
    "hollow_dimension",
    "interval",
    "is_modular",
    "subgroups",
]
