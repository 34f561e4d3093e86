"""Alias of :mod:`cubedecomp.qcyc` under the module name ``io``."""

from .qcyc import VERSION, dumps, loads, read_decomposition, write_decomposition

__all__ = ["VERSION", "dumps", "loads", "read_decomposition", "write_decomposition"]
