"""Integer-valued (or rational) functions on vertex sets."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable, Mapping, NamedTuple, Union

from .errors import CapacityError, GraphError

Number = Union[int, Fraction]

TABLE_MAX_N = 16
PAIR_CHECK_MAX_N = 12


def to_mask(x: Union[int, Iterable[int]]) -> int:
    if isinstance(x, int):
        return x
    mask = 0
    for v in x:
        mask |= 1 << v
    return mask


def _normalize(value) -> Number:
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


class SetFunction:
    """A set function ``l`` with ``l(empty) = 0``.

    Two modes: ``uniform(m)`` gives every nonempty set the value ``m`` and
    works at any size; ``table`` stores an explicit value for each nonempty
    subset of an ``n``-vertex ground set (``n <= 16``).
    """

    __slots__ = ("_m", "_table", "n")

    def __init__(self, m: Number = None, table: dict = None, n: int = None):
        self._m = None if m is None else _normalize(m)
        self._table = table
        self.n = n

    @classmethod
    def uniform(cls, m: Number) -> "SetFunction":
        return cls(m=m)

    @classmethod
    def table(cls, n: int, values: Mapping) -> "SetFunction":
        if n > TABLE_MAX_N:
            raise CapacityError(f"table mode supports n <= {TABLE_MAX_N}, got {n}")
        table = {}
        for key, val in values.items():
            mask = to_mask(key)
            if mask == 0:
                if val != 0:
                    raise GraphError("l(empty set) must be 0")
                continue
            if mask >> n:
                raise GraphError(f"subset {mask:#b} outside ground set of size {n}")
            table[mask] = _normalize(val)
        if len(table) != (1 << n) - 1:
            raise GraphError(f"table must define all {(1 << n) - 1} nonempty subsets")
        return cls(table=table, n=n)

    @classmethod
    def from_callable(cls, n: int, fn: Callable[[frozenset], Number]) -> "SetFunction":
        values = {}
        for mask in range(1, 1 << n):
            values[mask] = fn(frozenset(v for v in range(n) if mask >> v & 1))
        return cls.table(n, values)

    @property
    def is_uniform(self) -> bool:
        return self._m is not None

    @property
    def constant(self) -> Number:
        """The value ``m`` of a uniform function."""
        if self._m is None:
            raise ValueError("not a uniform set function")
        return self._m

    @property
    def is_integral_uniform(self) -> bool:
        return self._m is not None and isinstance(self._m, int)

    def value(self, mask: int) -> Number:
        if mask == 0:
            return 0
        if self._m is not None:
            return self._m
        return self._table[mask]

    def __call__(self, x: Union[int, Iterable[int]]) -> Number:
        return self.value(to_mask(x))

    def scaled(self, k: Number) -> "SetFunction":
        """The function ``k * l``; use ``Fraction(1, eps)`` for ``l / eps``."""
        k = Fraction(k)
        if self._m is not None:
            return SetFunction.uniform(self._m * k)
        return SetFunction(table={s: _normalize(v * k) for s, v in self._table.items()}, n=self.n)

    def __repr__(self):
        if self._m is not None:
            return f"SetFunction.uniform({self._m})"
        return f"SetFunction.table(n={self.n})"


class SetFunctionProperties(NamedTuple):
    intersecting_supermodular: bool
    nonincreasing: bool
    nonnegative: bool


def set_function_properties(l: SetFunction, n: int) -> SetFunctionProperties:
    if l.is_uniform:
        return SetFunctionProperties(True, True, l.constant >= 0)
    if n > PAIR_CHECK_MAX_N:
        raise CapacityError(f"pair enumeration supports n <= {PAIR_CHECK_MAX_N}, got {n}")
    full = 1 << n
    val = [l.value(s) for s in range(full)]
    supermodular = True
    nonincreasing = True
    for a in range(1, full):
        va = val[a]
        for b in range(a, full):
            if a & b:
                if supermodular and val[a & b] + val[a | b] < va + val[b]:
                    supermodular = False
                if nonincreasing and a & b == a and va < val[b]:
                    nonincreasing = False
            if not (supermodular or nonincreasing):
                break
    nonnegative = all(v >= 0 for v in val)
    return SetFunctionProperties(supermodular, nonincreasing, nonnegative)


def is_intersecting_supermodular(l: SetFunction, n: int) -> bool:
    return set_function_properties(l, n).intersecting_supermodular


def format_table(l: SetFunction) -> str:
    if l.is_uniform:
        raise ValueError("only table-mode functions have a file form")
    return "".join(f"s {mask} {l.value(mask)}\n" for mask in range(1, 1 << l.n))


def parse_table(text: str, n: int) -> SetFunction:
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 3 or fields[0] != "s":
            raise GraphError(f"line {lineno}: expected 's <bitmask> <value>'")
        values[int(fields[1])] = Fraction(fields[2])
    return SetFunction.table(n, values)


def load_table(path, n: int) -> SetFunction:
    return parse_table(Path(path).read_text(), n)
