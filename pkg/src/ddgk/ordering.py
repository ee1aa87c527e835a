"""DD-monomial orderings and their extensions to free-module monomials.

Orderings are realised as sort keys: ``u > v`` iff ``key(u) > key(v)``.
Generator precedence is fixed at S_1 > ... > S_m and D_1 > ... > D_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ParseError, ShapeMismatch

FAMILIES = ("total_degree_dd", "block_dd")
S_ORDERS = ("lex", "deglex", "degrevlex")
D_ORDERS = ("deglex", "degrevlex")
EXTENSIONS = ("top", "pot")

LESS, EQUAL, GREATER = -1, 0, 1


def _block_key(name: str):
    if name == "lex":
        return lambda a: a
    if name == "deglex":
        return lambda a: (sum(a), a)
    if name == "degrevlex":
        return lambda a: (sum(a), tuple(-x for x in reversed(a)))
    raise ValueError(f"unknown block ordering {name!r}")


@dataclass(frozen=True)
class OrderingSpec:
    family: str = "total_degree_dd"
    s_order: str = "deglex"
    d_order: str = "deglex"

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown ordering family {self.family!r}")
        if self.s_order not in S_ORDERS:
            raise ValueError(f"unknown S-block ordering {self.s_order!r}")
        if self.d_order not in D_ORDERS:
            raise ValueError(f"D-block ordering must be degree-compatible, got {self.d_order!r}")

    def key(self, m: int):
        """Sort key on flat exponent vectors whose first ``m`` entries are S-exponents."""
        return _monomial_key(self, m)

    def is_total_degree(self) -> bool:
        return self.family == "total_degree_dd"

    def __str__(self):
        prefix = "tdeg" if self.family == "total_degree_dd" else "block"
        return f"{prefix}:{self.s_order},{self.d_order}"


@lru_cache(maxsize=None)
def _monomial_key(spec: OrderingSpec, m: int):
    sk, dk = _block_key(spec.s_order), _block_key(spec.d_order)
    if spec.family == "total_degree_dd":
        return lambda u: (sum(u), sk(u[:m]), dk(u[m:]))
    return lambda u: (sk(u[:m]), dk(u[m:]))


@dataclass(frozen=True)
class ModuleOrderingSpec:
    """Extension to monomials X^a e_i, given as (position, exps) with 0-based positions.

    Smaller positions are larger: e_1 > e_2 > ...
    """

    base: OrderingSpec = OrderingSpec()
    extension: str = "top"

    def __post_init__(self):
        if self.extension not in EXTENSIONS:
            raise ValueError(f"unknown module extension {self.extension!r}")

    def key(self, m: int):
        return _module_key(self, m)

    def is_total_degree(self) -> bool:
        return self.extension == "top" and self.base.is_total_degree()

    def __str__(self):
        return f"{self.base}/{self.extension}"


@lru_cache(maxsize=None)
def _module_key(spec: ModuleOrderingSpec, m: int):
    mk = spec.base.key(m)
    if spec.extension == "top":
        return lambda pm: (mk(pm[1]), -pm[0])
    return lambda pm: (-pm[0], mk(pm[1]))


DEFAULT_ORDERING = OrderingSpec()


def _cmp(a, b) -> int:
    return (a > b) - (a < b)


def compare(spec: OrderingSpec, u, v, m: int) -> int:
    if len(u) != len(v):
        raise ShapeMismatch("monomials of different shapes")
    if not 0 <= m <= len(u):
        raise ShapeMismatch(f"S-block size {m} does not fit exponent length {len(u)}")
    k = spec.key(m)
    return _cmp(k(tuple(u)), k(tuple(v)))


def compare_module(spec: ModuleOrderingSpec, a, b, m: int) -> int:
    if len(a[1]) != len(b[1]):
        raise ShapeMismatch("module monomials of different shapes")
    k = spec.key(m)
    return _cmp(k((a[0], tuple(a[1]))), k((b[0], tuple(b[1]))))


def is_total_degree(spec) -> bool:
    return spec.is_total_degree()


def parse_ordering(text: str) -> OrderingSpec:
    """Parse ``"tdeg:deglex,deglex"`` or ``"block:lex,deglex"``."""
    try:
        family, blocks = text.strip().split(":")
        s_order, d_order = (b.strip() for b in blocks.split(","))
    except ValueError:
        raise ParseError(f"ordering {text!r} is not of the form FAMILY:S_ORDER,D_ORDER") from None
    families = {"tdeg": "total_degree_dd", "block": "block_dd"}
    if family.strip() not in families:
        raise ParseError(f"unknown ordering family {family!r}; use 'tdeg' or 'block'")
    try:
        return OrderingSpec(families[family.strip()], s_order, d_order)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_extension(text: str) -> str:
    ext = text.strip().lower()
    if ext not in EXTENSIONS:
        raise ParseError(f"module extension must be 'top' or 'pot', got {text!r}")
    return ext
