"""Exact scalar fields: the rationals and prime fields F_p."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    k = 2
    while k * k <= p:
        if p % k == 0:
            return False
        k += 1
    return True


class Field:
    """Characteristic 0 means exact rationals (``Fraction``); otherwise ints mod p."""

    __slots__ = ("characteristic",)

    def __init__(self, characteristic: int = 0):
        characteristic = int(characteristic)
        if characteristic != 0 and not _is_prime(characteristic):
            raise ValueError(f"field characteristic must be 0 or a prime, got {characteristic}")
        self.characteristic = characteristic

    def __eq__(self, other):
        return isinstance(other, Field) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    def __repr__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    def __call__(self, x):
        if isinstance(x, str):
            x = Fraction(x.strip())
        p = self.characteristic
        if p == 0:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({p})")
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    def reduce(self, x):
        return x % self.characteristic if self.characteristic else x

    def inverse(self, x):
        if self.characteristic:
            return pow(x, -1, self.characteristic)
        return 1 / Fraction(x)

    def format(self, x) -> str:
        return str(x)


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)


def rank(rows: Iterable[Mapping], field: Field) -> int:
    """Rank of sparse vectors (dicts key -> scalar) by Gaussian elimination."""
    return len(echelon(rows, field))


def echelon(rows: Iterable[Mapping], field: Field) -> dict:
    """Reduced rows keyed by pivot; each stored row has pivot coefficient 1."""
    pivots: dict = {}
    for row in rows:
        v = {k: field.reduce(c) for k, c in row.items() if field.reduce(c) != 0}
        v = reduce_against(v, pivots, field)
        if not v:
            continue
        piv = min(v)
        inv = field.inverse(v[piv])
        pivots[piv] = {k: field.reduce(c * inv) for k, c in v.items()}
    return pivots


def reduce_against(v: dict, pivots: dict, field: Field) -> dict:
    v = dict(v)
    changed = True
    while changed:
        changed = False
        for piv in sorted(set(v) & set(pivots)):
            c = v[piv]
            for k, d in pivots[piv].items():
                x = field.reduce(v.get(k, 0) - c * d)
                if x:
                    v[k] = x
                else:
                    v.pop(k, None)
            changed = True
            break
    return v
