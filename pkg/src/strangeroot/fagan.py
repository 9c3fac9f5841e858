"""Fagan's construction on pairs (i, a_i) with i + a_i even."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .arith import checked, require_int
from .core import AlistPair


class FaganPair(NamedTuple):
    index: int
    value: int

    def __str__(self) -> str:
        return f"({self.index},{self.value})"


@dataclass(frozen=True)
class FaganSequence:
    seed: int
    pairs: tuple[FaganPair, ...]

    @property
    def root(self) -> int:
        return self.pairs[-1].index

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self) -> Iterator[FaganPair]:
        return iter(self.pairs)

    def __str__(self) -> str:
        return " -> ".join(str(p) for p in self.pairs)


def fagan_step(i: int, a: int) -> int:
    """Smallest z with (i+1)*z > i*a and i+1+z even."""
    z = checked(i * a, "i*a") // (i + 1) + 1
    if (i + 1 + z) % 2:
        z += 1
    return z


def fagan_sequence(m: int) -> FaganSequence:
    require_int(m, "m", 1)
    i, a = 2, 2 * m
    pairs = [FaganPair(i, a)]
    while a > i:
        a = fagan_step(i, a)
        i += 1
        pairs.append(FaganPair(i, a))
    if a != i:
        raise RuntimeError(f"fagan_sequence({m}) terminated on ({i},{a}) with value < index")
    return FaganSequence(m, tuple(pairs))


def cf(m: int) -> int:
    return fagan_sequence(m).root


def to_fagan(p: AlistPair) -> FaganPair:
    """<x, y> -> (x, 2y - x)."""
    x, y = p
    a = 2 * y - x
    if x < 1 or a < 1:
        raise ValueError(f"<{x},{y}> has no positive Fagan image")
    return FaganPair(x, a)


def from_fagan(p: FaganPair) -> AlistPair:
    """(x, a) -> <x, (x + a) / 2>; only defined on even-sum pairs."""
    x, a = p
    if (x + a) % 2:
        raise ValueError(f"({x},{a}) has odd sum; not a Fagan pair")
    y = (x + a) // 2
    if x < 1 or y < 1:
        raise ValueError(f"({x},{a}) maps outside the positive pairs")
    return AlistPair(x, y)
