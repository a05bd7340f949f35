"""Exponent lattice H = {0..q-2}^r, cyclotomic cosets, and the dual set maps.

Exponent vectors are plain tuples of ints. Sets of them are kept in
lexicographic order, which is also the order of the torus points, so an
exponent vector doubles as a row/column index via :func:`index_of`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from .galois import GaloisField

Exponent = tuple[int, ...]


class ExponentError(ValueError):
    pass


@dataclass(frozen=True)
class CyclotomicCoset:
    """Orbit of an exponent vector under coordinatewise multiplication by p."""

    leader: Exponent
    members: tuple[Exponent, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, u) -> bool:
        return tuple(u) in self.members

    def __iter__(self) -> Iterator[Exponent]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


class ExponentSet:
    """A deduplicated, lex-ordered subset of H.

    Duplicated input vectors are dropped silently; membership in H is checked
    against ``field`` and ``r``.
    """

    def __init__(self, elements: Iterable[Iterable[int]], field: GaloisField, r: int):
        N = field.order
        elems = set()
        for u in elements:
            u = tuple(int(c) for c in u)
            if len(u) != r:
                raise ExponentError(f"exponent {list(u)} does not have {r} coordinates")
            if any(c < 0 or c >= N for c in u):
                raise ExponentError(f"exponent {list(u)} outside {{0..{N - 1}}}^{r}")
            elems.add(u)
        self.field = field
        self.r = r
        self.elements: tuple[Exponent, ...] = tuple(sorted(elems))
        self._set = frozenset(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Exponent]:
        return iter(self.elements)

    def __contains__(self, u) -> bool:
        return tuple(u) in self._set

    def __eq__(self, other) -> bool:
        if isinstance(other, ExponentSet):
            return self._set == other._set and self.r == other.r
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._set, self.r))

    def __or__(self, other: "ExponentSet | Iterable") -> "ExponentSet":
        return ExponentSet(list(self) + list(other), self.field, self.r)

    def __repr__(self) -> str:
        return f"ExponentSet({[list(u) for u in self.elements]})"

    @property
    def coset_closed(self) -> bool:
        p, N = self.field.p, self.field.order
        return all(tuple(c * p % N for c in u) in self._set for u in self.elements)

    def to_json(self) -> list[list[int]]:
        return [list(u) for u in self.elements]


def full_lattice(field: GaloisField, r: int) -> np.ndarray:
    """All of H as an ((q-1)^r, r) array in lexicographic order."""
    N = field.order
    grids = np.meshgrid(*[np.arange(N)] * r, indexing="ij")
    return np.stack([g.reshape(-1) for g in grids], axis=1).astype(np.int64)


def index_of(u, field: GaloisField) -> int:
    """Lexicographic rank of ``u`` in H."""
    N = field.order
    idx = 0
    for c in u:
        idx = idx * N + int(c)
    return idx


def scale(u: Exponent, factor: int, field: GaloisField) -> Exponent:
    N = field.order
    return tuple(c * factor % N for c in u)


def coset_of(b, field: GaloisField, r: int | None = None) -> CyclotomicCoset:
    b = tuple(int(c) for c in b)
    if r is not None and len(b) != r:
        raise ExponentError(f"exponent {list(b)} does not have {r} coordinates")
    if any(c < 0 or c >= field.order for c in b):
        raise ExponentError(f"exponent {list(b)} outside H")
    orbit = [b]
    nxt = scale(b, field.p, field)
    while nxt != b:
        orbit.append(nxt)
        nxt = scale(nxt, field.p, field)
    start = orbit.index(min(orbit))
    members = tuple(orbit[start:] + orbit[:start])
    return CyclotomicCoset(members[0], members)


@lru_cache(maxsize=64)
def all_cosets(field: GaloisField, r: int) -> tuple[CyclotomicCoset, ...]:
    """Partition of H into cyclotomic cosets, ordered by leader."""
    seen = set()
    out = []
    for u in map(tuple, full_lattice(field, r).tolist()):
        if u in seen:
            continue
        c = coset_of(u, field)
        seen.update(c.members)
        out.append(c)
    return tuple(out)


def hat(u, field: GaloisField) -> Exponent:
    """Coordinatewise negation mod q-1 (zero stays zero)."""
    N = field.order
    return tuple((N - c) % N for c in u)


def u_perp(U: ExponentSet) -> ExponentSet:
    """Exponent set of the dual GT code: H minus the negated set."""
    field, r = U.field, U.r
    negated = {hat(u, field) for u in U}
    H = map(tuple, full_lattice(field, r).tolist())
    return ExponentSet((u for u in H if u not in negated), field, r)


def u_hat(U: ExponentSet) -> ExponentSet:
    """Coset closure of :func:`u_perp`; its subfield-subcode is the dual of D_U."""
    field = U.field
    out = set()
    for b in u_perp(U):
        if b not in out:
            out.update(coset_of(b, field).members)
    return ExponentSet(out, field, U.r)


def contained_cosets(U: ExponentSet) -> list[CyclotomicCoset]:
    return [c for c in all_cosets(U.field, U.r) if all(m in U for m in c.members)]


def meeting_cosets(U: ExponentSet) -> list[CyclotomicCoset]:
    """Cosets with at least one member in ``U``."""
    return [c for c in all_cosets(U.field, U.r) if any(m in U for m in c.members)]


def coset_closure(U: ExponentSet) -> ExponentSet:
    return ExponentSet([m for c in meeting_cosets(U) for m in c.members], U.field, U.r)
