"""Map jets J_k(u, v): v polynomials in u source variables, without constant term, truncated above order k."""

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyRing
from sympy.utilities.iterables import multiset_permutations

from algebra.rational import to_rational
from common.exceptions import DimensionMismatchException, ValidationException

Exponent = Tuple[int, ...]
Vector = Tuple[object, ...]


@lru_cache(maxsize=None)
def jet_ring(u: int) -> PolyRing:
    if u < 1:
        raise ValidationException(message="jet source dimension must be positive")
    return PolyRing([f"x_{i}" for i in range(1, u + 1)], QQ, grlex)


def truncate(poly, order: int):
    """Drop every monomial of total degree above ``order``."""
    kept = {m: c for m, c in poly.items() if sum(m) <= order}
    if len(kept) == len(poly):
        return poly
    return poly.ring.from_dict(kept)


def vector(values: Iterable) -> Vector:
    return tuple(to_rational(v) for v in values)


@dataclass(frozen=True)
class Jet:
    """
    A k-jet of a map (C^u, 0) -> (C^v, 0). Component j of coordinate a is the
    degree-j part of maps[a], i.e. f_a^(j)/j! in the monomial basis.
    """

    u: int
    v: int
    k: int
    maps: Tuple[object, ...]

    def __post_init__(self):
        if self.k < 1 or self.v < 1:
            raise ValidationException(message="jets need order and target dimension >= 1")
        if len(self.maps) != self.v:
            raise DimensionMismatchException(
                message=f"jet has {len(self.maps)} coordinates, expected {self.v}"
            )
        ring = jet_ring(self.u)
        maps = []
        for poly in self.maps:
            if poly.ring != ring:
                poly = poly.set_ring(ring)
            if any(sum(m) == 0 for m in poly.keys()):
                raise ValidationException(message="jets are based at the origin; drop constant terms")
            maps.append(truncate(poly, self.k))
        object.__setattr__(self, "maps", tuple(maps))

    # construction

    @classmethod
    def from_terms(
        cls, u: int, v: int, k: int, terms: Mapping[Sequence[int], Sequence[object]]
    ) -> "Jet":
        ring = jet_ring(u)
        coords: List[Dict[Exponent, object]] = [{} for _ in range(v)]
        for exp, values in terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != u or any(e < 0 for e in exp) or not 1 <= sum(exp) <= k:
                raise ValidationException(message=f"bad jet monomial {exp} for J_{k}({u},{v})")
            values = vector(values)
            if len(values) != v:
                raise DimensionMismatchException(message=f"jet term {exp} needs {v} values")
            for a, value in enumerate(values):
                if value:
                    coords[a][exp] = coords[a].get(exp, QQ.zero) + value
        return cls(u, v, k, tuple(ring.from_dict(c) for c in coords))

    @classmethod
    def zero(cls, u: int, v: int, k: int) -> "Jet":
        ring = jet_ring(u)
        return cls(u, v, k, (ring.zero,) * v)

    @classmethod
    def identity(cls, u: int, k: int) -> "Jet":
        return cls(u, u, k, tuple(jet_ring(u).gens))

    @classmethod
    def linear(cls, matrix: Sequence[Sequence[object]], k: int = 1) -> "Jet":
        """The jet of x -> A x; ``matrix`` has v rows of u entries."""
        rows = [vector(r) for r in matrix]
        u = len(rows[0]) if rows else 0
        ring = jet_ring(u)
        maps = []
        for row in rows:
            if len(row) != u:
                raise DimensionMismatchException(message="ragged matrix")
            maps.append(sum((g * c for c, g in zip(row, ring.gens)), ring.zero))
        return cls(u, len(rows), k, tuple(maps))

    # inspection

    def component(self, j: int) -> Dict[Exponent, Vector]:
        """The homogeneous degree-j part as monomial -> value vector."""
        out: Dict[Exponent, List[object]] = {}
        for a, poly in enumerate(self.maps):
            for m, c in poly.items():
                if sum(m) == j:
                    out.setdefault(m, [QQ.zero] * self.v)[a] = c
        return {m: tuple(vals) for m, vals in sorted(out.items(), reverse=True)}

    def polarized(self, vectors: Sequence[Sequence[object]]) -> Vector:
        """
        The symmetric multilinear form of component j = len(vectors) evaluated at the
        given source vectors, normalised so that P(x, ..., x) is the component at x.
        """
        j = len(vectors)
        vectors = [vector(vec) for vec in vectors]
        if any(len(vec) != self.u for vec in vectors):
            raise DimensionMismatchException(message=f"polarization needs vectors of length {self.u}")
        total = [QQ.zero] * self.v
        for exp, values in self.component(j).items():
            letters = [pos for pos, e in enumerate(exp) for _ in range(e)]
            weight = QQ(1, factorial(j))
            for e in exp:
                weight *= factorial(e)
            acc = QQ.zero
            for perm in multiset_permutations(letters):
                term = QQ.one
                for slot, pos in enumerate(perm):
                    term *= vectors[slot][pos]
                    if not term:
                        break
                acc += term
            if acc:
                for a, value in enumerate(values):
                    total[a] += weight * acc * value
        return tuple(total)

    def is_zero(self) -> bool:
        return not any(self.maps)

    # arithmetic

    def _check(self, other: "Jet") -> None:
        if (self.u, self.v, self.k) != (other.u, other.v, other.k):
            raise DimensionMismatchException(
                message=f"J_{self.k}({self.u},{self.v}) vs J_{other.k}({other.u},{other.v})"
            )

    def __add__(self, other: "Jet") -> "Jet":
        self._check(other)
        return Jet(self.u, self.v, self.k, tuple(a + b for a, b in zip(self.maps, other.maps)))

    def scale(self, factor) -> "Jet":
        factor = to_rational(factor)
        return Jet(self.u, self.v, self.k, tuple(p * factor for p in self.maps))


def compose_jets(outer: Jet, inner: Jet) -> Jet:
    """outer o inner, dropping every term of degree above k."""
    if outer.k != inner.k:
        raise DimensionMismatchException(message=f"jet orders differ: {outer.k} vs {inner.k}")
    if outer.u != inner.v:
        raise DimensionMismatchException(
            message=f"cannot compose J({outer.u},{outer.v}) after J({inner.u},{inner.v})"
        )
    k = inner.k
    ring = jet_ring(inner.u)
    powers: Dict[Tuple[int, int], object] = {}

    def power(var: int, e: int):
        key = (var, e)
        if key not in powers:
            if e == 0:
                powers[key] = ring.one
            else:
                powers[key] = truncate(power(var, e - 1) * inner.maps[var], k)
        return powers[key]

    maps = []
    for poly in outer.maps:
        acc = ring.zero
        for m, c in poly.items():
            term = ring.one * c
            for var, e in enumerate(m):
                if e:
                    term = truncate(term * power(var, e), k)
                if not term:
                    break
            acc += term
        maps.append(acc)
    return Jet(inner.u, outer.v, k, tuple(maps))
