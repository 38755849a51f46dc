"""Curve jets, the test-curve equations and the flag of solution spaces with its Plucker coordinates."""

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import factorial
from typing import Dict, List, Sequence, Tuple

import structlog
from sympy import Matrix
from sympy.polys.domains import QQ
from sympy.utilities.iterables import partitions

from common.exceptions import DimensionMismatchException, ValidationException
from jets.jet import Exponent, Jet, Vector, compose_jets, jet_ring, vector
from jets.reparam import Reparam

logger = structlog.get_logger()


@dataclass(frozen=True)
class CurveJet:
    """gamma in J_k(1, n) stored as its columns v_i = gamma^(i)/i!."""

    n: int
    k: int
    columns: Tuple[Vector, ...]

    def __post_init__(self):
        columns = tuple(vector(c) for c in self.columns)
        if len(columns) != self.k or self.k < 1:
            raise DimensionMismatchException(message=f"curve jet needs {self.k} columns")
        if any(len(c) != self.n for c in columns):
            raise DimensionMismatchException(message=f"curve jet columns must have {self.n} entries")
        object.__setattr__(self, "columns", columns)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[object]]) -> "CurveJet":
        columns = [vector(c) for c in columns]
        if not columns:
            raise ValidationException(message="curve jet needs at least one column")
        return cls(len(columns[0]), len(columns), tuple(columns))

    @classmethod
    def coordinate(cls, n: int, k: int) -> "CurveJet":
        """The model curve (e_1, ..., e_k)."""
        if k > n:
            raise ValidationException(message="the coordinate curve needs k <= n")
        return cls(n, k, tuple(tuple(QQ.one if a == i else QQ.zero for a in range(n)) for i in range(k)))

    @classmethod
    def from_jet(cls, jet: Jet) -> "CurveJet":
        if jet.u != 1:
            raise DimensionMismatchException(message="a curve jet has a one-dimensional source")
        columns = [
            tuple(poly.get((i,), QQ.zero) for poly in jet.maps) for i in range(1, jet.k + 1)
        ]
        return cls(jet.v, jet.k, tuple(columns))

    def as_jet(self) -> Jet:
        ring = jet_ring(1)
        t = ring.gens[0]
        maps = []
        for a in range(self.n):
            maps.append(sum((t ** (i + 1) * col[a] for i, col in enumerate(self.columns)), ring.zero))
        return Jet(1, self.n, self.k, tuple(maps))

    def matrix(self) -> Matrix:
        """n x k matrix with v_i in column i."""
        return Matrix(self.n, self.k, lambda a, i: QQ.to_sympy(self.columns[i][a]))

    def is_regular(self) -> bool:
        return any(self.columns[0])

    def is_nondegenerate(self) -> bool:
        return self.matrix().rank() == self.k

    def reparametrized(self, phi: Reparam) -> "CurveJet":
        """gamma o phi."""
        return CurveJet.from_jet(compose_jets(self.as_jet(), phi.as_jet(self.k)))


def random_curve(rng, n: int, k: int, bound: int = 5) -> CurveJet:
    columns = [tuple(rng.randint(-bound, bound) for _ in range(n)) for _ in range(k)]
    if not any(columns[0]):
        columns[0] = (1,) + columns[0][1:]
    return CurveJet.from_columns(columns)


def random_jet(rng, u: int, v: int, k: int, bound: int = 5, density: float = 0.6) -> Jet:
    terms = {}
    for degree in range(1, k + 1):
        for letters in combinations_with_replacement(range(u), degree):
            if rng.random() > density:
                continue
            exp = [0] * u
            for pos in letters:
                exp[pos] += 1
            terms[tuple(exp)] = [rng.randint(-bound, bound) for _ in range(v)]
    return Jet.from_terms(u, v, k, terms)


def test_curve_residual(psi: Jet, gamma: CurveJet) -> List[Vector]:
    """
    For m = 1..k the sum over tau with |tau| = m of Psi(v_tau), where the j-th component of
    Psi is applied to (v_tau1, ..., v_tauj) through its symmetric multilinear form.
    """
    if psi.u != gamma.n:
        raise DimensionMismatchException(
            message=f"Psi has source dimension {psi.u}, curve lives in C^{gamma.n}"
        )
    if psi.k != gamma.k:
        raise DimensionMismatchException(message=f"jet orders differ: {psi.k} vs {gamma.k}")
    residual = []
    for m in range(1, gamma.k + 1):
        total = [QQ.zero] * psi.v
        for parts in partitions(m):
            parts = dict(parts)
            size = sum(parts.values())
            orderings = factorial(size)
            for mult in parts.values():
                orderings //= factorial(mult)
            args = [gamma.columns[p - 1] for p in sorted(parts) for _ in range(parts[p])]
            value = psi.polarized(args)
            for a in range(psi.v):
                total[a] += orderings * value[a]
        residual.append(tuple(total))
    return residual


test_curve_residual.__test__ = False


def is_test_curve(psi: Jet, gamma: CurveJet) -> bool:
    return all(not any(entry) for entry in test_curve_residual(psi, gamma))


def sym_basis(n: int, k: int) -> List[Exponent]:
    """Monomials of Sym^1 .. Sym^k C^n, by degree and then x_1-first."""
    basis = []
    for degree in range(1, k + 1):
        for letters in combinations_with_replacement(range(n), degree):
            exp = [0] * n
            for pos in letters:
                exp[pos] += 1
            basis.append(tuple(exp))
    return basis


def maximal_minors(rows: Sequence[Sequence[object]]) -> Dict[Tuple[int, ...], object]:
    """
    All nonzero k x k minors of a k-row matrix, keyed by sorted column tuples, built
    by expanding along the last row from the minors of the rows above it.
    """
    previous: Dict[Tuple[int, ...], object] = {(): QQ.one}
    for r, row in enumerate(rows):
        support = [c for c, value in enumerate(row) if value]
        current: Dict[Tuple[int, ...], object] = {}
        for cols, minor in previous.items():
            taken = set(cols)
            for c in support:
                if c in taken:
                    continue
                merged = tuple(sorted(cols + (c,)))
                pos = merged.index(c)
                sign = -1 if (r + pos) % 2 else 1
                current[merged] = current.get(merged, QQ.zero) + sign * row[c] * minor
        previous = {cols: value for cols, value in current.items() if value}
    return dict(sorted(previous.items()))


@dataclass(frozen=True)
class CurveFlag:
    basis: Tuple[Exponent, ...]
    rows: Tuple[Vector, ...]
    plucker: Dict[Tuple[int, ...], object]

    def coordinate(self, monomials: Sequence[Exponent]):
        cols = tuple(sorted(self.basis.index(tuple(m)) for m in monomials))
        return self.plucker.get(cols, QQ.zero)


def curve_flag_data(gamma: CurveJet) -> CurveFlag:
    """
    Row i spans S^i / S^(i-1): the t^i coefficient of sum_s gamma(t)^s in Sym^(<=k) C^n,
    followed by all k x k minors of the stacked rows.
    """
    if not gamma.is_regular():
        raise ValidationException(message="curve_flag_data needs a regular curve (v_1 != 0)")
    n, k = gamma.n, gamma.k
    ring = jet_ring(n)
    forms = [
        sum((g * c for g, c in zip(ring.gens, col)), ring.zero) for col in gamma.columns
    ]
    # series in t with polynomial coefficients; index = power of t
    base = [ring.zero] + forms
    power = list(base)
    acc = list(base)
    for _ in range(2, k + 1):
        nxt = [ring.zero] * (k + 1)
        for i, left in enumerate(power):
            if not left:
                continue
            for j in range(1, k + 1 - i):
                if base[j]:
                    nxt[i + j] += left * base[j]
        power = nxt
        acc = [a + b for a, b in zip(acc, power)]
    basis = sym_basis(n, k)
    rows = tuple(
        tuple(acc[i].get(exp, QQ.zero) for exp in basis) for i in range(1, k + 1)
    )
    plucker = maximal_minors(rows)
    logger.debug("curve_flag_data", n=n, k=k, basis=len(basis), nonzero_minors=len(plucker))
    return CurveFlag(tuple(basis), rows, plucker)
