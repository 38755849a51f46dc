"""The reparametrisation group G_k of k-jets of germs (C, 0) -> (C, 0) and its matrix action."""

from dataclasses import dataclass
from typing import Optional, Tuple

from sympy import Matrix
from sympy.polys.domains import QQ

from common.exceptions import ValidationException
from jets.jet import Jet, compose_jets, jet_ring, truncate, vector


@dataclass(frozen=True)
class Reparam:
    """phi(t) = alpha_1 t + ... + alpha_k t^k."""

    alphas: Tuple[object, ...]

    def __post_init__(self):
        alphas = vector(self.alphas)
        if not alphas:
            raise ValidationException(message="a reparametrisation needs at least alpha_1")
        object.__setattr__(self, "alphas", alphas)

    @classmethod
    def of(cls, *alphas) -> "Reparam":
        return cls(tuple(alphas))

    @classmethod
    def identity(cls, k: int) -> "Reparam":
        return cls((1,) + (0,) * (k - 1))

    @classmethod
    def scaling(cls, factor, k: int) -> "Reparam":
        return cls((factor,) + (0,) * (k - 1))

    @property
    def k(self) -> int:
        return len(self.alphas)

    def is_invertible(self) -> bool:
        return bool(self.alphas[0])

    def is_unipotent(self) -> bool:
        return self.alphas[0] == QQ.one

    def padded(self, k: int) -> "Reparam":
        """Truncate or extend by zeros to order k."""
        if self.k >= k:
            return Reparam(self.alphas[:k])
        return Reparam(self.alphas + (QQ.zero,) * (k - self.k))

    def as_jet(self, k: Optional[int] = None) -> Jet:
        k = k or self.k
        ring = jet_ring(1)
        t = ring.gens[0]
        alphas = self.padded(k).alphas
        poly = sum((t ** (i + 1) * a for i, a in enumerate(alphas)), ring.zero)
        return Jet(1, 1, k, (poly,))


def reparam_matrix(phi: Reparam, k: Optional[int] = None) -> Matrix:
    """
    Upper-triangular k x k matrix whose (i, j) entry is the t^j coefficient of phi(t)^i,
    i.e. the sum of alpha_s1 ... alpha_si over s_1 + ... + s_i = j.
    """
    k = k or phi.k
    poly = phi.as_jet(k).maps[0]
    power = poly.ring.one
    rows = []
    for _ in range(k):
        power = truncate(power * poly, k)
        rows.append([QQ.to_sympy(power.get((j,), QQ.zero)) for j in range(1, k + 1)])
    return Matrix(rows)


def compose_reparams(phi: Reparam, psi: Reparam) -> Reparam:
    """(phi o psi)(t) = phi(psi(t)); its matrix is reparam_matrix(phi) * reparam_matrix(psi)."""
    k = max(phi.k, psi.k)
    poly = compose_jets(phi.as_jet(k), psi.as_jet(k)).maps[0]
    return Reparam(tuple(poly.get((j,), QQ.zero) for j in range(1, k + 1)))


def random_reparam(rng, k: int, bound: int = 5, unipotent: bool = False) -> Reparam:
    first = 1 if unipotent else rng.choice([a for a in range(-bound, bound + 1) if a])
    return Reparam((first,) + tuple(rng.randint(-bound, bound) for _ in range(k - 1)))
