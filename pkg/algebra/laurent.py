"""
Sparse multivariate Laurent series in residue variables z_1..z_k, expanded in the
domain z_1 << ... << z_k, with coefficients polynomial in the graded symbols of a
SymbolContext.

Terms are kept flat: one key per (z exponents + symbol exponents), one domain
element per key. The flat layout lets the residue engine multiply series without
rebuilding sympy ring elements for every coefficient.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import structlog
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyRing

from algebra.polynomial import GradedPolynomial
from algebra.rational import domain_convert, to_rational
from algebra.symbols import SymbolContext
from common.exceptions import (
    DimensionMismatchException,
    MalformedFormException,
    TruncationOverflowException,
    ValidationException,
)

logger = structlog.get_logger()

Bound = Optional[int]
Window = Tuple[Tuple[Bound, Bound], ...]
ExponentVector = Tuple[int, ...]
FlatTerms = Dict[Tuple[int, ...], object]

WindowLike = Union[None, int, Sequence[Tuple[Bound, Bound]]]


def normalize_window(k: int, window: WindowLike) -> Window:
    """None means unbounded (exact), an int R means the box [-R, R] in every variable."""
    if window is None:
        return ((None, None),) * k
    if isinstance(window, int):
        return ((-window, window),) * k
    window = tuple((lo, hi) for lo, hi in window)
    if len(window) != k:
        raise DimensionMismatchException(message=f"window has {len(window)} bounds for k={k}")
    for lo, hi in window:
        if lo is not None and hi is not None and lo > hi:
            raise TruncationOverflowException(message=f"empty window bound [{lo}, {hi}]")
    return window


def intersect_windows(a: Window, b: Window) -> Window:
    out = []
    for (alo, ahi), (blo, bhi) in zip(a, b):
        lo = blo if alo is None else (alo if blo is None else max(alo, blo))
        hi = bhi if ahi is None else (ahi if bhi is None else min(ahi, bhi))
        out.append((lo, hi))
    return tuple(out)


def in_window(exps: Sequence[int], window: Window) -> bool:
    for e, (lo, hi) in zip(exps, window):
        if lo is not None and e < lo:
            return False
        if hi is not None and e > hi:
            return False
    return True


def unit_vector(k: int, index: int, value: int = 1) -> ExponentVector:
    return tuple(value if i == index else 0 for i in range(k))


class LaurentSeries:
    __slots__ = ("k", "context", "window", "_terms")

    def __init__(
        self,
        k: int,
        context: SymbolContext,
        terms: Optional[Mapping[Tuple[int, ...], object]] = None,
        window: WindowLike = None,
        check: bool = True,
    ):
        if k < 1:
            raise ValidationException(message="a Laurent series needs at least one variable")
        self.k = k
        self.context = context
        self.window = normalize_window(k, window)
        if not check:
            self._terms = dict(terms or {})
            return
        width = k + context.size
        domain = context.domain
        cleaned: FlatTerms = {}
        for key, coeff in (terms or {}).items():
            key = tuple(int(e) for e in key)
            if len(key) != width:
                raise DimensionMismatchException(
                    message=f"term key {key} does not have {k} z-exponents and {context.size} symbol exponents"
                )
            if any(e < 0 for e in key[k:]):
                raise ValidationException(message=f"negative symbol exponent in {key}")
            if not context.admits(key[k:]) or not in_window(key[:k], self.window):
                continue
            coeff = domain_convert(domain, coeff)
            if coeff:
                cleaned[key] = cleaned.get(key, domain.zero) + coeff
        self._terms = {key: c for key, c in cleaned.items() if c}

    # construction

    @classmethod
    def zero(cls, k: int, context: SymbolContext, window: WindowLike = None) -> "LaurentSeries":
        return cls(k, context, {}, window)

    @classmethod
    def monomial(
        cls,
        k: int,
        context: SymbolContext,
        zexp: Sequence[int],
        coeff=1,
        symexp: Optional[Sequence[int]] = None,
    ) -> "LaurentSeries":
        symexp = tuple(symexp) if symexp is not None else (0,) * context.size
        return cls(k, context, {tuple(zexp) + symexp: coeff})

    @classmethod
    def one(cls, k: int, context: SymbolContext) -> "LaurentSeries":
        return cls.monomial(k, context, (0,) * k)

    @classmethod
    def from_polynomials(
        cls,
        k: int,
        context: SymbolContext,
        coefficients: Mapping[Sequence[int], GradedPolynomial],
        window: WindowLike = None,
    ) -> "LaurentSeries":
        terms: FlatTerms = {}
        for zexp, poly in coefficients.items():
            if poly.context != context:
                poly = poly.to_context(context)
            for symexp, coeff in poly.terms():
                terms[tuple(zexp) + symexp] = coeff
        return cls(k, context, terms, window)

    @classmethod
    def from_ring_element(cls, k: int, context: SymbolContext, element) -> "LaurentSeries":
        """
        Convert an element of ``combined_ring(k, context)``; monomials of that ring
        are already flat keys.
        """
        ring = combined_ring(k, context)
        if element.ring != ring:
            element = element.set_ring(ring)
        return cls(k, context, dict(element.items()), check=False)._normalized()

    def _normalized(self) -> "LaurentSeries":
        nil = self.context.nilpotent_positions
        if not nil:
            return self
        k = self.k
        kept = {
            key: c for key, c in self._terms.items() if all(key[k + p] < n for p, n in nil)
        }
        return LaurentSeries(self.k, self.context, kept, self.window, check=False)

    # inspection

    @property
    def raw(self) -> FlatTerms:
        return self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_exact(self) -> bool:
        return all(lo is None and hi is None for lo, hi in self.window)

    def coefficients(self) -> Dict[ExponentVector, GradedPolynomial]:
        """Group flat terms by z-exponent; keys in sorted order."""
        k = self.k
        grouped: Dict[ExponentVector, List[Tuple[Tuple[int, ...], object]]] = {}
        for key, coeff in self._terms.items():
            grouped.setdefault(key[:k], []).append((key[k:], coeff))
        return {
            zexp: GradedPolynomial.from_terms(self.context, grouped[zexp])
            for zexp in sorted(grouped)
        }

    def coefficient(self, zexp: Sequence[int]) -> GradedPolynomial:
        zexp = tuple(zexp)
        if len(zexp) != self.k:
            raise DimensionMismatchException(message=f"exponent {zexp} is not of length {self.k}")
        k = self.k
        return GradedPolynomial.from_terms(
            self.context, ((key[k:], c) for key, c in self._terms.items() if key[:k] == zexp)
        )

    def exponent_bounds(self, var: int) -> Optional[Tuple[int, int]]:
        values = [key[var] for key in self._terms]
        if not values:
            return None
        return min(values), max(values)

    def highest_variable(self) -> int:
        """Largest index carrying a nonzero z-exponent, -1 for z-free series."""
        top = -1
        for key in self._terms:
            for var in range(self.k - 1, top, -1):
                if key[var]:
                    top = var
                    break
        return top

    # algebra

    def _check(self, other: "LaurentSeries") -> None:
        if other.k != self.k:
            raise DimensionMismatchException(message=f"series in {self.k} and {other.k} variables")
        if other.context != self.context:
            raise DimensionMismatchException(message="series over different symbol contexts")

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        self._check(other)
        terms = dict(self._terms)
        zero = self.context.domain.zero
        for key, c in other._terms.items():
            terms[key] = terms.get(key, zero) + c
        window = intersect_windows(self.window, other.window)
        return LaurentSeries(self.k, self.context, terms, window)

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(
            self.k, self.context, {key: -c for key, c in self._terms.items()}, self.window, check=False
        )

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self + (-other)

    def scale(self, factor) -> "LaurentSeries":
        """Multiply by a rational or a z-free GradedPolynomial."""
        if not isinstance(factor, GradedPolynomial):
            factor = GradedPolynomial.constant(self.context, factor)
        k = self.k
        other = LaurentSeries(
            k, self.context, {(0,) * k + m: c for m, c in factor.terms()}, check=False
        )
        return self.mul(other, self.window)

    def shift(self, zexp: Sequence[int]) -> "LaurentSeries":
        """Multiply by the monomial z^zexp; bounded windows move with it."""
        k = self.k
        zexp = tuple(zexp)
        terms = {
            tuple(a + b for a, b in zip(key[:k], zexp)) + key[k:]: c
            for key, c in self._terms.items()
        }
        window = tuple(
            (None if lo is None else lo + s, None if hi is None else hi + s)
            for (lo, hi), s in zip(self.window, zexp)
        )
        return LaurentSeries(k, self.context, terms, window, check=False)

    def mul(self, other: "LaurentSeries", window: WindowLike = None) -> "LaurentSeries":
        """
        Plain product truncated to ``window`` (default: intersection of both windows).
        Correctness near truncated edges is the caller's concern.
        """
        self._check(other)
        k = self.k
        target = (
            intersect_windows(self.window, other.window)
            if window is None
            else normalize_window(k, window)
        )
        nil = [(k + p, n) for p, n in self.context.nilpotent_positions]
        zero = self.context.domain.zero
        out: FlatTerms = {}
        get = out.get
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                key = tuple(a + b for a, b in zip(ka, kb))
                if nil and any(key[p] >= n for p, n in nil):
                    continue
                if not in_window(key[:k], target):
                    continue
                out[key] = get(key, zero) + ca * cb
        return LaurentSeries(k, self.context, {key: c for key, c in out.items() if c}, target, check=False)

    __mul__ = mul

    def power(self, exponent: int) -> "LaurentSeries":
        result = LaurentSeries.one(self.k, self.context)
        for _ in range(exponent):
            result = result.mul(self)
        return result

    def restrict(self, window: WindowLike) -> "LaurentSeries":
        target = intersect_windows(self.window, normalize_window(self.k, window))
        k = self.k
        return LaurentSeries(
            k,
            self.context,
            {key: c for key, c in self._terms.items() if in_window(key[:k], target)},
            target,
            check=False,
        )

    def permuted(self, perm: Sequence[int]) -> "LaurentSeries":
        """Variable i of the result is variable perm[i] of self."""
        perm = tuple(perm)
        k = self.k
        if sorted(perm) != list(range(k)):
            raise ValidationException(message=f"{perm} is not a permutation of {k} variables")
        terms = {
            tuple(key[p] for p in perm) + key[k:]: c for key, c in self._terms.items()
        }
        window = tuple(self.window[p] for p in perm)
        return LaurentSeries(k, self.context, terms, window, check=False)

    def with_domain(self, domain) -> "LaurentSeries":
        context = self.context.with_domain(domain)
        return LaurentSeries(
            self.k,
            context,
            {key: domain.convert(c) for key, c in self._terms.items()},
            self.window,
            check=False,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.k == other.k and self.context == other.context and self._terms == other._terms

    def __repr__(self) -> str:
        return f"LaurentSeries(k={self.k}, terms={len(self._terms)}, window={self.window})"


def combined_ring(k: int, context: SymbolContext):
    """PolyRing over z_1..z_k followed by the context symbols (flat-key layout)."""
    names = tuple(f"_z{i}" for i in range(1, k + 1)) + context.names
    key = (names, context.domain)
    ring = _COMBINED.get(key)
    if ring is None:
        ring = PolyRing(list(names), context.domain, grlex)
        _COMBINED[key] = ring
    return ring


_COMBINED: Dict[Tuple[Tuple[str, ...], object], object] = {}


@dataclass(frozen=True)
class LinearForm:
    """a_0 + a_1 z_1 + ... + a_k z_k with a z-free constant a_0 and rational a_l."""

    constant: GradedPolynomial
    zcoeffs: Tuple[object, ...]

    def __post_init__(self):
        coeffs = tuple(to_rational(a) for a in self.zcoeffs)
        object.__setattr__(self, "zcoeffs", coeffs)
        if not any(coeffs) and self.constant.is_zero():
            raise MalformedFormException(message="linear form is identically zero")

    @classmethod
    def of(cls, context: SymbolContext, zcoeffs: Iterable, constant=0) -> "LinearForm":
        if not isinstance(constant, GradedPolynomial):
            constant = GradedPolynomial.constant(context, constant)
        return cls(constant, tuple(zcoeffs))

    @property
    def k(self) -> int:
        return len(self.zcoeffs)

    @property
    def context(self) -> SymbolContext:
        return self.constant.context

    @property
    def leading_index(self) -> int:
        """0-based index q of the largest variable with a nonzero coefficient."""
        for index in range(self.k - 1, -1, -1):
            if self.zcoeffs[index]:
                return index
        raise MalformedFormException(message="linear form has no z-coefficient")

    @property
    def leading_coefficient(self):
        return self.zcoeffs[self.leading_index]

    def permuted(self, perm: Sequence[int]) -> "LinearForm":
        return LinearForm(self.constant, tuple(self.zcoeffs[p] for p in perm))

    def as_series(self) -> LaurentSeries:
        k = self.k
        terms: FlatTerms = {}
        for exps, c in self.constant.terms():
            terms[(0,) * k + exps] = c
        zero_sym = (0,) * self.context.size
        for index, a in enumerate(self.zcoeffs):
            if a:
                terms[unit_vector(k, index) + zero_sym] = a
        return LaurentSeries(k, self.context, terms)

    def __str__(self) -> str:
        parts = [] if self.constant.is_zero() else [f"({self.constant})"]
        for index, a in enumerate(self.zcoeffs):
            if a:
                parts.append(f"({a})z_{index + 1}")
        return " + ".join(parts)


def invert_leading(domain, value):
    """Inverse of the leading coefficient inside ``domain``."""
    if not value:
        raise MalformedFormException(message="zero leading coefficient")
    if domain.is_Field:
        return domain.one / value
    if value == 1 or value == -1:
        return value
    raise MalformedFormException(
        message=f"leading coefficient {value} is not a unit over the integers; use a rational context"
    )


def multiplier_terms(form: LinearForm) -> Tuple[int, object, FlatTerms]:
    """
    (q, 1/a_q, step) where step = -(a_0 + a_1 z_1 + ... + a_{q-1} z_{q-1}) / a_q,
    so that 1/L = sum_j step^j / a_q * z_q^(-j-1).
    """
    k = form.k
    context = form.context
    domain = context.domain
    q = form.leading_index
    inverse = invert_leading(domain, domain_convert(domain, form.zcoeffs[q]))
    zero = domain.zero
    step: FlatTerms = {}
    for exps, c in form.constant.terms():
        key = (0,) * k + exps
        step[key] = step.get(key, zero) - c * inverse
    zero_sym = (0,) * context.size
    for index in range(q):
        a = form.zcoeffs[index]
        if a:
            key = unit_vector(k, index) + zero_sym
            step[key] = step.get(key, zero) - domain_convert(domain, a) * inverse
    return q, inverse, {key: c for key, c in step.items() if c}


def expand_inverse_linear(form: LinearForm, window: WindowLike) -> LaurentSeries:
    """
    Geometric expansion of 1/L in the domain z_1 << ... << z_k, restricted to ``window``.
    The leading variable needs a finite lower bound; it fixes the truncation depth.
    """
    k = form.k
    context = form.context
    win = normalize_window(k, window)
    q, inverse, step = multiplier_terms(form)
    lo_q, hi_q = win[q]
    if lo_q is None:
        raise TruncationOverflowException(
            message=f"expansion of 1/({form}) needs a lower bound on the exponent of z_{q + 1}"
        )
    if lo_q > -1 or (hi_q is not None and hi_q < -1):
        raise TruncationOverflowException(
            message=f"window [{lo_q}, {hi_q}] for z_{q + 1} cannot hold the exponent -1"
        )
    for var in range(q + 1, k):
        lo, hi = win[var]
        if (lo is not None and lo > 0) or (hi is not None and hi < 0):
            return LaurentSeries(k, context, {}, win, check=False)
    width = k + context.size
    nil = [(k + p, n) for p, n in context.nilpotent_positions]
    upper = [(var, win[var][1]) for var in range(q) if win[var][1] is not None]
    lower = [(var, win[var][0]) for var in range(q) if win[var][0] is not None]
    zero = context.domain.zero

    terms: FlatTerms = {}
    power: FlatTerms = {(0,) * width: inverse}
    depth = -lo_q
    for j in range(depth):
        exponent = -j - 1
        for key, c in power.items():
            if all(key[var] >= bound for var, bound in lower):
                terms[key[:q] + (exponent,) + key[q + 1 :]] = c
        if j + 1 == depth or not step:
            break
        nxt: FlatTerms = {}
        get = nxt.get
        for ka, ca in power.items():
            for kb, cb in step.items():
                key = tuple(a + b for a, b in zip(ka, kb))
                if nil and any(key[p] >= n for p, n in nil):
                    continue
                if any(key[var] > bound for var, bound in upper):
                    continue
                nxt[key] = get(key, zero) + ca * cb
        power = {key: c for key, c in nxt.items() if c}
        if not power:
            break
    logger.debug("expand_inverse_linear", leading=q + 1, depth=depth, terms=len(terms))
    return LaurentSeries(k, context, terms, win, check=False)
