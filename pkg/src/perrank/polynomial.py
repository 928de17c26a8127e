"""Permanental polynomial, its coefficients, and permanental nullity.

The canonical form is monic: ``per(xI - A) = (-1)^n per(A - xI)``, written as
``sum_i b_i x^(n-i)`` with ``b_0 = 1``. Coefficient lists are stored
leading-first, so ``coeffs[i]`` is ``b_i``.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import prod
from operator import add, sub

from .errors import ResourceError
from .matrix import Matrix, as_matrix, format_scalar, principal
from .permanent import permanent

POLY_CAP = 24
PRINCIPAL_SUMS_CAP = 14


@dataclass(frozen=True)
class Poly:
    """Exact univariate polynomial, coefficients leading-first."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        """Nominal degree n (length minus one), regardless of vanishing leaders."""
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> Fraction:
        """b_i, the coefficient of x^(n-i)."""
        return self.coeffs[i]

    def ascending(self) -> list[Fraction]:
        return list(reversed(self.coeffs))

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def negated(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def raw_sign(self) -> "Poly":
        """The ``per(A - xI)`` convention: multiply by (-1)^n."""
        return self.negated() if self.order % 2 else self

    def zero_root_multiplicity(self) -> int:
        last = max((i for i, c in enumerate(self.coeffs) if c != 0), default=None)
        if last is None:
            raise ValueError("zero polynomial has no finite root multiplicity")
        return self.order - last

    def coeff_strings(self) -> list[str]:
        return [format_scalar(c) for c in self.coeffs]

    def __str__(self) -> str:
        n = self.order
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            deg = n - i
            mag = abs(c)
            if deg == 0:
                body = format_scalar(mag)
            else:
                power = "x" if deg == 1 else f"x^{deg}"
                if mag == 1:
                    body = power
                elif mag.denominator == 1:
                    body = f"{mag.numerator}{power}"
                else:
                    body = f"({format_scalar(mag)}){power}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms) if terms else "0"


def _poly_block(rows: list[list[int]], scales: list[int], n: int, low: int, high_mask: int) -> list[int]:
    """Signed Ryser sum of per(xI - A) over one block of column subsets.

    With rows scaled by d_i, row sum i over S is d_i*[i in S]*x - sum_{j in S} a_ij.
    Returns ascending integer coefficients of sum_S (-1)^|S| prod_i rowsum_i(S).
    """
    cols = [list(c) for c in zip(*rows)]
    neg_cols = [[-v for v in c] for c in cols]
    total = [0] * (n + 1)
    cs = [0] * n
    in_s = [False] * n
    neg = False
    for j in range(low, n):
        if (high_mask >> (j - low)) & 1:
            cs = list(map(add, cs, neg_cols[j]))
            in_s[j] = True
            neg = not neg

    def accumulate():
        # constants from rows outside S, then linear factors (d_i x + c_i) for i in S
        const = prod(c for c, s in zip(cs, in_s) if not s)
        if not const:
            return
        poly = [const]
        for i in range(n):
            if in_s[i]:
                d, c = scales[i], cs[i]
                nxt = [0] * (len(poly) + 1)
                for k, v in enumerate(poly):
                    nxt[k] += v * c
                    nxt[k + 1] += v * d
                poly = nxt
        if neg:
            for k, v in enumerate(poly):
                total[k] -= v
        else:
            for k, v in enumerate(poly):
                total[k] += v

    accumulate()
    for k in range(1, 1 << low):
        j = (k & -k).bit_length() - 1
        if in_s[j]:
            cs = list(map(sub, cs, neg_cols[j]))
            in_s[j] = False
        else:
            cs = list(map(add, cs, neg_cols[j]))
            in_s[j] = True
        neg = not neg
        accumulate()
    return total


def perm_poly(a, threads: int = 1) -> Poly:
    """Monic permanental polynomial via Ryser over entries of ``xI - A``."""
    a = as_matrix(a)
    a.require_square("permanental polynomial")
    n = a.nrows
    if n > POLY_CAP:
        raise ResourceError(f"perm_poly capped at n={POLY_CAP}, got n={n}")
    if n == 0:
        return Poly((Fraction(1),))
    rows, scales = a.integer_rows()
    high = 0 if threads <= 1 or n < 8 else min(n - 4, (threads - 1).bit_length() + 2)
    low = n - high
    if high == 0:
        asc = _poly_block(rows, scales, n, n, 0)
    else:
        args = [(rows, scales, n, low, m) for m in range(1 << high)]
        asc = [0] * (n + 1)
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(_poly_block, *zip(*args)):
                asc = list(map(add, asc, part))
    sign = -1 if n % 2 else 1
    denom = prod(scales)
    return Poly(tuple(Fraction(sign * v, denom) for v in reversed(asc)))


def perm_poly_principal_sums(a) -> Poly:
    """Same polynomial, built as b_i = (-1)^i * sum of i x i principal permanents."""
    a = as_matrix(a)
    a.require_square("permanental polynomial")
    n = a.nrows
    if n > PRINCIPAL_SUMS_CAP:
        raise ResourceError(f"principal-sum route capped at n={PRINCIPAL_SUMS_CAP}, got n={n}")
    coeffs = [Fraction(1)]
    for i in range(1, n + 1):
        s = sum((permanent(principal(a, S)) for S in combinations(range(n), i)), Fraction(0))
        coeffs.append(s if i % 2 == 0 else -s)
    return Poly(tuple(coeffs))


def perm_nullity(a, poly: Poly | None = None) -> int:
    """Multiplicity of 0 as a root of the permanental polynomial."""
    if poly is None:
        poly = perm_poly(a)
    return poly.zero_root_multiplicity()
