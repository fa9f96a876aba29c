"""F-triangles and f-vectors of cluster fans.

The F-triangle F(x, y) = sum f_{k,l} x^k y^l counts the cones of the cluster
fan by their number of positive spanning roots (k) and negated simple
spanning roots (l).  It is computed here by the simultaneous induction over
node deletions:

  * d/dy F(Phi) = sum over nodes i of F(Phi restricted to I minus i),
  * d/dx f(Phi) = (h+2)/2 * sum over nodes i of f(Phi restricted to I minus i),

with f(x) = F(x, x), f(0) = 1, and both quantities multiplicative over
products of root systems.  Integrating the first recursion fixes F up to its
y-free part, which the second recursion supplies through the diagonal.

Closed forms for the infinite families (types A and B) are implemented
independently and serve as oracles for the recursion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .cartan import CartanType, as_spec, delete_node, invariants, spec_of
from .errors import InvariantViolation
from .poly import BivarPoly, uni_add, uni_mul, uni_scale, uni_trim


@dataclass(frozen=True)
class FTriangle:
    n: int
    data: BivarPoly


@dataclass(frozen=True)
class FVector:
    n: int
    coeffs: tuple[int, ...]


def _validate_triangle(n: int, p: BivarPoly, origin: str) -> FTriangle:
    for k, l, c in p.terms():
        if k + l > n:
            raise InvariantViolation(f"{origin}: support ({k},{l}) beyond rank {n}")
        if not isinstance(c, int) or c < 0:
            raise InvariantViolation(f"{origin}: coefficient f[{k}][{l}] = {c!r}")
    if p.coeff(0, 0) != 1:
        raise InvariantViolation(f"{origin}: constant term {p.coeff(0, 0)} != 1")
    return FTriangle(n, p)


def _validate_fvector(n: int, coeffs: tuple, origin: str) -> FVector:
    if len(coeffs) != n + 1 or coeffs[0] != 1 or coeffs[-1] <= 0:
        raise InvariantViolation(f"{origin}: bad f-vector {coeffs}")
    if any(not isinstance(c, int) or c < 0 for c in coeffs):
        raise InvariantViolation(f"{origin}: non-integral f-vector {coeffs}")
    return FVector(n, coeffs)


def _bc_normalized(t: CartanType) -> CartanType:
    # B_n and C_n share the Coxeter graph and h, hence the same triangle
    return CartanType("B", t.rank) if t.family == "C" else t


@lru_cache(maxsize=None)
def _f_vector_irreducible(t: CartanType) -> tuple[int, ...]:
    h = invariants(t).coxeter_number
    total = ()
    for i in range(1, t.rank + 1):
        total = uni_add(total, f_vector(delete_node(t, i)).coeffs)
    deriv = uni_scale(total, Fraction(h + 2, 2))
    coeffs = [1] + [Fraction(c, k + 1) for k, c in enumerate(deriv)]
    out = uni_trim(coeffs)
    if any(not isinstance(c, int) for c in out):
        raise InvariantViolation(f"f-vector of {t} is not integral: {coeffs}")
    return out


def f_vector(spec) -> FVector:
    """The f-vector (cone counts by dimension); multiplicative over products."""
    spec = as_spec(spec)
    coeffs = (1,)
    for t in spec.components:
        coeffs = uni_mul(coeffs, _f_vector_irreducible(_bc_normalized(t)))
    return _validate_fvector(spec.rank, coeffs, f"f_vector({spec})")


@lru_cache(maxsize=None)
def _f_triangle_irreducible(t: CartanType) -> BivarPoly:
    rate = BivarPoly.zero()
    for i in range(1, t.rank + 1):
        rate = rate + f_triangle(delete_node(t, i)).data
    g = rate.antiderivative_y()
    fvec = f_vector(spec_of(t)).coeffs
    diag = g.diagonal()
    x_part = uni_add(fvec, uni_scale(diag, -1))
    return BivarPoly.from_x_coeffs(x_part) + g


def f_triangle(spec) -> FTriangle:
    """The F-triangle, by the memoized node-deletion induction."""
    spec = as_spec(spec)
    data = BivarPoly.constant(1)
    for t in spec.components:
        data = data * _f_triangle_irreducible(_bc_normalized(t))
    return _validate_triangle(spec.rank, data, f"f_triangle({spec})")


# --------------------------------------------------------------------------
# Closed forms (types A and B); oracles for the recursion
# --------------------------------------------------------------------------

def closed_form_A(n: int) -> FTriangle:
    """f_{k,l} = (l+1)/(k+l+1) * C(n, k+l) * C(n+k, n)."""
    if n < 0:
        raise ValueError("rank must be >= 0")
    rows = [[0] * (n + 1) for _ in range(n + 1)]
    for k in range(n + 1):
        for l in range(n + 1 - k):
            c = Fraction(l + 1, k + l + 1) * comb(n, k + l) * comb(n + k, n)
            if c.denominator != 1:
                raise InvariantViolation(f"closed_form_A({n}) entry ({k},{l}) = {c}")
            rows[k][l] = int(c)
    return _validate_triangle(n, BivarPoly(rows), f"closed_form_A({n})")


def closed_form_B(n: int) -> FTriangle:
    """f_{k,l} = C(n, k+l) * C(n+k-1, n-1)."""
    if n < 2:
        raise ValueError("rank must be >= 2 (B1 is A1)")
    rows = [[0] * (n + 1) for _ in range(n + 1)]
    for k in range(n + 1):
        for l in range(n + 1 - k):
            rows[k][l] = comb(n, k + l) * comb(n + k - 1, n - 1)
    return _validate_triangle(n, BivarPoly(rows), f"closed_form_B({n})")


def closed_f_vector_A(n: int) -> tuple[int, ...]:
    """f_k = 1/(k+1) * C(n, k) * C(n+k+2, k)."""
    out = []
    for k in range(n + 1):
        c = Fraction(1, k + 1) * comb(n, k) * comb(n + k + 2, k)
        if c.denominator != 1:
            raise InvariantViolation(f"closed_f_vector_A({n}) entry {k} = {c}")
        out.append(int(c))
    return tuple(out)


def closed_f_vector_B(n: int) -> tuple[int, ...]:
    """f_k = C(n, k) * C(n+k, k)."""
    return tuple(comb(n, k) * comb(n + k, k) for k in range(n + 1))


# --------------------------------------------------------------------------
# Specializations
# --------------------------------------------------------------------------

def positive_f_vector(ft: FTriangle) -> FVector:
    """Counts of positive cones by dimension: the l = 0 column, F(x, 0)."""
    coeffs = tuple(ft.data.coeff(k, 0) for k in range(ft.n + 1))
    return _validate_fvector(ft.n, coeffs, "positive_f_vector")


def natural_f_vector(ft: FTriangle) -> tuple[int, ...]:
    """Coefficients of F(x, -1); counts of natural cones, so must be >= 0."""
    vals = ft.data.subs_y(-1)
    out = tuple(vals) + (0,) * (ft.n + 1 - len(vals))
    if any(c < 0 for c in out):
        raise InvariantViolation(f"natural f-vector has a negative entry: {out}")
    return out


def h_vector(spec) -> tuple[int, ...]:
    """Binomial transform sum_k f_k y^k (1-y)^(n-k) of the f-vector.

    Entries are the generalized Narayana numbers.
    """
    spec = as_spec(spec)
    n = spec.rank
    fvec = f_vector(spec).coeffs
    out = [0] * (n + 1)
    for k, c in enumerate(fvec):
        for b in range(n - k + 1):
            sign = comb(n - k, b) if b % 2 == 0 else -comb(n - k, b)
            out[k + b] += c * sign
    if any(c < 0 for c in out):
        raise InvariantViolation(f"h-vector not nonnegative: {out}")
    return tuple(out)
