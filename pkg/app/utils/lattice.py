"""
Lattice enumeration for quadratic exponents.

Theta functions, Appell-Lerch sums and Hecke-type sums all reduce to sums over
integer points whose q-exponent is a quadratic polynomial with positive diagonal.
The helpers here return exactly the points with exponent <= a budget.

Octant enumeration requires nonnegative cross coefficients: inside a same-sign
octant every cross term n_i * n_j is then >= 0, so each axis is bounded by its
own parabola plus the minima of the remaining axes.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Tuple

Point = Tuple[int, ...]


def binomial2(n: int) -> int:
    """n choose 2, extended to all integers as n(n-1)/2."""
    return n * (n - 1) // 2


def parabola_value(quad: int, lin: int, n: int) -> int:
    return quad * binomial2(n) + lin * n


def _clamp(n: int, lower: Optional[int], upper: Optional[int]) -> int:
    if lower is not None and n < lower:
        return lower
    if upper is not None and n > upper:
        return upper
    return n


def _vertex_floor(quad: int, lin: int) -> int:
    # d/dn [quad n(n-1)/2 + lin n] = 0 at n = 1/2 - lin/quad
    return math.floor(Fraction(1, 2) - Fraction(lin, quad))


def parabola_range(quad: int,
                   lin: int,
                   budget: int,
                   lower: Optional[int] = None,
                   upper: Optional[int] = None,
                   margin: int = 2) -> range:
    """
    Integers n in [lower, upper] with quad*C(n,2) + lin*n <= budget.

    Scans outward from the vertex; ``margin`` extra misses are tolerated on each
    side before the scan stops.

    Args:
        quad: Leading coefficient, must be positive
        lin: Linear coefficient
        budget: Largest admissible value
        lower: Optional inclusive lower bound on n
        upper: Optional inclusive upper bound on n
        margin: Extra probes past the last admissible point

    Returns:
        A (possibly empty) range of consecutive integers
    """
    if quad <= 0:
        raise ValueError(f"Parabola needs a positive leading coefficient, got {quad}")
    if lower is not None and upper is not None and lower > upper:
        return range(0)

    start = _clamp(_vertex_floor(quad, lin), lower, upper)
    lo = hi = None

    n, misses = start, 0
    while lower is None or n >= lower:
        if parabola_value(quad, lin, n) <= budget:
            lo = n
            hi = n if hi is None else max(hi, n)
            misses = 0
        else:
            misses += 1
            if misses > margin:
                break
        n -= 1

    n, misses = start + 1, 0
    while upper is None or n <= upper:
        if parabola_value(quad, lin, n) <= budget:
            hi = n if hi is None else max(hi, n)
            lo = n if lo is None else min(lo, n)
            misses = 0
        else:
            misses += 1
            if misses > margin:
                break
        n += 1

    if lo is None:
        return range(0)
    return range(lo, hi + 1)


def parabola_minimum(quad: int,
                     lin: int,
                     lower: Optional[int] = None,
                     upper: Optional[int] = None) -> int:
    """Minimum of quad*C(n,2) + lin*n over integers n in [lower, upper]."""
    start = _vertex_floor(quad, lin)
    candidates = {_clamp(start, lower, upper), _clamp(start + 1, lower, upper)}
    return min(parabola_value(quad, lin, n) for n in candidates)


def finite_range(count: int) -> Iterator[Tuple[int, int]]:
    """
    Indices and weights of the sum over n = 0 .. count-1.

    For negative ``count`` the empty/negative range convention applies:
    sum_{n=0}^{count-1} c_n := -sum_{n=count}^{-1} c_n.
    """
    if count >= 0:
        for n in range(count):
            yield n, 1
    else:
        for n in range(count, 0):
            yield n, -1


@dataclass(frozen=True)
class QuadraticForm:
    """
    Exponent sum_i diag_i*C(n_i,2) + sum_{i<j} cross_ij*n_i*n_j + sum_i lin_i*n_i + const.

    ``cross`` is a full symmetric matrix; its diagonal is ignored.
    """

    diag: Tuple[int, ...]
    cross: Tuple[Tuple[int, ...], ...]
    lin: Tuple[int, ...]
    const: int = 0

    @classmethod
    def double(cls, a: int, b: int, c: int, lin: Sequence[int], const: int = 0) -> 'QuadraticForm':
        return cls((a, c), ((0, b), (b, 0)), tuple(lin), const)

    @classmethod
    def triple(cls, a: int, b: int, c: int, d: int, e: int, f: int,
               lin: Sequence[int], const: int = 0) -> 'QuadraticForm':
        return cls((a, c, f), ((0, b, d), (b, 0, e), (d, e, 0)), tuple(lin), const)

    @property
    def dim(self) -> int:
        return len(self.diag)

    def value(self, point: Sequence[int]) -> int:
        total = self.const
        for i, n in enumerate(point):
            total += self.diag[i] * binomial2(n) + self.lin[i] * n
            for j in range(i + 1, self.dim):
                total += self.cross[i][j] * n * point[j]
        return total

    def fix(self, axis: int, v: int) -> 'QuadraticForm':
        """Substitute n_axis = v and drop that axis."""
        keep = [i for i in range(self.dim) if i != axis]
        return QuadraticForm(
            diag=tuple(self.diag[i] for i in keep),
            cross=tuple(tuple(self.cross[i][j] for j in keep) for i in keep),
            lin=tuple(self.lin[i] + self.cross[axis][i] * v for i in keep),
            const=self.const + self.diag[axis] * binomial2(v) + self.lin[axis] * v,
        )

    def shifted(self, offset: Sequence[int]) -> 'QuadraticForm':
        """Form of n -> Q(n + offset)."""
        lin = []
        for i in range(self.dim):
            coef = self.lin[i] + self.diag[i] * offset[i]
            coef += sum(self.cross[i][j] * offset[j] for j in range(self.dim) if j != i)
            lin.append(coef)
        return QuadraticForm(self.diag, self.cross, tuple(lin), self.value(offset))


def _check_octant_form(form: QuadraticForm) -> None:
    if any(d <= 0 for d in form.diag):
        raise ValueError(f"Octant enumeration needs a positive diagonal, got {form.diag}")
    for i in range(form.dim):
        for j in range(form.dim):
            if i != j and form.cross[i][j] < 0:
                raise ValueError("Octant enumeration needs nonnegative cross coefficients")


def _octant(form: QuadraticForm, budget: int, negative: bool, margin: int) -> Iterator[Tuple[Point, int]]:
    if form.dim == 0:
        if form.const <= budget:
            yield (), form.const
        return
    lower, upper = (None, -1) if negative else (0, None)
    rest = sum(parabola_minimum(form.diag[i], form.lin[i], lower, upper) for i in range(1, form.dim))
    slack = budget - form.const - rest
    for v in parabola_range(form.diag[0], form.lin[0], slack, lower, upper, margin):
        for point, exponent in _octant(form.fix(0, v), budget, negative, margin):
            yield (v,) + point, exponent


def octant_points(form: QuadraticForm,
                  budget: int,
                  negative: bool = False,
                  margin: int = 2) -> Iterator[Tuple[Point, int]]:
    """
    Points of the all-nonnegative (or all-negative) octant with exponent <= budget.

    Yields:
        (point, exponent) pairs
    """
    _check_octant_form(form)
    yield from _octant(form, budget, negative, margin)


def line_points(quad: int, lin: int, const: int, budget: int) -> Iterator[Tuple[int, int]]:
    """All integers n with quad*C(n,2) + lin*n + const <= budget."""
    for n in parabola_range(quad, lin, budget - const):
        yield n, const + parabola_value(quad, lin, n)


def coverage_box(form: QuadraticForm, budget: int) -> int:
    """
    Half-width B such that [-B, B]^dim contains every octant point with exponent <= budget.
    """
    _check_octant_form(form)
    bound = 0
    for lower, upper in ((0, None), (None, -1)):
        minima = [parabola_minimum(form.diag[i], form.lin[i], lower, upper) for i in range(form.dim)]
        for i in range(form.dim):
            slack = budget - form.const - (sum(minima) - minima[i])
            span = parabola_range(form.diag[i], form.lin[i], slack, lower, upper)
            if len(span):
                bound = max(bound, abs(span[0]), abs(span[-1]))
    return bound


def sg(n: int) -> int:
    return 1 if n >= 0 else -1


def sg2(r: int, s: int) -> Fraction:
    """(sg(r) + sg(s)) / 2: +1 on the nonnegative cone, -1 on the negative cone, else 0."""
    return Fraction(sg(r) + sg(s), 2)


def sg3(r: int, s: int, t: int) -> int:
    """1 when sg(r) = sg(s) = sg(t), else 0."""
    return (1 + sg(r) * sg(s) + sg(r) * sg(t) + sg(s) * sg(t)) // 4
