"""Integer sequences and exact closed forms behind the path counts.

All arithmetic is exact: integers are unbounded and the ring of numbers
a + b*sqrt(2) is represented with rational coordinates, so the Binet
style formulas evaluate without any rounding.  The silver ratio
1 + sqrt(2) and its conjugate drive both Pell sequences and the closed
form for the number of weakly-increasing-valley paths.

Fibonacci numbers follow the convention F(1) = F(2) = 1, extended
backwards so that F(0) = 0 and F(-1) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb
from typing import Iterator, Sequence

__all__ = [
    "NonIntegerResultError",
    "DoesNotStartWithDominoError",
    "QuadraticNumber",
    "SQRT2",
    "SILVER_RATIO",
    "SILVER_CONJUGATE",
    "Piece",
    "Tiling",
    "fibonacci",
    "pell",
    "half_companion_pell",
    "quad_pow",
    "binet_pell",
    "binet_half_companion",
    "count_nondecreasing_closed",
    "count_nondecreasing_quadratic",
    "count_mountains",
    "enumerate_tilings",
    "count_tilings",
    "count_square_first_tilings",
    "delete_leading_domino",
    "render_tiling",
    "format_bfile",
]


class NonIntegerResultError(ArithmeticError):
    """Raised when a formula that must produce an integer fails to.

    Seeing this error means the implementation itself is wrong, not the
    caller's input.
    """


class DoesNotStartWithDominoError(ValueError):
    """Raised when a leading domino is requested but absent."""


def fibonacci(n: int) -> int:
    """F(n) with F(1) = F(2) = 1, defined for n >= -1 (F(-1) = 1)."""
    if n < -1:
        raise ValueError("defined for n >= -1 only")
    prev, cur = 1, 0  # F(-1), F(0)
    for _ in range(n + 1):
        prev, cur = cur, prev + cur
    return prev


def pell(n: int) -> int:
    """Pell numbers 0, 1, 2, 5, 12, 29, ... via x(n) = 2x(n-1) + x(n-2)."""
    if n < 0:
        raise ValueError("defined for n >= 0 only")
    prev, cur = 0, 1
    for _ in range(n):
        prev, cur = cur, 2 * cur + prev
    return prev


def half_companion_pell(n: int) -> int:
    """Half companion Pell numbers 1, 1, 3, 7, 17, 41, ... same recurrence."""
    if n < 0:
        raise ValueError("defined for n >= 0 only")
    prev, cur = 1, 1
    for _ in range(n):
        prev, cur = cur, 2 * cur + prev
    return prev


@dataclass(frozen=True, slots=True)
class QuadraticNumber:
    """Exact element a + b*sqrt(2) with rational a and b."""

    a: Fraction
    b: Fraction

    def __init__(self, a: Fraction | int = 0, b: Fraction | int = 0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __repr__(self) -> str:
        return f"QuadraticNumber({self.a}, {self.b})"

    def __str__(self) -> str:
        return f"{self.a} + {self.b}*sqrt(2)"

    def _coerce(self, other: object) -> QuadraticNumber | None:
        if isinstance(other, QuadraticNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(other)
        return None

    def __add__(self, other: object) -> QuadraticNumber:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return QuadraticNumber(self.a + rhs.a, self.b + rhs.b)

    __radd__ = __add__

    def __neg__(self) -> QuadraticNumber:
        return QuadraticNumber(-self.a, -self.b)

    def __sub__(self, other: object) -> QuadraticNumber:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> QuadraticNumber:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> QuadraticNumber:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        # (a1 + b1 r)(a2 + b2 r) with r**2 = 2
        return QuadraticNumber(
            self.a * rhs.a + 2 * self.b * rhs.b,
            self.a * rhs.b + self.b * rhs.a,
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadraticNumber:
        return QuadraticNumber(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 2 * self.b * self.b

    def __truediv__(self, other: object) -> QuadraticNumber:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        n = rhs.norm()
        if not n:
            raise ZeroDivisionError("division by a number of norm zero")
        flipped = self * rhs.conjugate()
        return QuadraticNumber(flipped.a / n, flipped.b / n)

    def __rtruediv__(self, other: object) -> QuadraticNumber:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs / self

    def __pow__(self, exponent: int) -> QuadraticNumber:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = QuadraticNumber(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def as_integer(self) -> int:
        """The value as a plain integer, or :class:`NonIntegerResultError`."""
        if self.b or self.a.denominator != 1:
            raise NonIntegerResultError(f"{self} is not a rational integer")
        return self.a.numerator


SQRT2 = QuadraticNumber(0, 1)
SILVER_RATIO = QuadraticNumber(1, 1)  # 1 + sqrt(2)
SILVER_CONJUGATE = QuadraticNumber(1, -1)  # 1 - sqrt(2)


def quad_pow(x: QuadraticNumber, n: int) -> QuadraticNumber:
    """x**n by binary exponentiation, exact."""
    return x**n


def binet_pell(n: int) -> int:
    """Pell number via (s**n - t**n) / (2 sqrt(2)) in the quadratic ring."""
    if n < 0:
        raise ValueError("defined for n >= 0 only")
    diff = SILVER_RATIO**n - SILVER_CONJUGATE**n
    return (diff / (2 * SQRT2)).as_integer()


def binet_half_companion(n: int) -> int:
    """Half companion Pell number via (s**n + t**n) / 2."""
    if n < 0:
        raise ValueError("defined for n >= 0 only")
    total = SILVER_RATIO**n + SILVER_CONJUGATE**n
    return (total / 2).as_integer()


def count_nondecreasing_quadratic(n: int) -> int:
    """Closed count evaluated literally in the sqrt(2) ring.

    (1 + (-1)**n)/4 + (s**n + t**n)/4 - (s**n - t**n)/(4 sqrt(2)) for
    the silver ratio s and its conjugate t.  Must come out a
    nonnegative integer; anything else raises
    :class:`NonIntegerResultError`.
    """
    if n < 0:
        raise ValueError("defined for n >= 0 only")
    s_pow = SILVER_RATIO**n
    t_pow = SILVER_CONJUGATE**n
    value = (
        QuadraticNumber(Fraction(1 + (-1) ** n, 4))
        + (s_pow + t_pow) * Fraction(1, 4)
        - (s_pow - t_pow) / (4 * SQRT2)
    )
    result = value.as_integer()
    if result < 0:
        raise NonIntegerResultError(f"count for n={n} came out negative")
    return result


def count_nondecreasing_closed(n: int) -> int:
    """Number of weakly-increasing-valley paths of length ``n``.

    Computed in plain integer arithmetic as
    ((1 + (-1)**n)/2 + half_companion_pell(n) - pell(n)) / 2 and cross
    checked against the quadratic ring evaluation on every call; a
    disagreement would be an arithmetic bug and raises.
    """
    if n < 0:
        raise ValueError("defined for n >= 0 only")
    parity = (1 + (-1) ** n) // 2
    total, remainder = divmod(parity + half_companion_pell(n) - pell(n), 2)
    if remainder or total != count_nondecreasing_quadratic(n):
        raise NonIntegerResultError(f"closed form routes disagree at n={n}")
    return total


def _comb0(n: int, k: int) -> int:
    # binomial with the zero convention outside 0 <= k <= n
    if k < 0 or k > n or n < 0:
        return 0
    return comb(n, k)


def count_mountains(k: int) -> int:
    """Number of mountains of length ``k``; 0 for k < 2.

    Evaluates the two binomial sums
    sum(C(j-1, 2j-k) for 1 <= j < k) and
    sum(C(k-j-2, j) for 0 <= j < k-1)
    independently and insists they agree before returning.
    """
    if k < 2:
        return 0
    by_rise = sum(_comb0(j - 1, 2 * j - k) for j in range(1, k))
    by_diagonal = sum(_comb0(k - j - 2, j) for j in range(k - 1))
    if by_rise != by_diagonal:
        raise NonIntegerResultError(f"binomial sums disagree at k={k}")
    return by_rise


class Piece(Enum):
    """One tile: a square covers one cell, a domino covers two."""

    SQUARE = 1
    DOMINO = 2

    @property
    def width(self) -> int:
        return self.value


Tiling = tuple[Piece, ...]


def enumerate_tilings(n: int) -> Iterator[Tiling]:
    """All square and domino tilings of a 1 x n strip, square first.

    The order is lexicographic with Square < Domino, so the all-square
    tiling leads.  n = 0 yields the empty tiling.
    """
    if n < 0:
        raise ValueError("length must be >= 0")
    prefix: list[Piece] = []

    def extend(remaining: int) -> Iterator[Tiling]:
        if remaining == 0:
            yield tuple(prefix)
            return
        prefix.append(Piece.SQUARE)
        yield from extend(remaining - 1)
        prefix.pop()
        if remaining >= 2:
            prefix.append(Piece.DOMINO)
            yield from extend(remaining - 2)
            prefix.pop()

    return extend(n)


def count_tilings(n: int) -> int:
    """Number of tilings of a 1 x n strip, by direct recurrence."""
    if n < 0:
        raise ValueError("length must be >= 0")
    two_back, one_back = 1, 1  # lengths 0 and 1
    for _ in range(n):
        two_back, one_back = one_back, one_back + two_back
    return two_back


def count_square_first_tilings(n: int) -> int:
    """Tilings of length ``n`` whose first tile is a square.

    The empty tiling has no first tile, so n = 0 gives 0 here even
    though the matching series starts with constant term 1.
    """
    if n < 0:
        raise ValueError("length must be >= 0")
    return count_tilings(n - 1) if n >= 1 else 0


def delete_leading_domino(tiling: Tiling) -> Tiling:
    """Drop the first tile, which must be a domino.

    This realises the bijection from domino-first tilings of length
    n + 1 onto all tilings of length n - 1.
    """
    if not tiling or tiling[0] is not Piece.DOMINO:
        raise DoesNotStartWithDominoError("tiling does not start with a domino")
    return tiling[1:]


def render_tiling(tiling: Tiling) -> str:
    """Tokens "S" and "D" separated by single spaces."""
    return " ".join("S" if piece is Piece.SQUARE else "D" for piece in tiling)


def format_bfile(values: Sequence[int], start: int = 0) -> str:
    """OEIS b-file style listing, one "index value" pair per line."""
    return "\n".join(f"{start + i} {v}" for i, v in enumerate(values))
