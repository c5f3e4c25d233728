"""Exact formal power series, truncated at a fixed order.

Everything here runs on :class:`fractions.Fraction`; no floating point
is involved anywhere.  A :class:`TruncatedSeries` holds coefficients 0
through its order, binary operations truncate to the smaller order of
the two operands, and division requires an invertible (nonzero)
constant term.  :class:`RationalGF` expands a rational function through
the linear recurrence read off its denominator, which keeps the cost at
O(order * degree).

The registry behind :func:`gf_coefficients` collects the named closed
forms used across the package, including the continued fraction shapes,
so every route to the same counting sequence can be expanded and
compared coefficient by coefficient.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Callable, Iterable, Sequence

__all__ = [
    "ZeroConstantTermError",
    "NonzeroConstantTermError",
    "UnknownFormError",
    "TruncatedSeries",
    "Polynomial",
    "RationalGF",
    "DEFAULT_ORDER",
    "FORM_NAMES",
    "series_add",
    "series_mul",
    "series_div",
    "rational_coeffs",
    "gf_coefficients",
    "star_identity_holds",
    "format_coefficient",
    "format_coefficients",
    "coefficients_to_json",
]

DEFAULT_ORDER = 64


class ZeroConstantTermError(ZeroDivisionError):
    """Raised when a division needs a nonzero constant term and has none."""


class NonzeroConstantTermError(ValueError):
    """Raised when an argument must vanish at z = 0 but does not."""


class UnknownFormError(ValueError):
    """Raised for a generating function name outside the registry."""


Coeff = Fraction | int


def _fractions(values: Iterable[Coeff]) -> list[Fraction]:
    return [Fraction(v) for v in values]


class TruncatedSeries:
    """Power series known through z**order, with exact coefficients.

    Supports +, -, * and / with other series and with int or Fraction
    scalars, so expressions read like the formulas they implement, for
    example ``1 / (1 - z * z)``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Coeff], order: int | None = None):
        cs = _fractions(coeffs)
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            del cs[order + 1 :]
            cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        elif not cs:
            raise ValueError("need at least one coefficient or an explicit order")
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, value: Coeff, order: int) -> TruncatedSeries:
        return cls([value], order)

    @classmethod
    def variable(cls, order: int) -> TruncatedSeries:
        """The series z."""
        return cls([0, 1], order)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> Fraction:
        return self._coeffs[n]

    def truncate(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(self._coeffs, order)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self._coeffs[:8])
        tail = ", ..." if self.order > 7 else ""
        return f"TruncatedSeries([{shown}{tail}], order={self.order})"

    def _coerce(self, other: object) -> TruncatedSeries | None:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(other, self.order)
        return None

    def __add__(self, other: object) -> TruncatedSeries:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        order = min(self.order, rhs.order)
        return TruncatedSeries(
            [self._coeffs[n] + rhs._coeffs[n] for n in range(order + 1)]
        )

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries([-c for c in self._coeffs])

    def __sub__(self, other: object) -> TruncatedSeries:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> TruncatedSeries:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> TruncatedSeries:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        order = min(self.order, rhs.order)
        out = [Fraction(0)] * (order + 1)
        for i, a in enumerate(self._coeffs[: order + 1]):
            if not a:
                continue
            for j in range(order + 1 - i):
                b = rhs._coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> TruncatedSeries:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if not rhs._coeffs[0]:
            raise ZeroConstantTermError("division needs a nonzero constant term")
        order = min(self.order, rhs.order)
        out: list[Fraction] = []
        for n in range(order + 1):
            acc = self._coeffs[n]
            for k in range(1, n + 1):
                if rhs._coeffs[k]:
                    acc -= rhs._coeffs[k] * out[n - k]
            out.append(acc / rhs._coeffs[0])
        return TruncatedSeries(out)

    def __rtruediv__(self, other: object) -> TruncatedSeries:
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs / self


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Coefficientwise sum, truncated to the smaller order."""
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, truncated to the smaller order."""
    return a * b


def series_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Exact quotient; requires b to have a nonzero constant term."""
    return a / b


class Polynomial:
    """Dense polynomial with exact coefficients, trailing zeros trimmed."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Coeff] = ()):
        cs = _fractions(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def constant_term(self) -> Fraction:
        return self._coeffs[0] if self._coeffs else Fraction(0)

    def __getitem__(self, n: int) -> Fraction:
        return self._coeffs[n] if 0 <= n < len(self._coeffs) else Fraction(0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self._coeffs)!r})"

    def __add__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        size = max(len(self._coeffs), len(other._coeffs))
        return Polynomial([self[n] + other[n] for n in range(size)])

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self._coeffs])

    def __sub__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: object) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self._coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self._coeffs or not other._coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def as_series(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(self._coeffs, order)


class RationalGF:
    """Quotient of two polynomials with an invertible denominator.

    Coefficient extraction runs the recurrence
    c[n] = (p[n] - sum(q[i] * c[n-i], i >= 1)) / q[0]
    read off the denominator q, costing O(order * degree).
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Polynomial, denominator: Polynomial):
        if not denominator.constant_term:
            raise ZeroConstantTermError("denominator must not vanish at z = 0")
        self.numerator = numerator
        self.denominator = denominator

    def __repr__(self) -> str:
        return f"RationalGF({self.numerator!r}, {self.denominator!r})"

    def coefficients(self, order: int) -> tuple[Fraction, ...]:
        if order < 0:
            raise ValueError("order must be >= 0")
        p, q = self.numerator, self.denominator
        q0 = q.constant_term
        out: list[Fraction] = []
        for n in range(order + 1):
            acc = p[n]
            for i in range(1, min(n, q.degree) + 1):
                if q[i]:
                    acc -= q[i] * out[n - i]
            out.append(acc / q0)
        return tuple(out)

    def as_series(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(self.coefficients(order))


def rational_coeffs(gf: RationalGF, order: int) -> tuple[Fraction, ...]:
    """Coefficients 0..order of a rational generating function."""
    return gf.coefficients(order)


def _poly(*coeffs: Coeff) -> Polynomial:
    return Polynomial(coeffs)


# 1 - z - z**2 and friends, spelled once
_ONE_MINUS_Z_MINUS_Z2 = _poly(1, -1, -1)
_ONE_PLUS_Z = _poly(1, 1)
_ONE_MINUS_Z = _poly(1, -1)
_ONE_MINUS_2Z = _poly(1, -2)
_ONE_MINUS_2Z_MINUS_Z2 = _poly(1, -2, -1)

_MOUNTAIN_GF = RationalGF(_poly(0, 0, 1), _ONE_MINUS_Z_MINUS_Z2)
_BUNDLE_GF = RationalGF(_ONE_MINUS_Z_MINUS_Z2, _ONE_PLUS_Z * _ONE_MINUS_2Z)
_PRODUCT_GF = RationalGF(
    _poly(0, 0, 1) * _ONE_MINUS_Z_MINUS_Z2,
    _ONE_PLUS_Z * _ONE_MINUS_Z * _ONE_MINUS_2Z_MINUS_Z2,
)
_DYCK_GF = RationalGF(_ONE_MINUS_2Z, _poly(1, -3, 1))


def _form_mountain(order: int) -> tuple[Fraction, ...]:
    return _MOUNTAIN_GF.coefficients(order)


def _form_bundle(order: int) -> tuple[Fraction, ...]:
    return _BUNDLE_GF.coefficients(order)


def _form_product(order: int) -> tuple[Fraction, ...]:
    return _PRODUCT_GF.coefficients(order)


def _form_with_empty(order: int) -> tuple[Fraction, ...]:
    coeffs = list(_PRODUCT_GF.coefficients(order))
    coeffs[0] += 1
    return tuple(coeffs)


def _form_partial_fractions(order: int) -> tuple[Fraction, ...]:
    quarter = Fraction(1, 4)
    half = Fraction(1, 2)
    a = RationalGF(_poly(1), _ONE_MINUS_Z).as_series(order) * quarter
    b = RationalGF(_poly(1), _ONE_PLUS_Z).as_series(order) * quarter
    c = RationalGF(_ONE_MINUS_2Z, _ONE_MINUS_2Z_MINUS_Z2).as_series(order) * half
    return (a + b + c).coefficients


def _gamma_series(order: int) -> TruncatedSeries:
    # z**2 over the three-layer staircase denominator
    z = TruncatedSeries.variable(order)
    layer = 1 - z * z
    layer = 1 - z / layer
    layer = 1 - z / layer
    return (z * z) / layer


def _form_continued_fraction(order: int) -> tuple[Fraction, ...]:
    z = TruncatedSeries.variable(order)
    layer = 1 - z * z
    layer = 1 - z / layer
    layer = 1 - z / layer
    layer = 1 - (z * z) / layer
    return (1 / layer).coefficients


def _form_gamma(order: int) -> tuple[Fraction, ...]:
    return _gamma_series(order).coefficients


def _form_cf_closure(order: int) -> tuple[Fraction, ...]:
    return (1 / (1 - _gamma_series(order))).coefficients


def _form_tree_form(order: int) -> tuple[Fraction, ...]:
    z = TruncatedSeries.variable(order)
    mountain = _MOUNTAIN_GF.as_series(order)
    hang = 1 / (1 - mountain)
    spine = (z * z) / (1 - (z + z * z) * hang)
    return (1 + spine * hang).coefficients


def _form_dyck_nondecreasing(order: int) -> tuple[Fraction, ...]:
    return _DYCK_GF.coefficients(order)


def _form_square_first_tilings(order: int) -> tuple[Fraction, ...]:
    z = TruncatedSeries.variable(order)
    return (1 / (1 - z / (1 - z * z))).coefficients


def _form_edge_or_path(order: int) -> tuple[Fraction, ...]:
    z = TruncatedSeries.variable(order)
    return (z / (1 - z / (1 - z * z))).coefficients


_FORMS: dict[str, Callable[[int], tuple[Fraction, ...]]] = {
    "mountain": _form_mountain,
    "bundle": _form_bundle,
    "product": _form_product,
    "with-empty": _form_with_empty,
    "partial-fractions": _form_partial_fractions,
    "continued-fraction": _form_continued_fraction,
    "gamma": _form_gamma,
    "cf-closure": _form_cf_closure,
    "tree-form": _form_tree_form,
    "dyck-nondecreasing": _form_dyck_nondecreasing,
    "square-first-tilings": _form_square_first_tilings,
    "edge-or-path": _form_edge_or_path,
}

FORM_NAMES: tuple[str, ...] = tuple(_FORMS)


def gf_coefficients(form: str, order: int = DEFAULT_ORDER) -> tuple[Fraction, ...]:
    """Coefficients 0..order of a named generating function.

    The registry names every closed form the package works with; an
    unknown name raises :class:`UnknownFormError` listing the options.
    Continued fraction shapes are evaluated innermost layer first, at
    the full truncation order throughout.
    """
    try:
        builder = _FORMS[form]
    except KeyError:
        known = ", ".join(FORM_NAMES)
        raise UnknownFormError(f"unknown form {form!r}; expected one of: {known}") from None
    if order < 0:
        raise ValueError("order must be >= 0")
    return tuple(builder(order))


def star_identity_holds(a: TruncatedSeries, b: TruncatedSeries, order: int) -> bool:
    """Check 1/(1-a-b) == 1/(1-b) * 1/(1 - a/(1-b)) through ``order``.

    Both arguments must vanish at z = 0; otherwise the geometric series
    being compared do not exist and
    :class:`NonzeroConstantTermError` is raised.
    """
    a = a.truncate(order)
    b = b.truncate(order)
    if a[0] or b[0]:
        raise NonzeroConstantTermError("both arguments must have zero constant term")
    lhs = 1 / (1 - a - b)
    b_star = 1 / (1 - b)
    rhs = b_star * (1 / (1 - a * b_star))
    return lhs == rhs


def format_coefficient(value: Fraction) -> str:
    """Exact decimal string; integers drop the denominator."""
    return str(value)


def format_coefficients(values: Sequence[Fraction]) -> str:
    """Comma separated exact values, e.g. ``1, 0, 1, 1, 3``."""
    return ", ".join(format_coefficient(v) for v in values)


def coefficients_to_json(form: str, values: Sequence[Fraction]) -> str:
    """JSON record ``{"form": ..., "coeffs": ["1", "0", ...]}``."""
    record = {"form": form, "coeffs": [format_coefficient(v) for v in values]}
    return json.dumps(record, separators=(",", ":"))
