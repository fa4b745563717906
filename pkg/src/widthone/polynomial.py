"""Dense univariate polynomials and truncated power series over the integers."""

from __future__ import annotations

from typing import Iterable, Sequence


class IntPolynomial:
    """Immutable polynomial; ``coeffs[k]`` is the coefficient of t**k.

    Trailing zeros are trimmed, so the zero polynomial has ``coeffs == ()``
    and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == IntPolynomial(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "t" if k == 1 else f"t^{k}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(terms) or "0"

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[k] + other[k] for k in range(n))

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        return IntPolynomial(convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc


def convolve(a: Sequence[int], b: Sequence[int], length: int | None = None) -> list[int]:
    """Exact product of coefficient lists, optionally truncated to ``length`` terms."""
    if not a or not b:
        return [0] * (length or 0)
    full = len(a) + len(b) - 1
    n = full if length is None else length
    out = [0] * n
    for i, ai in enumerate(a):
        if ai == 0 or i >= n:
            continue
        for j in range(min(len(b), n - i)):
            out[i + j] += ai * b[j]
    return out


def inverse_one_minus_t_power(m: int, length: int) -> list[int]:
    """First ``length`` coefficients of (1 - t)**(-m), i.e. C(m-1+l, l)."""
    if m < 0:
        raise ValueError("exponent must be nonnegative")
    # build by repeated prefix sums: multiplying by 1/(1-t) is a running sum
    series = [1] + [0] * (length - 1) if length else []
    for _ in range(m):
        run = 0
        for i, c in enumerate(series):
            run += c
            series[i] = run
    return series


def one_minus_t_power(m: int) -> list[int]:
    """Coefficients of (1 - t)**m."""
    out = [1]
    for _ in range(m):
        out = [a - b for a, b in zip(out + [0], [0] + out)]
    return out
