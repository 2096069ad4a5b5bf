"""Exact integer polynomial arithmetic, enough for characteristic polynomials."""

from dataclasses import dataclass


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial, coefficients ascending by degree."""

    coeffs: tuple

    def __init__(self, coeffs):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other):
        m = max(len(self.coeffs), len(other.coeffs))
        return IntPoly([self[i] + other[i] for i in range(m)])

    def __sub__(self, other):
        m = max(len(self.coeffs), len(other.coeffs))
        return IntPoly([self[i] - other[i] for i in range(m)])

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if not self or not other:
            return IntPoly([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPoly(out)

    def __pow__(self, k):
        result = IntPoly([1])
        for _ in range(k):
            result = result * self
        return result

    def divmod(self, other):
        """Polynomial division; requires each quotient step to divide exactly."""
        if not other:
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return IntPoly([]), IntPoly(rem)
        quot = [0] * (dq + 1)
        for i in range(dq, -1, -1):
            top = rem[i + other.degree]
            q, r = divmod(top, lead)
            if r:
                raise ValueError(f"non-exact division step: {top} / {lead}")
            quot[i] = q
            for j, b in enumerate(other.coeffs):
                rem[i + j] -= q * b
        return IntPoly(quot), IntPoly(rem)

    def __str__(self):
        if not self:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            term = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if i > 0 and abs(c) != 1:
                term = f"{abs(c)}{term}"
            elif i == 0:
                term = str(abs(c))
            parts.append(("-" if c < 0 else "+") + term)
        s = "".join(parts)
        return s[1:] if s[0] == "+" else s


def charpoly_of_recurrence(coeffs):
    """x^k - c1 x^(k-1) - ... - ck for x(n) = c1 x(n-1) + ... + ck x(n-k)."""
    k = len(coeffs)
    return IntPoly([-c for c in reversed(coeffs)] + [1])
