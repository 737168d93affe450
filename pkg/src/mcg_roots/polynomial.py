"""Integer polynomials with coefficients stored in ascending degree."""

from __future__ import annotations


class IntPolynomial:
    """An immutable polynomial in ``x`` with integer coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``. Trailing zeros are
    stripped, so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPolynomial", self.coeffs))

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def divide_by_linear(self, root):
        """Divide by ``(x - root)``; return ``(quotient, remainder)``."""
        if self.is_zero():
            return IntPolynomial(), 0
        cs = self.coeffs
        out = [0] * (len(cs) - 1)
        carry = cs[-1]
        for i in range(len(cs) - 2, -1, -1):
            out[i] = carry
            carry = cs[i] + carry * root
        return IntPolynomial(out), carry

    def root_multiplicity(self, root):
        """Multiplicity of ``root`` as a root; zero polynomial raises."""
        if self.is_zero():
            raise ValueError("zero polynomial has every root")
        k, p = 0, self
        while True:
            q, r = p.divide_by_linear(root)
            if r != 0:
                return k
            k, p = k + 1, q

    def ascending_string(self):
        """Terms in ascending degree, e.g. ``-1 + x^2``."""
        if self.is_zero():
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if i == 0:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def factored_string(self):
        """Pull out ``(x+1)`` and ``(x-1)`` powers; the remainder is printed
        in ascending form when it is not a unit."""
        if self.is_zero():
            return "0"
        plus = self.root_multiplicity(-1)
        minus = self.root_multiplicity(1)
        rest = self
        for _ in range(plus):
            rest, _r = rest.divide_by_linear(-1)
        for _ in range(minus):
            rest, _r = rest.divide_by_linear(1)
        pieces = []
        if plus:
            pieces.append("(x+1)" + (f"^{plus}" if plus > 1 else ""))
        if minus:
            pieces.append("(x-1)" + (f"^{minus}" if minus > 1 else ""))
        if rest.coeffs == (1,):
            return "".join(pieces) if pieces else "1"
        if rest.coeffs == (-1,):
            return "-" + ("".join(pieces) if pieces else "1")
        pieces.append("(" + rest.ascending_string() + ")")
        return "".join(pieces)

    def __str__(self):
        return self.ascending_string()


def _coerce(value):
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int):
        return IntPolynomial((value,))
    raise TypeError(f"cannot combine IntPolynomial with {type(value).__name__}")
