"""Truncated integer Laurent series."""
from dataclasses import dataclass, field


@dataclass(frozen=True)
class LaurentPolyZ:
    """``sum coeffs[i] t^(offset+i)``, reliable up to exponent ``trunc``.

    ``trunc=None`` means the series is an exact Laurent polynomial.  The
    representation is normalized (leading zeros folded into ``offset``,
    truncated series padded or clipped to ``trunc``) so equality is
    structural.  ``flags`` carries warnings and takes no part in equality.
    """

    offset: int
    coeffs: tuple
    trunc: int = None
    flags: frozenset = field(default=frozenset(), compare=False)

    def __post_init__(self):
        cs = [int(c) for c in self.coeffs]
        off = int(self.offset)
        if self.trunc is not None:
            keep = self.trunc - off + 1
            cs = cs[: max(keep, 0)] + [0] * max(keep - len(cs), 0)
        while cs and cs[0] == 0:
            cs.pop(0)
            off += 1
        if self.trunc is None:
            while cs and cs[-1] == 0:
                cs.pop()
        if not cs:
            off = 0 if self.trunc is None else min(off, self.trunc + 1)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "offset", off)
        object.__setattr__(self, "flags", frozenset(self.flags))

    @classmethod
    def from_list(cls, coeffs, offset=0, trunc=None, flags=()):
        return cls(offset, tuple(coeffs), trunc, frozenset(flags))

    @classmethod
    def monomial(cls, n, c=1):
        return cls(n, (c,))

    @property
    def exact(self):
        return self.trunc is None

    @property
    def top(self):
        """Highest exponent about which the series makes a claim."""
        if self.trunc is not None:
            return self.trunc
        return self.offset + len(self.coeffs) - 1

    def reliable(self, n):
        return self.trunc is None or n <= self.trunc

    def __getitem__(self, n):
        if not self.reliable(n):
            raise IndexError(f"coefficient of t^{n} lies beyond truncation {self.trunc}")
        i = n - self.offset
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def coefficients(self, lo, hi):
        return [self[n] for n in range(lo, hi + 1)]

    def __add__(self, other):
        other = _coerce(other)
        trunc = _min_trunc(self.trunc, other.trunc)
        lo = min(self.offset, other.offset)
        hi = max(self.offset + len(self.coeffs), other.offset + len(other.coeffs)) - 1
        if trunc is not None:
            hi = min(hi, trunc)
        cs = [self._get(n) + other._get(n) for n in range(lo, hi + 1)]
        return LaurentPolyZ(lo, tuple(cs), trunc, self.flags | other.flags)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolyZ(self.offset, tuple(-c for c in self.coeffs), self.trunc, self.flags)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __mul__(self, other):
        other = _coerce(other)
        if (not self.coeffs and self.exact) or (not other.coeffs and other.exact):
            return LaurentPolyZ(0, (), None, self.flags | other.flags)
        trunc = _min_trunc(
            None if self.trunc is None else self.trunc + other.offset,
            None if other.trunc is None else other.trunc + self.offset,
        )
        n = len(self.coeffs) + len(other.coeffs) - 1
        if trunc is not None:
            n = min(n, trunc - self.offset - other.offset + 1)
        cs = [0] * max(n, 0)
        for i, a in enumerate(self.coeffs):
            if a == 0 or i >= n:
                continue
            for j, b in enumerate(other.coeffs[: n - i]):
                cs[i + j] += a * b
        return LaurentPolyZ(self.offset + other.offset, tuple(cs), trunc, self.flags | other.flags)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by ``t^k``."""
        trunc = None if self.trunc is None else self.trunc + k
        return LaurentPolyZ(self.offset + k, self.coeffs, trunc, self.flags)

    def truncate(self, n):
        n = n if self.trunc is None else min(n, self.trunc)
        return LaurentPolyZ(self.offset, self.coeffs, n, self.flags)

    def with_flags(self, *flags):
        return LaurentPolyZ(self.offset, self.coeffs, self.trunc, self.flags | set(flags))

    def _get(self, n):
        i = n - self.offset
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def machine(self):
        cs = ",".join(str(c) for c in self.coeffs) or "none"
        tr = "exact" if self.trunc is None else str(self.trunc)
        return f"offset={self.offset} coeffs={cs} trunc={tr}"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.offset + i
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}" + (f"*{mono}" if mono else "")
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            out = "0"
        else:
            out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
            out += "".join(f" {s} {b}" for s, b in terms[1:])
        if self.trunc is not None:
            out += f" + O(t^{self.trunc + 1})"
        return out


def _min_trunc(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _coerce(x):
    if isinstance(x, LaurentPolyZ):
        return x
    return LaurentPolyZ(0, (int(x),))


def series_mul(a, b):
    return a * b


def geometric(c0, rest, trunc):
    """``c0 + rest*t + rest*t^2 + ...`` known to exponent ``trunc``."""
    return LaurentPolyZ(0, (c0,) + (rest,) * trunc, trunc)
