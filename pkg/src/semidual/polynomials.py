"""Sparse multivariate polynomials with integer coefficients, plus a parser.

Grammar (whitespace insignificant, juxtaposition is an error)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' INT]
    atom   := INT | NAME | '(' expr ')'

A polynomial is a ``dict`` mapping exponent tuples to nonzero integers.
"""


class PolynomialSyntaxError(ValueError):
    def __init__(self, message, column):
        super().__init__(f"{message} at column {column}")
        self.message = message
        self.column = column


def _add(p, q, sign=1):
    out = dict(p)
    for m, c in q.items():
        v = out.get(m, 0) + sign * c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def _mul(p, q):
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            v = out.get(m, 0) + c1 * c2
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return out


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("INT", int(text[i:j]), i + 1))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("NAME", text[i:j], i + 1))
            i = j
        elif ch in "+-*^()":
            tokens.append((ch, ch, i + 1))
            i += 1
        else:
            raise PolynomialSyntaxError(f"unexpected character {ch!r}", i + 1)
    tokens.append(("END", None, len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text, varnames):
        self.toks = _tokenize(text)
        self.pos = 0
        self.vars = {v: k for k, v in enumerate(varnames)}
        self.n = len(varnames)

    def peek(self):
        return self.toks[self.pos]

    def take(self, kind=None):
        tok = self.toks[self.pos]
        if kind is not None and tok[0] != kind:
            raise PolynomialSyntaxError(f"expected {kind}, found {tok[1]!r}", tok[2])
        self.pos += 1
        return tok

    def parse(self):
        if self.peek()[0] == "END":
            raise PolynomialSyntaxError("empty polynomial", 1)
        p = self.expr()
        tok = self.peek()
        if tok[0] != "END":
            raise PolynomialSyntaxError(f"unexpected token {tok[1]!r}", tok[2])
        return p

    def expr(self):
        sign = 1
        if self.peek()[0] == "-":
            self.take()
            sign = -1
        p = _mul({(0,) * self.n: sign}, self.term())
        while self.peek()[0] in "+-":
            op = self.take()[0]
            p = _add(p, self.term(), 1 if op == "+" else -1)
        return p

    def term(self):
        p = self.factor()
        while self.peek()[0] == "*":
            self.take()
            p = _mul(p, self.factor())
        if self.peek()[0] in ("INT", "NAME", "("):
            raise PolynomialSyntaxError("juxtaposition is not allowed; use '*'", self.peek()[2])
        return p

    def factor(self):
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            e = self.take("INT")[1]
            out = {(0,) * self.n: 1}
            for _ in range(e):
                out = _mul(out, base)
            return out
        return base

    def atom(self):
        tok = self.peek()
        if tok[0] == "INT":
            self.take()
            return {(0,) * self.n: tok[1]} if tok[1] else {}
        if tok[0] == "NAME":
            self.take()
            if tok[1] not in self.vars:
                raise PolynomialSyntaxError(f"unknown variable {tok[1]!r}", tok[2])
            e = [0] * self.n
            e[self.vars[tok[1]]] = 1
            return {tuple(e): 1}
        if tok[0] == "(":
            self.take()
            p = self.expr()
            self.take(")")
            return p
        raise PolynomialSyntaxError(f"unexpected token {tok[1]!r}", tok[2])


def parse_polynomial(text, varnames):
    return _Parser(text, list(varnames)).parse()


def format_polynomial(poly, varnames):
    if not poly:
        return "0"
    parts = []
    for mono in sorted(poly, reverse=True):
        c = poly[mono]
        factors = []
        for name, e in zip(varnames, mono):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def weighted_degree(mono, degrees):
    return sum(e * w for e, w in zip(mono, degrees))
