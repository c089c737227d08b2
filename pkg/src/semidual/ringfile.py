"""Plain-text ring files and module expressions.

A ring file is a list of ``key = value`` lines followed by optional module
blocks::

    # comments run to the end of the line
    field = GF 101
    vars = x y
    degrees = 1 1
    ideal = x^2, x*y
    truncate = 12

    [module C]
    gens = 0 0
    rel = y, 0
    rel = 0, x

Every ``rel`` line is one relation column, listing one polynomial per generator.
"""
from dataclasses import dataclass, field

from .linalg import QQ, PrimeField
from .polynomials import PolynomialSyntaxError, parse_polynomial

_RING_KEYS = ("field", "vars", "degrees", "ideal", "truncate")


class RingFileError(ValueError):
    def __init__(self, message, line, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class ModuleBlock:
    name: str
    gens: tuple
    rels: tuple = ()


@dataclass(frozen=True)
class RingFile:
    field: str
    vars: tuple
    truncate: int
    ideal: tuple = ()
    degrees: tuple = None
    modules: tuple = field(default=())

    def module(self, name):
        for m in self.modules:
            if m.name == name:
                return m
        return None

    def render(self):
        lines = [f"field = {self.field}", "vars = " + " ".join(self.vars)]
        if self.degrees is not None:
            lines.append("degrees = " + " ".join(str(d) for d in self.degrees))
        lines.append("ideal = " + ", ".join(self.ideal))
        lines.append(f"truncate = {self.truncate}")
        for m in self.modules:
            lines += ["", f"[module {m.name}]", "gens = " + " ".join(str(a) for a in m.gens)]
            lines += ["rel = " + ", ".join(col) for col in m.rels]
        return "\n".join(lines) + "\n"


def _split_commas(text, start_col):
    """Split on commas, returning ``(piece, column of piece)`` with whitespace trimmed."""
    out = []
    col = start_col
    for piece in text.split(","):
        lead = len(piece) - len(piece.lstrip())
        out.append((piece.strip(), col + lead))
        col += len(piece) + 1
    return out


def _parse_field(value, lineno, col):
    parts = value.split()
    if parts == ["QQ"]:
        return "QQ"
    if len(parts) == 2 and parts[0] == "GF":
        try:
            p = int(parts[1])
        except ValueError:
            raise RingFileError(f"invalid characteristic {parts[1]!r}", lineno, col + value.index(parts[1]))
        try:
            PrimeField(p)
        except ValueError:
            raise RingFileError(f"invalid characteristic {p}", lineno, col + value.index(parts[1]))
        return f"GF {p}"
    raise RingFileError(f"unknown field {value!r}; expected 'QQ' or 'GF <p>'", lineno, col)


def _check_poly(text, names, lineno, col):
    if not text:
        raise RingFileError("empty polynomial", lineno, col)
    try:
        parse_polynomial(text, names)
    except PolynomialSyntaxError as err:
        raise RingFileError(err.message, lineno, col + err.column - 1) from None


def _ints(value, lineno, col, what):
    out = []
    for tok in value.split():
        try:
            out.append(int(tok))
        except ValueError:
            raise RingFileError(f"{what} must be integers, got {tok!r}", lineno, col + value.index(tok)) from None
    return tuple(out)


def parse_ring_file(text):
    values = {}
    where = {}
    modules = []
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        if stripped.startswith("["):
            if not (stripped.endswith("]") and stripped[1:-1].split()[:1] == ["module"]):
                raise RingFileError("expected a section header '[module NAME]'", lineno, line.index("[") + 1)
            parts = stripped[1:-1].split()
            if len(parts) != 2 or not parts[1].isidentifier():
                raise RingFileError("module sections need exactly one identifier name", lineno, line.index("[") + 1)
            if parts[1] in ("R", "k", "dual", "hom", "tensor") or any(m["name"] == parts[1] for m in modules):
                raise RingFileError(f"module name {parts[1]!r} is reserved or already used", lineno, line.index(parts[1]) + 1)
            current = {"name": parts[1], "gens": None, "rels": [], "line": lineno}
            modules.append(current)
            continue
        if "=" not in line:
            raise RingFileError("expected 'key = value'", lineno, len(line) - len(line.lstrip()) + 1)
        key, value = line.split("=", 1)
        kcol = len(key) - len(key.lstrip()) + 1
        key = key.strip()
        vcol = len(line) - len(value) + 1 + (len(value) - len(value.lstrip()))
        value = value.strip()
        if current is None:
            if key not in _RING_KEYS:
                raise RingFileError(f"unknown key {key!r}", lineno, kcol)
            if key in values:
                raise RingFileError(f"duplicate key {key!r}", lineno, kcol)
            values[key] = value
            where[key] = (lineno, vcol)
        elif key == "gens":
            current["gens"] = (_ints(value, lineno, vcol, "generator degrees"), lineno, vcol)
        elif key == "rel":
            current["rels"].append((value, lineno, vcol))
        else:
            raise RingFileError(f"unknown module key {key!r}", lineno, kcol)

    last = len(text.splitlines()) + 1
    for key in ("field", "vars", "truncate"):
        if key not in values:
            raise RingFileError(f"missing required key {key!r}", last)
    fld = _parse_field(values["field"], *where["field"])
    names = tuple(values["vars"].split())
    ln, col = where["vars"]
    for nm in names:
        if not nm.isidentifier():
            raise RingFileError(f"invalid variable name {nm!r}", ln, col + values["vars"].index(nm))
    if len(set(names)) != len(names):
        raise RingFileError("variable names must be distinct", ln, col)
    degrees = None
    if "degrees" in values:
        degrees = _ints(values["degrees"], *where["degrees"], "degrees")
        if len(degrees) != len(names) or any(d < 1 for d in degrees):
            raise RingFileError("degrees must be one positive integer per variable", *where["degrees"])
    try:
        trunc = int(values["truncate"])
    except ValueError:
        raise RingFileError("truncate must be an integer", *where["truncate"]) from None
    if trunc < 0:
        raise RingFileError("truncate must be nonnegative", *where["truncate"])
    ideal = ()
    if values.get("ideal"):
        ln, col = where["ideal"]
        pieces = _split_commas(values["ideal"], col)
        for text_, c in pieces:
            _check_poly(text_, names, ln, c)
        ideal = tuple(t for t, _ in pieces)
    blocks = []
    for m in modules:
        if m["gens"] is None:
            raise RingFileError(f"module {m['name']!r} has no 'gens' line", m["line"])
        gens = m["gens"][0]
        rels = []
        for value, ln, col in m["rels"]:
            pieces = _split_commas(value, col)
            if len(pieces) != len(gens):
                raise RingFileError(f"relation has {len(pieces)} entries, expected {len(gens)}", ln, col)
            for text_, c in pieces:
                _check_poly(text_, names, ln, c)
            rels.append(tuple(t for t, _ in pieces))
        blocks.append(ModuleBlock(m["name"], gens, tuple(rels)))
    return RingFile(fld, names, trunc, ideal, degrees, tuple(blocks))


def field_from_name(name):
    if name == "QQ":
        return QQ
    return PrimeField(int(name.split()[1]))


def build_ring(spec):
    from .ring import build_algebra

    return build_algebra(field_from_name(spec.field), spec.vars, list(spec.ideal), spec.truncate, spec.degrees)


# ---------------------------------------------------------------------------
# module expressions


class ExpressionError(ValueError):
    pass


def split_top_level(text):
    """Split on commas that are not inside parentheses."""
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ExpressionError(f"unbalanced parentheses in {text!r}")
        if ch == "," and depth == 0:
            out.append(cur.strip())
            cur = ""
        else:
            cur += ch
    if depth:
        raise ExpressionError(f"unbalanced parentheses in {text!r}")
    out.append(cur.strip())
    return out


class ModuleResolver:
    """Evaluate ``R``, ``k``, ``dual``, ``hom(A,B)``, ``tensor(A,B)`` and named blocks."""

    def __init__(self, ring, spec=None):
        self.R = ring
        self.spec = spec
        self.cache = {}

    def __call__(self, text):
        text = text.replace(" ", "")
        M = self.cache.get(text)
        if M is None:
            M = self._build(text)
            self.cache[text] = M
        return M

    def _build(self, text):
        from .duality import matlis_dual
        from .modules import free_module, hom_module, presented_module, residue_field_module

        R = self.R
        if text == "R":
            return free_module(R, [0], name="R")
        if text == "k":
            return residue_field_module(R)
        if text == "dual":
            D = matlis_dual(R)
            D.name = "dual"
            return D
        for op in ("hom", "tensor"):
            if text.startswith(op + "(") and text.endswith(")"):
                args = split_top_level(text[len(op) + 1 : -1])
                if len(args) != 2 or not all(args):
                    raise ExpressionError(f"{op} takes two arguments: {text!r}")
                A, B = self(args[0]), self(args[1])
                if op == "hom":
                    M = hom_module(A, B)
                else:
                    from .modules import tensor_module

                    M = tensor_module(A, B)
                M.name = text
                return M
        block = self.spec.module(text) if self.spec is not None else None
        if block is None:
            raise ExpressionError(f"unknown module {text!r}")
        return presented_module(R, block.gens, [list(c) for c in block.rels], name=text)
