"""Reports as ordered records, rendered as aligned tables or ``key=value`` lines."""
from dataclasses import dataclass, field

from .series import LaurentPolyZ

EXIT_OK, EXIT_REFUTED, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 3


@dataclass
class Record:
    kind: str  # None for bare status/conclusion lines
    pairs: list


@dataclass
class Report:
    records: list = field(default_factory=list)
    exit_code: int = EXIT_OK

    def add(self, kind, *items, **pairs):
        """Append a record; ``items`` are ``(key, value)`` tuples placed before ``pairs``."""
        out = []
        for key, value in list(items) + list(pairs.items()):
            if value is None:
                continue
            if isinstance(value, LaurentPolyZ):
                out += series_pairs(value)
            else:
                out.append((key, value))
        self.records.append(Record(kind, out))
        return self

    def status(self, *items, **pairs):
        return self.add(None, *items, **pairs)

    def worsen(self, code):
        """Keep the most severe exit code among ok < inconclusive < refuted."""
        rank = {EXIT_OK: 0, EXIT_INCONCLUSIVE: 1, EXIT_REFUTED: 2, EXIT_USAGE: 3}
        if rank[code] > rank[self.exit_code]:
            self.exit_code = code
        return self


def series_pairs(s):
    return [("offset", s.offset), ("coeffs", list(s.coeffs)), ("trunc", "exact" if s.trunc is None else s.trunc)]


def format_value(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple, dict)) and not v:
        return "none"
    if isinstance(v, (list, tuple)):
        return ",".join(format_value(x) for x in v)
    if isinstance(v, dict):
        return ",".join(f"{format_value(k)}:{format_value(x)}" for k, x in v.items())
    return str(v)


def machine_line(rec):
    body = " ".join(f"{k}={format_value(v)}" for k, v in rec.pairs)
    if rec.kind is None:
        return body
    return f"{rec.kind} {body}" if body else rec.kind


def _table(kind, rows):
    keys = [k for k, _ in rows[0].pairs]
    cells = [keys] + [[format_value(v) for _, v in r.pairs] for r in rows]
    widths = [max(len(row[j]) for row in cells) for j in range(len(keys))]
    lines = [f"[{kind}]"]
    for row in cells:
        lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip())
    return lines


def _human(records):
    lines = []
    i = 0
    while i < len(records):
        rec = records[i]
        if rec.kind is None:
            width = max((len(k) for k, _ in rec.pairs), default=0)
            lines += [f"{k.ljust(width)}  {format_value(v)}" for k, v in rec.pairs]
            i += 1
            continue
        keys = [k for k, _ in rec.pairs]
        j = i
        while j < len(records) and records[j].kind == rec.kind and [k for k, _ in records[j].pairs] == keys:
            j += 1
        lines += _table(rec.kind, records[i:j])
        i = j
    return lines


def emit_report(report, mode="human"):
    if mode == "machine":
        lines = [machine_line(r) for r in report.records]
    elif mode == "human":
        lines = _human(report.records)
    else:
        raise ValueError(f"unknown output mode {mode!r}")
    return "".join(line + "\n" for line in lines)
