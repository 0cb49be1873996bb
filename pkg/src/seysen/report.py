"""Serialisation of reports: canonical JSON, CSV and plain text.

Exact rationals are written as strings ``"p/q"`` (``"p"`` for integers);
floats as numbers with 17 significant digits.  Key and column order is
fixed, so equal inputs give byte-identical output.
"""

import csv
import io
import json
import math
from dataclasses import asdict, fields, is_dataclass
from fractions import Fraction


def scalar_text(x):
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    if isinstance(x, float):
        if not math.isfinite(x):
            return "nan" if math.isnan(x) else ("inf" if x > 0 else "-inf")
        return format(x, ".17g")
    return str(x)


def _json_value(x, indent, level):
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if is_dataclass(x) and not isinstance(x, type):
        x = {f.name: getattr(x, f.name) for f in fields(x)}
    if isinstance(x, dict):
        if not x:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_json_value(v, indent, level + 1)}" for k, v in x.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(x, (list, tuple)):
        if not x:
            return "[]"
        items = [f"{pad}{_json_value(v, indent, level + 1)}" for v in x]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if x is None:
        return "null"
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return json.dumps(str(x))
    if isinstance(x, float):
        return format(x, ".17g") if math.isfinite(x) else "null"
    return json.dumps(str(x))


def to_json(obj, indent=2):
    return _json_value(obj, indent, 0) + "\n"


def to_csv(rows, columns):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([scalar_text(row.get(c, "")) for c in columns])
    return buf.getvalue()


def to_text(record):
    if is_dataclass(record):
        record = asdict(record)
    width = max(len(k) for k in record)
    lines = []
    for k, v in record.items():
        if isinstance(v, (list, tuple)):
            v = " ".join(scalar_text(x) for x in v)
        else:
            v = scalar_text(v)
        lines.append(f"{k:<{width}}  {v}")
    return "\n".join(lines) + "\n"
