"""JSON interchange format for homogeneous-space data.

A space document carries a Lie algebra by sparse structure constants, the
h/m index split, optional named invariant forms on m and an optional
metric Gram matrix.  Scalars are exact when written as "p/q" strings and
float when written as JSON numbers.  The schema ships in
``schemas/space.schema.json``; antisymmetry is completed from the i < j
entries and the Jacobi identity is validated on load.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .exterior import KForm
from .lie import LieAlgebraData, ReductiveSpace
from .scalars import parse_rational


class SpaceFormatError(ValueError):
    """Invalid space document; message carries a JSON-path-style location."""


def _value(v, where):
    if isinstance(v, str):
        try:
            return parse_rational(v)
        except (ValueError, ZeroDivisionError) as ex:
            raise SpaceFormatError(f"{where}: bad rational {v!r} ({ex})")
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise SpaceFormatError(f"{where}: expected number or 'p/q' string")
    if isinstance(v, int):
        return Fraction(v)
    return float(v)


@dataclass
class SpaceDocument:
    dimension: int
    labels: list
    constants: list            # dense c[i][j][k]
    h_indices: list
    m_indices: list
    forms: dict = field(default_factory=dict)      # name -> KForm on m
    metric: list = None                            # Gram on m, or None

    def reductive_space(self):
        algebra = LieAlgebraData(self.constants, labels=self.labels)
        return ReductiveSpace(algebra, self.h_indices, self.m_indices)


def parse_space(data):
    """Validate a parsed JSON object into a SpaceDocument."""
    if not isinstance(data, dict):
        raise SpaceFormatError("$: top level must be an object")
    try:
        dim = int(data["dimension"])
    except (KeyError, TypeError, ValueError):
        raise SpaceFormatError("$.dimension: missing or not an integer")
    labels = data.get("basis", [f"X{i+1}" for i in range(dim)])
    if len(labels) != dim:
        raise SpaceFormatError("$.basis: wrong number of labels")

    triples = data.get("structure_constants", [])
    c = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    seen = set()
    for pos, entry in enumerate(triples):
        where = f"$.structure_constants[{pos}]"
        if not isinstance(entry, list) or len(entry) != 4:
            raise SpaceFormatError(f"{where}: expected [i, j, k, value]")
        i, j, k, v = entry
        for name, idx in (("i", i), ("j", j), ("k", k)):
            if not isinstance(idx, int) or not 0 <= idx < dim:
                raise SpaceFormatError(f"{where}.{name}: index out of range")
        if i >= j:
            raise SpaceFormatError(f"{where}: give entries for i < j only")
        if (i, j, k) in seen:
            raise SpaceFormatError(f"{where}: duplicate entry for [{i},{j},{k}]")
        seen.add((i, j, k))
        val = _value(v, where)
        c[i][j][k] = val
        c[j][i][k] = -val

    h_idx = data.get("h_indices", [])
    m_idx = data.get("m_indices")
    if m_idx is None:
        m_idx = [i for i in range(dim) if i not in h_idx]
    if sorted(list(h_idx) + list(m_idx)) != list(range(dim)):
        raise SpaceFormatError("$.h_indices/m_indices: must partition the basis")
    m_pos = {int(g): p for p, g in enumerate(m_idx)}
    nm = len(m_idx)

    forms = {}
    for name, entries in (data.get("forms") or {}).items():
        where = f"$.forms.{name}"
        if not isinstance(entries, list):
            raise SpaceFormatError(f"{where}: expected a list of [indices, value]")
        degree = None
        terms = []
        for pos, entry in enumerate(entries):
            if (not isinstance(entry, list) or len(entry) != 2
                    or not isinstance(entry[0], list)):
                raise SpaceFormatError(
                    f"{where}[{pos}]: expected [[i1..ik], value]")
            idx, v = entry
            if degree is None:
                degree = len(idx)
            if len(idx) != degree:
                raise SpaceFormatError(f"{where}[{pos}]: mixed degrees")
            mapped = []
            for g in idx:
                if g not in m_pos:
                    raise SpaceFormatError(
                        f"{where}[{pos}]: index {g} is not an m-index")
                mapped.append(m_pos[g])
            terms.append((tuple(mapped), _value(v, f"{where}[{pos}]")))
        forms[name] = KForm.from_terms(nm, degree or 0, terms)

    metric = None
    if data.get("metric") is not None:
        rows = data["metric"]
        if len(rows) != nm or any(len(r) != nm for r in rows):
            raise SpaceFormatError("$.metric: expected a square m x m matrix")
        metric = [[_value(v, f"$.metric[{i}][{j}]") for j, v in enumerate(row)]
                  for i, row in enumerate(rows)]
        for i in range(nm):
            for j in range(nm):
                if metric[i][j] != metric[j][i]:
                    raise SpaceFormatError("$.metric: not symmetric")

    doc = SpaceDocument(dimension=dim, labels=list(labels), constants=c,
                        h_indices=list(h_idx), m_indices=list(m_idx),
                        forms=forms, metric=metric)
    try:
        doc.reductive_space()
    except ValueError as ex:
        raise SpaceFormatError(f"$: {ex}")
    return doc


def load_space(path):
    """Parse and validate a space document from a file path."""
    with open(path) as fh:
        text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as ex:
        raise SpaceFormatError(
            f"{path}:{ex.lineno}:{ex.colno}: {ex.msg}")
    return parse_space(data)


def _scalar_out(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, int):
        return str(Fraction(v))
    return float(v)


def dump_space(space, forms=None, metric=None, labels=None):
    """Serialize a ReductiveSpace (plus optional forms/metric) to JSON text."""
    algebra = space.algebra
    dim = algebra.dim
    triples = []
    for i in range(dim):
        for j in range(i + 1, dim):
            for k in range(dim):
                v = algebra.c[i][j][k]
                if v != 0:
                    triples.append([i, j, k, _scalar_out(v)])
    out = {
        "dimension": dim,
        "basis": labels or algebra.labels,
        "structure_constants": triples,
        "h_indices": list(space.h_idx),
        "m_indices": list(space.m_idx),
    }
    if forms:
        fout = {}
        for name, form in forms.items():
            entries = []
            for idx, v in form.terms():
                entries.append([[space.m_idx[i] for i in idx], _scalar_out(v)])
            fout[name] = entries
        out["forms"] = fout
    if metric is not None:
        out["metric"] = [[_scalar_out(v) for v in row] for row in metric]
    return json.dumps(out, indent=2)
