"""
Text formats: code-set / family documents (JSON), profile CSVs and reports.

A family document looks like::

    {
      "format_version": "1",
      "type": "family",
      "params": {"K": 4, "M": 4, "L": 9, "alphabet": "ternary", "q": 2, "sets": 1},
      "sets": [
        [
          [
            [1, 1, 1, 0, 0, 0, 1, -1, 1],
            ...

A code-set document has ``"type": "codeset"`` and a single ``"codes"`` list
instead of ``"sets"``. Ternary entries are plain integers; q-ary entries are
``[re, im]`` pairs written with ``repr`` precision so they load back
bit-exactly. Each matrix row is kept on one line so documents diff well.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .codes import CodeFamily, CodeSet
from .correlation import APERIODIC, Alphabet, shift_axis
from .errors import AlphabetError, DocumentError

FORMAT_VERSION = "1"


def _encode_entry(x, ternary: bool):
    if ternary:
        return int(x)
    x = complex(x)
    return [x.real, x.imag]


def _render(doc: dict, rows: list) -> str:
    """JSON with each placeholder ``"@@ROW<i>@@"`` replaced by a one-line row."""
    text = json.dumps(doc, indent=2)
    for i, row in enumerate(rows):
        text = text.replace(f'"@@ROW{i}@@"', json.dumps(row), 1)
    return text + "\n"


def _codes_payload(cs: CodeSet, rows: list) -> list:
    ternary = cs.alphabet.is_ternary
    payload = []
    for code in cs.codes:
        mat = []
        for row in code:
            rows.append([_encode_entry(x, ternary) for x in row])
            mat.append(f"@@ROW{len(rows) - 1}@@")
        payload.append(mat)
    return payload


def _params(cs: CodeSet, **extra) -> dict:
    return {"K": cs.K, "M": cs.M, "L": cs.L, "alphabet": cs.alphabet.kind, "q": cs.alphabet.q, **extra}


def dumps_codeset(cs: CodeSet, provenance: dict | None = None) -> str:
    rows: list = []
    doc = {
        "format_version": FORMAT_VERSION,
        "type": "codeset",
        "params": _params(cs),
        "codes": _codes_payload(cs, rows),
        "provenance": provenance,
    }
    return _render(doc, rows)


def dumps_family(family: CodeFamily) -> str:
    rows: list = []
    first = family[0]
    doc = {
        "format_version": FORMAT_VERSION,
        "type": "family",
        "params": _params(first, sets=len(family)),
        "sets": [_codes_payload(s, rows) for s in family],
        "provenance": family.provenance or None,
    }
    return _render(doc, rows)


def save_codeset(cs: CodeSet, path, provenance: dict | None = None) -> None:
    Path(path).write_text(dumps_codeset(cs, provenance))


def save_family(family: CodeFamily, path) -> None:
    Path(path).write_text(dumps_family(family))


def _read_json(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON: {e.msg}", f"line {e.lineno}, column {e.colno}") from None
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object", "top level")
    return doc


def _field(doc: dict, name: str, kind, locus: str = ""):
    if name not in doc:
        raise DocumentError(f"missing field {name!r}", locus or name)
    value = doc[name]
    if not isinstance(value, kind) or isinstance(value, bool) and kind is not bool:
        raise DocumentError(f"field {name!r} has the wrong type", f"{locus}{name}")
    return value


def _decode_codes(payload, K: int, M: int, L: int, alphabet: Alphabet, locus: str) -> np.ndarray:
    if not isinstance(payload, list) or len(payload) != K:
        raise DocumentError(f"expected {K} codes", locus)
    out = np.zeros((K, M, L), dtype=alphabet.dtype)
    for k, code in enumerate(payload):
        if not isinstance(code, list) or len(code) != M:
            raise DocumentError(f"expected {M} rows", f"{locus}[{k}]")
        for r, row in enumerate(code):
            here = f"{locus}[{k}][{r}]"
            if not isinstance(row, list) or len(row) != L:
                got = len(row) if isinstance(row, list) else type(row).__name__
                raise DocumentError(f"expected a row of {L} entries, got {got}", here)
            for i, x in enumerate(row):
                if alphabet.is_ternary:
                    if not isinstance(x, int) or isinstance(x, bool):
                        raise DocumentError("ternary entries must be integers", f"{here}[{i}]")
                    value = x
                else:
                    if (not isinstance(x, list) or len(x) != 2
                            or not all(isinstance(t, (int, float)) for t in x)):
                        raise DocumentError("q-ary entries must be [re, im] pairs", f"{here}[{i}]")
                    value = complex(x[0], x[1])
                if not alphabet.contains(value):
                    raise AlphabetError(
                        f"entry {x!r} is not in the {alphabet.kind} alphabet (q={alphabet.q}) (at {here}[{i}])"
                    )
                out[k, r, i] = value
    return out


def _header(doc: dict):
    version = _field(doc, "format_version", str)
    if version != FORMAT_VERSION:
        raise DocumentError(f"unsupported format version {version!r}", "format_version")
    params = _field(doc, "params", dict)
    dims = [_field(params, key, int, "params.") for key in ("K", "M", "L")]
    if min(dims) < 1:
        raise DocumentError("K, M and L must be positive", "params")
    kind = _field(params, "alphabet", str, "params.")
    q = _field(params, "q", int, "params.")
    try:
        alphabet = Alphabet(q)
    except ValueError as e:
        raise DocumentError(str(e), "params.q") from None
    if kind != alphabet.kind:
        raise DocumentError(f"alphabet {kind!r} does not match q={q}", "params.alphabet")
    return dims, alphabet


def loads_family(text: str) -> CodeFamily:
    doc = _read_json(text)
    kind = _field(doc, "type", str)
    (K, M, L), alphabet = _header(doc)
    provenance = doc.get("provenance") or {}
    if not isinstance(provenance, dict):
        raise DocumentError("provenance must be an object or null", "provenance")
    if kind == "codeset":
        codes = _decode_codes(doc.get("codes"), K, M, L, alphabet, "codes")
        return CodeFamily((CodeSet(codes, alphabet),), provenance)
    if kind != "family":
        raise DocumentError(f"unknown document type {kind!r}", "type")
    sets = _field(doc, "sets", list)
    declared = doc["params"].get("sets", len(sets))
    if declared != len(sets):
        raise DocumentError(f"params declare {declared} sets, payload has {len(sets)}", "sets")
    if not sets:
        raise DocumentError("family has no sets", "sets")
    members = [
        CodeSet(_decode_codes(s, K, M, L, alphabet, f"sets[{j}]"), alphabet) for j, s in enumerate(sets)
    ]
    return CodeFamily(members, provenance)


def loads_codeset(text: str) -> CodeSet:
    family = loads_family(text)
    if len(family) != 1:
        raise DocumentError(f"expected a single code set, document holds {len(family)}", "sets")
    return family[0]


def _read(path) -> str:
    try:
        return Path(path).read_text()
    except FileNotFoundError:
        raise DocumentError(f"no such file: {path}", str(path)) from None


def load_codeset(path) -> CodeSet:
    return loads_codeset(_read(path))


def load_family(path) -> CodeFamily:
    return loads_family(_read(path))


def load_json(path) -> dict:
    return _read_json(_read(path))


def _num(x: float):
    return int(x) if float(x).is_integer() else repr(float(x))


def export_profile_csv(profile, path, mode: str = APERIODIC) -> None:
    """
    Write a correlation profile as CSV with columns ``tau, re, im, abs``.

    ``mode`` decides the shift labels: ``-L+1 .. L-1`` for aperiodic
    profiles (``2L - 1`` points), ``0 .. L-1`` for periodic ones.
    """
    profile = np.asarray(profile)
    if mode == APERIODIC:
        if profile.size % 2 == 0:
            raise DocumentError(f"aperiodic profile must have odd length, got {profile.size}")
        L = (profile.size + 1) // 2
    else:
        L = profile.size
    with open(path, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["tau", "re", "im", "abs"])
        for tau, v in zip(shift_axis(L, mode), profile):
            v = complex(v)
            w.writerow([int(tau), _num(v.real), _num(v.imag), _num(abs(v))])


def read_profile_csv(path) -> tuple[np.ndarray, np.ndarray]:
    """Inverse of :func:`export_profile_csv`: ``(taus, values)``."""
    taus, values = [], []
    with open(path, newline="") as f:
        for n, row in enumerate(csv.DictReader(f), start=2):
            try:
                taus.append(int(row["tau"]))
                values.append(complex(float(row["re"]), float(row["im"])))
            except (KeyError, TypeError, ValueError):
                raise DocumentError("malformed profile row", f"line {n}") from None
    values = np.array(values)
    if values.size and np.all(values.imag == 0) and np.all(values.real == np.round(values.real)):
        values = values.real.astype(np.int64)
    return np.array(taus, dtype=np.int64), values


def write_report(reports, path) -> None:
    """All reports in one JSON document, with an overall verdict."""
    doc = {
        "verdict": all(r.verdict for r in reports),
        "reports": [r.to_dict() for r in reports],
    }
    Path(path).write_text(json.dumps(doc, indent=2) + "\n")
