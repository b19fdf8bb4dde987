"""Text formats for points, shifts, pseudo-orbits, specifications and metrics.

Point grammar::

    point  := word "|" word "|" word "@" integer
    word   := symbols joined directly when every label is one character,
              otherwise separated by commas (commas are always accepted,
              and a one-symbol word is written with a trailing comma)

The first and last words are the left and right periods and must be
nonempty; the middle word is the centre starting at the anchor index.
``0|1|0@0`` is the sequence of zeros with a single 1 at index 0.

Shifts, pseudo-orbits, specifications and witnesses are YAML documents
(JSON is accepted as a subset).  Metric spaces are plain text: the point
count followed by the rows of the distance table, entries written as
integers or ``p/q``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional, Sequence

import yaml

from .errors import ParseError
from .fullshift import FiniteMetricSpace
from .sft import Sft, higher_block_recode
from .shadowing import FinitePseudoOrbit, Segment, Specification, TsLimitPseudoOrbit
from .symbolic import Dyadic, EpBiSeq

_POINT = re.compile(r"^\s*([^|@]*)\|([^|@]*)\|([^|@]*)@\s*([+-]?\d+)\s*$")
_DYADIC = re.compile(r"^\s*2\^\s*-\s*(\d+)\s*$")


def _default_labels(n: int) -> list[str]:
    return [str(i) for i in range(n)]


def _parse_word(text: str, labels: Optional[Sequence[str]]) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        tokens = [t.strip() for t in text.split(",") if t.strip()]
    else:
        tokens = list(text)
    if labels is None:
        try:
            return tuple(int(t) for t in tokens)
        except ValueError:
            raise ParseError(f"non-integer symbol in {text!r}") from None
    index = {a: i for i, a in enumerate(labels)}
    try:
        return tuple(index[t] for t in tokens)
    except KeyError as exc:
        raise ParseError(f"unknown symbol {exc.args[0]!r}") from None


def parse_point(text: str, labels: Optional[Sequence[str]] = None) -> EpBiSeq:
    m = _POINT.match(str(text))
    if not m:
        raise ParseError(f"malformed point {text!r}; expected left|center|right@s")
    left, center, right = (_parse_word(g, labels) for g in m.groups()[:3])
    if not left or not right:
        raise ParseError(f"periodic words must be nonempty in {text!r}")
    return EpBiSeq(left, center, right, int(m.group(4)))


def format_point(x: EpBiSeq, labels: Optional[Sequence[str]] = None) -> str:
    n = max(x.left + x.center + x.right) + 1
    labels = list(labels) if labels is not None else _default_labels(n)
    sep = "" if all(len(a) == 1 for a in labels) else ","

    def w(t):
        # a lone multi-character label keeps a trailing comma so that it
        # is not read back as one symbol per character
        body = sep.join(labels[a] for a in t)
        return body + "," if sep and len(t) == 1 else body

    return f"{w(x.left)}|{w(x.center)}|{w(x.right)}@{x.s}"


def parse_dyadic(text: str) -> Dyadic:
    """Accept only ``2^-k`` (and ``0``)."""
    text = str(text).strip()
    if text == "0":
        return Dyadic(None)
    m = _DYADIC.match(text)
    if not m:
        raise ParseError(f"expected a dyadic literal 2^-k, got {text!r}")
    return Dyadic(int(m.group(1)))


# -- shifts ----------------------------------------------------------------


def sft_from_dict(doc: dict) -> Sft:
    if not isinstance(doc, dict) or "alphabet" not in doc:
        raise ParseError("an SFT document needs an 'alphabet' field")
    labels = [str(a) for a in doc["alphabet"]]
    name = str(doc.get("name", ""))
    has_t, has_f = "transitions" in doc, "forbidden" in doc
    if has_t == has_f:
        raise ParseError("give exactly one of 'transitions' or 'forbidden'")
    index = {a: i for i, a in enumerate(labels)}
    if has_f:
        words = []
        for w in doc["forbidden"] or []:
            if isinstance(w, list):
                words.append([str(a) for a in w])
            elif isinstance(w, str):
                words.append([t.strip() for t in w.split(",")] if "," in w else w)
            else:
                raise ParseError(f"forbidden word {w!r} must be a quoted string or a list")
        try:
            X, _ = higher_block_recode(labels, words, name)
        except KeyError as exc:
            raise ParseError(f"unknown symbol {exc.args[0]!r} in forbidden word") from None
        return X
    edges = set()
    for e in doc["transitions"] or []:
        if isinstance(e, list):
            pair = [str(a) for a in e]
        elif isinstance(e, str):
            pair = [t.strip() for t in e.split(",")] if "," in e else list(e)
        else:
            raise ParseError(f"transition {e!r} must be a quoted string or a list")
        if len(pair) != 2:
            raise ParseError(f"transition {e!r} is not a pair")
        try:
            edges.add((index[pair[0]], index[pair[1]]))
        except KeyError as exc:
            raise ParseError(f"unknown symbol {exc.args[0]!r} in transition") from None
    return Sft(tuple(labels), frozenset(edges), name)


def sft_to_dict(X: Sft) -> dict:
    return {
        "name": X.name,
        "alphabet": list(X.labels),
        "transitions": [[X.labels[u], X.labels[v]] for u, v in sorted(X.transitions)],
    }


def _load_yaml(text: str):
    try:
        return yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ParseError(f"invalid YAML: {exc}") from None


def load_sft(path) -> Sft:
    with open(path) as fh:
        return sft_from_dict(_load_yaml(fh.read()))


def dump_sft(X: Sft, path=None) -> str:
    text = yaml.safe_dump(sft_to_dict(X), sort_keys=False, default_flow_style=None)
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
    return text


# -- pseudo-orbits, specifications, witnesses --------------------------------


def pseudo_orbit_from_dict(doc: dict, labels=None):
    if not isinstance(doc, dict):
        raise ParseError("pseudo-orbit document must be a mapping")
    if "finite" in doc:
        return FinitePseudoOrbit(tuple(parse_point(p, labels) for p in doc["finite"]))
    if "tslimit" in doc:
        t = doc["tslimit"]
        try:
            left = parse_point(t["left"], labels)
            right = parse_point(t["right"], labels)
            m = int(t.get("m", 1))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"tslimit needs left, right and m: {exc}") from None
        middle = t.get("middle")
        if middle is None:
            return TsLimitPseudoOrbit.from_tails(left, right, m)
        try:
            return TsLimitPseudoOrbit(left, right, tuple(parse_point(p, labels) for p in middle), m)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    raise ParseError("pseudo-orbit document needs 'finite' or 'tslimit'")


def pseudo_orbit_to_dict(po, labels=None) -> dict:
    if isinstance(po, TsLimitPseudoOrbit):
        return {"tslimit": {
            "left": format_point(po.left, labels),
            "right": format_point(po.right, labels),
            "middle": [format_point(p, labels) for p in po.middle],
            "m": po.m,
        }}
    return {"finite": [format_point(p, labels) for p in po]}


def load_pseudo_orbit(path, labels=None):
    with open(path) as fh:
        return pseudo_orbit_from_dict(_load_yaml(fh.read()), labels)


def specification_from_list(doc, labels=None) -> Specification:
    if isinstance(doc, dict) and "segments" in doc:
        doc = doc["segments"]
    if not isinstance(doc, list):
        raise ParseError("specification must be a list of {a, b, point} records")
    try:
        segs = tuple(Segment(int(r["a"]), int(r["b"]), parse_point(r["point"], labels)) for r in doc)
        return Specification(segs)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad specification record: {exc}") from None
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def specification_to_list(spec: Specification, labels=None) -> list:
    return [{"a": s.a, "b": s.b, "point": format_point(s.point, labels)} for s in spec.segments]


def load_specification(path, labels=None) -> Specification:
    with open(path) as fh:
        return specification_from_list(_load_yaml(fh.read()), labels)


def load_witness(path, labels=None) -> tuple[EpBiSeq, int]:
    with open(path) as fh:
        doc = _load_yaml(fh.read())
    try:
        return parse_point(doc["y"], labels), int(doc["K"])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"witness needs y and K: {exc}") from None


def dump_yaml(doc, path=None) -> str:
    text = yaml.safe_dump(doc, sort_keys=False, default_flow_style=None)
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
    return text


# -- metric spaces ---------------------------------------------------------


def parse_metric_space(text: str) -> FiniteMetricSpace:
    tokens = text.split()
    if not tokens:
        raise ParseError("empty metric-space file")
    try:
        n = int(tokens[0])
        values = [Fraction(t) for t in tokens[1:]]
    except ValueError as exc:
        raise ParseError(f"bad metric-space entry: {exc}") from None
    if len(values) != n * n:
        raise ParseError(f"expected {n * n} distances, got {len(values)}")
    try:
        return FiniteMetricSpace.from_table([values[i * n:(i + 1) * n] for i in range(n)])
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_metric_space(S: FiniteMetricSpace) -> str:
    rows = [" ".join(str(v) for v in row) for row in S.table]
    return "\n".join([str(S.n)] + rows) + "\n"


def load_metric_space(path) -> FiniteMetricSpace:
    with open(path) as fh:
        return parse_metric_space(fh.read())
