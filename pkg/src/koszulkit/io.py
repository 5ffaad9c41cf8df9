"""Text formats: poset JSON, build-script JSON, DOT, and TSV reports."""

from __future__ import annotations

import json

from .bar import TorTable
from .builder import BuildScript, Step
from .errors import InvalidParameterError, MalformedPosetError
from .families import generate
from .poset import Poset

__all__ = [
    "poset_from_json",
    "poset_to_json",
    "load_poset",
    "dump_poset",
    "script_from_json",
    "to_dot",
    "tor_tsv",
    "pretty_tsv",
]


def poset_from_json(obj) -> Poset:
    """Decode ``{"elements": [...], "covers": [[x, y], ...]}``; any other key is an error."""
    if not isinstance(obj, dict):
        raise MalformedPosetError("poset JSON must be an object")
    extra = set(obj) - {"elements", "covers"}
    if extra:
        raise MalformedPosetError("unknown keys in poset JSON: %s" % ", ".join(sorted(extra)))
    if "elements" not in obj or "covers" not in obj:
        raise MalformedPosetError("poset JSON needs both 'elements' and 'covers'")
    elements, covers = obj["elements"], obj["covers"]
    if not isinstance(elements, list) or not all(isinstance(x, str) for x in elements):
        raise MalformedPosetError("'elements' must be an array of strings")
    if not isinstance(covers, list):
        raise MalformedPosetError("'covers' must be an array")
    pairs = []
    for c in covers:
        if not (isinstance(c, list) and len(c) == 2 and all(isinstance(x, str) for x in c)):
            raise MalformedPosetError("each cover must be a two-element array of strings, got %r" % (c,))
        pairs.append(tuple(c))
    if len(set(pairs)) != len(pairs):
        raise MalformedPosetError("duplicate cover in poset JSON")
    return Poset(elements, pairs)


def poset_to_json(p: Poset) -> dict:
    return {"elements": list(p.elements), "covers": [list(c) for c in p.sorted_covers()]}


def load_poset(text: str) -> Poset:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedPosetError("malformed JSON: %s" % exc) from None
    return poset_from_json(obj)


def dump_poset(p: Poset) -> str:
    return json.dumps(poset_to_json(p)) + "\n"


def script_from_json(obj) -> BuildScript:
    """Decode ``{"start": <poset or {"gen": name, "args": [...]}>, "steps": [...]}``."""
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise MalformedPosetError("malformed JSON: %s" % exc) from None
    if not isinstance(obj, dict) or "start" not in obj:
        raise InvalidParameterError("build script needs a 'start' entry")
    extra = set(obj) - {"start", "steps"}
    if extra:
        raise InvalidParameterError("unknown keys in build script: %s" % ", ".join(sorted(extra)))
    start = obj["start"]
    if isinstance(start, dict) and "gen" in start:
        if set(start) - {"gen", "args"}:
            raise InvalidParameterError("generator start takes only 'gen' and 'args'")
        start = generate(start["gen"], *start.get("args", []))
    else:
        start = poset_from_json(start)
    steps = []
    for raw in obj.get("steps", []):
        if not isinstance(raw, dict) or set(raw) != {"kind", "new", "frontier"}:
            raise InvalidParameterError("each step needs exactly 'kind', 'new' and 'frontier', got %r" % (raw,))
        if not isinstance(raw["frontier"], list):
            raise InvalidParameterError("step frontier must be an array")
        steps.append(Step(raw["kind"], raw["new"], tuple(raw["frontier"])))
    return BuildScript(start, tuple(steps))


def _quote(x: str) -> str:
    return '"' + x.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(p: Poset, name: str = "poset") -> str:
    """Hasse diagram, bottom to top, with one rank group per distance from the minimal elements."""
    lines = ["digraph %s {" % name, "  rankdir=BT;"]
    for x in p.elements:
        lines.append("  %s;" % _quote(x))
    for x, y in p.sorted_covers():
        lines.append("  %s -> %s;" % (_quote(x), _quote(y)))
    ranks = p.ranks
    for r in sorted(set(ranks.values())):
        members = " ".join("%s;" % _quote(x) for x in p.elements if ranks[x] == r)
        lines.append("  { rank=same; %s }" % members)
    lines.append("}")
    return "\n".join(lines) + "\n"


def tor_tsv(table: TorTable, full: bool = False) -> str:
    lines = ["n\tm\tdim"]
    for (n, m), d in sorted(table.dims.items()):
        if d or full:
            lines.append("%d\t%d\t%d" % (n, m, d))
    lines.append("koszul\t%s" % ("true" if table.koszul else "false"))
    return "\n".join(lines) + "\n"


def pretty_tsv(text: str) -> str:
    """Align a TSV block into space-padded columns."""
    rows = [line.split("\t") for line in text.rstrip("\n").split("\n")]
    width = max(len(r) for r in rows)
    sizes = [max(len(r[i]) for r in rows if i < len(r)) for i in range(width)]
    return "\n".join("  ".join(c.ljust(sizes[i]) for i, c in enumerate(r)).rstrip() for r in rows) + "\n"
