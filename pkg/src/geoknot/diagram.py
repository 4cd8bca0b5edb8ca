"""Oriented knot diagrams as signed Gauss codes and PD codes.

A diagram is stored as the cyclic sequence of crossing passages met while
travelling along the knot, each passage being (crossing label, over?), plus
one sign per crossing.  The PD code uses the usual convention: edges are
numbered 1..2c along the orientation, and ``X[a, b, c, d]`` lists the four
edges at a crossing counterclockwise starting from the incoming under edge.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import GeoKnotError


class InvalidDiagram(GeoKnotError):
    reason = "InvalidDiagram"


@dataclass(frozen=True)
class Crossing:
    label: int
    over_position: int
    under_position: int
    sign: int


@dataclass
class Diagram:
    """A knot diagram.

    ``passages`` is the traversal sequence of ``(label, is_over)`` pairs and
    ``signs`` maps each crossing label (1..c) to +1 or -1.  ``arcs`` is a
    free-form description of the strands the diagram was built from.
    """

    passages: list[tuple[int, bool]]
    signs: dict[int, int]
    arcs: list[str] = field(default_factory=list)

    def __post_init__(self):
        seen: dict[int, list[bool]] = {}
        for label, over in self.passages:
            seen.setdefault(label, []).append(bool(over))
        if set(seen) != set(self.signs):
            raise InvalidDiagram("passages and signs disagree on crossing labels")
        for label, flags in seen.items():
            if sorted(flags) != [False, True]:
                raise InvalidDiagram(f"crossing {label} must be passed once over and once under")
            if self.signs[label] not in (-1, 1):
                raise InvalidDiagram(f"crossing {label} has sign {self.signs[label]}")

    @property
    def crossing_count(self) -> int:
        return len(self.signs)

    @property
    def writhe(self) -> int:
        return sum(self.signs.values())

    @property
    def crossings(self) -> list[Crossing]:
        over, under = {}, {}
        for pos, (label, is_over) in enumerate(self.passages):
            (over if is_over else under)[label] = pos
        return [Crossing(k, over[k], under[k], self.signs[k]) for k in sorted(self.signs)]

    @property
    def gauss_code(self) -> list[int]:
        """Signed labels along the knot: +k passes over crossing k, -k under."""
        return [label if over else -label for label, over in self.passages]

    @property
    def pd_code(self) -> list[tuple[int, int, int, int]]:
        m = len(self.passages)
        if m == 0:
            return []

        def incoming(pos):
            return pos if pos > 0 else m

        def outgoing(pos):
            return pos + 1

        out = []
        for c in self.crossings:
            a, cc = incoming(c.under_position), outgoing(c.under_position)
            o_in, o_out = incoming(c.over_position), outgoing(c.over_position)
            if c.sign > 0:
                out.append((a, o_out, cc, o_in))
            else:
                out.append((a, o_in, cc, o_out))
        return out

    def gauss_string(self) -> str:
        return " ".join(str(x) for x in self.gauss_code)

    def pd_string(self) -> str:
        return "PD[" + ", ".join("X[%d,%d,%d,%d]" % x for x in self.pd_code) + "]"

    def mirror(self) -> Diagram:
        """Diagram of the mirror knot: every crossing switched."""
        return Diagram([(k, not o) for k, o in self.passages],
                       {k: -s for k, s in self.signs.items()}, list(self.arcs))

    def reversed(self) -> Diagram:
        return Diagram(list(reversed(self.passages)), dict(self.signs), list(self.arcs))

    def to_dict(self) -> dict:
        return {
            "crossings": self.crossing_count,
            "writhe": self.writhe,
            "gauss_code": self.gauss_code,
            "signs": {str(k): v for k, v in sorted(self.signs.items())},
            "pd_code": [list(x) for x in self.pd_code],
            "arcs": list(self.arcs),
        }

    # --- construction ----------------------------------------------------

    @classmethod
    def from_events(cls, events, arcs=()) -> Diagram:
        """Build from ``(key, is_over, sign)`` events in traversal order.

        ``key`` is any hashable crossing identifier; labels 1..c are assigned
        in order of first appearance.
        """
        labels: dict = {}
        passages, signs = [], {}
        for key, over, sign in events:
            label = labels.setdefault(key, len(labels) + 1)
            passages.append((label, bool(over)))
            signs[label] = int(sign)
        return cls(passages, signs, list(arcs))

    @classmethod
    def from_gauss(cls, gauss, signs) -> Diagram:
        passages = [(abs(int(g)), int(g) > 0) for g in gauss]
        return cls(passages, {int(k): int(v) for k, v in dict(signs).items()})

    @classmethod
    def from_pd(cls, pd) -> Diagram:
        """Rebuild a diagram from a PD code of a knot with labels 1..2c."""
        pd = [tuple(int(x) for x in X) for X in pd]
        m = 2 * len(pd)
        if not pd:
            return cls([], {})
        labels = sorted(x for X in pd for x in X)
        if labels != sorted(list(range(1, m + 1)) * 2):
            raise InvalidDiagram("PD labels must use each of 1..2c exactly twice")

        def succ(x):
            return x % m + 1

        # Edge e enters passage e (mod m) and leaves passage e - 1.
        passages: list = [None] * m
        signs = {}
        for label, (a, b, c, d) in enumerate(pd, 1):
            if c != succ(a):
                raise InvalidDiagram(f"X{(a, b, c, d)}: under strand must run a -> a+1")
            under_pos = a % m
            if m == 2:
                over_pos = 1 - under_pos
                sign = 1 if b == over_pos + 1 else -1
            elif b == succ(d):
                sign, over_pos = 1, d % m
            elif d == succ(b):
                sign, over_pos = -1, b % m
            else:
                raise InvalidDiagram(f"X{(a, b, c, d)}: over strand labels are not consecutive")
            passages[under_pos] = (label, False)
            passages[over_pos] = (label, True)
            signs[label] = sign
        if any(p is None for p in passages):
            raise InvalidDiagram("PD code does not describe a single traversal")
        return cls(passages, signs)


def parse_pd(text: str) -> list[tuple[int, int, int, int]]:
    """Parse ``X[a,b,c,d]`` groups (any surrounding text is ignored)."""
    groups = re.findall(r"X\s*[\[\(]\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*[\]\)]", text)
    if not groups and text.strip().startswith("["):
        import json
        return [tuple(int(x) for x in X) for X in json.loads(text)]
    return [tuple(int(x) for x in g) for g in groups]


def braid_closure(word, strands: int | None = None) -> Diagram:
    """Diagram of the closure of a braid word.

    Generator ``+i`` (1-based) makes the strand at position i + 1 pass over
    the strand at position i, giving a positive crossing; ``-i`` is its
    inverse.  The closure must be a knot.
    """
    word = [int(g) for g in word]
    if any(g == 0 for g in word):
        raise ValueError("braid generators are non-zero integers")
    if strands is None:
        strands = max((abs(g) for g in word), default=0) + 1
    events = []
    start = pos = 0
    visited = 0
    while True:
        for idx, g in enumerate(word):
            i = abs(g) - 1
            if pos == i or pos == i + 1:
                moving_right = pos == i
                over = (not moving_right) if g > 0 else moving_right
                events.append((idx, over, 1 if g > 0 else -1))
                pos = i + 1 if moving_right else i
                visited += 1
        if pos == start:
            break
    if visited != 2 * len(word):
        raise ValueError("braid closure is a link, not a knot")
    return Diagram.from_events(events, arcs=[f"braid {word}"])
