"""Line-oriented update/query streams.

One event per line::

    n 16            vertex count (optional header, first event only)
    i u v           insert edge {u, v}
    d u v           delete edge {u, v}
    q sparsifier    sparsifier of every component
    q mincut        minimum-cut value and one cut
    q mincuts       the whole minimum-cut family
    q kmax K        maximal K-edge-connected subgraphs
    c LABEL         checkpoint

Blank lines and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, TextIO, Union


class StreamError(ValueError):
    def __init__(self, lineno: int, msg: str) -> None:
        super().__init__(f"line {lineno}: {msg}")
        self.lineno = lineno


@dataclass(frozen=True)
class Insert:
    u: int
    v: int


@dataclass(frozen=True)
class Delete:
    u: int
    v: int


@dataclass(frozen=True)
class Query:
    kind: str               # sparsifier | mincut | mincuts | kmax
    k: Optional[int] = None


@dataclass(frozen=True)
class Checkpoint:
    label: str


@dataclass(frozen=True)
class Header:
    n: int


Event = Union[Insert, Delete, Query, Checkpoint, Header]
QUERY_KINDS = ("sparsifier", "mincut", "mincuts", "kmax")


def _int(tok: str, lineno: int) -> int:
    try:
        x = int(tok)
    except ValueError:
        raise StreamError(lineno, f"expected an integer, got {tok!r}") from None
    if x < 0:
        raise StreamError(lineno, f"negative value {x}")
    return x


def parse_line(line: str, lineno: int) -> Optional[Event]:
    toks = line.split()
    if not toks or toks[0].startswith("#"):
        return None
    op, args = toks[0], toks[1:]
    if op in ("i", "d"):
        if len(args) != 2:
            raise StreamError(lineno, f"'{op}' takes two vertices")
        u, v = _int(args[0], lineno), _int(args[1], lineno)
        return Insert(u, v) if op == "i" else Delete(u, v)
    if op == "q":
        if not args or args[0] not in QUERY_KINDS:
            raise StreamError(lineno, f"unknown query {' '.join(args)!r}")
        if args[0] == "kmax":
            if len(args) != 2:
                raise StreamError(lineno, "'q kmax' takes one integer")
            k = _int(args[1], lineno)
            if k < 1:
                raise StreamError(lineno, "k must be at least 1")
            return Query("kmax", k)
        if len(args) != 1:
            raise StreamError(lineno, f"'q {args[0]}' takes no arguments")
        return Query(args[0])
    if op == "c":
        if len(args) != 1:
            raise StreamError(lineno, "'c' takes one label")
        return Checkpoint(args[0])
    if op == "n":
        if len(args) != 1:
            raise StreamError(lineno, "'n' takes one integer")
        return Header(_int(args[0], lineno))
    raise StreamError(lineno, f"unknown event {op!r}")


def parse_stream(fh: Iterable[str]) -> Iterator[tuple[int, Event]]:
    """``(line number, event)`` pairs; a header is only accepted first."""
    seen_event = False
    for lineno, line in enumerate(fh, 1):
        ev = parse_line(line, lineno)
        if ev is None:
            continue
        if isinstance(ev, Header) and seen_event:
            raise StreamError(lineno, "'n' header must come first")
        seen_event = True
        yield lineno, ev


def format_event(ev: Event) -> str:
    if isinstance(ev, Insert):
        return f"i {ev.u} {ev.v}"
    if isinstance(ev, Delete):
        return f"d {ev.u} {ev.v}"
    if isinstance(ev, Query):
        return f"q kmax {ev.k}" if ev.kind == "kmax" else f"q {ev.kind}"
    if isinstance(ev, Checkpoint):
        return f"c {ev.label}"
    return f"n {ev.n}"


def write_stream(fh: TextIO, events: Iterable[Event]) -> None:
    for ev in events:
        fh.write(format_event(ev) + "\n")
