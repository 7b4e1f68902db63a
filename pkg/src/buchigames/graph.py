"""Game graphs, dense state sets, subgame masks and the text file format."""

from __future__ import annotations

import numpy as np

PLAYER1 = 1
PLAYER2 = 2


class ParseError(ValueError):
    """Malformed game file. Carries 1-based line and column."""

    def __init__(self, message, line=0, column=0):
        self.line = line
        self.column = column
        loc = f"line {line}, column {column}: " if line else ""
        super().__init__(loc + message)


class GameGraph:
    """Immutable two-player game graph with a Büchi state set.

    States are ``0..n-1``. ``owner[s]`` is 1 or 2, ``buchi[s]`` is 0 or 1,
    ``succ[s]`` is the ordered successor tuple and ``pred`` its transpose.
    """

    __slots__ = ("n", "m", "owner", "buchi", "succ", "pred", "delta", "_csr")

    def __init__(self, owner, buchi, succ):
        n = len(succ)
        if len(owner) != n or len(buchi) != n:
            raise ValueError("owner, buchi and succ must have equal length")
        self.n = n
        self.owner = bytes(owner)
        self.buchi = bytes(1 if b else 0 for b in buchi)
        self.succ = tuple(tuple(int(t) for t in ts) for ts in succ)
        pred = [[] for _ in range(n)]
        m = 0
        for s, ts in enumerate(self.succ):
            if self.owner[s] not in (PLAYER1, PLAYER2):
                raise ValueError(f"state {s}: owner must be 1 or 2")
            if not ts:
                raise ValueError(f"state {s} has no successors")
            if len(set(ts)) != len(ts):
                raise ValueError(f"state {s} has duplicate edges")
            for t in ts:
                if not 0 <= t < n:
                    raise ValueError(f"state {s}: dangling successor {t}")
                pred[t].append(s)
            m += len(ts)
        self.pred = tuple(tuple(p) for p in pred)
        self.m = m
        self.delta = max((len(ts) for ts in self.succ), default=0)
        self._csr = None

    def __setattr__(self, name, value):
        if name != "_csr" and hasattr(self, "_csr"):
            raise AttributeError("GameGraph is immutable")
        object.__setattr__(self, name, value)

    def __eq__(self, other):
        if not isinstance(other, GameGraph):
            return NotImplemented
        return (self.owner == other.owner and self.buchi == other.buchi
                and self.succ == other.succ)

    def __hash__(self):
        return hash((self.owner, self.buchi, self.succ))

    def __repr__(self):
        return f"GameGraph(n={self.n}, m={self.m}, b={self.b})"

    @property
    def b(self):
        return sum(self.buchi)

    def buchi_set(self):
        return StateSet.from_mask(bytearray(self.buchi))

    def csr(self):
        """(succ_ptr, succ_idx, pred_ptr, pred_idx) as int64 arrays, cached."""
        if self._csr is None:
            self._csr = (*_to_csr(self.succ), *_to_csr(self.pred))
        return self._csr


def _to_csr(adj):
    ptr = np.zeros(len(adj) + 1, dtype=np.int64)
    ptr[1:] = np.cumsum([len(a) for a in adj])
    idx = np.fromiter((t for a in adj for t in a), dtype=np.int64,
                      count=int(ptr[-1]))
    return ptr, idx


class StateSet:
    """Dense membership mask over ``0..n-1`` with a cached size."""

    __slots__ = ("mask", "size")

    def __init__(self, n, members=()):
        self.mask = bytearray(n)
        self.size = 0
        for s in members:
            self.add(s)

    @classmethod
    def from_mask(cls, mask):
        obj = cls.__new__(cls)
        obj.mask = mask
        obj.size = len(mask) - mask.count(0)
        return obj

    @classmethod
    def full(cls, n):
        return cls.from_mask(bytearray(b"\x01") * n)

    @property
    def n(self):
        return len(self.mask)

    def __contains__(self, s):
        return bool(self.mask[s])

    def __len__(self):
        return self.size

    def __bool__(self):
        return self.size > 0

    def __iter__(self):
        mask = self.mask
        i = mask.find(1)
        while i != -1:
            yield i
            i = mask.find(1, i + 1)

    def __eq__(self, other):
        if isinstance(other, StateSet):
            return self.mask == other.mask
        return NotImplemented

    def __repr__(self):
        return f"StateSet({sorted(self)})"

    def add(self, s):
        if not self.mask[s]:
            self.mask[s] = 1
            self.size += 1

    def discard(self, s):
        if self.mask[s]:
            self.mask[s] = 0
            self.size -= 1

    def copy(self):
        return StateSet.from_mask(bytearray(self.mask))

    def to_list(self):
        return list(self)

    def issubset(self, other):
        return all(other.mask[s] for s in self)

    def isdisjoint(self, other):
        return not any(other.mask[s] for s in self)

    def __or__(self, other):
        return StateSet.from_mask(_i2b(_b2i(self.mask) | _b2i(other.mask), self.n))

    def __and__(self, other):
        return StateSet.from_mask(_i2b(_b2i(self.mask) & _b2i(other.mask), self.n))

    def __sub__(self, other):
        a = _b2i(self.mask)
        return StateSet.from_mask(_i2b(a ^ (a & _b2i(other.mask)), self.n))


# masks hold 0/1 bytes, so bytewise set algebra is plain integer bit algebra
def _b2i(mask):
    return int.from_bytes(mask, "little")


def _i2b(x, n):
    return bytearray(x.to_bytes(n, "little"))


class SubgameView:
    """Induced subgame ``G ↾ alive`` as a mask over the base graph."""

    __slots__ = ("base", "alive")

    def __init__(self, base, alive=None):
        self.base = base
        self.alive = StateSet.full(base.n) if alive is None else alive

    def successors(self, s):
        mask = self.alive.mask
        return [t for t in self.base.succ[s] if mask[t]]

    def predecessors(self, s):
        mask = self.alive.mask
        return [p for p in self.base.pred[s] if mask[p]]

    def restrict(self, states):
        """View over ``states`` (assumed to be a subset of alive)."""
        return SubgameView(self.base, states)


def validate_subgame(view):
    """True iff every alive state keeps at least one alive successor."""
    mask = view.alive.mask
    succ = view.base.succ
    return all(any(mask[t] for t in succ[s]) for s in view.alive)


def parse_game(text):
    """Parse the line-oriented ``buchi <n>`` format into a GameGraph."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8: {exc}") from None
    n = None
    owner = buchi = succ = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        col = raw.index(line[0]) + 1
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "buchi":
                raise ParseError("expected header 'buchi <n>'", lineno, col)
            n = _parse_int(fields[1], lineno, raw, fields[1])
            if n < 1:
                raise ParseError("state count must be positive", lineno, col)
            owner, buchi, succ = [0] * n, [0] * n, [None] * n
            continue
        if len(fields) == 3:
            raise ParseError(f"state {fields[0]} has zero successors", lineno, col)
        if len(fields) != 4:
            raise ParseError("expected '<id> <owner> <buchi> <succ,...>'", lineno, col)
        sid = _parse_int(fields[0], lineno, raw, fields[0])
        if not 0 <= sid < n:
            raise ParseError(f"state id {sid} out of range 0..{n - 1}", lineno, col)
        if succ[sid] is not None:
            raise ParseError(f"duplicate state declaration {sid}", lineno, col)
        own = _parse_int(fields[1], lineno, raw, fields[1])
        if own not in (PLAYER1, PLAYER2):
            raise ParseError(f"owner must be 1 or 2, got {own}", lineno, _col(raw, fields[1]))
        flag = _parse_int(fields[2], lineno, raw, fields[2])
        if flag not in (0, 1):
            raise ParseError(f"buchi flag must be 0 or 1, got {flag}", lineno, _col(raw, fields[2]))
        ts = []
        for tok in fields[3].split(","):
            if tok == "":
                raise ParseError("empty successor entry", lineno, _col(raw, fields[3]))
            t = _parse_int(tok, lineno, raw, fields[3])
            if not 0 <= t < n:
                raise ParseError(f"dangling successor {t} of state {sid}", lineno, _col(raw, fields[3]))
            if t in ts:
                raise ParseError(f"duplicate edge {sid}->{t}", lineno, _col(raw, fields[3]))
            ts.append(t)
        owner[sid], buchi[sid], succ[sid] = own, flag, ts
    if n is None:
        raise ParseError("missing header 'buchi <n>'")
    missing = [s for s in range(n) if succ[s] is None]
    if missing:
        raise ParseError(f"missing declarations for states {missing[:10]}")
    return GameGraph(owner, buchi, succ)


def _col(raw, token):
    return raw.find(token) + 1


def _parse_int(tok, lineno, raw, field):
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected integer, got {tok!r}", lineno, _col(raw, field)) from None


def serialize_game(g):
    """Canonical text: header, then one line per state in id order."""
    lines = [f"buchi {g.n}"]
    for s in range(g.n):
        lines.append(f"{s} {g.owner[s]} {g.buchi[s]} {','.join(map(str, g.succ[s]))}")
    return ("\n".join(lines) + "\n").encode("utf-8")
