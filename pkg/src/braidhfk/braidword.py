"""Positive braid words: parsing, closure invariants, rewriting, and
split/connected-sum decomposition.

A braid word on ``n`` strands is a sequence of generator indices
``1..n-1``; every generator is positive, so a word *is* its crossing
list.  Closures are taken strand-to-strand, which makes three
length-preserving rewrites invisible to the closure: cyclic rotation,
the distant commutation ``s_i s_j = s_j s_i`` for ``|i-j| >= 2``, and
the braid relation ``s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}``.  These
are the only moves used anywhere in this package; stabilisation is
never applied.

Decomposition into split pieces and prime connected-sum factors works
with three word-level reductions, applied to a fixpoint and, when
nothing fires on the word as written, exposed by a bounded
breadth-first search over the move set:

* a boundary generator occurring exactly once is a Markov
  destabilisation: delete the letter together with its strand;
* an interior generator occurring exactly once is a cut point: the
  word falls apart into the sub-words left and right of that strand
  (rule A);
* a word that is cyclically two consecutive blocks, one block using
  only generators ``< k`` and the other only ``>= k``, is a connected
  sum along strand ``k`` (rule B).

The reductions are sound.  Whether the bounded search finds every
composite closure is not known, so each decomposition carries a
``verified`` flag that is dropped whenever a search budget runs out
before the word's move orbit was exhausted.
"""

from __future__ import annotations

import dataclasses
import re
from collections import deque
from typing import Iterator, Optional, Sequence

#: Default cap on the number of words visited by any single rewrite search.
DEFAULT_BUDGET = 200_000


class ParseError(ValueError):
    """Malformed braid word text."""


class RangeError(ValueError):
    """Generator index out of range for the declared strand count."""


class ShapeError(ValueError):
    """Word does not have the shape required by the operation."""


@dataclasses.dataclass(frozen=True)
class BraidWord:
    """A positive braid word: ``strands >= 1`` and letters in ``1..strands-1``."""

    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.strands < 1:
            raise RangeError(f"strand count must be >= 1, got {self.strands}")
        for x in self.letters:
            if not isinstance(x, int) or x < 1:
                raise ParseError(f"generator index must be a positive integer, got {x!r}")
            if x >= self.strands:
                raise RangeError(
                    f"generator {x} needs at least {x + 1} strands, word has {self.strands}"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        body = " ".join(str(x) for x in self.letters)
        return f"strands={self.strands}:" + (" " + body if body else "")

    def generator_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for x in self.letters:
            counts[x] = counts.get(x, 0) + 1
        return counts

    @property
    def is_connected(self) -> bool:
        """True when the closure diagram is connected (every generator occurs)."""
        return len(set(self.letters)) == self.strands - 1

    def rotated(self, k: int) -> "BraidWord":
        """The word started at position ``k``; closes to the same link."""
        if not self.letters:
            return self
        k %= len(self.letters)
        return BraidWord(self.strands, self.letters[k:] + self.letters[:k])

    def to_json(self) -> dict:
        return {"strands": self.strands, "letters": list(self.letters)}


_TOKEN = re.compile(r"^(\d+)(?:\^(-?\d+))?$")


def parse_braid(text: str, strands: Optional[int] = None) -> BraidWord:
    """Parse whitespace/comma separated generators, e.g. ``"1 1 2"`` or ``"1^2 2^3 1 2^4"``.

    A token ``i^k`` repeats generator ``i`` exactly ``k`` times (``k >= 1``).
    Without an explicit ``strands``, the strand count is the largest index
    plus one; an empty word then has no well-defined strand count and is
    rejected.
    """
    tokens = [tok for tok in text.replace(",", " ").split() if tok]
    letters: list[int] = []
    for tok in tokens:
        m = _TOKEN.match(tok)
        if m is None:
            raise ParseError(f"bad token {tok!r}")
        idx = int(m.group(1))
        power = int(m.group(2)) if m.group(2) is not None else 1
        if idx < 1:
            raise ParseError(f"generator index must be >= 1, got {idx}")
        if power < 1:
            raise ParseError(f"power must be >= 1, got {tok!r}")
        letters.extend([idx] * power)
    if strands is None:
        if not letters:
            raise ParseError("empty word needs an explicit strand count")
        strands = max(letters) + 1
    else:
        for idx in letters:
            if idx >= strands:
                raise RangeError(f"generator {idx} out of range for {strands} strands")
    return BraidWord(strands, tuple(letters))


_PREFIX = re.compile(r"^strands\s*=\s*(\d+)\s*:\s*")


def parse_serialized(text: str) -> BraidWord:
    """Parse the serialized form ``"strands=N: 1 1 2"`` (prefix optional)."""
    text = text.split("#", 1)[0].strip()
    m = _PREFIX.match(text)
    if m is not None:
        return parse_braid(text[m.end():], strands=int(m.group(1)))
    return parse_braid(text)


def permutation_of(w: BraidWord) -> tuple[int, ...]:
    """The strand permutation of the word (0-based positions)."""
    perm = list(range(w.strands))
    for i in w.letters:
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def closure_components(w: BraidWord) -> int:
    """Number of components of the closure: cycle count of the strand permutation."""
    perm = permutation_of(w)
    seen = [False] * w.strands
    cycles = 0
    for start in range(w.strands):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
    return cycles


def closure_genus(w: BraidWord) -> int:
    """Genus of the closure, (components - chi)/2 with chi = strands - length."""
    chi = w.strands - len(w.letters)
    return (closure_components(w) - chi) // 2


# --------------------------------------------------------------------------
# Canonical keys: rotation + commutation normal form
# --------------------------------------------------------------------------

def _trace_least(letters: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least word reachable by distant commutations alone.

    Greedy heap-order linearisation of the dependence order in which two
    letters commute iff their indices differ by at least 2.
    """
    rem = list(letters)
    out: list[int] = []
    while rem:
        mask = 0
        choice = None
        choice_j = -1
        for j, x in enumerate(rem):
            # x is movable to the front iff no earlier letter within distance 1
            if not (mask >> (x - 1)) & 0b111:
                if choice is None or x < choice:
                    choice, choice_j = x, j
            mask |= 1 << x
        out.append(rem.pop(choice_j))
    return tuple(out)


_key_cache: dict[tuple[int, tuple[int, ...]], tuple[int, tuple[int, ...]]] = {}


def canonical_key(w: BraidWord) -> tuple[int, tuple[int, ...]]:
    """A key equal exactly for words related by rotations and distant
    commutations: the lexicographically least member of that class.

    The two move kinds interact across the wrap point (commuting a letter
    changes which words are rotations), so the least member is found by
    exhausting the class rather than by normalising each rotation.  Every
    word seen along the way shares the key and is cached, which keeps
    repeated queries within one class cheap.  Braid relations are
    deliberately not quotiented out: keys only ever merge words with the
    same closure, so memoisation on the key is sound.
    """
    raw = (w.strands, w.letters)
    hit = _key_cache.get(raw)
    if hit is not None:
        return hit
    if not w.letters:
        _key_cache[raw] = raw
        return raw
    seen = {w.letters}
    queue = deque([w.letters])
    best = w.letters
    while queue:
        u = queue.popleft()
        if u < best:
            best = u
        n = len(u)
        rot = u[1:] + u[:1]
        if rot not in seen:
            seen.add(rot)
            queue.append(rot)
        for j in range(n - 1):
            if abs(u[j] - u[j + 1]) >= 2:
                v = u[:j] + (u[j + 1], u[j]) + u[j + 2:]
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    key = (w.strands, best)
    for u in seen:
        _key_cache[(w.strands, u)] = key
    return key


def memo_key(w: BraidWord) -> tuple[int, tuple[int, ...]]:
    """A cheap deterministic key merging only rotation-then-commutation
    orbits of each rotation; sound for memo tables (same key, same
    closure) without exploring the full class."""
    if not w.letters:
        return (w.strands, ())
    n = len(w.letters)
    best = min(_trace_least(w.letters[k:] + w.letters[:k]) for k in range(n))
    return (w.strands, best)


# --------------------------------------------------------------------------
# Length-preserving moves and the breadth-first rewrite search
# --------------------------------------------------------------------------

def _neighbors(u: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """One-step rewrites: rotation, distant commutations, braid relations."""
    n = len(u)
    if n > 1:
        yield u[1:] + u[:1]
    for j in range(n - 1):
        a, b = u[j], u[j + 1]
        if abs(a - b) >= 2:
            yield u[:j] + (b, a) + u[j + 2:]
    for j in range(n - 2):
        a, b = u[j], u[j + 1]
        if u[j + 2] == a and abs(a - b) == 1:
            yield u[:j] + (b, a, b) + u[j + 3:]


class _Budget:
    """Mutable countdown of words a search may still visit."""

    __slots__ = ("remaining",)

    def __init__(self, remaining: int):
        if remaining <= 0:
            raise ValueError("budget must be positive")
        self.remaining = remaining

    def spend(self) -> bool:
        if self.remaining <= 0:
            return False
        self.remaining -= 1
        return True


@dataclasses.dataclass(frozen=True)
class SkeinTriple:
    """An oriented skein triple of positive words at a doubled crossing.

    ``l_plus`` is ``s_i s_i b``, ``l_zero`` is ``s_i b`` and ``l_minus`` is
    ``b``; ``delta`` is 0 when ``l_zero`` has more closure components than
    ``l_plus`` and 1 otherwise, so that the genera satisfy
    ``g(l_plus) = g(l_minus) + 1 = g(l_zero) + delta``.
    """

    l_plus: BraidWord
    l_minus: BraidWord
    l_zero: BraidWord
    delta: int


def resolve_square(w: BraidWord) -> SkeinTriple:
    """Resolve a word of shape ``s_i s_i b`` at its leading doubled crossing."""
    if len(w.letters) < 2 or w.letters[0] != w.letters[1]:
        raise ShapeError(f"word does not start with a doubled generator: {w}")
    l_minus = BraidWord(w.strands, w.letters[2:])
    l_zero = BraidWord(w.strands, w.letters[1:])
    c_plus = closure_components(w)
    c_zero = closure_components(l_zero)
    delta = 0 if c_zero > c_plus else 1
    return SkeinTriple(w, l_minus, l_zero, delta)


def _adjacent_pair(u: tuple[int, ...]) -> Optional[tuple[int, ...]]:
    """If some generator has two occurrences whose cyclic gap avoids the
    indices ``i-1, i, i+1``, return the word rewritten as ``(i, i, ...)``.

    Only the gap between cyclically consecutive occurrences can qualify,
    and every letter in a clean gap commutes with ``s_i``, so the pair can
    be rotated to the front and the gap commuted out of the way.
    """
    n = len(u)
    positions: dict[int, list[int]] = {}
    for p, x in enumerate(u):
        positions.setdefault(x, []).append(p)
    for i in sorted(positions):
        occ = positions[i]
        if len(occ) < 2:
            continue
        for j, p in enumerate(occ):
            q = occ[(j + 1) % len(occ)]
            gap_len = (q - p - 1) % n if p != q else -1
            if gap_len < 0:
                continue
            gap = tuple(u[(p + 1 + t) % n] for t in range(gap_len))
            if any(abs(x - i) <= 1 for x in gap):
                continue
            rest = tuple(u[(q + 1 + t) % n] for t in range((p - q - 1) % n))
            return (i, i) + gap + rest
    return None


def find_adjacent_square(w: BraidWord, budget: int = DEFAULT_BUDGET) -> Optional[BraidWord]:
    """Rewrite ``w`` into the form ``s_i s_i b`` without changing the closure.

    Returns ``None`` when the closure is an unlink (genus 0, where no such
    doubled crossing can exist) or when the search budget is exhausted
    before one is found.
    """
    if not w.is_connected:
        raise ValueError("find_adjacent_square expects a connected word")
    if closure_genus(w) == 0:
        return None
    start = w.letters
    seen = {start}
    queue = deque([start])
    b = _Budget(budget)
    while queue:
        u = queue.popleft()
        if not b.spend():
            return None
        hit = _adjacent_pair(u)
        if hit is not None:
            return BraidWord(w.strands, hit)
        for v in _neighbors(u):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return None


# --------------------------------------------------------------------------
# Split pieces and prime factors
# --------------------------------------------------------------------------

@dataclasses.dataclass(frozen=True)
class SplitPiece:
    """One split factor: either a trivial unknot or a list of prime words."""

    prime_words: tuple[BraidWord, ...]
    unknot: bool = False


@dataclasses.dataclass(frozen=True)
class LinkClass:
    """Normalised decomposition of a closure into split pieces and primes."""

    pieces: tuple[SplitPiece, ...]
    components: int
    verified: bool

    @property
    def split_count(self) -> int:
        return len(self.pieces)

    @property
    def prime_count(self) -> int:
        return sum(len(p.prime_words) for p in self.pieces)

    @property
    def is_split(self) -> bool:
        return len(self.pieces) > 1

    @property
    def prime_words(self) -> tuple[BraidWord, ...]:
        return tuple(w for p in self.pieces for w in p.prime_words)


def split_pieces(w: BraidWord) -> list[BraidWord]:
    """Split a word into connected sub-words along unused generators.

    Strands with no incident crossing come back as empty one-strand words
    (unknots).  Each returned word is connected and renumbered to start at
    generator 1.
    """
    used = set(w.letters)
    pieces: list[BraidWord] = []
    start = 1
    for boundary in range(1, w.strands + 1):
        if boundary == w.strands or boundary not in used:
            strands = boundary - start + 1
            letters = tuple(x - (start - 1) for x in w.letters if start <= x < boundary)
            pieces.append(BraidWord(strands, letters))
            start = boundary + 1
    return pieces


_PRIME = "prime"
_EXHAUSTED = "exhausted"

# Outcomes of reducing a connected word, shared across every word visited
# while exploring its move orbit (orbit mates close to the same link).
_reduce_cache: dict[tuple[int, tuple[int, ...]], object] = {}


def clear_caches() -> None:
    _reduce_cache.clear()
    _key_cache.clear()


def _immediate_reduction(strands: int, u: tuple[int, ...]):
    """First reduction that fires on the word as written, or None.

    The word must be connected (all generators ``1..strands-1`` occur).
    Priority: destabilise at the low boundary, at the high boundary,
    rule A at the smallest interior generator, rule B at the smallest
    splitting level.
    """
    counts = [0] * (strands + 1)
    for x in u:
        counts[x] += 1
    if strands >= 2 and counts[1] == 1:
        rest = tuple(x - 1 for x in u if x != 1)
        return ("destab", (strands - 1, rest))
    if strands >= 2 and counts[strands - 1] == 1:
        rest = tuple(x for x in u if x != strands - 1)
        return ("destab", (strands - 1, rest))
    for i in range(2, strands - 1):
        if counts[i] == 1:
            left = tuple(x for x in u if x < i)
            right = tuple(x - i for x in u if x > i)
            return ("cut", (i, left), (strands - i, right))
    n = len(u)
    for k in range(2, strands):
        transitions = 0
        for j in range(n):
            if (u[j] < k) != (u[(j + 1) % n] < k):
                transitions += 1
        if transitions == 2:
            # rotate so the low block is contiguous from the front
            start = next(
                j for j in range(n) if u[j] < k and u[(j - 1) % n] >= k
            )
            rot = u[start:] + u[:start]
            low = tuple(x for x in rot if x < k)
            high = tuple(x - (k - 1) for x in rot if x >= k)
            return ("cut", (k, low), (strands - k + 1, high))
    return None


def _find_reduction(strands: int, u: tuple[int, ...], b: _Budget):
    """Search the move orbit of ``u`` for a word where a reduction fires.

    Returns the reduction, ``_PRIME`` when the whole orbit was exhausted
    with nothing firing, or ``_EXHAUSTED`` on budget overrun.  All words
    visited during a full exploration are cached as prime.
    """
    cached = _reduce_cache.get((strands, u))
    if cached is not None:
        return cached
    seen = {u}
    queue = deque([u])
    while queue:
        v = queue.popleft()
        if not b.spend():
            return _EXHAUSTED
        r = _immediate_reduction(strands, v)
        if r is not None:
            _reduce_cache[(strands, u)] = r
            return r
        for nb in _neighbors(v):
            if nb not in seen:
                seen.add(nb)
                queue.append(nb)
    for v in seen:
        _reduce_cache[(strands, v)] = _PRIME
    return _PRIME


def decompose(w: BraidWord, budget: int = DEFAULT_BUDGET) -> LinkClass:
    """Decompose a closure into split pieces and prime connected-sum factors.

    Unused strands become unknot pieces; connected pieces are reduced by
    destabilisation and rules A/B, with the bounded rewrite search
    exposing reductions that need moves first.  Surviving words are the
    prime factors.  ``verified`` is False iff some search ran out of
    budget, i.e. a factor reported prime might still reduce.
    """
    b = _Budget(budget)
    verified = True
    pieces: list[SplitPiece] = []
    for piece in split_pieces(w):
        factors: list[BraidWord] = []
        work = [(piece.strands, piece.letters)]
        while work:
            strands, letters = work.pop()
            if strands == 1:
                continue  # fully destabilised: an unknot summand is trivial
            r = _find_reduction(strands, letters, b)
            if r is _PRIME:
                factors.append(BraidWord(strands, letters))
            elif r is _EXHAUSTED:
                factors.append(BraidWord(strands, letters))
                verified = False
            elif r[0] == "destab":
                work.append(r[1])
            else:
                work.append(r[1])
                work.append(r[2])
        factors.sort(key=lambda f: (f.strands, f.letters))
        if factors:
            pieces.append(SplitPiece(tuple(factors)))
        else:
            pieces.append(SplitPiece((), unknot=True))
    return LinkClass(tuple(pieces), closure_components(w), verified)
