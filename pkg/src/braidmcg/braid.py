"""Braid words, the Artin action on free groups, ribbon braids and cabling.

Conventions used throughout the package:

* a braid word is read as a composite of maps, ``uv = u o v``; so the Artin
  image of ``uv`` is ``artin(u) o artin(v)`` and the permutation of ``uv`` is
  ``perm(u) o perm(v)``;
* ``sigma_i`` acts on ``F_n`` by ``a_i -> a_i a_{i+1} a_i^-1``, ``a_{i+1} -> a_i``;
* ribbon braids multiply as ``(v, b)(w, d) = (v + b.w, bd)`` with
  ``(b.w)_j = w_{perm(b)^-1(j)}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .freegroup import FreeMap, GroupWord, compose


class BraidError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    """A word in ``sigma_1^{+-1} .. sigma_{n-1}^{+-1}``; letters are signed indices."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise BraidError(f"need at least one strand, got {self.strands}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) >= self.strands:
                raise BraidError(f"generator {x} invalid on {self.strands} strands")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text: str, strands: int) -> BraidWord:
        return cls(strands, tuple(int(t) for t in text.replace(",", " ").split()))

    @classmethod
    def identity(cls, strands: int) -> BraidWord:
        return cls(strands, ())

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise BraidError(f"strand mismatch: {self.strands} vs {other.strands}")
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, n: int) -> BraidWord:
        base = self if n >= 0 else self.inverse()
        return BraidWord(self.strands, base.letters * abs(n))

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def exponent_sum(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def shifted(self, offset: int, strands: int) -> BraidWord:
        """The same braid placed on strands ``offset+1 .. offset+self.strands`` of a wider braid."""
        if offset + self.strands > strands:
            raise BraidError("shifted braid does not fit")
        return BraidWord(strands, tuple(x + offset if x > 0 else x - offset for x in self.letters))

    def text(self) -> str:
        return " ".join(str(x) for x in self.letters)

    def to_json(self) -> dict:
        return {"strands": self.strands, "word": list(self.letters)}

    @classmethod
    def from_json(cls, data: dict) -> BraidWord:
        return cls(int(data["strands"]), tuple(data["word"]))


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{1..n}``; ``images[j-1]`` is the image of ``j``."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise BraidError(f"not a permutation: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """``(p * q)(j) = p(q(j))``."""
        return Permutation(tuple(self(other(j)) for j in range(1, len(self.images) + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for j, k in enumerate(self.images, start=1):
            inv[k - 1] = j
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(j == k for j, k in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen or self(start) == start:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


def braid_cancel(w: BraidWord) -> BraidWord:
    """Delete adjacent ``sigma_i sigma_i^-1`` pairs until none remain (not a normal form)."""
    out: list[int] = []
    for x in w.letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return BraidWord(w.strands, tuple(out))


def permutation_of(w: BraidWord) -> Permutation:
    images = list(range(1, w.strands + 1))
    # perm(uv) = perm(u) o perm(v): fold letters from the right
    perm = Permutation(tuple(images))
    for x in reversed(w.letters):
        i = abs(x)
        perm = Permutation.transposition(w.strands, i, i + 1) * perm
    return perm


@lru_cache(maxsize=None)
def artin_generator(n: int, letter: int) -> FreeMap:
    """Artin automorphism of ``F_n`` for ``sigma_i^{+-1}``, with its inverse attached."""
    i = abs(letter)
    if not 1 <= i < n:
        raise BraidError(f"generator {letter} invalid on {n} strands")
    ident = [GroupWord.generator(n, j) for j in range(1, n + 1)]
    pos = list(ident)
    pos[i - 1] = GroupWord(n, (i, i + 1, -i))
    pos[i] = GroupWord(n, (i,))
    neg = list(ident)
    neg[i - 1] = GroupWord(n, (i + 1,))
    neg[i] = GroupWord(n, (-(i + 1), i, i + 1))
    fwd = FreeMap(n, n, tuple(pos))
    bwd = FreeMap(n, n, tuple(neg))
    object.__setattr__(fwd, "inverse", bwd)
    object.__setattr__(bwd, "inverse", fwd)
    return fwd if letter > 0 else bwd


def artin(w: BraidWord) -> FreeMap:
    """The Artin automorphism of ``F_n`` determined by ``w``."""
    f = FreeMap.identity(w.strands)
    for x in reversed(w.letters):
        f = compose(artin_generator(w.strands, x), f)
    return f


def is_trivial(w: BraidWord) -> bool:
    return artin(braid_cancel(w)).is_identity()


def braids_equal(u: BraidWord, v: BraidWord) -> bool:
    if u.strands != v.strands:
        raise BraidError(f"strand mismatch: {u.strands} vs {v.strands}")
    return is_trivial(u * v.inverse())


# ---------------------------------------------------------------------------
# Ribbon braids Z wr B_g


@dataclass(frozen=True)
class RibbonBraid:
    twists: tuple[int, ...]
    braid: BraidWord

    def __post_init__(self) -> None:
        twists = tuple(int(t) for t in self.twists)
        if len(twists) != self.braid.strands:
            raise BraidError(f"{len(twists)} twist coordinates for {self.braid.strands} strands")
        object.__setattr__(self, "twists", twists)

    @property
    def strands(self) -> int:
        return self.braid.strands

    @classmethod
    def identity(cls, strands: int) -> RibbonBraid:
        return cls((0,) * strands, BraidWord.identity(strands))

    def __mul__(self, other: RibbonBraid) -> RibbonBraid:
        return ribbon_multiply(self, other)

    def to_json(self) -> dict:
        return {"strands": self.strands, "word": list(self.braid.letters), "twists": list(self.twists)}

    @classmethod
    def from_json(cls, data: dict) -> RibbonBraid:
        braid = BraidWord.from_json(data)
        return cls(tuple(data.get("twists", (0,) * braid.strands)), braid)


def _act(perm: Permutation, w: Sequence[int]) -> tuple[int, ...]:
    inv = perm.inverse()
    return tuple(w[inv(j) - 1] for j in range(1, len(w) + 1))


def ribbon_multiply(x: RibbonBraid, y: RibbonBraid) -> RibbonBraid:
    if x.strands != y.strands:
        raise BraidError(f"strand mismatch: {x.strands} vs {y.strands}")
    moved = _act(permutation_of(x.braid), y.twists)
    return RibbonBraid(tuple(a + b for a, b in zip(x.twists, moved)), x.braid * y.braid)


def ribbon_invert(x: RibbonBraid) -> RibbonBraid:
    inv = x.braid.inverse()
    moved = _act(permutation_of(inv), x.twists)
    return RibbonBraid(tuple(-t for t in moved), inv)


def ribbons_equal(x: RibbonBraid, y: RibbonBraid) -> bool:
    return x.twists == y.twists and braids_equal(x.braid, y.braid)


def gamma(w: BraidWord) -> RibbonBraid:
    """Zero-framing inclusion of ``B_g`` into the ribbon braid group."""
    return RibbonBraid((0,) * w.strands, w)


def is_pure(x: RibbonBraid | BraidWord) -> bool:
    braid = x.braid if isinstance(x, RibbonBraid) else x
    return permutation_of(braid).is_identity()


# ---------------------------------------------------------------------------
# Cabling: the action of pure ribbon braids on braids by strand replacement


def full_twist(m: int, power: int = 1) -> BraidWord:
    """``Delta^2`` on ``m`` strands as ``(sigma_1 ... sigma_{m-1})^m``, raised to ``power``."""
    base = BraidWord(m, tuple(range(1, m)) * m)
    return base ** power


def block_crossing(p: int, q: int, offset: int, strands: int) -> BraidWord:
    """Positive braid carrying a block of ``p`` strands across the next ``q`` strands.

    The blocks occupy positions ``offset+1 .. offset+p+q``; afterwards the
    ``q``-block sits to the left.
    """
    letters: list[int] = []
    for r in range(p, 0, -1):
        letters.extend(offset + r + s for s in range(q))
    return BraidWord(strands, tuple(letters))


def cable_word(braid: BraidWord, widths: Sequence[int]) -> BraidWord:
    """Replace strand ``j`` of ``braid`` (at its starting position) by ``widths[j-1]`` parallel strands.

    Widths are tracked positionally while reading the word left to right.
    No twisting of the cables is introduced.
    """
    if len(widths) != braid.strands:
        raise BraidError(f"{len(widths)} widths for {braid.strands} strands")
    if any(w < 1 for w in widths):
        raise BraidError(f"cable widths must be positive: {list(widths)}")
    total = sum(widths)
    cur = list(widths)
    letters: list[int] = []
    for x in braid.letters:
        i = abs(x)
        offset = sum(cur[: i - 1])
        p, q = cur[i - 1], cur[i]
        if x > 0:
            letters.extend(block_crossing(p, q, offset, total).letters)
        else:
            letters.extend(block_crossing(q, p, offset, total).inverse().letters)
        cur[i - 1], cur[i] = q, p
    return BraidWord(total, tuple(letters))


def juxtapose(braids: Sequence[BraidWord]) -> BraidWord:
    total = sum(b.strands for b in braids)
    letters: list[int] = []
    offset = 0
    for b in braids:
        letters.extend(b.shifted(offset, total).letters)
        offset += b.strands
    return BraidWord(total, tuple(letters))


def _cable_twists(twists: Sequence[int], widths: Sequence[int]) -> BraidWord:
    return juxtapose([full_twist(m, t) for m, t in zip(widths, twists)])


def cable(outer: RibbonBraid, inner: Sequence[BraidWord]) -> BraidWord:
    """Operadic action of a pure ribbon braid on a tuple of braids.

    The twist ``t`` on hole ``j`` becomes ``Delta^{2t}`` on the ``j``-th cable,
    the outer braid is cabled by block crossings, and the inner braids are
    placed on their cables last.
    """
    if len(inner) != outer.strands:
        raise BraidError(f"{len(inner)} inner braids for {outer.strands} holes")
    if not is_pure(outer):
        raise BraidError("outer braid of a cabling must be pure")
    widths = [b.strands for b in inner]
    return _cable_twists(outer.twists, widths) * cable_word(outer.braid, widths) * juxtapose(inner)


def operad_compose(outer: RibbonBraid, inner: Sequence[RibbonBraid]) -> RibbonBraid:
    """Composition of pure ribbon braids by sewing disks into holes.

    A boundary twist of hole ``j`` turns into the Dehn twist around the
    boundary of the sewn-in disk: ``Delta^2`` on its holes plus one twist of
    each of them.
    """
    if len(inner) != outer.strands:
        raise BraidError(f"{len(inner)} inner elements for {outer.strands} holes")
    if not is_pure(outer) or not all(is_pure(x) for x in inner):
        raise BraidError("operad composition is defined on pure ribbon braids")
    braid = cable(outer, [x.braid for x in inner])
    twists: list[int] = []
    for t, x in zip(outer.twists, inner):
        twists.extend(s + t for s in x.twists)
    return RibbonBraid(tuple(twists), braid)


def positive_permutation_braid(perm: Permutation) -> BraidWord:
    """Positive braid word in which each pair of strands crosses at most once.

    Built by bubble sort on the permutation; serves as an independent check
    on block crossings.
    """
    n = len(perm.images)
    # strand starting at position j ends at position perm(j); sort ends by adjacent swaps
    arr = [perm(j) for j in range(1, n + 1)]
    letters: list[int] = []
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                letters.append(i + 1)
                changed = True
    # as maps, the letters were applied in sequence, so the word is their reverse
    return BraidWord(n, tuple(reversed(letters)))


def random_braid_word(rng, strands: int, length: int) -> BraidWord:
    letters = [rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)]
    return BraidWord(strands, tuple(letters))


def all_reduced_words(strands: int, max_length: int) -> Iterable[BraidWord]:
    """Every ``braid_cancel``-reduced word of length ``<= max_length``, shortest first."""
    alphabet = [s * i for i in range(1, strands) for s in (1, -1)]
    layer: list[tuple[int, ...]] = [()]
    yield BraidWord(strands, ())
    for _ in range(max_length):
        nxt = []
        for w in layer:
            for x in alphabet:
                if w and w[-1] == -x:
                    continue
                nxt.append(w + (x,))
        for w in nxt:
            yield BraidWord(strands, w)
        layer = nxt
