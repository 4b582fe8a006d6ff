"""Words in finitely generated free groups and homomorphisms between them.

A letter is a nonzero signed integer: ``k`` stands for the generator ``x_k``
and ``-k`` for its inverse.  Words are freely reduced on construction, so two
words are equal as group elements exactly when their letter tuples agree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class RankError(ValueError):
    """Generator index out of range, or ranks of operands do not match."""


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class GroupWord:
    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise RankError(f"rank must be positive, got {self.rank}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) > self.rank:
                raise RankError(f"letter {x} out of range for rank {self.rank}")
        object.__setattr__(self, "letters", _reduce(letters))

    @classmethod
    def identity(cls, rank: int) -> GroupWord:
        return cls(rank, ())

    @classmethod
    def generator(cls, rank: int, index: int, sign: int = 1) -> GroupWord:
        return cls(rank, (sign * index,))

    @classmethod
    def parse(cls, text: str, rank: int) -> GroupWord:
        """Parse the text form ``"1 2 -1"``; an empty string is the identity."""
        return cls(rank, tuple(int(t) for t in text.replace(",", " ").split()))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: GroupWord) -> GroupWord:
        return multiply(self, other)

    def __pow__(self, n: int) -> GroupWord:
        base = self if n >= 0 else invert(self)
        out = GroupWord.identity(self.rank)
        for _ in range(abs(n)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return not self.letters

    def support(self) -> frozenset[int]:
        """Generator indices occurring in the word."""
        return frozenset(abs(x) for x in self.letters)

    def exponent_vector(self) -> list[int]:
        """Image in the abelianization Z^rank."""
        vec = [0] * self.rank
        for x in self.letters:
            vec[abs(x) - 1] += 1 if x > 0 else -1
        return vec

    def text(self) -> str:
        return " ".join(str(x) for x in self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"x{abs(x)}" + ("^-1" if x < 0 else "") for x in self.letters)


def free_reduce(letters: Sequence[int], rank: int) -> GroupWord:
    return GroupWord(rank, tuple(letters))


def multiply(u: GroupWord, v: GroupWord) -> GroupWord:
    if u.rank != v.rank:
        raise RankError(f"rank mismatch: {u.rank} vs {v.rank}")
    return GroupWord(u.rank, u.letters + v.letters)


def invert(u: GroupWord) -> GroupWord:
    return GroupWord(u.rank, tuple(-x for x in reversed(u.letters)))


def conjugate(c: GroupWord, u: GroupWord) -> GroupWord:
    """Return ``c u c^-1``."""
    return c * u * invert(c)


def cyclic_reduce(u: GroupWord) -> tuple[GroupWord, GroupWord]:
    """Split ``u = t v t^-1`` with ``v`` cyclically reduced; returns ``(t, v)``."""
    xs = u.letters
    k = 0
    while 2 * k + 1 < len(xs) and xs[k] == -xs[-1 - k]:
        k += 1
    return GroupWord(u.rank, xs[:k]), GroupWord(u.rank, xs[k:len(xs) - k])


@dataclass(frozen=True)
class FreeMap:
    """Homomorphism ``F_source -> F_target`` given by the images of generators.

    ``inverse`` is optional; when present it is claimed to be a two-sided
    inverse, which :meth:`verify_inverse` checks rather than trusts.
    """

    source_rank: int
    target_rank: int
    images: tuple[GroupWord, ...]
    inverse: FreeMap | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        images = tuple(self.images)
        if len(images) != self.source_rank:
            raise RankError(
                f"expected {self.source_rank} generator images, got {len(images)}"
            )
        for w in images:
            if w.rank != self.target_rank:
                raise RankError(f"image of rank {w.rank} in map to rank {self.target_rank}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, rank: int) -> FreeMap:
        ims = tuple(GroupWord.generator(rank, i) for i in range(1, rank + 1))
        ident = cls(rank, rank, ims)
        object.__setattr__(ident, "inverse", ident)
        return ident

    @classmethod
    def from_lists(cls, source_rank: int, target_rank: int, images: Sequence[Sequence[int]]) -> FreeMap:
        return cls(source_rank, target_rank, tuple(GroupWord(target_rank, tuple(w)) for w in images))

    def __call__(self, u: GroupWord) -> GroupWord:
        return apply(self, u)

    def image_of(self, letter: int) -> tuple[int, ...]:
        w = self.images[abs(letter) - 1].letters
        return w if letter > 0 else tuple(-x for x in reversed(w))

    def is_identity(self) -> bool:
        return self.source_rank == self.target_rank and all(
            w.letters == (i,) for i, w in enumerate(self.images, start=1)
        )

    def with_inverse(self, inverse: FreeMap) -> FreeMap:
        return FreeMap(self.source_rank, self.target_rank, self.images, inverse)

    def verify_inverse(self) -> bool:
        if self.inverse is None:
            return False
        return compose(self, self.inverse).is_identity() and compose(self.inverse, self).is_identity()

    def abelianization(self) -> list[list[int]]:
        """Integer matrix of the induced map Z^source -> Z^target (columns = generators)."""
        cols = [w.exponent_vector() for w in self.images]
        return [[cols[j][i] for j in range(self.source_rank)] for i in range(self.target_rank)]

    def to_json(self) -> dict:
        return {
            "source_rank": self.source_rank,
            "target_rank": self.target_rank,
            "images": [list(w.letters) for w in self.images],
        }

    @classmethod
    def from_json(cls, data: dict) -> FreeMap:
        return cls.from_lists(data["source_rank"], data["target_rank"], data["images"])


def apply(f: FreeMap, u: GroupWord) -> GroupWord:
    if u.rank != f.source_rank:
        raise RankError(f"word of rank {u.rank} fed to map with source rank {f.source_rank}")
    out: list[int] = []
    for x in u.letters:
        for y in f.image_of(x):
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return GroupWord(f.target_rank, tuple(out))


def compose(f: FreeMap, g: FreeMap) -> FreeMap:
    """Return ``f o g`` (apply ``g`` first)."""
    if g.target_rank != f.source_rank:
        raise RankError(f"cannot compose: target rank {g.target_rank} != source rank {f.source_rank}")
    images = tuple(apply(f, w) for w in g.images)
    inv = None
    if f.inverse is not None and g.inverse is not None:
        inv = FreeMap(f.target_rank, g.source_rank, tuple(apply(g.inverse, w) for w in f.inverse.images))
    return FreeMap(g.source_rank, f.target_rank, images, inv)


# Fundamental group of the doubled disk: generators ordered a1, b1, a2, b2, ..., b_{g-1}, a_g,
# so a_i sits at position 2i - 1 and b_i at 2i.

def mirror_a(i: int) -> int:
    return 2 * i - 1


def mirror_b(i: int) -> int:
    return 2 * i


def projection_map(g: int) -> FreeMap:
    """``F_{2g-1} -> F_g`` killing every ``b_i`` and keeping every ``a_i``."""
    if g < 2:
        raise ValueError(f"projection_map needs g >= 2, got {g}")
    images = []
    for k in range(1, 2 * g):
        if k % 2:
            images.append(GroupWord.generator(g, (k + 1) // 2))
        else:
            images.append(GroupWord.identity(g))
    return FreeMap(2 * g - 1, g, tuple(images))


def inclusion_map(g: int) -> FreeMap:
    """``F_g -> F_{2g-1}``, ``a_i -> a_i``."""
    if g < 2:
        raise ValueError(f"inclusion_map needs g >= 2, got {g}")
    return FreeMap(g, 2 * g - 1, tuple(GroupWord.generator(2 * g - 1, mirror_a(i)) for i in range(1, g + 1)))


def is_inner(f: FreeMap) -> GroupWord | None:
    """Return ``c`` with ``f(x) = c x c^-1`` for every generator, or None.

    Only decides endomorphisms of a free group of rank >= 2; the search over
    the conjugator's tail power is bounded by the image lengths.
    """
    if f.source_rank != f.target_rank or f.source_rank < 2:
        return None
    rank = f.source_rank
    t, core = cyclic_reduce(f.images[0])
    if core.letters != (1,):
        return None
    bound = sum(len(w) for w in f.images) + 1
    x1 = GroupWord.generator(rank, 1)
    for k in range(-bound, bound + 1):
        c = t * x1 ** k
        if all(conjugate(c, GroupWord.generator(rank, i)) == w for i, w in enumerate(f.images, start=1)):
            return c
    return None
