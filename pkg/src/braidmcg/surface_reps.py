"""Braid group actions on fundamental groups (and first homology) of surfaces.

Every free-group representation here is obtained from one model: a mapping
class of the disk with ``g`` holes, recorded as a :class:`DiskClass` by where
it sends the arcs ``e_j`` from the basepoint on the outer boundary to the
hole boundaries.  If the class sends hole ``j`` to hole ``perm(j)`` then
``e_j -> w_j e_{perm(j)}`` for a loop ``w_j`` in the hole loops ``d_1..d_g``.
Gluing something onto every hole turns this data into an automorphism of
the fundamental group of the glued surface:

* operadic: a one-holed torus ``<a_j, b_j>`` on each hole, ``d_j = [a_j, b_j]``;
* Szepietowski: a Moebius band ``<c_j>`` on each hole, ``d_j = c_j^2``;
* mirror: the reflected copy of the whole disk, glued along the hole circles.

For the mirror double ``S`` of the disk ``T``, ``b_j`` is the loop that runs
down tube ``j`` into the reflected half and back up tube ``j+1``.  With
``u_j = b_1 ... b_{j-1}`` and ``wbar`` the substitution ``a_m -> u_m a_m u_m^-1``
(the reflected loop transported back to the basepoint), the doubled class acts by

    a_j -> w_j a_{perm j} w_j^-1
    b_j -> w_j u_{perm j}^-1 wbar_j^-1 wbar_{j+1} u_{perm(j+1)} w_{j+1}^-1

Folding ``S`` onto ``T`` kills every ``b_j`` and commutes with the doubled
class, which is the commuting square checked by
:func:`check_detection_diagram`.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

import numpy as np
import sympy

from .braid import (
    BraidError,
    BraidWord,
    Permutation,
    RibbonBraid,
    artin,
    artin_generator,
    braid_cancel,
    is_trivial,
)
from .freegroup import (
    FreeMap,
    GroupWord,
    apply,
    compose,
    inclusion_map,
    invert,
    is_inner,
    mirror_a,
    mirror_b,
    projection_map,
)


# ---------------------------------------------------------------------------
# Mapping classes of the holed disk via arcs


@dataclass(frozen=True)
class DiskClass:
    perm: Permutation
    arcs: tuple[GroupWord, ...]

    @property
    def holes(self) -> int:
        return len(self.arcs)

    @classmethod
    def identity(cls, g: int) -> DiskClass:
        return cls(Permutation.identity(g), tuple(GroupWord.identity(g) for _ in range(g)))

    @classmethod
    def generator(cls, g: int, letter: int) -> DiskClass:
        i = abs(letter)
        if not 1 <= i < g:
            raise BraidError(f"generator {letter} invalid on {g} holes")
        arcs = [GroupWord.identity(g) for _ in range(g)]
        if letter > 0:
            arcs[i - 1] = GroupWord.generator(g, i)
        else:
            arcs[i] = GroupWord.generator(g, i + 1, -1)
        return cls(Permutation.transposition(g, i, i + 1), tuple(arcs))

    @classmethod
    def boundary_twists(cls, twists: Sequence[int]) -> DiskClass:
        g = len(twists)
        return cls(Permutation.identity(g), tuple(GroupWord.generator(g, j) ** t for j, t in enumerate(twists, 1)))

    def hole_action(self) -> FreeMap:
        """Induced automorphism of the free group on the hole loops."""
        g = self.holes
        return FreeMap(g, g, tuple(
            w * GroupWord.generator(g, self.perm(j)) * invert(w) for j, w in enumerate(self.arcs, 1)
        ))

    def __mul__(self, other: DiskClass) -> DiskClass:
        """``self o other``."""
        h = self.hole_action()
        arcs = tuple(apply(h, w) * self.arcs[other.perm(j) - 1] for j, w in enumerate(other.arcs, 1))
        return DiskClass(self.perm * other.perm, arcs)


def disk_class(x: RibbonBraid | BraidWord) -> DiskClass:
    if isinstance(x, BraidWord):
        x = RibbonBraid((0,) * x.strands, x)
    out = DiskClass.identity(x.strands)
    for letter in reversed(x.braid.letters):
        out = DiskClass.generator(x.strands, letter) * out
    if any(x.twists):
        out = DiskClass.boundary_twists(x.twists) * out
    return out


def attach(cls: DiskClass, local_rank: int, hole_loop: Sequence[int]) -> FreeMap:
    """Extend ``cls`` over identical pieces glued to every hole.

    The piece on hole ``j`` contributes generators ``(j-1)*local_rank + 1 ..
    j*local_rank``; ``hole_loop`` spells the hole boundary in the local
    generators ``1..local_rank``.
    """
    g = cls.holes
    rank = g * local_rank

    def local(j: int, s: int) -> int:
        return (j - 1) * local_rank + s

    loops = FreeMap(g, rank, tuple(
        GroupWord(rank, tuple(local(j, abs(s)) * (1 if s > 0 else -1) for s in hole_loop))
        for j in range(1, g + 1)
    ))
    images = []
    for j in range(1, g + 1):
        conj = apply(loops, cls.arcs[j - 1])
        for s in range(1, local_rank + 1):
            images.append(conj * GroupWord.generator(rank, local(cls.perm(j), s)) * invert(conj))
    return FreeMap(rank, rank, tuple(images))


def mirror_double(cls: DiskClass) -> FreeMap:
    """Automorphism of ``pi_1`` of the mirror double induced by ``cls`` (see module docstring)."""
    g = cls.holes
    if g < 2:
        raise ValueError("mirror double needs at least two holes")
    rank = 2 * g - 1
    a = [None] + [GroupWord.generator(rank, mirror_a(j)) for j in range(1, g + 1)]
    u = [None, GroupWord.identity(rank)]
    for j in range(2, g + 1):
        u.append(u[j - 1] * GroupWord.generator(rank, mirror_b(j - 1)))
    incl = inclusion_map(g)
    reflected = FreeMap(g, rank, tuple(u[j] * a[j] * invert(u[j]) for j in range(1, g + 1)))
    w = [None] + [apply(incl, x) for x in cls.arcs]
    wbar = [None] + [apply(reflected, x) for x in cls.arcs]
    p = cls.perm
    images = []
    for j in range(1, g + 1):
        images.append(w[j] * a[p(j)] * invert(w[j]))
        if j < g:
            images.append(
                w[j] * invert(u[p(j)]) * invert(wbar[j]) * wbar[j + 1] * u[p(j + 1)] * invert(w[j + 1])
            )
    return FreeMap(rank, rank, tuple(images))


def mirror_involution(g: int) -> FreeMap:
    """The reflection of the mirror double, transported back to the basepoint along tube 1."""
    rank = 2 * g - 1
    u = [None, GroupWord.identity(rank)]
    for j in range(2, g + 1):
        u.append(u[j - 1] * GroupWord.generator(rank, mirror_b(j - 1)))
    images = []
    for j in range(1, g + 1):
        images.append(u[j] * GroupWord.generator(rank, mirror_a(j)) * invert(u[j]))
        if j < g:
            images.append(u[j] * GroupWord.generator(rank, mirror_b(j), -1) * invert(u[j]))
    iota = FreeMap(rank, rank, tuple(images))
    return iota.with_inverse(iota)


# ---------------------------------------------------------------------------
# Representations


@dataclass(frozen=True)
class Certificate:
    kind: str
    subject: str
    verdict: bool
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"kind": self.kind, "subject": self.subject, "verdict": self.verdict, "witness": self.witness}

    @classmethod
    def from_json(cls, data: dict) -> Certificate:
        return cls(data["kind"], data["subject"], bool(data["verdict"]), dict(data.get("witness", {})))


@dataclass(frozen=True)
class SurfaceRep:
    """Images of ``sigma_i^{+-1}`` as free-group automorphisms, keyed by signed index."""

    name: str
    strands: int
    target_rank: int
    images: dict = field(compare=False)
    involution: FreeMap | None = field(default=None, compare=False)

    def generator(self, letter: int) -> FreeMap:
        try:
            return self.images[letter]
        except KeyError:
            raise BraidError(f"generator {letter} invalid on {self.strands} strands") from None

    def identity(self) -> FreeMap:
        return FreeMap.identity(self.target_rank)

    def compose(self, f: FreeMap, g: FreeMap) -> FreeMap:
        return compose(f, g)

    def is_identity(self, f: FreeMap) -> bool:
        return f.is_identity()

    def equal(self, f: FreeMap, g: FreeMap) -> bool:
        return f.images == g.images

    def eval(self, w: BraidWord) -> FreeMap:
        if w.strands != self.strands:
            raise BraidError(f"{self.name} acts on {self.strands} strands, word has {w.strands}")
        f = self.identity()
        for x in reversed(w.letters):
            f = compose(self.generator(x), f)
        return f

    def h1(self, f: FreeMap) -> list[list[int]]:
        return f.abelianization()

    def corrupted(self, letter: int, image: FreeMap) -> SurfaceRep:
        images = dict(self.images)
        images[letter] = image
        return replace(self, images=images)

    def to_json(self, f: FreeMap) -> dict:
        return f.to_json()


@dataclass(frozen=True)
class MatrixRep:
    """Images of ``sigma_i^{+-1}`` as exact integer matrices."""

    name: str
    strands: int
    target_rank: int
    images: dict = field(compare=False)
    pairing: np.ndarray | None = field(default=None, compare=False)

    def generator(self, letter: int) -> np.ndarray:
        try:
            return self.images[letter]
        except KeyError:
            raise BraidError(f"generator {letter} invalid on {self.strands} strands") from None

    def identity(self) -> np.ndarray:
        return np.identity(self.target_rank, dtype=int).astype(object)

    def compose(self, f: np.ndarray, g: np.ndarray) -> np.ndarray:
        return f @ g

    def is_identity(self, f: np.ndarray) -> bool:
        return np.array_equal(f, self.identity())

    def equal(self, f: np.ndarray, g: np.ndarray) -> bool:
        return np.array_equal(f, g)

    def eval(self, w: BraidWord) -> np.ndarray:
        if w.strands != self.strands:
            raise BraidError(f"{self.name} acts on {self.strands} strands, word has {w.strands}")
        f = self.identity()
        for x in w.letters:
            f = f @ self.generator(x)
        return f

    def h1(self, f: np.ndarray) -> list[list[int]]:
        return [[int(v) for v in row] for row in f]

    def corrupted(self, letter: int, image: np.ndarray) -> MatrixRep:
        images = dict(self.images)
        images[letter] = image
        return replace(self, images=images)

    def to_json(self, f: np.ndarray) -> dict:
        return {"matrix": self.h1(f)}


def _rep_from_classes(name: str, g: int, extend, involution: FreeMap | None = None) -> SurfaceRep:
    images = {}
    rank = None
    for i in range(1, g):
        fwd = extend(DiskClass.generator(g, i))
        bwd = extend(DiskClass.generator(g, -i))
        object.__setattr__(fwd, "inverse", bwd)
        object.__setattr__(bwd, "inverse", fwd)
        images[i], images[-i] = fwd, bwd
        rank = fwd.target_rank
    if rank is None:
        rank = extend(DiskClass.identity(g)).target_rank
    return SurfaceRep(name, g, rank, images, involution)


def artin_rep(n: int) -> SurfaceRep:
    if n < 2:
        raise ValueError(f"artin_rep needs n >= 2, got {n}")
    images = {s * i: artin_generator(n, s * i) for i in range(1, n) for s in (1, -1)}
    return SurfaceRep("artin", n, n, images)


def operadic_rep(g: int) -> SurfaceRep:
    """``B_g`` acting on ``pi_1`` of the genus-``g`` surface built by capping holes with tori."""
    if g < 2:
        raise ValueError(f"operadic_rep needs g >= 2, got {g}")
    return _rep_from_classes("operadic", g, lambda c: attach(c, 2, (1, 2, -1, -2)))


def szepietowski_rep(g: int) -> SurfaceRep:
    """``B_g`` acting on ``pi_1`` of ``N_{g,1}`` = disk with a crosscap on each hole."""
    if g < 2:
        raise ValueError(f"szepietowski_rep needs g >= 2, got {g}")
    return _rep_from_classes("szepietowski", g, lambda c: attach(c, 1, (1, 1)))


def mirror_rep(g: int) -> SurfaceRep:
    """``B_g`` acting on ``pi_1`` of the mirror double ``Sigma_{g-1,2}``."""
    if g < 2:
        raise ValueError(f"mirror_rep needs g >= 2, got {g}")
    return _rep_from_classes("mirror", g, mirror_double, mirror_involution(g))


def chain_pairing(n: int) -> np.ndarray:
    """Intersection form of a chain of ``n-1`` curves: ``<v_i, v_{i+1}> = 1``."""
    k = n - 1
    J = np.zeros((k, k), dtype=int).astype(object)
    for i in range(k - 1):
        J[i, i + 1] = 1
        J[i + 1, i] = -1
    return J


def symplectic_rep(n: int) -> MatrixRep:
    """Transvections ``x -> x + <x, v_i> v_i`` on the lattice spanned by a chain of curves."""
    if n < 2:
        raise ValueError(f"symplectic_rep needs n >= 2, got {n}")
    k = n - 1
    J = chain_pairing(n)
    images = {}
    for i in range(k):
        row = np.zeros((k, k), dtype=int).astype(object)
        row[i, :] = J[:, i]
        ident = np.identity(k, dtype=int).astype(object)
        images[i + 1] = ident + row
        images[-(i + 1)] = ident - row
    return MatrixRep("symplectic", n, k, images, J)


REPS = {
    "artin": artin_rep,
    "mirror": mirror_rep,
    "szepietowski": szepietowski_rep,
    "operadic": operadic_rep,
    "symplectic": symplectic_rep,
}


def make_rep(name: str, g: int):
    try:
        return REPS[name](g)
    except KeyError:
        raise ValueError(f"unknown representation {name!r}; choose from {sorted(REPS)}") from None


def eval_rep(rep, w: BraidWord):
    return rep.eval(w)


# ---------------------------------------------------------------------------
# Certificates


def _words(words: BraidWord | Iterable[BraidWord]) -> list[BraidWord]:
    return [words] if isinstance(words, BraidWord) else list(words)


def check_braid_relations(rep) -> Certificate:
    n = rep.strands
    gen = rep.generator
    for i in range(1, n):
        if not rep.is_identity(rep.compose(gen(i), gen(-i))) or not rep.is_identity(rep.compose(gen(-i), gen(i))):
            return Certificate("braid-relations", rep.name, False, {"inverse_fails": i})
    for i in range(1, n):
        for j in range(i + 1, n):
            if j == i + 1:
                lhs = rep.compose(gen(i), rep.compose(gen(j), gen(i)))
                rhs = rep.compose(gen(j), rep.compose(gen(i), gen(j)))
            else:
                lhs = rep.compose(gen(i), gen(j))
                rhs = rep.compose(gen(j), gen(i))
            if not rep.equal(lhs, rhs):
                return Certificate("braid-relations", rep.name, False, {"pair": [i, j]})
    return Certificate("braid-relations", rep.name, True, {"strands": n, "pairs_checked": (n - 1) * (n - 2) // 2})


def check_detection_diagram(rep: SurfaceRep, words: BraidWord | Iterable[BraidWord]) -> Certificate:
    """Folding the mirror double after the doubled action equals the Artin action."""
    g = rep.strands
    proj, incl = projection_map(g), inclusion_map(g)
    count = 0
    for w in _words(words):
        square = compose(proj, compose(rep.eval(w), incl))
        expected = artin(w)
        count += 1
        if square.images != expected.images:
            bad = next(i for i in range(g) if square.images[i] != expected.images[i])
            return Certificate("diagram-commutes", rep.name, False, {
                "word": list(w.letters), "generator": bad + 1,
                "got": list(square.images[bad].letters), "expected": list(expected.images[bad].letters),
            })
    return Certificate("diagram-commutes", rep.name, True, {"words_checked": count})


def check_squares_compatibility(rep: SurfaceRep, words: BraidWord | Iterable[BraidWord]) -> Certificate:
    """On the subgroup generated by the squares ``c_i^2`` the action is Artin's."""
    g = rep.strands
    squares = FreeMap(g, g, tuple(GroupWord(g, (i, i)) for i in range(1, g + 1)))
    count = 0
    for w in _words(words):
        f = rep.eval(w)
        expected = compose(squares, artin(w))
        got = compose(f, squares)
        count += 1
        if got.images != expected.images:
            bad = next(i for i in range(g) if got.images[i] != expected.images[i])
            return Certificate("squares-compatible", rep.name, False, {
                "word": list(w.letters), "generator": bad + 1,
                "got": list(got.images[bad].letters), "expected": list(expected.images[bad].letters),
            })
    return Certificate("squares-compatible", rep.name, True, {"words_checked": count})


def commutator_images(g: int) -> list[GroupWord]:
    """Images ``a_i b_i a_i^-1 b_i^-1`` of the hole loops in ``pi_1(Sigma_{g,1})``."""
    rank = 2 * g
    return [GroupWord(rank, (2 * i - 1, 2 * i, -(2 * i - 1), -2 * i)) for i in range(1, g + 1)]


def check_disjoint_alphabets(g: int, images: Sequence[GroupWord] | None = None) -> Certificate:
    """Images of ``c_1..c_g`` are nontrivial reduced words on pairwise disjoint letter sets."""
    if images is None:
        images = commutator_images(g)
    supports = [sorted(w.support()) for w in images]
    for i, w in enumerate(images):
        if w.is_identity():
            return Certificate("disjoint-alphabets", f"g={g}", False, {"trivial_image": i + 1})
    for i in range(len(images)):
        for j in range(i + 1, len(images)):
            common = set(supports[i]) & set(supports[j])
            if common:
                return Certificate("disjoint-alphabets", f"g={g}", False, {
                    "pair": [i + 1, j + 1], "shared_letters": sorted(common),
                })
    return Certificate("disjoint-alphabets", f"g={g}", True, {"letter_sets": supports})


def restricted_to_holes(rep: SurfaceRep, w: BraidWord) -> FreeMap:
    """Operadic action restricted to ``<c_1..c_g>``, rewritten in the ``c``-alphabet.

    Images are recognised by substituting back; returns the Artin-shaped map
    when every image lies in the image of ``c_i -> [a_i, b_i]``.
    """
    g = rep.strands
    loops = FreeMap(g, 2 * g, tuple(commutator_images(g)))
    f = rep.eval(w)
    candidate = artin(w)
    # restriction agrees with candidate iff f o loops == loops o candidate
    if compose(f, loops).images == compose(loops, candidate).images:
        return candidate
    raise ValueError(f"operadic action of {list(w.letters)} does not restrict to the Artin action")


def faithfulness_sample(rep, words: Iterable[BraidWord]) -> Certificate:
    checked = 0
    for w in words:
        if is_trivial(w):
            continue
        checked += 1
        if rep.is_identity(rep.eval(w)):
            return Certificate("faithfulness", rep.name, False, {"counterexample": list(w.letters)})
    return Certificate("faithfulness", rep.name, True, {"nontrivial_words_checked": checked})


def h1_action(rep, w: BraidWord) -> list[list[int]]:
    return rep.h1(rep.eval(w))


def h1_det(rep, w: BraidWord) -> int:
    return int(sympy.Matrix(h1_action(rep, w)).det())


def check_J_equivariance(rep: SurfaceRep, iota: FreeMap, words: BraidWord | Iterable[BraidWord],
                         up_to_inner: bool = False) -> Certificate:
    """Test ``iota o rep(w) = rep(w) o iota``; optionally only up to an inner automorphism."""
    if not compose(iota, iota).is_identity():
        raise ValueError("iota is not an involution")
    count = 0
    for w in _words(words):
        f = rep.eval(w)
        lhs, rhs = compose(iota, f), compose(f, iota)
        count += 1
        if lhs.images == rhs.images:
            continue
        if up_to_inner and rhs.inverse is not None:
            c = is_inner(compose(lhs, rhs.inverse))
            if c is not None:
                continue
        return Certificate("J-equivariant", rep.name, False, {"word": list(w.letters)})
    return Certificate("J-equivariant", rep.name, True, {"words_checked": count, "up_to_inner": up_to_inner})


def conjugate_word(h: BraidWord, w: BraidWord) -> BraidWord:
    return braid_cancel(h * w * h.inverse())
