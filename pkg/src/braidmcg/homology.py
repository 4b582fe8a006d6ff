"""Mod-p homology of braid groups and the vanishing analysis of induced maps.

``H_*(B_m; F_2)`` is spanned by monomials in ``x_i`` (degree ``2^i - 1``,
weight ``2^i``) of total weight at most ``m``.  For odd ``p`` the generators are
``lambda`` (degree 1, weight 2), ``y_i`` (degree ``2p^i - 1``) and ``beta y_i``
(degree ``2p^i - 2``), both of weight ``2p^i``; odd-degree generators square to
zero.  The remaining functions turn stability ranges and the Dyer-Lashof
recurrences into genus thresholds past which a generator must map to zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product

from sympy import isprime


class HomologyError(ValueError):
    pass


def _check_prime(p: int, odd: bool = False) -> None:
    if not isprime(p) or (odd and p == 2):
        raise HomologyError(f"{p} is not an {'odd ' if odd else ''}prime")


@dataclass(frozen=True, order=True)
class GeneratorSpec:
    """A multiplicative generator: ``kind`` is one of ``x``, ``lambda``, ``y``, ``by``."""

    p: int
    kind: str
    index: int = 0

    def __post_init__(self) -> None:
        if self.kind == "x":
            if self.p != 2 or self.index < 1:
                raise HomologyError(f"x_i needs p = 2 and i >= 1, got p={self.p}, i={self.index}")
        elif self.kind == "lambda":
            if self.p == 2 or self.index != 0:
                raise HomologyError("lambda is the odd-prime degree-one generator")
        elif self.kind in ("y", "by"):
            if self.index < 1:
                raise HomologyError(f"{self.kind}_i needs i >= 1")
            _check_prime(self.p, odd=True)
        else:
            raise HomologyError(f"unknown generator kind {self.kind!r}")

    @property
    def degree(self) -> int:
        if self.kind == "x":
            return 2 ** self.index - 1
        if self.kind == "lambda":
            return 1
        if self.kind == "y":
            return 2 * self.p ** self.index - 1
        return 2 * self.p ** self.index - 2

    @property
    def weight(self) -> int:
        if self.kind == "x":
            return 2 ** self.index
        if self.kind == "lambda":
            return 2
        return 2 * self.p ** self.index

    @property
    def label(self) -> str:
        if self.kind == "lambda":
            return "lambda"
        return f"{self.kind}{self.index}"

    def __str__(self) -> str:
        return self.label


def parse_generator(p: int, label: str) -> GeneratorSpec:
    label = label.strip()
    if label in ("lambda", "λ"):
        return GeneratorSpec(p, "lambda")
    for kind in ("by", "x", "y"):
        if label.startswith(kind) and label[len(kind):].isdigit():
            return GeneratorSpec(p, kind, int(label[len(kind):]))
    raise HomologyError(f"cannot parse generator {label!r}")


def generators(p: int, max_weight: int) -> list[GeneratorSpec]:
    """All multiplicative generators of weight ``<= max_weight``, ordered by weight then label."""
    _check_prime(p)
    out: list[GeneratorSpec] = []
    if p == 2:
        i = 1
        while 2 ** i <= max_weight:
            out.append(GeneratorSpec(2, "x", i))
            i += 1
        return out
    if max_weight >= 2:
        out.append(GeneratorSpec(p, "lambda"))
    i = 1
    while 2 * p ** i <= max_weight:
        out.extend([GeneratorSpec(p, "by", i), GeneratorSpec(p, "y", i)])
        i += 1
    return out


@dataclass(frozen=True)
class Monomial:
    exponents: tuple[tuple[GeneratorSpec, int], ...] = ()

    @property
    def degree(self) -> int:
        return sum(g.degree * k for g, k in self.exponents)

    @property
    def weight(self) -> int:
        return sum(g.weight * k for g, k in self.exponents)

    @property
    def label(self) -> str:
        if not self.exponents:
            return "1"
        return " ".join(g.label if k == 1 else f"{g.label}^{k}" for g, k in self.exponents)

    def __str__(self) -> str:
        return self.label

    def to_json(self) -> dict:
        return {"monomial": self.label, "degree": self.degree, "weight": self.weight}


def _basis(gens: list[GeneratorSpec], m: int, max_deg: int, exterior) -> list[Monomial]:
    ranges = []
    for g in gens:
        top = m // g.weight
        if exterior(g):
            top = min(top, 1)
        if g.degree:
            top = min(top, max_deg // g.degree)
        ranges.append(range(top + 1))
    out = []
    for exps in product(*ranges):
        mono = Monomial(tuple((g, k) for g, k in zip(gens, exps) if k))
        if mono.weight <= m and mono.degree <= max_deg:
            out.append(mono)
    out.sort(key=lambda mono: (mono.degree, mono.label))
    return out


def f2_basis(m: int, max_deg: int) -> list[Monomial]:
    if m < 1:
        raise HomologyError(f"need m >= 1, got {m}")
    return _basis(generators(2, m), m, max_deg, exterior=lambda g: False)


def fp_basis(m: int, p: int, max_deg: int) -> list[Monomial]:
    _check_prime(p, odd=True)
    if m < 1:
        raise HomologyError(f"need m >= 1, got {m}")
    return _basis(generators(p, m), m, max_deg, exterior=lambda g: g.degree % 2 == 1)


def _dims(basis: list[Monomial], max_deg: int) -> tuple[int, ...]:
    dims = [0] * (max_deg + 1)
    for mono in basis:
        dims[mono.degree] += 1
    return tuple(dims)


def f2_dims(m: int, max_deg: int) -> tuple[int, ...]:
    return _dims(f2_basis(m, max_deg), max_deg)


def fp_dims(m: int, p: int, max_deg: int) -> tuple[int, ...]:
    return _dims(fp_basis(m, p, max_deg), max_deg)


def rational_dims(m: int, max_deg: int) -> tuple[int, ...]:
    dims = [0] * (max_deg + 1)
    dims[0] = 1
    if m > 1 and max_deg >= 1:
        dims[1] = 1
    return tuple(dims)


def basis(m: int, p: int, max_deg: int) -> list[Monomial]:
    """Monomial basis over ``F_p``; ``p = 0`` means the rationals."""
    if p == 0:
        out = [Monomial()]
        if m > 1 and max_deg >= 1:
            out.append(Monomial(((GeneratorSpec(0, "lambda"), 1),)))
        return out
    return f2_basis(m, max_deg) if p == 2 else fp_basis(m, p, max_deg)


def dims(m: int, p: int, max_deg: int) -> tuple[int, ...]:
    if p == 0:
        return rational_dims(m, max_deg)
    return f2_dims(m, max_deg) if p == 2 else fp_dims(m, p, max_deg)


def poincare_string(d: tuple[int, ...]) -> str:
    terms = []
    for k, c in enumerate(d):
        if not c:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            mono = "t" if k == 1 else f"t^{k}"
            terms.append(mono if c == 1 else f"{c}{mono}")
    return " + ".join(terms) or "0"


def q_on_generator(p: int, gen: GeneratorSpec) -> GeneratorSpec:
    """The first Dyer-Lashof operation on a multiplicative generator."""
    if gen.p != p:
        raise HomologyError(f"generator {gen} belongs to p={gen.p}, not {p}")
    if gen.kind == "x":
        return GeneratorSpec(2, "x", gen.index + 1)
    if gen.kind == "lambda":
        return GeneratorSpec(p, "y", 1)
    if gen.kind == "y":
        return GeneratorSpec(p, "y", gen.index + 1)
    raise HomologyError("no Q-rule is available for beta y_i")


def nonvanishing_in_source(p: int, gen: GeneratorSpec, m: int) -> bool:
    """Is ``gen`` a nonzero class of ``H_*(B_m; F_p)``?"""
    return gen.weight <= m


# ---------------------------------------------------------------------------
# Stable ranges and first homology


def stable_range(g: int) -> int:
    """Degrees ``* <= 2(g-1)/3`` in which ``H_*(Gamma_{g,1})`` is stable."""
    return max(0, (2 * (g - 1)) // 3)


def nonorientable_stable_range(g: int) -> tuple[int, int]:
    """``(closed, bounded)``: ``floor((g-3)/3)`` and ``floor(g/3)``, clamped at 0."""
    return max(0, (g - 3) // 3), max(0, g // 3)


@dataclass(frozen=True)
class H1Entry:
    family: str
    genus: int
    boundary: int
    coefficients: int | None
    value: str

    def to_json(self) -> dict:
        return {"family": self.family, "genus": self.genus, "boundary": self.boundary,
                "coefficients": "Z" if self.coefficients is None else ("Q" if self.coefficients == 0 else f"F{self.coefficients}"),
                "value": self.value}


def _integral_h1(family: str, g: int, b: int) -> int:
    """Order of the cyclic group ``H_1(-; Z)`` (0 encodes the trivial group)."""
    if family == "gamma":
        if g == 2 and b in (1, 2):
            return 10
        if g >= 3 and b == 1:
            return 1
    elif family == "n":
        if g >= 7:
            return 2
    raise HomologyError(f"no stored H_1 for family={family}, g={g}, b={b}")


def h1_table(family: str, g: int, b: int = 1, coefficients: int | None = None) -> H1Entry:
    """First homology of ``Gamma_{g,b}`` (``family='gamma'``) or ``N_g`` (``family='n'``).

    ``coefficients`` is None for integers, 0 for rationals or a prime ``p``.
    """
    family = {"orientable": "gamma", "nonorientable": "n"}.get(family.lower(), family.lower())
    order = _integral_h1(family, g, b)
    if coefficients is None:
        value = "0" if order == 1 else f"Z/{order}"
    elif coefficients == 0:
        value = "0"
    else:
        _check_prime(coefficients)
        value = f"F{coefficients}" if order % coefficients == 0 else "0"
    return H1Entry(family, g, b, coefficients, value)


def h1_vanishes_from(p: int) -> int:
    """Least genus ``d_0 >= 2`` from which ``H_1(Gamma_{g,1}; F_p) = 0``, read off the table."""
    g = 2
    while h1_table("gamma", g, 1, p).value != "0":
        g += 1
    return g


# ---------------------------------------------------------------------------
# Vanishing thresholds (least target genus at which a generator maps to zero)


def stable_kill_threshold(p: int, gen: GeneratorSpec) -> int:
    """Least ``g`` whose stable range contains ``deg gen``."""
    return math.ceil(3 * gen.degree / 2) + 1


def operadic_recurrence(p: int, i: int) -> int:
    """``d_i = p d_{i-1}``, ``d_0`` from the first-homology table."""
    return p ** i * h1_vanishes_from(p)


def geometric_recurrence(p: int, i: int) -> int:
    """``d_i = p d_{i-1} + p - 1`` for the doubled-disk gluing."""
    d = h1_vanishes_from(p)
    for _ in range(i):
        d = p * d + p - 1
    return d


def operadic_threshold(p: int, gen: GeneratorSpec) -> int:
    """Least genus ``g`` forcing ``phi^+_*(gen) = 0`` by commuting with ``Q``."""
    if gen.kind == "x":
        return operadic_recurrence(2, gen.index - 1)
    if gen.kind == "lambda":
        return operadic_recurrence(p, 0)
    if gen.kind == "y":
        return operadic_recurrence(p, gen.index)
    raise HomologyError(f"no recurrence threshold for {gen}")


def geometric_threshold(p: int, i: int) -> int:
    """Published bound for the geometric embedding: ``x_i``/``y_i`` vanish for ``g`` at least this."""
    _check_prime(p)
    if p == 2:
        return 2 ** (i + 2) - 1
    if p == 5:
        return 4 * 5 ** i - 1
    return 3 * p ** i - 1


def geometric_source_bound(p: int, i: int, g: int) -> bool:
    """Published nonvanishing bound in ``B_{2g+2}``: ``p^{i-1} - 1 <= g``."""
    return p ** (i - 1) - 1 <= g


# ---------------------------------------------------------------------------
# Reports


@dataclass(frozen=True)
class VanishingEntry:
    generator: GeneratorSpec
    nonzero_in_source: bool
    killed_by: tuple[str, ...]
    thresholds: dict = field(compare=False, default_factory=dict)

    @property
    def status(self) -> str:
        if not self.nonzero_in_source:
            return "absent"
        return "zero" if self.killed_by else "undetermined"

    def to_json(self) -> dict:
        return {
            "generator": self.generator.label,
            "degree": self.generator.degree,
            "nonzero_in_source": self.nonzero_in_source,
            "killed_by": list(self.killed_by),
            "thresholds": dict(sorted(self.thresholds.items())),
            "status": self.status,
        }


@dataclass(frozen=True)
class VanishingReport:
    embedding: str
    p: int
    g: int
    m: int
    view: str
    entries: tuple[VanishingEntry, ...]

    def labels(self, status: str) -> list[str]:
        return [e.generator.label for e in self.entries if e.status == status]

    @property
    def undetermined(self) -> list[str]:
        return self.labels("undetermined")

    def to_json(self) -> dict:
        return {
            "embedding": self.embedding, "p": self.p, "g": self.g, "source_strands": self.m,
            "view": self.view,
            "entries": [e.to_json() for e in self.entries],
            "undetermined": self.undetermined,
            "zero": self.labels("zero"),
            "absent": self.labels("absent"),
        }


EMBEDDINGS = ("operadic", "geometric", "stable-only")


def _report_generators(p: int, present) -> list[GeneratorSpec]:
    """Generators up to and including the first index absent from the source."""
    kind = "x" if p == 2 else "y"
    out = [] if p == 2 else [GeneratorSpec(p, "lambda")]
    i = 1
    while True:
        gen = GeneratorSpec(p, kind, i)
        out.append(gen)
        if not present(gen):
            return out
        i += 1


def vanishing_report(embedding: str, p: int, g: int, view: str = "combined", m: int | None = None) -> VanishingReport:
    """Per-generator status of ``alpha_*`` on ``H_*(B_m; F_p)``.

    ``view='paper'`` uses only the published bounds for the example at hand;
    ``view='combined'`` also applies the stable-range vanishing.
    """
    _check_prime(p)
    if embedding not in EMBEDDINGS:
        raise HomologyError(f"unknown embedding {embedding!r}; choose from {EMBEDDINGS}")
    if view not in ("paper", "combined"):
        raise HomologyError(f"unknown view {view!r}")
    if embedding == "geometric":
        m = 2 * g + 2
    elif embedding == "operadic":
        m = g
    elif m is None:
        m = g
    literal_source = embedding == "geometric" and view == "paper"

    def present(gen: GeneratorSpec) -> bool:
        if literal_source and gen.kind in ("x", "y"):
            return geometric_source_bound(p, gen.index, g)
        return nonvanishing_in_source(p, gen, m)

    use_stable = embedding == "stable-only" or view == "combined"
    entries = []
    for gen in _report_generators(p, present):
        thresholds: dict[str, int] = {}
        if use_stable:
            thresholds["stable"] = stable_kill_threshold(p, gen)
        if gen.kind == "lambda" and embedding != "stable-only":
            thresholds["h1"] = h1_vanishes_from(p)
        elif embedding == "operadic":
            thresholds["recurrence"] = operadic_threshold(p, gen)
        elif embedding == "geometric":
            thresholds["recurrence"] = geometric_threshold(p, gen.index)
        killed = tuple(sorted(k for k, t in thresholds.items() if g >= t))
        nonzero = present(gen)
        entries.append(VanishingEntry(gen, nonzero, killed if nonzero else (), thresholds))
    return VanishingReport(embedding, p, g, m, view, tuple(entries))


ORIENTABLE_EMBEDDINGS = (
    "mirror", "lifted-szepietowski", "geometric", "operadic", "cover-geometric", "mirror-geometric",
)
NONORIENTABLE_EMBEDDINGS = ("szepietowski",)


def theorem_expectation(embedding: str, field_char: int, degree: int, g: int) -> str:
    """Expected behaviour of the induced map in degree ``degree`` for target genus ``g``.

    ``field_char`` is 0 for the rationals or a prime.  Returns ``zero``,
    ``injective`` or ``out-of-range``.
    """
    if field_char:
        _check_prime(field_char)
    if degree <= 0:
        return "out-of-range"
    if embedding in ORIENTABLE_EMBEDDINGS:
        return "zero" if degree <= stable_range(g) else "out-of-range"
    if embedding in NONORIENTABLE_EMBEDDINGS:
        if g >= 7 and degree <= g // 3:
            return "injective" if field_char == 2 else "zero"
        return "out-of-range"
    raise HomologyError(f"unknown embedding {embedding!r}")
