"""Orientations, equivalence classes, fundamental classes and decompositions.

The kernel of the map sending orientation coefficients to their stoichiometric
combination partitions the orientation into equivalence classes: reactions
whose kernel-coordinate rows are proportional.  The zero rows form the
zeroth class.  Closing the equivalence classes under reversible pairing gives
the fundamental classes, which generate the F-decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Literal, Sequence

from .graphs import ComplexGraph, linkage_classes, shape_of_subnetwork
from .linalg import nullspace_basis, rank
from .model import Network, StructuralNumbers, stoichiometric_matrix, structural_numbers

Kind = Literal["O", "P", "P-tilde", "F"]
TypeLabel = Literal["I", "II", "III"]
KINDS: tuple[Kind, ...] = ("O", "P", "P-tilde", "F")

NOTE_TRIVIAL_KERNEL = (
    "trivial kernel: every oriented reaction falls in the zeroth class, "
    "which is kept as a single class"
)
NOTE_PTILDE_RANGE = (
    "P-tilde parts C_i minus P_i are emitted for every fundamental class "
    "with a nonempty difference"
)


class ClassificationError(RuntimeError):
    """An equivalence class matched none of the three subnetwork types."""


@dataclass(frozen=True)
class Orientation:
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, j: int) -> bool:
        return j in self.members


def default_orientation(net: Network) -> Orientation:
    """First-listed direction of every reversible pair plus all irreversibles."""
    return Orientation(tuple(
        j for j, rx in enumerate(net.reactions)
        if rx.reverse_of is None or j < rx.reverse_of
    ))


def check_orientation(net: Network, o: Orientation) -> None:
    members = set(o.members)
    for j, rx in enumerate(net.reactions):
        partner = rx.reverse_of
        inside = j in members
        if partner is None and not inside:
            raise ValueError(f"irreversible reaction {rx.id!r} missing from orientation")
        if partner is not None and inside == (partner in members):
            raise ValueError(f"orientation must hold exactly one of {rx.id!r} and its reverse")


@dataclass(frozen=True)
class KernelCoordinates:
    reactions: tuple[int, ...]
    dim: int
    rows: tuple[tuple[Fraction, ...], ...]

    def coordinate(self, j: int) -> tuple[Fraction, ...]:
        return self.rows[self.reactions.index(j)]


def kernel_coordinates(net: Network, o: Orientation) -> KernelCoordinates:
    basis = nullspace_basis(stoichiometric_matrix(net, o.members))
    return KernelCoordinates(o.members, basis.cols,
                             tuple(basis.row(i) for i in range(basis.rows)))


def _canonical(v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    lead = next(x for x in v if x != 0)
    return tuple(x / lead for x in v)


@dataclass(frozen=True)
class EquivalenceClasses:
    zero_class: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    trivial_kernel: bool = False

    def parts(self) -> list[tuple[int, ...]]:
        out = list(self.classes)
        if self.zero_class:
            out.append(self.zero_class)
        return sorted(out, key=min)


def equivalence_classes(kc: KernelCoordinates) -> EquivalenceClasses:
    zero: list[int] = []
    groups: dict[tuple[Fraction, ...], list[int]] = {}
    for j, row in zip(kc.reactions, kc.rows):
        if not any(row):
            zero.append(j)
        else:
            groups.setdefault(_canonical(row), []).append(j)
    classes = sorted((tuple(sorted(g)) for g in groups.values()), key=min)
    return EquivalenceClasses(tuple(sorted(zero)), tuple(classes), kc.dim == 0)


def fundamental_classes(net: Network, o: Orientation | None = None) -> list[tuple[int, ...]]:
    o = o or default_orientation(net)
    eq = equivalence_classes(kernel_coordinates(net, o))
    out = []
    for part in eq.parts():
        members = set(part)
        members.update(net.reactions[j].reverse_of for j in part
                       if net.reactions[j].reverse_of is not None)
        out.append(tuple(sorted(members)))
    return sorted(out, key=min)


@dataclass(frozen=True)
class Part:
    reactions: tuple[int, ...]
    numbers: StructuralNumbers
    type: TypeLabel | None = None
    label: str = ""


@dataclass(frozen=True)
class Decomposition:
    kind: Kind
    domain: tuple[int, ...]
    parts: tuple[Part, ...]
    whole: StructuralNumbers
    independent: bool
    incidence_independent: bool
    notes: tuple[str, ...] = field(default=())

    @property
    def bi_independent(self) -> bool:
        return self.independent and self.incidence_independent

    @property
    def rank_sum(self) -> int:
        return sum(p.numbers.s for p in self.parts)

    @property
    def incidence_sum(self) -> int:
        return sum(p.numbers.n - p.numbers.l for p in self.parts)

    def partition(self) -> list[tuple[int, ...]]:
        return [p.reactions for p in self.parts]


def _sub_numbers(net: Network, reactions: Iterable[int]) -> StructuralNumbers:
    return structural_numbers(net.subnetwork(reactions))


def classify_type(part: Sequence[int], net: Network) -> TypeLabel:
    """Type of an equivalence class: I (independent forest, deficiency 0),
    II (minimally dependent forest, deficiency 1) or III (minimally dependent
    cycle on at least three complexes, deficiency 0)."""
    js = list(part)
    n_vec = stoichiometric_matrix(net, js)
    kernel = nullspace_basis(n_vec)
    shape = shape_of_subnetwork(js, net)
    delta = _sub_numbers(net, js).delta
    if kernel.cols == 0:
        if shape == "forest" and delta == 0:
            return "I"
    elif kernel.cols == 1 and all(kernel[i, 0] != 0 for i in range(kernel.rows)):
        if shape == "forest" and delta == 1:
            return "II"
        if shape == "single_cycle" and delta == 0:
            return "III"
    ids = [net.reactions[j].id for j in js]
    raise ClassificationError(
        f"type classification failed for {ids}: kernel dim {kernel.cols}, "
        f"shape {shape}, deficiency {delta}"
    )


def _rank_of(net: Network, reactions: Sequence[int]) -> int:
    return rank(stoichiometric_matrix(net, reactions)) if reactions else 0


def _incidence_rank_of(net: Network, reactions: Sequence[int]) -> int:
    # n - l of the generated subnetwork, from connectivity alone
    g = ComplexGraph.from_network(net, reactions)
    touched = {v for e in g.edges for v in e}
    labels = linkage_classes(g).linkage
    return len(touched) - len({labels[v] for v in touched})


def test_independence(net: Network, d: Decomposition) -> bool:
    """True iff the rank of the decomposed reaction set is the sum of part ranks."""
    return _rank_of(net, d.domain) == sum(_rank_of(net, p.reactions) for p in d.parts)


def test_incidence_independence(net: Network, d: Decomposition) -> bool:
    """True iff n - l of the decomposed set is the sum of the parts' n_i - l_i."""
    return _incidence_rank_of(net, d.domain) == sum(
        _incidence_rank_of(net, p.reactions) for p in d.parts)


# keep pytest from collecting these when imported into a test module
test_independence.__test__ = False  # type: ignore[attr-defined]
test_incidence_independence.__test__ = False  # type: ignore[attr-defined]


def build_decomposition(net: Network, kind: Kind = "F",
                        o: Orientation | None = None) -> Decomposition:
    if kind not in KINDS:
        raise ValueError(f"unknown decomposition kind {kind!r}")
    o = o or default_orientation(net)
    check_orientation(net, o)
    notes: list[str] = []
    typed: list[tuple[tuple[int, ...], TypeLabel | None, str]] = []

    if kind == "O":
        complement = tuple(j for j in range(net.r) if j not in o)
        domain = tuple(range(net.r))
        typed = [(o.members, None, "O")]
        if complement:
            typed.append((complement, None, "O'"))
    else:
        eq = equivalence_classes(kernel_coordinates(net, o))
        if eq.trivial_kernel:
            notes.append(NOTE_TRIVIAL_KERNEL)
        eq_parts = eq.parts()
        types = {p: classify_type(p, net) for p in eq_parts}

        def tag(p):
            return "P0" if eq.zero_class and p == eq.zero_class else "P"

        if kind == "P":
            domain = o.members
            typed = [(p, types[p], tag(p)) for p in eq_parts]
        else:
            domain = tuple(range(net.r))
            fclasses = []
            for p in eq_parts:
                rev = tuple(sorted(net.reactions[j].reverse_of for j in p
                                   if net.reactions[j].reverse_of is not None))
                fclasses.append((p, rev))
            if kind == "F":
                typed = [(tuple(sorted(p + rev)), types[p], "F") for p, rev in fclasses]
            else:
                notes.append(NOTE_PTILDE_RANGE)
                typed = [(p, types[p], tag(p)) for p, _ in fclasses]
                typed += [(rev, None, "C\\P") for _, rev in fclasses if rev]
        typed.sort(key=lambda t: min(t[0]))

    parts = tuple(Part(tuple(rs), _sub_numbers(net, rs), ty, label) for rs, ty, label in typed)
    whole = _sub_numbers(net, domain)
    d = Decomposition(kind, tuple(domain), parts, whole, False, False, tuple(notes))
    return Decomposition(kind, d.domain, parts, whole,
                         whole.s == d.rank_sum,
                         whole.n - whole.l == d.incidence_sum,
                         d.notes)


@dataclass(frozen=True)
class DeficiencyCheck:
    name: str
    applicable: bool
    holds: bool


@dataclass(frozen=True)
class DecompositionTypeSummary:
    w_I: int
    w_II: int
    w_III: int
    overall: Literal["TypeZero", "TypeOne"]
    delta: int
    checks: tuple[DeficiencyCheck, ...]

    @property
    def all_checks_pass(self) -> bool:
        return all(c.holds for c in self.checks if c.applicable)


def summarize_types(d: Decomposition) -> DecompositionTypeSummary:
    if d.kind not in ("P", "F"):
        raise ValueError("type summary needs a P- or F-decomposition")
    counts = {"I": 0, "II": 0, "III": 0}
    for p in d.parts:
        counts[p.type] += 1
    w2 = counts["II"]
    delta = d.whole.delta
    checks = (
        DeficiencyCheck("independent => delta <= w_II", d.independent, delta <= w2),
        DeficiencyCheck("incidence-independent => delta >= w_II",
                        d.incidence_independent, delta >= w2),
        DeficiencyCheck("bi-independent => delta = w_II", d.bi_independent, delta == w2),
    )
    return DecompositionTypeSummary(counts["I"], w2, counts["III"],
                                    "TypeOne" if w2 >= 1 else "TypeZero", delta, checks)
