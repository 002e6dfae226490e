"""Power-law kinetic systems and the reactant-multiple transforms.

A transform moves a CF-subset (same reactant, same kinetic-order row) off an
NF-node ``y`` by adding the complex ``c = (T - 1) y`` to both sides of each of
its reactions, so ``y -> y'`` becomes ``T y -> T y + (y' - y)``.  Reaction
vectors and kinetic rows are untouched, so the species formation rate function
is the same for every positive state.

Variants:

* ``generic``: ``T y`` must not be a current reactant complex.
* ``plus``: ``T y`` must not be any current complex.  With
  ``fresh_products=True`` the new product complexes must be new as well.
* ``ri_plus``: keeps reversible pairs reversible.  Subsets without reversible
  reactions are handled as in ``plus``; a subset with reversible reactions is
  always moved, and the reverse of each of its reversible reactions is
  shifted by the same ``c`` (the new reverse reactant must be new too).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .decomp import build_decomposition, default_orientation
from .linalg import RationalMatrix
from .model import Complex, Network, build_network

Variant = Literal["generic", "plus", "ri_plus"]
VARIANTS: tuple[Variant, ...] = ("generic", "plus", "ri_plus")

NOTE_ALL_REVERSIBLE = (
    "NF-node {node}: every CF-subset holds a reversible reaction, so all of them were moved"
)


class TransformError(ValueError):
    pass


@dataclass(frozen=True)
class KineticSystem:
    net: Network
    orders: RationalMatrix
    rate_labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.orders.shape != (self.net.r, self.net.m):
            raise ValueError(
                f"kinetic order matrix must be {self.net.r}x{self.net.m}, got {self.orders.shape}")
        if not self.rate_labels:
            object.__setattr__(self, "rate_labels",
                               tuple(f"k{j + 1}" for j in range(self.net.r)))
        elif len(self.rate_labels) != self.net.r:
            raise ValueError("one rate label per reaction")

    def row(self, j: int) -> tuple[Fraction, ...]:
        return self.orders.row(j)


def mass_action(net: Network) -> KineticSystem:
    """Kinetic orders equal to the reactant coefficients."""
    return KineticSystem(net, RationalMatrix.from_rows(
        (net.reactant(j).vector(net.m) for j in range(net.r)), cols=net.m))


@dataclass(frozen=True)
class NodeClassification:
    kind: Literal["PL-RDK", "PL-NDK"]
    reactant_set: tuple[int, ...]
    cf_subsets: dict[int, tuple[tuple[int, ...], ...]]
    nf_nodes: tuple[int, ...]

    def subset_count(self, node: int) -> int:
        return len(self.cf_subsets[node])


def _group_by_row(reactions, rows) -> list[tuple[int, ...]]:
    groups: dict[tuple, list[int]] = {}
    for j in reactions:
        groups.setdefault(tuple(rows[j]), []).append(j)
    return sorted((tuple(g) for g in groups.values()), key=min)


def classify_plk(ks: KineticSystem) -> NodeClassification:
    net = ks.net
    by_node: dict[int, list[int]] = {}
    for j, rx in enumerate(net.reactions):
        by_node.setdefault(rx.reactant, []).append(j)
    rows = [ks.row(j) for j in range(net.r)]
    subsets = {y: tuple(_group_by_row(js, rows)) for y, js in by_node.items()}
    nf = tuple(y for y in by_node if len(subsets[y]) >= 2)
    return NodeClassification("PL-NDK" if nf else "PL-RDK", tuple(by_node), subsets, nf)


@dataclass(frozen=True)
class TransformStep:
    reaction: int
    id: str
    original_reactant: Complex
    original_product: Complex
    new_reactant: Complex
    new_product: Complex
    multiplier: int
    shift: Complex


@dataclass(frozen=True)
class TransformRecord:
    variant: Variant
    steps: tuple[TransformStep, ...] = ()
    notes: tuple[str, ...] = field(default=())

    @property
    def is_identity(self) -> bool:
        return not self.steps


def _largest(subsets: list[tuple[int, ...]]) -> tuple[int, ...]:
    # most reactions; ties go to the lowest reaction index
    return min(subsets, key=lambda s: (-len(s), min(s)))


def cf_rm(ks: KineticSystem, variant: Variant = "generic", *,
          fresh_products: bool = False) -> tuple[KineticSystem, TransformRecord]:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    net = ks.net
    if classify_plk(ks).kind == "PL-RDK":
        return ks, TransformRecord(variant)

    rows = [ks.row(j) for j in range(net.r)]
    current = [(net.reactant(j), net.product(j)) for j in range(net.r)]
    reverse = [rx.reverse_of for rx in net.reactions]
    steps: dict[int, TransformStep] = {}
    notes: list[str] = []

    def choose(y: Complex, subset: tuple[int, ...]) -> tuple[int, Complex]:
        if y.is_zero:
            raise TransformError(
                "the zero complex is an NF-node; it has no distinct reactant multiples")
        reactants = {u for u, _ in current}
        existing = reactants | {v for _, v in current}
        T = 2
        while True:
            c = y.scaled(T - 1)
            new_y = y + c
            if variant == "generic":
                ok = new_y not in reactants
            else:
                fresh = [new_y]
                if fresh_products:
                    fresh += [current[j][1] + c for j in subset]
                if variant == "ri_plus":
                    fresh += [current[reverse[j]][0] + c for j in subset
                              if reverse[j] is not None]
                ok = not any(x in existing for x in fresh)
            if ok:
                return T, c
            T += 1

    def move(j: int, T: int, c: Complex) -> None:
        u, v = current[j]
        current[j] = (u + c, v + c)
        steps[j] = TransformStep(j, net.reactions[j].id, net.reactant(j), net.product(j),
                                 u + c, v + c, T, c)

    nodes = list(dict.fromkeys(net.reactant(j) for j in range(net.r)))
    for y in nodes:
        at_y = [j for j in range(net.r) if current[j][0] == y and j not in steps]
        subsets = _group_by_row(at_y, rows)
        if len(subsets) < 2:
            continue
        if variant == "ri_plus":
            with_rev = [s for s in subsets if any(reverse[j] is not None for j in s)]
            plain = [s for s in subsets if s not in with_rev]
            if plain:
                keep = _largest(plain)
                to_move = [s for s in plain if s != keep] + with_rev
            else:
                to_move = with_rev
                notes.append(NOTE_ALL_REVERSIBLE.format(node=y.format(net.species)))
        else:
            keep = _largest(subsets)
            to_move = [s for s in subsets if s != keep]
        for subset in to_move:
            T, c = choose(y, subset)
            for j in subset:
                move(j, T, c)
                if variant == "ri_plus" and reverse[j] is not None:
                    move(reverse[j], T, c)

    new_net = build_network(net.species, [(rx.id, *current[j])
                                          for j, rx in enumerate(net.reactions)])
    record = TransformRecord(variant, tuple(steps[j] for j in sorted(steps)), tuple(notes))
    return KineticSystem(new_net, ks.orders, ks.rate_labels), record


def verify_dynamic_equivalence(before: KineticSystem, after: KineticSystem,
                               rec: TransformRecord) -> bool:
    """Same reaction vectors and kinetic rows per reaction, and a record that
    describes the change actually made."""
    b, a = before.net, after.net
    if b.r != a.r or b.species != a.species:
        return False
    for j in range(b.r):
        if b.reaction_vector(j) != a.reaction_vector(j) or before.row(j) != after.row(j):
            return False
    touched = set()
    for st in rec.steps:
        j = st.reaction
        if not 0 <= j < b.r or j in touched:
            return False
        touched.add(j)
        if (b.reactant(j), b.product(j)) != (st.original_reactant, st.original_product):
            return False
        if (a.reactant(j), a.product(j)) != (st.new_reactant, st.new_product):
            return False
        m = b.m
        old = [q - p for p, q in zip(st.original_reactant.vector(m), st.original_product.vector(m))]
        new = [q - p for p, q in zip(st.new_reactant.vector(m), st.new_product.vector(m))]
        if old != new:
            return False
    for j in range(b.r):
        if j not in touched and (b.reactant(j), b.product(j)) != (a.reactant(j), a.product(j)):
            return False
    return True


def reversibility_pattern(net: Network) -> tuple[int | None, ...]:
    return tuple(rx.reverse_of for rx in net.reactions)


@dataclass(frozen=True)
class TransformInvariants:
    orientation_size: tuple[int, int]
    reversibility_preserved: bool
    p_independent: tuple[bool, bool]
    f_independent: tuple[bool, bool]
    p_incidence_independent: tuple[bool, bool]
    f_incidence_independent: tuple[bool, bool]

    @property
    def orientation_sizes_equal(self) -> bool:
        return self.orientation_size[0] == self.orientation_size[1]

    @property
    def independence_agrees(self) -> bool:
        return (self.p_independent[0] == self.p_independent[1]
                and self.f_independent[0] == self.f_independent[1])

    @property
    def incidence_changed(self) -> bool:
        return self.f_incidence_independent[0] != self.f_incidence_independent[1]


def check_transform_invariants(before: KineticSystem, after: KineticSystem) -> TransformInvariants:
    """Recompute orientation sizes and decomposition flags on both systems.

    Incidence-independence is reported for both sides without any claim that
    they agree: a transform can change it.
    """
    flags = []
    for ks in (before, after):
        p = build_decomposition(ks.net, "P")
        f = build_decomposition(ks.net, "F")
        flags.append((len(default_orientation(ks.net)), p, f))
    (o0, p0, f0), (o1, p1, f1) = flags
    return TransformInvariants(
        orientation_size=(o0, o1),
        reversibility_preserved=reversibility_pattern(before.net) == reversibility_pattern(after.net),
        p_independent=(p0.independent, p1.independent),
        f_independent=(f0.independent, f1.independent),
        p_incidence_independent=(p0.incidence_independent, p1.incidence_independent),
        f_incidence_independent=(f0.incidence_independent, f1.incidence_independent),
    )
