"""Reaction network data model: species, complexes, reactions and their matrices."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Iterable, Mapping, Sequence

from .linalg import RationalMatrix, rank


class NetworkError(ValueError):
    """Raised when a network violates the basic structural rules."""


@dataclass(frozen=True)
class Complex:
    """A complex as a sparse map species-index -> positive coefficient.

    Stored as a sorted tuple of ``(species_index, coefficient)`` pairs so that
    equality and hashing are coefficient-map equality.  The empty tuple is the
    zero complex.
    """

    coefficients: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        prev = -1
        for idx, coef in self.coefficients:
            if coef <= 0:
                raise NetworkError(f"non-positive coefficient {coef} for species {idx}")
            if idx <= prev:
                raise NetworkError("complex coefficients must be sorted by species index")
            prev = idx

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, int]) -> Complex:
        return cls(tuple(sorted((i, c) for i, c in mapping.items() if c)))

    @classmethod
    def from_vector(cls, vector: Sequence[int]) -> Complex:
        return cls(tuple((i, int(c)) for i, c in enumerate(vector) if c))

    def as_dict(self) -> dict[int, int]:
        return dict(self.coefficients)

    def vector(self, m: int) -> list[int]:
        v = [0] * m
        for i, c in self.coefficients:
            v[i] = c
        return v

    @property
    def is_zero(self) -> bool:
        return not self.coefficients

    def scaled(self, k: int) -> Complex:
        if k <= 0:
            raise NetworkError("complexes can only be scaled by a positive integer")
        return Complex(tuple((i, c * k) for i, c in self.coefficients))

    def __add__(self, other: Complex) -> Complex:
        out = self.as_dict()
        for i, c in other.coefficients:
            out[i] = out.get(i, 0) + c
        return Complex.from_mapping(out)

    def format(self, species: Sequence[str]) -> str:
        if self.is_zero:
            return "0"
        return " + ".join(
            species[i] if c == 1 else f"{c}{species[i]}" for i, c in self.coefficients
        )


ZERO = Complex()


@dataclass(frozen=True)
class Reaction:
    id: str
    reactant: int
    product: int
    reverse_of: int | None = None


@dataclass(frozen=True)
class Network:
    species: tuple[str, ...]
    complexes: tuple[Complex, ...]
    reactions: tuple[Reaction, ...]

    def __post_init__(self) -> None:
        if len(set(self.species)) != len(self.species):
            raise NetworkError("duplicate species label")
        if len(set(self.complexes)) != len(self.complexes):
            raise NetworkError("duplicate complex")
        m = len(self.species)
        for c in self.complexes:
            if any(i >= m for i, _ in c.coefficients):
                raise NetworkError("complex refers to an unknown species")
        n = len(self.complexes)
        used = set()
        ids = set()
        pairs = set()
        for j, rx in enumerate(self.reactions):
            if rx.id in ids:
                raise NetworkError(f"duplicate reaction id {rx.id!r}")
            ids.add(rx.id)
            if not (0 <= rx.reactant < n and 0 <= rx.product < n):
                raise NetworkError(f"reaction {rx.id!r} refers to an unknown complex")
            if rx.reactant == rx.product:
                raise NetworkError(f"reaction {rx.id!r} is a loop")
            if (rx.reactant, rx.product) in pairs:
                raise NetworkError(f"reaction {rx.id!r} duplicates an earlier reaction")
            pairs.add((rx.reactant, rx.product))
            used.update((rx.reactant, rx.product))
            if rx.reverse_of is not None:
                k = rx.reverse_of
                if not 0 <= k < len(self.reactions) or k == j:
                    raise NetworkError(f"reaction {rx.id!r} has an invalid reverse link")
                other = self.reactions[k]
                if (other.reverse_of != j or other.reactant != rx.product
                        or other.product != rx.reactant):
                    raise NetworkError(f"reaction {rx.id!r} has an inconsistent reverse link")
        if len(used) != n:
            raise NetworkError("every complex must take part in a reaction")

    @property
    def m(self) -> int:
        return len(self.species)

    @property
    def n(self) -> int:
        return len(self.complexes)

    @property
    def r(self) -> int:
        return len(self.reactions)

    def reactant(self, j: int) -> Complex:
        return self.complexes[self.reactions[j].reactant]

    def product(self, j: int) -> Complex:
        return self.complexes[self.reactions[j].product]

    def reaction_vector(self, j: int) -> tuple[int, ...]:
        y = self.reactant(j).vector(self.m)
        yp = self.product(j).vector(self.m)
        return tuple(b - a for a, b in zip(y, yp))

    def is_reversible(self, j: int) -> bool:
        return self.reactions[j].reverse_of is not None

    def reaction_index(self, reaction_id: str) -> int:
        for j, rx in enumerate(self.reactions):
            if rx.id == reaction_id:
                return j
        raise KeyError(reaction_id)

    def format_reaction(self, j: int) -> str:
        rx = self.reactions[j]
        return (f"{rx.id}: {self.reactant(j).format(self.species)} -> "
                f"{self.product(j).format(self.species)}")

    def subnetwork(self, reactions: Iterable[int]) -> Network:
        """The subnetwork generated by a set of reactions.

        Keeps the full species list, the touched complexes (in parent order)
        and the chosen reactions (in parent order).  Reverse links survive
        only when both partners are selected.
        """
        chosen = sorted(set(reactions))
        touched = sorted({c for j in chosen for c in
                          (self.reactions[j].reactant, self.reactions[j].product)})
        cmap = {old: new for new, old in enumerate(touched)}
        rmap = {old: new for new, old in enumerate(chosen)}
        new_reactions = []
        for j in chosen:
            rx = self.reactions[j]
            rev = rmap.get(rx.reverse_of) if rx.reverse_of is not None else None
            new_reactions.append(Reaction(rx.id, cmap[rx.reactant], cmap[rx.product], rev))
        return Network(self.species, tuple(self.complexes[c] for c in touched),
                       tuple(new_reactions))


def build_network(species: Sequence[str],
                  reactions: Sequence[tuple[str, Complex, Complex]]) -> Network:
    """Intern complexes (first appearance order) and pair up mutual reverses.

    Two directed reactions ``y -> y'`` and ``y' -> y`` always form a reversible
    pair; the pairing is by first unmatched occurrence.
    """
    index: dict[Complex, int] = {}
    for _, y, yp in reactions:
        for c in (y, yp):
            if c not in index:
                index[c] = len(index)
    edges = [(index[y], index[yp]) for _, y, yp in reactions]
    reverse: list[int | None] = [None] * len(edges)
    open_edges: dict[tuple[int, int], int] = {}
    for j, (a, b) in enumerate(edges):
        k = open_edges.pop((b, a), None)
        if k is not None:
            reverse[j], reverse[k] = k, j
        else:
            open_edges[(a, b)] = j
    return Network(
        tuple(species),
        tuple(index),
        tuple(Reaction(rid, a, b, reverse[j])
              for j, (rid, (a, b)) in enumerate(zip((r[0] for r in reactions), edges))),
    )


def molecularity_matrix(net: Network) -> RationalMatrix:
    """Y: entry (i, j) is the coefficient of species i in complex j."""
    cols = [c.vector(net.m) for c in net.complexes]
    return RationalMatrix.from_columns(cols, rows=net.m)


def incidence_matrix(net: Network) -> RationalMatrix:
    cols = []
    for rx in net.reactions:
        col = [0] * net.n
        col[rx.reactant] = -1
        col[rx.product] = 1
        cols.append(col)
    return RationalMatrix.from_columns(cols, rows=net.n)


def stoichiometric_matrix(net: Network, reactions: Sequence[int] | None = None) -> RationalMatrix:
    """N = Y I_a, built directly from reaction vectors (optionally a column subset)."""
    js = range(net.r) if reactions is None else reactions
    return RationalMatrix.from_columns([net.reaction_vector(j) for j in js], rows=net.m)


@dataclass(frozen=True)
class StructuralNumbers:
    m: int
    n: int
    r: int
    l: int
    sl: int
    t: int
    s: int
    delta: int
    weakly_reversible: bool

    def as_dict(self) -> dict:
        return asdict(self)


def structural_numbers(net: Network) -> StructuralNumbers:
    from .graphs import ComplexGraph, label_components

    labels = label_components(ComplexGraph.from_network(net))
    s = rank(stoichiometric_matrix(net))
    return StructuralNumbers(
        m=net.m, n=net.n, r=net.r,
        l=labels.l, sl=labels.sl, t=labels.t,
        s=s, delta=net.n - labels.l - s,
        weakly_reversible=labels.sl == labels.l,
    )
