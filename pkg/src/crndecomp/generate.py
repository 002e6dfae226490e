"""Random networks and power-law systems for property sweeps."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .kinetics import KineticSystem, classify_plk
from .linalg import RationalMatrix
from .model import Complex, Network, build_network


@dataclass(frozen=True)
class RandomNetworkConfig:
    max_species: int = 6
    max_reactions: int = 8  # directed reactions
    max_coefficient: int = 3
    max_species_per_complex: int = 2
    reversible_probability: float = 0.3
    zero_complex_probability: float = 0.1
    reuse_probability: float = 0.5


def _random_complex(rng: random.Random, m: int, cfg: RandomNetworkConfig) -> Complex:
    if rng.random() < cfg.zero_complex_probability:
        return Complex()
    k = rng.randint(1, min(m, cfg.max_species_per_complex))
    picked = rng.sample(range(m), k)
    return Complex.from_mapping({i: rng.randint(1, cfg.max_coefficient) for i in picked})


def random_network(rng: random.Random, cfg: RandomNetworkConfig = RandomNetworkConfig()) -> Network:
    """Draw a network; complexes are reused often so graphs have cycles."""
    m = rng.randint(1, cfg.max_species)
    target = rng.randint(1, cfg.max_reactions)
    pool: list[Complex] = []
    edges: list[tuple[Complex, Complex]] = []
    seen: set[tuple[Complex, Complex]] = set()
    attempts = 0
    while len(edges) < target and attempts < 200:
        attempts += 1

        def pick() -> Complex:
            if pool and rng.random() < cfg.reuse_probability:
                return rng.choice(pool)
            return _random_complex(rng, m, cfg)

        y, yp = pick(), pick()
        if y == yp or (y, yp) in seen:
            continue
        pair = [(y, yp)]
        if rng.random() < cfg.reversible_probability and len(edges) + 2 <= target:
            if (yp, y) not in seen:
                pair.append((yp, y))
        for e in pair:
            seen.add(e)
            edges.append(e)
            pool.extend(c for c in e if c not in pool)
    used = sorted({i for e in edges for c in e for i, _ in c.coefficients})
    remap = {old: new for new, old in enumerate(used)}
    species = [f"X{i + 1}" for i in range(len(used))]

    def relabel(c: Complex) -> Complex:
        return Complex.from_mapping({remap[i]: v for i, v in c.coefficients})

    return build_network(species, [(f"R{j + 1}", relabel(a), relabel(b))
                                   for j, (a, b) in enumerate(edges)])


_ORDERS = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3, 2))


def random_plndk(rng: random.Random, cfg: RandomNetworkConfig = RandomNetworkConfig(),
                 max_tries: int = 1000) -> KineticSystem:
    """A random PL-NDK system with no NF-node at the zero complex."""
    for _ in range(max_tries):
        net = random_network(rng, cfg)
        if net.m == 0:
            continue
        rows = []
        for j in range(net.r):
            base = net.reactant(j).vector(net.m)
            if rng.random() < 0.5:
                rows.append([Fraction(b) for b in base])
            else:
                rows.append([rng.choice(_ORDERS) for _ in range(net.m)])
        ks = KineticSystem(net, RationalMatrix.from_rows(rows, cols=net.m))
        cls = classify_plk(ks)
        if cls.kind == "PL-NDK" and all(not net.complexes[y].is_zero for y in cls.nf_nodes):
            return ks
    raise RuntimeError("could not draw a PL-NDK system")
