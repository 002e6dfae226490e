"""Networks used throughout the tests, scripts and docs, as ``.crn`` text."""

from __future__ import annotations

from typing import Sequence

CYCLES_M1_M5 = """\
# two monomolecular 3-cycles sharing M2
R1: M1 -> M2
R2: M2 -> M3
R3: M3 -> M1
R4: M2 -> M4
R5: M4 -> M5
R6: M5 -> M2
"""

# R3 and R4 share reactants with R1 and R2 but have different kinetic rows
BRANCHING_ABC = """\
species: A, B, C
R1: A -> B
R2: B -> C
R3: A -> 0
R4: B -> 0
R5: C -> 0
kinetics:
R1: 1 0 0
R2: 0 1 0
R3: 0.5 0 0
R4: 0 0.5 0
R5: 0 0 1
"""

SINGLE_SPECIES_NDK = """\
species: A1
R1: 0 -> A1
R2: A1 -> 0
R3: A1 -> 2A1
R4: 2A1 -> 0
kinetics:
R1: 0
R2: 0.5
R3: 1
R4: 0.5
"""


def phosphorylation(k: int) -> str:
    """k-site distributive phosphorylation/dephosphorylation."""
    if k < 1:
        raise ValueError("k must be at least 1")
    lines = [f"# {k}-site distributive phosphorylation"]
    for i in range(k):
        lines += [
            f"K{i}a: S{i} + K <-> S{i}K",
            f"K{i}b: S{i}K -> S{i + 1} + K",
            f"F{i}a: S{i + 1} + F <-> S{i + 1}F",
            f"F{i}b: S{i + 1}F -> S{i} + F",
        ]
    return "\n".join(lines) + "\n"


def chain_of_cycles(lengths: Sequence[int], broken: Sequence[int] = ()) -> str:
    """Monomolecular directed cycles in a chain.

    Consecutive cycles share exactly one species unless the link index is in
    ``broken`` (link ``i`` joins cycle ``i`` and ``i + 1``), in which case they
    share none.
    """
    if any(L < 3 for L in lengths):
        raise ValueError("cycles must have length at least 3")
    lines = [f"# chain of cycles {list(lengths)}"]
    counter = 0

    def fresh() -> str:
        nonlocal counter
        counter += 1
        return f"X{counter}"

    link = None
    rid = 0
    for c, L in enumerate(lengths):
        first = link if link is not None else fresh()
        nodes = [first] + [fresh() for _ in range(L - 1)]
        for a, b in zip(nodes, nodes[1:] + nodes[:1]):
            rid += 1
            lines.append(f"R{rid}: {a} -> {b}")
        link = None if c in broken else nodes[L // 2]
    return "\n".join(lines) + "\n"
