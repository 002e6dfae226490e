"""Run every worked example network and print its decomposition and verdict."""

from __future__ import annotations

import argparse

from crndecomp import catalog
from crndecomp.decomp import build_decomposition, summarize_types
from crndecomp.kinetics import cf_rm, check_transform_invariants
from crndecomp.parser import parse_kinetic_system, parse_network
from crndecomp.verdict import analyze_multistationarity


def show_network(name: str, text: str) -> None:
    net = parse_network(text)
    d = build_decomposition(net, "F")
    ts = summarize_types(d)
    v = analyze_multistationarity(net, "mass_action")
    print(f"== {name}")
    for i, p in enumerate(d.parts, start=1):
        print(f"  part {i}: {[net.reactions[j].id for j in p.reactions]} type {p.type} "
              f"delta {p.numbers.delta}")
    print(f"  independent={d.independent} incidence-independent={d.incidence_independent} "
          f"w_II={ts.w_II} delta={d.whole.delta} {ts.overall}")
    print(f"  verdict (mass action): {v.conclusion.phrase}")


def show_transform(name: str, text: str) -> None:
    ks = parse_kinetic_system(text)
    print(f"== {name}")
    for variant in ("generic", "plus", "ri_plus"):
        after, rec = cf_rm(ks, variant)
        inv = check_transform_invariants(ks, after)
        moved = ", ".join(f"{s.id}: {after.net.format_reaction(s.reaction).split(': ')[1]}"
                          for s in rec.steps)
        print(f"  {variant}: {moved}; |O| {inv.orientation_size}, "
              f"F incidence-independent {inv.f_incidence_independent}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=4, help="largest phosphorylation site count")
    args = ap.parse_args()
    show_network("two 3-cycles M1-M5", catalog.CYCLES_M1_M5)
    show_network("A/B/C branching", catalog.BRANCHING_ABC)
    for k in range(1, args.max_k + 1):
        show_network(f"phosphorylation k={k}", catalog.phosphorylation(k))
    for lengths in ([3, 4], [4, 5, 6], [5, 6, 7, 8]):
        show_network(f"chain of cycles {lengths}", catalog.chain_of_cycles(lengths))
    show_transform("A/B/C branching (PL-NDK)", catalog.BRANCHING_ABC)
    show_transform("single species (PL-NDK)", catalog.SINGLE_SPECIES_NDK)


if __name__ == "__main__":
    main()
