"""Structural multistationarity verdicts from the fundamental decomposition.

Pipeline: (1) the F-decomposition must be independent; (2) each subnetwork has
deficiency 0 or 1, so the Deficiency Zero / Deficiency One Theorems apply
per subnetwork; (3) the Feinberg Decomposition Theorem carries the per-
subnetwork conclusions to the whole network.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Literal

from .decomp import Decomposition, build_decomposition, summarize_types
from .graphs import ComplexGraph, linkage_classes
from .linalg import rank
from .model import Network, stoichiometric_matrix, structural_numbers

KineticsClass = Literal["arbitrary", "mass_action"]

DZT_I = "Deficiency Zero Theorem (i)"
DZT_III = "Deficiency Zero Theorem (iii)"
D1T = "Deficiency One Theorem"
FDT = "Feinberg Decomposition Theorem"
STEP1 = "F-decomposition independence"


class Conclusion(str, Enum):
    NO_POSITIVE_EQUILIBRIUM = "NoPositiveEquilibrium"
    NO_CAPACITY = "NoCapacityForMultistationarity"
    INCONCLUSIVE = "Inconclusive"

    @property
    def phrase(self) -> str:
        return {
            "NoPositiveEquilibrium": "no positive equilibrium",
            "NoCapacityForMultistationarity": "no capacity for multistationarity",
            "Inconclusive": "inconclusive",
        }[self.value]


@dataclass(frozen=True)
class Step:
    theorem: str
    subnetwork: int | None  # 1-based part number, None for whole-network steps
    statement: str
    extension: bool = False


@dataclass(frozen=True)
class Verdict:
    conclusion: Conclusion
    justification: tuple[Step, ...]
    kinetics: KineticsClass
    decomposition: Decomposition
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class DeficiencyOneReport:
    linkage_deficiencies: tuple[int, ...]
    delta: int
    weakly_reversible: bool

    @property
    def each_at_most_one(self) -> bool:
        return all(d <= 1 for d in self.linkage_deficiencies)

    @property
    def sums_to_delta(self) -> bool:
        return sum(self.linkage_deficiencies) == self.delta

    @property
    def holds(self) -> bool:
        return self.each_at_most_one and self.sums_to_delta and self.weakly_reversible


def check_deficiency_one_hypotheses(sub: Network) -> DeficiencyOneReport:
    numbers = structural_numbers(sub)
    labels = linkage_classes(ComplexGraph.from_network(sub)).linkage
    deficiencies = []
    for cls in sorted(set(labels)):
        js = [j for j, rx in enumerate(sub.reactions) if labels[rx.reactant] == cls]
        n_theta = sum(1 for v in labels if v == cls)
        deficiencies.append(n_theta - 1 - rank(stoichiometric_matrix(sub, js)))
    return DeficiencyOneReport(tuple(deficiencies), numbers.delta, numbers.weakly_reversible)


def analyze_multistationarity(net: Network,
                              kinetics_class: KineticsClass = "mass_action") -> Verdict:
    if kinetics_class not in ("arbitrary", "mass_action"):
        raise ValueError(f"unknown kinetics class {kinetics_class!r}")
    fd = build_decomposition(net, "F")
    steps = [Step(STEP1, None,
                  f"rank {fd.whole.s} {'=' if fd.independent else '!='} "
                  f"sum of subnetwork ranks {fd.rank_sum}: "
                  f"{'independent' if fd.independent else 'not independent'}")]

    def done(conclusion: Conclusion, *notes: str) -> Verdict:
        return Verdict(conclusion, tuple(steps), kinetics_class, fd, notes)

    if not fd.independent:
        return done(Conclusion.INCONCLUSIVE)
    summary = summarize_types(fd)
    parts = list(enumerate(fd.parts, start=1))

    if summary.overall == "TypeZero":
        broken = [(i, p) for i, p in parts if not p.numbers.weakly_reversible]
        if broken:
            for i, _ in broken:
                steps.append(Step(DZT_I, i, "deficiency 0 and not weakly reversible: "
                                            "no positive equilibrium for arbitrary kinetics"))
            steps.append(Step(FDT, None, "independent decomposition: the network's positive "
                                         "equilibria are the common ones of the subnetworks, "
                                         "so there are none"))
            return done(Conclusion.NO_POSITIVE_EQUILIBRIUM)
        if kinetics_class != "mass_action":
            return done(Conclusion.INCONCLUSIVE,
                        "every subnetwork is weakly reversible of deficiency 0; the uniqueness "
                        "statement needs mass action kinetics")
        for i, _ in parts:
            steps.append(Step(DZT_III, i, "deficiency 0 and weakly reversible: precisely one "
                                          "equilibrium in each positive stoichiometric "
                                          "compatibility class"))
        steps.append(Step(FDT, None, "independent decomposition: the network cannot admit "
                                     "multiple equilibria"))
        return done(Conclusion.NO_CAPACITY)

    if kinetics_class != "mass_action":
        return done(Conclusion.INCONCLUSIVE,
                    "Type One decomposition: the Deficiency One Theorem needs mass action kinetics")
    failed = []
    for i, p in parts:
        if p.numbers.delta == 0:
            if p.numbers.weakly_reversible:
                steps.append(Step(DZT_III, i, "deficiency 0 and weakly reversible: precisely one "
                                              "equilibrium in each positive stoichiometric "
                                              "compatibility class"))
            else:
                failed.append(f"subnetwork {i}: deficiency 0 but not weakly reversible")
            continue
        hyp = check_deficiency_one_hypotheses(net.subnetwork(p.reactions))
        if hyp.holds:
            steps.append(Step(D1T, i, f"linkage-class deficiencies {list(hyp.linkage_deficiencies)} "
                                      f"sum to {hyp.delta}, weakly reversible: precisely one "
                                      "equilibrium in each positive stoichiometric "
                                      "compatibility class"))
        else:
            failed.append(f"subnetwork {i}: Deficiency One Theorem hypotheses fail")
    if failed:
        return done(Conclusion.INCONCLUSIVE, *failed)
    steps.append(Step(FDT, None, "independent decomposition: the network cannot admit multiple "
                                 "equilibria (composition with the Deficiency One Theorem)",
                      extension=True))
    return done(Conclusion.NO_CAPACITY)


def complex_balanced_preconditions(d: Decomposition) -> bool:
    """Incidence-independent with every subnetwork weakly reversible."""
    return d.incidence_independent and all(p.numbers.weakly_reversible for p in d.parts)
