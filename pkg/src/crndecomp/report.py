"""Structured reports and their text rendering.

Each ``*_report`` function returns a JSON-ready dict; ``render_text`` turns any
of them into the human-readable form, so text and JSON never disagree.
"""

from __future__ import annotations

import os

from .decomp import Decomposition, build_decomposition, summarize_types
from .kinetics import KineticSystem, TransformInvariants, TransformRecord, classify_plk
from .model import Network, structural_numbers
from .parser import format_network
from .verdict import Verdict, complex_balanced_preconditions

SCHEMA_VERSION = 1

def _network_dict(net: Network) -> dict:
    return {
        "species": list(net.species),
        "reactions": [
            {
                "id": rx.id,
                "reactant": net.reactant(j).format(net.species),
                "product": net.product(j).format(net.species),
                "reverse": net.reactions[rx.reverse_of].id if rx.reverse_of is not None else None,
            }
            for j, rx in enumerate(net.reactions)
        ],
        "numbers": structural_numbers(net).as_dict(),
    }


def decomposition_dict(net: Network, d: Decomposition) -> dict:
    parts = []
    for i, p in enumerate(d.parts, start=1):
        nb = p.numbers
        parts.append({
            "index": i,
            "label": p.label,
            "reactions": [net.reactions[j].id for j in p.reactions],
            "reaction_text": [net.format_reaction(j) for j in p.reactions],
            "n": nb.n, "l": nb.l, "s": nb.s, "delta": nb.delta,
            "n_minus_l": nb.n - nb.l,
            "weakly_reversible": nb.weakly_reversible,
            "type": p.type,
        })
    out = {
        "kind": d.kind,
        "parts": parts,
        "rank_sum": d.rank_sum,
        "incidence_sum": d.incidence_sum,
        "whole": {"s": d.whole.s, "n_minus_l": d.whole.n - d.whole.l, "delta": d.whole.delta},
        "independent": d.independent,
        "incidence_independent": d.incidence_independent,
        "bi_independent": d.bi_independent,
        "notes": list(d.notes),
    }
    if d.kind in ("P", "F"):
        ts = summarize_types(d)
        out["type_summary"] = {
            "w_I": ts.w_I, "w_II": ts.w_II, "w_III": ts.w_III, "overall": ts.overall,
            "checks": [{"name": c.name, "applicable": c.applicable, "holds": c.holds}
                       for c in ts.checks],
        }
    return out


def analyze_report(net: Network, source: str = "") -> dict:
    d = build_decomposition(net, "F")
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "analyze",
        "source": source,
        "network": _network_dict(net),
        "decomposition": decomposition_dict(net, d),
        "complex_balanced_preconditions": complex_balanced_preconditions(d),
    }


def decompose_report(net: Network, kind: str, source: str = "") -> dict:
    d = build_decomposition(net, kind)
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "decompose",
        "source": source,
        "network": _network_dict(net),
        "decomposition": decomposition_dict(net, d),
    }


def verdict_report(net: Network, v: Verdict, source: str = "") -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "verdict",
        "source": source,
        "network": _network_dict(net),
        "decomposition": decomposition_dict(net, v.decomposition),
        "verdict": {
            "conclusion": v.conclusion.value,
            "phrase": v.conclusion.phrase,
            "kinetics": v.kinetics,
            "justification": [
                {"theorem": s.theorem, "subnetwork": s.subnetwork,
                 "statement": s.statement, "extension": s.extension}
                for s in v.justification
            ],
            "notes": list(v.notes),
        },
    }


def transform_report(before: KineticSystem, after: KineticSystem, rec: TransformRecord,
                     inv: TransformInvariants, equivalent: bool, source: str = "") -> dict:
    sp = before.net.species
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "transform",
        "source": source,
        "variant": rec.variant,
        "kinetics_before": classify_plk(before).kind,
        "kinetics_after": classify_plk(after).kind,
        "steps": [
            {
                "reaction": st.id,
                "before": f"{st.original_reactant.format(sp)} -> {st.original_product.format(sp)}",
                "after": f"{st.new_reactant.format(sp)} -> {st.new_product.format(sp)}",
                "multiplier": st.multiplier,
                "shift": st.shift.format(sp),
            }
            for st in rec.steps
        ],
        "notes": list(rec.notes),
        "dynamically_equivalent": equivalent,
        "invariants": {
            "orientation_size": list(inv.orientation_size),
            "orientation_sizes_equal": inv.orientation_sizes_equal,
            "reversibility_preserved": inv.reversibility_preserved,
            "p_independent": list(inv.p_independent),
            "f_independent": list(inv.f_independent),
            "independence_agrees": inv.independence_agrees,
            "p_incidence_independent": list(inv.p_incidence_independent),
            "f_incidence_independent": list(inv.f_incidence_independent),
            "incidence_independence_changed": inv.incidence_changed,
        },
        "network": format_network(after.net, after.orders),
        "orders": [[str(x) for x in after.row(j)] for j in range(after.net.r)],
    }


# --- text -------------------------------------------------------------------

def _color_enabled() -> bool:
    return os.environ.get("CRN_COLOR", "0") == "1"


def _paint(text: str, good: bool) -> str:
    if not _color_enabled():
        return text
    return f"\033[{32 if good else 31}m{text}\033[0m"


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _network_lines(net: dict) -> list[str]:
    nb = net["numbers"]
    return [
        f"NETWORK: m={nb['m']} n={nb['n']} r={nb['r']} l={nb['l']} sl={nb['sl']} "
        f"t={nb['t']} s={nb['s']} deficiency={nb['delta']} "
        f"weakly_reversible={_yes(nb['weakly_reversible'])}",
    ]


def _conclusion_lines(d: dict) -> list[str]:
    kind = d["kind"]
    out = []
    for i, (key, word) in enumerate((("independent", "INDEPENDENT"),
                                     ("incidence_independent", "INCIDENCE-INDEPENDENT"),
                                     ("bi_independent", "BI-INDEPENDENT")), start=1):
        ok = d[key]
        line = f"CONCLUSION {i}: The {kind}-decomposition is {'' if ok else 'NOT '}{word}."
        out.append(_paint(line, ok))
    return out


def _decomposition_lines(d: dict) -> list[str]:
    lines = []
    for p in d["parts"]:
        lines.append(f"SUBNETWORK {p['index']}:")
        lines.extend(p["reaction_text"])
    lines.append("Summary of the values of s (2ND COL) and n-l (3RD COL) of SUBNETWORK i:")
    for p in d["parts"]:
        lines.append(f"{p['index']:>4} {p['s']:>4} {p['n_minus_l']:>4}")
    lines.append(f"The SUM of the RANKS of the SUBNETWORKS is: {d['rank_sum']}")
    lines.append(f"The SUM of the values of (n-l) of the SUBNETWORKS is: {d['incidence_sum']}")
    lines.append(f"The rank of the WHOLE NETWORK is: {d['whole']['s']}")
    lines.append(f"The value of (n-l) for the WHOLE NETWORK is: {d['whole']['n_minus_l']}")
    lines.append("Subnetwork details (n, l, s, deficiency, weakly reversible, type):")
    for p in d["parts"]:
        lines.append(f"{p['index']:>4}  n={p['n']} l={p['l']} s={p['s']} delta={p['delta']} "
                     f"wr={_yes(p['weakly_reversible'])} type={p['type'] or '-'}")
    if "type_summary" in d:
        ts = d["type_summary"]
        lines.append(f"TYPES: w_I={ts['w_I']} w_II={ts['w_II']} w_III={ts['w_III']} "
                     f"overall={ts['overall']}")
        for c in ts["checks"]:
            status = "n/a" if not c["applicable"] else ("holds" if c["holds"] else "FAILS")
            lines.append(f"  check {c['name']}: {status}")
    for note in d["notes"]:
        lines.append(f"NOTE: {note}")
    if d["kind"] == "F":
        lines.append("NOTE: The subnetworks given above correspond to the fundamental classes "
                     "under the F-decomposition.")
    lines.extend(_conclusion_lines(d))
    return lines


def _transform_lines(rep: dict) -> list[str]:
    inv = rep["invariants"]
    lines = [f"TRANSFORM {rep['variant']}: {rep['kinetics_before']} -> {rep['kinetics_after']}"]
    if not rep["steps"]:
        lines.append("no reaction changed")
    for st in rep["steps"]:
        lines.append(f"  {st['reaction']}: {st['before']}  =>  {st['after']}  "
                     f"(T={st['multiplier']}, shift {st['shift']})")
    for note in rep["notes"]:
        lines.append(f"NOTE: {note}")
    lines += [
        f"dynamically equivalent: {_yes(rep['dynamically_equivalent'])}",
        f"|O| before/after: {inv['orientation_size'][0]}/{inv['orientation_size'][1]}",
        f"reversibility preserved: {_yes(inv['reversibility_preserved'])}",
        "P-decomposition independent before/after: "
        f"{_yes(inv['p_independent'][0])}/{_yes(inv['p_independent'][1])}",
        "F-decomposition independent before/after: "
        f"{_yes(inv['f_independent'][0])}/{_yes(inv['f_independent'][1])}",
        "P-decomposition incidence-independent before/after: "
        f"{_yes(inv['p_incidence_independent'][0])}/{_yes(inv['p_incidence_independent'][1])}",
        "F-decomposition incidence-independent before/after: "
        f"{_yes(inv['f_incidence_independent'][0])}/{_yes(inv['f_incidence_independent'][1])}",
    ]
    if inv["incidence_independence_changed"]:
        lines.append("NOTE: incidence-independence of the F-decomposition changed under the transform")
    return lines


def _verdict_lines(rep: dict) -> list[str]:
    v = rep["verdict"]
    kin = "mass action kinetics" if v["kinetics"] == "mass_action" else "arbitrary kinetics"
    lines = [_paint(f"VERDICT: {v['phrase']} ({kin})", v["conclusion"] != "Inconclusive"),
             "JUSTIFICATION:"]
    for i, s in enumerate(v["justification"], start=1):
        where = f" on SUBNETWORK {s['subnetwork']}" if s["subnetwork"] is not None else ""
        ext = " [extension]" if s["extension"] else ""
        lines.append(f"  {i}. {s['theorem']}{where}: {s['statement']}{ext}")
    for note in v["notes"]:
        lines.append(f"NOTE: {note}")
    return lines


def render_text(rep: dict) -> str:
    cmd = rep["command"]
    if cmd == "transform":
        return "\n".join(_transform_lines(rep)) + "\n"
    lines = _network_lines(rep["network"])
    lines += _decomposition_lines(rep["decomposition"])
    if cmd == "analyze" and rep.get("complex_balanced_preconditions"):
        lines.append("NOTE: incidence-independent with weakly reversible subnetworks; "
                     "complex-balanced equilibria decompose accordingly.")
    if cmd == "verdict":
        lines += _verdict_lines(rep)
    return "\n".join(lines) + "\n"
