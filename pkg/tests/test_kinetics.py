from fractions import Fraction
import random

import pytest

from crndecomp import catalog
from crndecomp.decomp import build_decomposition
from crndecomp.generate import RandomNetworkConfig, random_plndk
from crndecomp.kinetics import (NOTE_ALL_REVERSIBLE, KineticSystem, TransformError,
                                TransformRecord, TransformStep, cf_rm,
                                check_transform_invariants, classify_plk, mass_action,
                                reversibility_pattern, verify_dynamic_equivalence)
from crndecomp.linalg import RationalMatrix
from crndecomp.parser import format_network, parse_kinetic_system, parse_network


def reactions_text(ks):
    net = ks.net
    return [net.format_reaction(j) for j in range(net.r)]


def test_classify_abc(abc_kinetic):
    cls = classify_plk(abc_kinetic)
    net = abc_kinetic.net
    assert cls.kind == "PL-NDK"
    assert [net.complexes[y].format(net.species) for y in cls.nf_nodes] == ["A", "B"]
    assert cls.subset_count(cls.nf_nodes[0]) == 2


def test_classify_single_species(single_species_kinetic):
    assert classify_plk(single_species_kinetic).kind == "PL-NDK"


def test_mass_action_is_rdk(cycles, abc):
    for net in (cycles, abc, parse_network(catalog.phosphorylation(2))):
        assert classify_plk(mass_action(net)).kind == "PL-RDK"


def test_cf_subsets_cover_node(abc_kinetic):
    cls = classify_plk(abc_kinetic)
    for y, subsets in cls.cf_subsets.items():
        flat = sorted(j for s in subsets for j in s)
        assert flat == [j for j, rx in enumerate(abc_kinetic.net.reactions) if rx.reactant == y]


def test_kinetic_shape_checked(abc):
    with pytest.raises(ValueError):
        KineticSystem(abc, RationalMatrix.zeros(5, 2))


@pytest.mark.parametrize("variant", ["generic", "plus", "ri_plus"])
def test_abc_transform(abc_kinetic, variant):
    after, rec = cf_rm(abc_kinetic, variant)
    assert reactions_text(after) == ["R1: A -> B", "R2: B -> C", "R3: 2A -> A",
                                     "R4: 2B -> B", "R5: C -> 0"]
    assert [s.multiplier for s in rec.steps] == [2, 2]
    assert classify_plk(after).kind == "PL-RDK"
    assert verify_dynamic_equivalence(abc_kinetic, after, rec)


def test_abc_fresh_products_moves_further(abc_kinetic):
    after, rec = cf_rm(abc_kinetic, "plus", fresh_products=True)
    # 2A -> A has an old product, so the multiplier climbs until both sides are new
    assert reactions_text(after)[2:4] == ["R3: 3A -> 2A", "R4: 3B -> 2B"]
    assert verify_dynamic_equivalence(abc_kinetic, after, rec)


def test_abc_invariants(abc_kinetic):
    after, _ = cf_rm(abc_kinetic, "plus")
    inv = check_transform_invariants(abc_kinetic, after)
    assert inv.orientation_sizes_equal and inv.independence_agrees
    assert inv.f_incidence_independent == (False, True)
    assert inv.incidence_changed


def test_single_species_generic(single_species_kinetic):
    after, rec = cf_rm(single_species_kinetic, "generic")
    # 2A1 is already a reactant, so the smallest allowed multiple is 3A1
    assert reactions_text(after)[2] == "R3: 3A1 -> 4A1"
    assert [s.id for s in rec.steps] == ["R3"]
    assert classify_plk(after).kind == "PL-RDK"


def test_single_species_ri_plus_keeps_pairs(single_species_kinetic):
    before = single_species_kinetic
    after, rec = cf_rm(before, "ri_plus")
    assert classify_plk(after).kind == "PL-RDK"
    assert reversibility_pattern(after.net) == reversibility_pattern(before.net)
    inv = check_transform_invariants(before, after)
    assert inv.reversibility_preserved and inv.orientation_sizes_equal
    assert inv.f_independent[0] == inv.f_independent[1]
    assert verify_dynamic_equivalence(before, after, rec)


def test_rdk_identity(cycles):
    ks = mass_action(cycles)
    after, rec = cf_rm(ks, "plus")
    assert after is ks and rec.is_identity
    assert verify_dynamic_equivalence(ks, after, rec)
    inv = check_transform_invariants(ks, after)
    assert inv.independence_agrees and not inv.incidence_changed


def test_zero_nf_node_raises():
    ks = parse_kinetic_system("R1: 0 -> A\nR2: 0 -> B\nkinetics:\n0 0\n1 0")
    with pytest.raises(TransformError):
        cf_rm(ks, "generic")


def test_all_reversible_node_note():
    ks = parse_kinetic_system("R1: A <-> B\nR2: A <-> C\nkinetics:\n1 0 0\n0 1 0\n2 0 0\n0 0 1")
    after, rec = cf_rm(ks, "ri_plus")
    assert any("every CF-subset" in n for n in rec.notes)
    assert classify_plk(after).kind == "PL-RDK"
    assert reversibility_pattern(after.net) == reversibility_pattern(ks.net)


def test_corrupted_record_fails(abc_kinetic):
    after, rec = cf_rm(abc_kinetic, "plus")
    st = rec.steps[0]
    bad = TransformStep(st.reaction, st.id, st.original_reactant, st.original_product,
                        st.new_reactant, st.new_product + st.shift, st.multiplier, st.shift)
    assert not verify_dynamic_equivalence(abc_kinetic, after,
                                          TransformRecord(rec.variant, (bad,) + rec.steps[1:]))
    assert not verify_dynamic_equivalence(abc_kinetic, after, TransformRecord(rec.variant))


def test_unknown_variant(abc_kinetic):
    with pytest.raises(ValueError):
        cf_rm(abc_kinetic, "minus")


def test_transformed_file_round_trips(abc_kinetic):
    after, _ = cf_rm(abc_kinetic, "plus")
    assert parse_kinetic_system(format_network(after.net, after.orders)) == after


def test_random_irreversible_independence_agrees():
    rng = random.Random(7)
    cfg = RandomNetworkConfig(reversible_probability=0.0)
    seen = 0
    while seen < 60:
        ks = random_plndk(rng, cfg)
        # reuse can still draw both directions of a pair
        if any(rx.reverse_of is not None for rx in ks.net.reactions):
            continue
        seen += 1
        for variant in ("generic", "plus", "ri_plus"):
            after, rec = cf_rm(ks, variant)
            inv = check_transform_invariants(ks, after)
            assert classify_plk(after).kind == "PL-RDK"
            assert verify_dynamic_equivalence(ks, after, rec)
            assert inv.independence_agrees
            if variant == "ri_plus":
                assert inv.reversibility_preserved and inv.orientation_sizes_equal
