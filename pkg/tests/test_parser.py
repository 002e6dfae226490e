from fractions import Fraction

import pytest
from hypothesis import given, settings

from crndecomp import catalog
from crndecomp.model import Complex, incidence_matrix, molecularity_matrix
from crndecomp.parser import ParseError, format_network, parse_kinetic_system, parse_network

from conftest import networks


def test_single_statement():
    net = parse_network("R1: M1 -> M2")
    assert net.species == ("M1", "M2")
    assert net.r == 1 and net.n == 2


def test_reversible_statement():
    net = parse_network("R1: S0 + K <-> S0K")
    assert net.m == 3 and net.n == 2 and net.r == 2
    assert net.reactions[0].reverse_of == 1 and net.reactions[1].reverse_of == 0
    assert [r.id for r in net.reactions] == ["R1", "R1_rev"]


def test_zero_complex():
    net = parse_network("R3: A -> 0")
    assert net.product(0) == Complex()
    assert net.product(0).as_dict() == {}


def test_coefficient_forms():
    a = parse_network("R1: 2A + B -> 3 C")
    b = parse_network("R1: 2 A + 1B -> 3C")
    assert a == b
    assert a.reactant(0).as_dict() == {0: 2, 1: 1}


def test_reversible_equals_explicit_pair():
    a = parse_network("R1: A <-> B\nR2: B -> C")
    b = parse_network("R1: A -> B\nR1_rev: B -> A\nR2: B -> C")
    assert a == b


def test_comments_crlf_and_blank_lines():
    text = "# header\r\n\r\nR1: A -> B  # trailing\r\nR2: B -> A\r\n"
    net = parse_network(text)
    assert net.r == 2 and net.reactions[0].reverse_of == 1


def test_auto_ids():
    net = parse_network("A -> B\nB -> C")
    assert [r.id for r in net.reactions] == ["R1", "R2"]


@pytest.mark.parametrize("text, needle", [
    ("", "no reactions"),
    ("R1: A -> B\nR1: B -> C", "duplicate reaction id"),
    ("R1: A + B -> B + A", "loop"),
    ("R1: A -> 2", "malformed term"),
    ("R1: A -> ", "empty side"),
    ("R1: A -> B\nR2: A -> B", "repeats"),
    ("species: A, B\nR1: A -> C", "unknown species"),
    ("R1: A = B", "cannot read"),
])
def test_parse_errors(text, needle):
    with pytest.raises(ParseError, match=needle):
        parse_network(text)


def test_parse_error_has_line_number():
    with pytest.raises(ParseError) as exc:
        parse_network("R1: A -> B\n\nR2: A -> ?")
    assert exc.value.line == 3


def test_species_header_orders_species():
    net = parse_network("species: C, B, A\nR1: A -> B")
    assert net.species == ("C", "B", "A")
    assert molecularity_matrix(net).column(0) == (0, 0, 1)


def test_kinetic_rows_exact(abc_kinetic):
    assert abc_kinetic.row(2) == (Fraction(1, 2), 0, 0)
    assert abc_kinetic.orders.shape == (5, 3)


def test_mass_action_directive():
    ks = parse_kinetic_system("R1: 2A + B -> C\nR2: C -> 0\nkinetics: mass-action")
    assert ks.orders.to_rows() == [[2, 1, 0], [0, 0, 1]]


def test_kinetics_row_count_and_width():
    with pytest.raises(ParseError, match="rows"):
        parse_kinetic_system("R1: A -> B\nkinetics:\n1 0\n0 1")
    with pytest.raises(ParseError, match="entries"):
        parse_kinetic_system("R1: A -> B\nkinetics:\n1")
    with pytest.raises(ParseError, match="unparsable"):
        parse_kinetic_system("R1: A -> B\nkinetics:\n1 x")
    with pytest.raises(ParseError, match="labelled"):
        parse_kinetic_system("R1: A -> B\nkinetics:\nR9: 1 0")


def test_reversible_needs_two_rows():
    ks = parse_kinetic_system("R1: A <-> B\nkinetics:\n1 0\n0 1")
    assert ks.row(1) == (0, 1)


def test_missing_kinetics_block():
    text = catalog.CYCLES_M1_M5
    assert parse_network(text).r == 6
    with pytest.raises(ParseError, match="no kinetics"):
        parse_kinetic_system(text)


def test_round_trip_catalog_files(abc_kinetic):
    for text in (catalog.CYCLES_M1_M5, catalog.phosphorylation(3), catalog.chain_of_cycles([3, 5])):
        net = parse_network(text)
        assert parse_network(format_network(net)) == net
    again = parse_kinetic_system(format_network(abc_kinetic.net, abc_kinetic.orders))
    assert again == abc_kinetic


@settings(max_examples=200)
@given(networks())
def test_round_trip_random(net):
    text = format_network(net)
    back = parse_network(text)
    assert back == net
    assert format_network(back) == text
    assert incidence_matrix(back) == incidence_matrix(net)
