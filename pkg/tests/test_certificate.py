import pytest

from irramsey.certificate import (
    Certificate, ParseError, certificate_failure, parse_certificate, stored_certificates, verify_certificate,
)
from irramsey.graph import Graph, cycle_graph, decode_graph, encode_graph
from irramsey.search import Problem, compute_number


@pytest.fixture(scope="module")
def r33():
    return compute_number(Problem("r", 3, 3), 15)


def test_c5_witness_verifies():
    cert = Certificate(Problem("r", 3, 3), "witness", 5, witness=cycle_graph(5))
    assert verify_certificate(parse_certificate(cert.to_text()))


def test_round_trip(r33):
    for cert in (r33.witness, r33.exhaustion):
        text = cert.to_text()
        again = parse_certificate(text)
        assert again.to_text() == text
        assert verify_certificate(again) and verify_certificate(again, fast=True)


def test_file_names(r33):
    assert r33.witness.filename() == "r_3_3_witness_5.irx"
    assert r33.exhaustion.filename() == "r_3_3_exhaustion_6.irx"


def test_tampered_witness_names_triangle():
    g = cycle_graph(5)
    bad = Graph.from_edges(5, g.edges() + [(0, 2)])
    cert = Certificate(Problem("r", 3, 3), "witness", 5, witness=bad)
    assert certificate_failure(parse_certificate(cert.to_text())) == "red K3"


def test_exhaustion_nonzero_terminal(r33):
    text = r33.exhaustion.to_text().replace("count 6 0", "count 6 1")
    why = certificate_failure(parse_certificate(text), fast=True)
    assert "terminal" in why


def test_exhaustion_count_edit(r33):
    text = r33.exhaustion.to_text().replace("count 4 3", "count 4 4")
    assert certificate_failure(parse_certificate(text), fast=True) is None
    assert "order 4" in certificate_failure(parse_certificate(text))


def test_header_edit(r33):
    text = r33.witness.to_text().replace("n=3 claim", "n=2 claim")
    assert certificate_failure(parse_certificate(text)) == "red independent 2-set"
    text = r33.witness.to_text().replace("order=5", "order=6")
    assert "does not match" in certificate_failure(parse_certificate(text))


@pytest.mark.parametrize("text,line", [
    ("", 1),
    ("IRX2 kind=r m=3 n=3 claim=witness order=5\nn=5 668\n", 1),
    ("IRX1 kind=q m=3 n=3 claim=witness order=5\nn=5 668\n", 1),
    ("IRX1 kind=r m=x n=3 claim=witness order=5\nn=5 668\n", 1),
    ("IRX1 kind=r m=3 n=3 claim=proof order=5\nn=5 668\n", 1),
    ("IRX1 kind=r m=3 n=3 claim=witness order=5\nn=5 66\n", 2),
    ("IRX1 kind=r m=3 n=3 claim=witness order=5\n", 2),
    ("IRX1 kind=r m=3 n=3 claim=exhaustion order=2\ncount 1 1\ncnt 2 0\n", 3),
    ("IRX1 kind=r m=3 n=3 claim=exhaustion order=2\ncount 1 one\n", 2),
])
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as e:
        parse_certificate(text)
    assert e.value.line == line


def test_structural_checks():
    p = Problem("r", 3, 3)
    cases = [
        ([(1, 1), (3, 0)], "sequence"),
        ([(1, 1), (2, -1), (3, 0)], "negative"),
        ([(1, 1), (2, 0), (3, 0)], "zero count"),
    ]
    for counts, word in cases:
        cert = Certificate(p, "exhaustion", 3, counts=counts)
        assert word in certificate_failure(cert, fast=True)


def test_stored_witnesses_verify():
    stored = stored_certificates()
    assert set(stored) == {"t_3_7_witness_17.irx", "t_3_8_witness_21.irx", "s_3_8_witness_20.irx"}
    for name, cert in stored.items():
        assert cert.filename() == name
        assert certificate_failure(cert) is None


def test_encoding_is_msb_first():
    # pair (0,1) is the most significant bit
    assert encode_graph(Graph.from_edges(3, [(0, 1)])) == "n=3 8"
    assert decode_graph("n=3 2") == Graph.from_edges(3, [(1, 2)])
