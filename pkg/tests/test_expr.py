import random

import pytest

from hopfweave.expr import (
    Atom,
    DimensionError,
    KnotPlumb,
    ParseError,
    Plumb,
    Stab,
    elaborate,
    parse_expr,
    render_expr,
)
from hopfweave.laurent import LaurentPolynomial
from hopfweave.plumbing import BandSign, KnotMove, invariants, unknot
from conftest import random_expr


class TestParse:
    def test_atoms(self):
        for name in ("U", "H+", "H-", "T+", "E"):
            assert parse_expr(name) == Atom(name)

    def test_trefoil_expression(self):
        expr = parse_expr("plumb(H+,H+;X=[[1]])")
        assert expr == Plumb(Atom("H+"), Atom("H+"), ((1,),))

    def test_whitespace_insensitive(self):
        spaced = parse_expr(" plumb( H+ ,\n H+ ; X = [ [ 1 ] ] ) ")
        assert spaced == parse_expr("plumb(H+,H+;X=[[1]])")

    def test_stab_and_knotplumb(self):
        assert parse_expr("stab(U;-)") == Stab(Atom("U"), BandSign.NEGATIVE)
        assert parse_expr("stab(T+;+,x=[0,1])") == \
            Stab(Atom("T+"), BandSign.POSITIVE, (0, 1))
        assert parse_expr("knotplumb(U;E)") == KnotPlumb(Atom("U"), KnotMove.E)
        assert parse_expr("knotplumb(T+;T+,x=[1,0],c=-1)") == \
            KnotPlumb(Atom("T+"), KnotMove.TPLUS, (1, 0), -1)

    def test_truncated_input_reports_offset(self):
        with pytest.raises(ParseError) as err:
            parse_expr("plumb(H+,")
        assert err.value.offset == 9

    def test_error_after_expression(self):
        with pytest.raises(ParseError):
            parse_expr("H+ H+")

    def test_unknown_atom(self):
        with pytest.raises(ParseError):
            parse_expr("Q")

    def test_line_and_column_in_message(self):
        with pytest.raises(ParseError) as err:
            parse_expr("plumb(H+,\nQ)")
        assert err.value.line == 2
        assert err.value.column == 1


class TestRender:
    def test_atom(self):
        assert render_expr(Atom("H-")) == "H-"

    def test_trefoil(self):
        expr = Plumb(Atom("H+"), Atom("H+"), ((1,),))
        assert render_expr(expr) == "plumb(H+,H+;X=[[1]])"

    def test_round_trip_examples(self):
        texts = (
            "U",
            "plumb(H+,H-;X=[[1]])",
            "stab(plumb(H+,H+;X=[[1]]);-,x=[0,1])",
            "knotplumb(U;E,c=-1)",
            "plumb(T+,E)",
        )
        for text in texts:
            assert render_expr(parse_expr(text)) == text

    def test_round_trip_random(self):
        rng = random.Random(51)
        for _ in range(200):
            expr, _ = random_expr(rng, 5)
            assert parse_expr(render_expr(expr)) == expr


class TestElaborate:
    def test_atoms(self):
        assert elaborate(Atom("U")) == unknot()
        assert elaborate(parse_expr("T+")).mu == 2
        assert elaborate(parse_expr("E")).lam == 1

    def test_figure_eight_golden_report(self):
        report = invariants(elaborate(parse_expr("plumb(H+,H-;X=[[1]])")))
        assert report.mu == 2
        assert report.lam == 1
        assert report.alexander == LaurentPolynomial({0: 1, 1: -3, 2: 1})
        assert report.sigma == 0
        assert report.det_v == -1

    def test_default_coupling_is_zero(self):
        tree = elaborate(parse_expr("plumb(H+,H-)"))
        assert tree.bands[1].gluing == (0,)

    def test_dimension_error(self):
        with pytest.raises(DimensionError):
            elaborate(parse_expr("plumb(H+,H+;X=[[1,1]])"))
        with pytest.raises(DimensionError):
            elaborate(parse_expr("stab(U;+,x=[1])"))

    def test_random_expressions_elaborate(self):
        rng = random.Random(52)
        for _ in range(100):
            expr, mu = random_expr(rng, 4)
            assert elaborate(expr).mu == mu
