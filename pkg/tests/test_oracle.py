import pytest
from hypothesis import given

from conftest import letters, lset, simple_hypergraphs, EX_H
from hyperdual.core import Hypergraph, Instance, is_minimal_transversal, is_simple
from hyperdual.generators import exp_family
from hyperdual.oracle import (
    OracleLimitError,
    brute_force_new_transversal,
    brute_force_tr,
    is_new,
    minimal_new_transversals,
)
from hyperdual.solver import minimize_transversal


def test_dual_pair(dual_pair):
    assert set(brute_force_tr(dual_pair.g).edges) == set(dual_pair.h.edges)


def test_triangle_tail(triangle_tail):
    assert brute_force_tr(triangle_tail).edges == (0b0101, 0b0110, 0b1011)


@pytest.mark.parametrize("mode", ["subset", "berge"])
def test_empty_cases(mode):
    assert brute_force_tr(Hypergraph(2, (0,)), mode).edges == ()
    assert brute_force_tr(Hypergraph(2, ()), mode).edges == (0,)


@given(simple_hypergraphs(max_n=10, max_edges=7))
def test_modes_agree(g):
    assert brute_force_tr(g, "subset") == brute_force_tr(g, "berge")


@given(simple_hypergraphs(max_n=9))
def test_outputs_minimal_and_simple(g):
    tr = brute_force_tr(g)
    assert is_simple(tr)
    assert all(is_minimal_transversal(g, t) for t in tr.edges)


def test_new_transversal_gap_pair(gap_pair):
    t = brute_force_new_transversal(gap_pair)
    assert t is not None and is_new(gap_pair, t)
    assert minimize_transversal(gap_pair.g, t) == lset("bdf")


def test_new_transversal_dual_pair(dual_pair):
    assert brute_force_new_transversal(dual_pair) is None


def test_exp_family_three():
    i = exp_family(3)
    assert brute_force_new_transversal(i) is not None
    assert len(minimal_new_transversals(i)) == 2 ** 3 - 2


def test_limit(monkeypatch):
    monkeypatch.setenv("HYPERDUAL_ORACLE_MAX_VERTICES", "4")
    with pytest.raises(OracleLimitError):
        brute_force_tr(Hypergraph(5, (1,)))
    with pytest.raises(OracleLimitError):
        brute_force_tr(Hypergraph(5, (1,)), "berge")


def test_default_limit():
    with pytest.raises(OracleLimitError):
        brute_force_tr(Hypergraph(21, (1,)))
    assert brute_force_tr(Hypergraph(30, (1 << 29,)), "berge").edges == (1 << 29,)
