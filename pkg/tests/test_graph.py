"""Graph representation, validation, DFA import, transposition, trimming, I/O."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

import gsa
from gsa import (
    GraphFormatError,
    format_graph,
    from_dfa,
    make_graph,
    parse_graph,
    transpose_alphabet,
    trim,
    validate,
)
from gsa.classify import compute_tau
from gsa.generators import gen
from gsa.oracle import oracle_prefixes

from conftest import FIG_LABELS, FIG_PREDS, small_corpus


def test_validate_fig_graph_ok(fig_graph):
    assert validate(fig_graph).ok


def test_validate_single_self_loop():
    g = make_graph([0], [[0]])
    assert validate(g).ok


def test_validate_missing_predecessor():
    g = make_graph([0, 0], [[0, 1], []])
    rep = validate(g)
    assert not rep.ok
    assert any(rule == "in-degree" for rule, _, _ in rep.violations)


def test_validate_determinism_violation():
    # node 0 has two successors labeled 0
    g = make_graph([0, 0, 0], [[0, 1, 2], [0], [0]])
    rep = validate(g)
    assert any(rule == "determinism" for rule, _, _ in rep.violations)


def test_validate_unused_character():
    g = make_graph([0], [[0]], sigma=2)
    rep = validate(g)
    assert any(rule == "alphabet" for rule, _, _ in rep.violations)


def test_validate_inconsistent_succs_index():
    good = make_graph([0, 1], [[1], [0]], sigma=2)
    bad = gsa.LabeledGraph(
        n=2,
        sigma=2,
        label=good.label,
        preds=good.preds,
        succs=((0,), (1,)),  # wrong on purpose
    )
    rep = validate(bad)
    assert any(rule == "index" for rule, _, _ in rep.violations)


def test_from_dfa_fig_example():
    # the reference graph minus node 0's self-loop, with letter names
    edges = [
        (0, 1, "a"),
        (0, 2, "b"),
        (0, 3, "c"),
        (1, 4, "c"),
        (2, 5, "a"),
        (3, 6, "c"),
        (3, 5, "a"),
        (4, 4, "c"),
        (6, 6, "c"),
    ]
    g, charmap = from_dfa(7, edges, initial=0)
    assert charmap == {"a": 1, "b": 2, "c": 3}
    assert g == make_graph(FIG_LABELS, FIG_PREDS, sigma=4)


def test_from_dfa_one_state():
    g, charmap = from_dfa(1, [], initial=0)
    assert g == make_graph([0], [[0]], sigma=1)
    assert charmap == {}


def test_from_dfa_rejects_input_inconsistency():
    with pytest.raises(GraphFormatError):
        from_dfa(3, [(0, 2, "a"), (1, 2, "b"), (0, 1, "a")], initial=0)


def test_from_dfa_rejects_edge_into_initial():
    with pytest.raises(GraphFormatError):
        from_dfa(2, [(0, 1, "a"), (1, 0, "a")], initial=0)


def test_from_dfa_output_validates():
    edges = [(0, 1, "x"), (1, 2, "y"), (2, 1, "x")]
    g, _ = from_dfa(3, edges, initial=0)
    assert validate(g).ok


def test_transpose_definition():
    g = make_graph([0, 1, 2, 3], [[1], [2], [3], [0]], sigma=4)
    assert transpose_alphabet(g).label == (3, 2, 1, 0)


def test_transpose_involution_fixed_point_sigma1():
    g = make_graph([0, 0], [[1], [0]], sigma=1)
    assert transpose_alphabet(g) == g


@given(
    n=st.integers(2, 12),
    sigma=st.integers(1, 4),
    seed=st.integers(0, 10**6),
)
def test_transpose_involution(n, sigma, seed):
    g = gen("random", n, min(sigma, n), seed=seed, density=0.4)
    assert transpose_alphabet(transpose_alphabet(g)) == g


def test_trim_fig_graph_unchanged(fig_graph):
    tau = compute_tau(fig_graph)
    assert trim(fig_graph, tau) == fig_graph


def test_trim_removes_witness_edge():
    # node 1 is tau=1 via its label-0 predecessor; the edge from the label-2
    # node 2 into node 1 can never carry node 1's minimum
    labels = [0, 1, 2]
    preds = [[0], [0, 2], [0]]
    g = make_graph(labels, preds, sigma=3)
    assert validate(g).ok
    tau = compute_tau(g)
    assert tau[1] == 1
    gt = trim(g, tau)
    assert 2 not in gt.preds[1]
    L = g.n + 2
    assert oracle_prefixes(gt, "min", L) == oracle_prefixes(g, "min", L)


def test_trim_all_tau2_unchanged():
    g = make_graph([0, 0, 0], [[2], [0], [1]], sigma=1)
    tau = compute_tau(g)
    assert tau == [2, 2, 2]
    assert trim(g, tau) == g


def test_trim_preserves_minima_exhaustively():
    for g in small_corpus(3, 2):
        tau = compute_tau(g)
        gt = trim(g, tau)
        assert validate(gt).ok
        L = g.n + 2
        assert oracle_prefixes(gt, "min", L) == oracle_prefixes(g, "min", L)
        for v, ps in enumerate(gt.preds):
            if tau[v] == 1:
                assert all(gt.label[u] <= gt.label[v] for u in ps)


def test_file_roundtrip(fig_graph):
    assert parse_graph(format_graph(fig_graph)) == fig_graph


def test_parse_rejects_inconsistent_labels():
    text = "gsa-graph v1 2 2\n0\t1\t0\n0\t1\t1\n0\t0\t0\n"
    with pytest.raises(GraphFormatError):
        parse_graph(text)


def test_parse_rejects_bad_header():
    with pytest.raises(GraphFormatError):
        parse_graph("nope 1 1\n")


def test_parse_accepts_comments():
    text = "# a comment\ngsa-graph v1 1 1\n0\t0\t0\n"
    g = parse_graph(text)
    assert g.n == 1 and g.preds == ((0,),)


@given(
    n=st.integers(1, 10),
    sigma=st.integers(1, 3),
    seed=st.integers(0, 10**6),
)
def test_roundtrip_random(n, sigma, seed):
    g = gen("random", n, min(sigma, n), seed=seed, density=0.5)
    assert parse_graph(format_graph(g)) == g
