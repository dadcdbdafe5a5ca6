"""Seifert matrices, the Alexander oracle, and branched-cover forms."""

from __future__ import annotations

import pytest

from grapecalc.congruence import find_congruence, verify_certificate
from grapecalc.covers import (
    NonCoprimeError,
    alexander_check,
    alexander_from_seifert,
    alexander_polynomial,
    cluster_for_cover,
    cover_form,
    normalize_laurent,
    oracle_report,
    seifert_matrix,
)
from grapecalc.data import load_named_cluster

E8_KEY = (8, 8, 1, -8, True, "negative definite")


def test_trefoil_alexander():
    V = seifert_matrix(2, 3)
    assert V.dim == 2
    assert alexander_from_seifert(V) == normalize_laurent([1, -1, 1])


def test_cinquefoil_alexander():
    V = seifert_matrix(2, 5)
    assert V.dim == 4
    assert alexander_from_seifert(V) == normalize_laurent([1, -1, 1, -1, 1])


def test_t35_symmetrized_form():
    V = seifert_matrix(3, 5)
    assert V.dim == 8
    sym = V.symmetrized()
    assert sym.is_even()
    assert abs(sym.determinant()) == 1


@pytest.mark.parametrize("q,r", [(2, 3), (2, 5), (3, 5), (3, 4), (2, 7)])
def test_alexander_identity(q, r):
    assert alexander_check(q, r)


@pytest.mark.parametrize("q,r", [(2, 3), (2, 5), (3, 5), (3, 4), (2, 7)])
def test_symmetrized_pairing_is_even(q, r):
    assert seifert_matrix(q, r).symmetrized().is_even()


def test_alexander_closed_form_degree():
    # degree (q-1)(r-1), symmetric coefficient list
    p = alexander_polynomial(3, 5)
    assert len(p) - 1 == 8
    assert p == tuple(reversed(p))


def test_non_coprime_rejected():
    with pytest.raises(NonCoprimeError):
        seifert_matrix(2, 4)
    with pytest.raises(ValueError):
        seifert_matrix(1, 5)


def test_oracle_report_all_pass():
    assert all(ok for _, ok in oracle_report())


@pytest.mark.parametrize("p,q,r", [(2, 3, 5), (3, 2, 5), (5, 2, 3)])
def test_cover_forms_are_e8(p, q, r):
    cf = cover_form(seifert_matrix(q, r), p)
    assert cf.form.n == (p - 1) * (q - 1) * (r - 1) == 8
    assert cf.form.invariants().congruence_key() == E8_KEY


def test_cover_form_block_structure():
    V = seifert_matrix(2, 3)
    cf = cover_form(V, 5)
    f = cf.form
    n = V.dim
    for b in range(4):
        for i in range(n):
            for j in range(n):
                assert f[b * n + i, b * n + j] == V.rows[i][j] + V.rows[j][i]
                if b + 1 < 4:
                    assert f[b * n + i, (b + 1) * n + j] == V.rows[j][i]
                    assert f[(b + 1) * n + i, b * n + j] == V.rows[i][j]
    # blocks two apart vanish
    assert f[0, 2 * n] == 0


def test_cover_form_rejects_small_fold():
    with pytest.raises(ValueError):
        cover_form(seifert_matrix(2, 3), 1)


def test_cluster_for_cover_same_bunch():
    c235 = cluster_for_cover(2, 3, 5)
    c325 = cluster_for_cover(3, 2, 5)
    c523 = cluster_for_cover(5, 2, 3)
    assert c235.cells == c325.cells == c523.cells
    assert c235.cells == load_named_cluster("c2").cells


def test_cluster_for_cover_rejects_other_triples():
    with pytest.raises(ValueError):
        cluster_for_cover(2, 5, 3)
    with pytest.raises(ValueError):
        cluster_for_cover(7, 2, 3)


@pytest.mark.parametrize("p,q,r", [(2, 3, 5), (3, 2, 5), (5, 2, 3)])
def test_calibration_identity(p, q, r):
    """The shipped cluster's linking form is congruent to each cover form."""
    a = cluster_for_cover(p, q, r).linking_form()
    b = cover_form(seifert_matrix(q, r), p).form
    cert = find_congruence(a, b)
    assert cert is not None
    assert verify_certificate(a, b, cert)
