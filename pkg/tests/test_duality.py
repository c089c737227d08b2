import pytest

from semidual import (
    beta0,
    beta0_identity,
    check_chain,
    check_homothety,
    check_semidualizing,
    check_totally_reflexive,
    cm_type,
    factorization_check,
    free_module,
    hom_module,
    matlis_dual,
    residue_field_module,
)
from semidual.duality import biduality_check, strictness
from semidual.series import LaurentPolyZ

from test_modules import type4_c


def test_matlis_dual_shape(m2):
    D = matlis_dual(m2)
    assert sorted(D.gens.shifts) == [0, 0]
    assert [D.dim(d) for d in range(3)] == [2, 1, 0]
    assert cm_type(m2) == 2 and beta0(D) == 2


def test_dual_of_dual_hilbert(type4):
    D = matlis_dual(type4)
    H = hom_module(D, D)
    assert [H.dim(d) for d in range(3)] == [type4.dim(d) for d in range(3)]


def test_non_artinian_has_no_dual(ex_gf):
    with pytest.raises(ValueError, match="artinian"):
        matlis_dual(ex_gf)


def test_semidualizing_examples(m2):
    D, R, k = matlis_dual(m2), free_module(m2, [0], name="R"), residue_field_module(m2)
    v = check_semidualizing(D, 8)
    assert v.status == "verified" and v.beta0 == 2 and v.beta0_consistent
    assert check_semidualizing(R, 4).status == "verified"
    w = check_semidualizing(k, 3)
    assert w.status == "refuted" and w.witness["reason"] == "homothety" and w.witness["degree"] == 1


def test_reflexivity(m2):
    D, R, k = matlis_dual(m2), free_module(m2, [0], name="R"), residue_field_module(m2)
    assert check_totally_reflexive(R, D, 4).status == "verified"
    v = check_totally_reflexive(k, R, 3)
    assert v.status == "refuted" and v.witness == {"reason": "ext-gc-nonvanishing", "i": 1}
    # every module is totally D-reflexive over an artinian ring
    assert check_totally_reflexive(k, D, 3).status == "verified"
    assert biduality_check(k, D).iso


def test_chain_and_factorization(m2):
    D, R = matlis_dual(m2), free_module(m2, [0], name="R")
    rep = check_chain([D, R], 8, factorization=True)
    assert rep.status == "verified"
    assert rep.strict[0].strict is True
    f = rep.factorization
    assert f.status == "verified" and f.xi_iso and f.poincare_ok
    assert f.poincare[0] == LaurentPolyZ(0, (2, 3, 6, 12, 24, 48, 96, 192, 384), 8)
    assert beta0_identity(R, R)


def test_gorenstein_collapse(gor):
    D, R = matlis_dual(gor), free_module(gor, [0], name="R")
    assert beta0(D) == 1
    assert check_homothety(D).iso
    s = strictness(D, R, 4)
    assert s.strict is False and s.reason == "isomorphic"


def test_type_four_chain(type4):
    D, C, R = matlis_dual(type4), type4_c(type4), free_module(type4, [0], name="R")
    assert cm_type(type4) == 4 and beta0(C) == 2
    rep = check_chain([D, C, R], 2, factorization=True)
    assert rep.status == "verified"
    assert all(s.strict for s in rep.strict)
    assert rep.factorization.status == "verified"


def test_factorization_needs_a_chain(m2):
    D = matlis_dual(m2)
    assert factorization_check([D], 3).status == "verified"
