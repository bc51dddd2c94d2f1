"""Tensor products, partial contractions and gate extraction."""

import random
from fractions import Fraction

import numpy as np
import pytest

from qutrit_teleport.basis import entangled_state
from qutrit_teleport.exact import INV_SQRT3, INV_SQRT6, ONE, ZERO, ExtScalar, rational
from qutrit_teleport.linalg import (
    LinearForm,
    Operator3,
    SITE_A1A2,
    basis_ket,
    constant_ket,
    extract_gate,
    inner,
    linear_ket,
    partial_inner,
    symbolic_input,
    tensor,
    zero_ket,
)


def random_constant_ket(rng, dim, site="X"):
    return constant_ket(
        [
            ExtScalar(Fraction(rng.randint(-5, 5), rng.randint(1, 5)))
            for _ in range(dim)
        ],
        site,
    )


def random_operator(rng):
    return Operator3(
        tuple(
            tuple(
                ExtScalar(Fraction(rng.randint(-6, 6), rng.randint(1, 4)))
                for _ in range(3)
            )
            for _ in range(3)
        )
    )


def test_basis_tensor_hits_flat_index_zero():
    t = tensor(basis_ket(0, site="A1"), basis_ket(0, site="A2"))
    assert t.dim == 9
    assert t.site == "A1⊗A2"
    assert t.amps[0] == ONE
    assert all(a.is_zero() for a in t.amps[1:])


def test_flat_index_convention_pairs():
    # |1>|2> lands at 3*1 + 2 = 5
    t = tensor(basis_ket(1, site="A2"), basis_ket(2, site="B"))
    assert [i for i, a in enumerate(t.amps) if not a.is_zero()] == [5]


def test_symbolic_tensor_with_singlet_channel():
    # input tensor the first entangled state: amplitude c_a1/sqrt3 at
    # flat index 9*a1 + 3*m + m, zero elsewhere
    composite = tensor(symbolic_input(), entangled_state(0).ket)
    assert composite.dim == 27
    assert composite.site == "A1⊗A2⊗B"
    for a1 in range(3):
        for a2 in range(3):
            for b in range(3):
                form = composite.amps[9 * a1 + 3 * a2 + b]
                if a2 == b:
                    assert form.coef(a1) == INV_SQRT3
                    assert all(form.coef(j).is_zero() for j in range(3) if j != a1)
                else:
                    assert form.is_zero()


def test_tensor_with_zero_is_zero():
    x = basis_ket(1, site="A2")
    assert tensor(x, zero_ket(3, "B")).is_zero()
    assert tensor(symbolic_input(), zero_ket(3, "B")).is_zero()


def test_tensor_of_two_symbolic_kets_rejected():
    with pytest.raises(ValueError):
        tensor(symbolic_input(), symbolic_input("B"))


def test_tensor_associativity_exact():
    rng = random.Random(7)
    for _ in range(40):
        x = random_constant_ket(rng, 3, "A1")
        y = random_constant_ket(rng, 3, "A2")
        z = random_constant_ket(rng, 3, "B")
        assert tensor(tensor(x, y), z).amps == tensor(x, tensor(y, z)).amps
    # and with the symbolic factor on the left
    for _ in range(10):
        y = random_constant_ket(rng, 3, "A2")
        z = random_constant_ket(rng, 3, "B")
        assert (
            tensor(tensor(symbolic_input(), y), z).amps
            == tensor(symbolic_input(), tensor(y, z)).amps
        )


def test_partial_inner_reproduces_slices_for_all_basis_bras():
    phi = symbolic_input()
    for channel in range(9):
        psi = entangled_state(channel).ket
        composite = tensor(phi, psi)
        for a1 in range(3):
            for a2 in range(3):
                bra = tensor(basis_ket(a1, site="A1"), basis_ket(a2, site="A2"))
                resid = partial_inner(bra, composite)
                for b in range(3):
                    form = resid.amps[b]
                    assert form.coef(a1) == psi.amps[3 * a2 + b]
                    assert all(form.coef(j).is_zero() for j in range(3) if j != a1)


def test_partial_inner_singlet_channel_example():
    composite = tensor(symbolic_input(), entangled_state(0).ket)
    resid = partial_inner(entangled_state(0, SITE_A1A2).ket, composite)
    third = rational(1, 3)
    for b in range(3):
        assert resid.amps[b].coef(b) == third


def test_partial_inner_orthogonal_bra_gives_zero():
    composite = tensor(symbolic_input(), entangled_state(0).ket)
    # the pair |0>|1> never occurs in the singlet channel
    bra = tensor(basis_ket(0, site="A1"), basis_ket(1, site="A2"))
    # bra pairs (a1=0, a2=1); composite support needs a2 == b, so the
    # residual collects amplitudes c_0 at a2=1, b=1 only
    resid = partial_inner(bra, composite)
    assert resid.amps[0].is_zero() and resid.amps[2].is_zero()
    assert resid.amps[1].coef(0) == INV_SQRT3

    # a genuinely orthogonal bra: |0>|1> against the fifth channel, whose
    # post-office slot only ever holds 0 or 2
    bra2 = tensor(basis_ket(0, site="A1"), basis_ket(1, site="A2"))
    composite5 = tensor(symbolic_input(), entangled_state(4).ket)
    assert partial_inner(bra2, composite5).is_zero()


def test_partial_inner_dimension_mismatch():
    with pytest.raises(ValueError):
        partial_inner(basis_ket(0, dim=3, site="A1"), basis_ket(0, dim=3, site="B"))


def test_partial_inner_requires_constant_bra():
    composite = tensor(symbolic_input(), entangled_state(0).ket)
    with pytest.raises(ValueError):
        partial_inner(tensor(symbolic_input(), basis_ket(0, site="A2")), composite)


def test_extract_gate_examples():
    third = rational(1, 3)
    s = symbolic_input("B").scaled(third)
    m = extract_gate(s)
    assert m == Operator3.identity().scaled(third)

    forms = [
        LinearForm(coef1=INV_SQRT6),
        LinearForm(coef0=INV_SQRT6),
        LinearForm(),
    ]
    m2 = extract_gate(linear_ket(forms, "B"))
    assert m2.entry(0, 1) == INV_SQRT6
    assert m2.entry(1, 0) == INV_SQRT6
    assert m2.entry(2, 2).is_zero()

    assert extract_gate(zero_ket(3, "B", symbolic=True)) == Operator3.zero()


def test_extract_gate_inverts_apply():
    rng = random.Random(31)
    phi = symbolic_input()
    for _ in range(120):
        m = random_operator(rng)
        assert extract_gate(m.apply(phi)) == m


def test_apply_on_basis_kets_returns_columns():
    rng = random.Random(3)
    m = random_operator(rng)
    for j in range(3):
        col = m.apply(basis_ket(j, site="B"))
        assert col.amps == tuple(m.entry(r, j) for r in range(3))


def test_dagger_and_products():
    anti = Operator3(
        (
            (ZERO, INV_SQRT6, ZERO),
            (-INV_SQRT6, ZERO, ZERO),
            (ZERO, ZERO, ZERO),
        )
    )
    assert anti.dagger() == Operator3(
        (
            (ZERO, -INV_SQRT6, ZERO),
            (INV_SQRT6, ZERO, ZERO),
            (ZERO, ZERO, ZERO),
        )
    )
    rng = random.Random(17)
    m = random_operator(rng)
    assert Operator3.identity() @ m == m

    scalar_gate = Operator3.identity().scaled(rational(1, 3))
    assert scalar_gate.dagger() @ scalar_gate == Operator3.identity().scaled(
        rational(1, 9)
    )


def test_operator_equality_ignores_tags():
    a = Operator3.identity().tagged(channel=0, outcome=0)
    b = Operator3.identity().tagged(provenance="paper", channel=5, outcome=7)
    assert a == b


def test_linear_form_zero_iff_all_components_zero():
    assert LinearForm().is_zero()
    assert not LinearForm(coef2=ONE).is_zero()


def test_linear_form_evaluation_matches_numpy():
    rng = random.Random(23)
    for _ in range(50):
        form = LinearForm(
            *(ExtScalar(Fraction(rng.randint(-4, 4), rng.randint(1, 4))) for _ in range(3))
        )
        c = np.array([rng.random() + 1j * rng.random() for _ in range(3)])
        direct = form.evaluate(c)
        expected = sum(float(form.coef(j)) * c[j] for j in range(3))
        assert direct == pytest.approx(expected, abs=1e-14)


def test_inner_product_requires_constant_kets():
    with pytest.raises(ValueError):
        inner(symbolic_input(), basis_ket(0))


def test_ket_dimension_validation():
    with pytest.raises(ValueError):
        constant_ket([ONE, ZERO], "B")
