from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import pytest

from algebra.factorization import (FactorPair, LienardForm, compose,
                                   composition_gap, first_order_rhs, swap,
                                   verify_factorization)
from algebra.genpoly import GeneralizedPolynomial as Poly, U
from errors import InvalidParam
from families.burgers_huxley import bh_form, bh_pair_case1
from families.dvp import dvp_form, dvp_pair
from families.emden import emden_form, emden_pair_case1
from families.fisher import fisher_form, fisher_pair_case1, fisher_pair_case2


def test_compose_emden_pair():
  # phi1 = phi2 = -u gives u'' + 3u u' + u^3
  form = compose(FactorPair(-U, -U))
  assert form.g == Poly.monomial(3., 1.)
  assert form.F == Poly.monomial(1., 3.)


def test_compose_matches_emden_target():
  assert verify_factorization(emden_form(3., 1.),
                              emden_pair_case1(1., -0.5), 1e-12)
  assert verify_factorization(emden_form(3., 1.),
                              emden_pair_case1(1., -1.), 1e-12)


def test_compose_matches_dvp_target():
  # E = 3, A = 1/3: a1 = -1, G = 4/3
  assert verify_factorization(dvp_form(4. / 3., 3., 1. / 3.),
                              dvp_pair(1. / 3., -1.), 1e-12)


@pytest.mark.parametrize('delta', [0.5, 1., 2.])
def test_compose_burgers_huxley_with_fractional_exponents(delta):
  a1 = 0.5
  nu = -(a1 - 0.3 / a1)
  alpha = -(a1 * (1. + delta) - 1. / a1)
  target = bh_form(alpha, 1., 0.3, delta, nu)
  assert composition_gap(target, bh_pair_case1(1., 0.3, delta, a1)) <= 1e-12


def test_swap_gives_the_second_fisher_factorization():
  a1 = -2. ** 0.5
  pair = fisher_pair_case1(a1)
  assert swap(pair) == fisher_pair_case2(a1)
  assert swap(swap(pair)) == pair
  # same F, different g
  assert compose(swap(pair)).F == compose(pair).F
  assert compose(swap(pair)).g != compose(pair).g


def test_first_order_rhs():
  pair = FactorPair(Poly([(2., 0.), (-1., 1.)]), Poly.constant(1.))
  assert first_order_rhs(pair) == Poly([(2., 1.), (-1., 2.)])


def test_verify_rejects_perturbed_target():
  target = fisher_form(2., 1.5)
  pair = fisher_pair_case1(-2. ** 0.5)
  assert verify_factorization(target, pair, 1e-12)
  assert not verify_factorization(target.perturbed(1e-2), pair, 1e-12)
  assert composition_gap(target.perturbed(1e-2), pair) == pytest.approx(1e-2)


def test_pair_and_form_validation():
  with pytest.raises(InvalidParam):
    FactorPair(Poly(), U)
  with pytest.raises(TypeError):
    FactorPair(U, 1.)
  with pytest.raises(InvalidParam):
    LienardForm(U, Poly([(1., 0.), (1., 1.)]))


def test_residual_of_form():
  # u = 1/tau at tau = 2: 2/8 - 3/8 + 1/8
  form = emden_form(3., 1.)
  assert form.residual(0.5, -0.25, 0.25) == pytest.approx(0., abs=1e-15)
