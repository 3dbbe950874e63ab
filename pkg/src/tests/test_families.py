from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import math

import numpy as np
import pytest

from algebra.factorization import compose, composition_gap
from conftest import FAMILY_CASES, all_solutions
from errors import (ComplexRootsError, DiscriminantError, DomainError,
                    InvalidParam)
from families.burgers_huxley import (bh_alpha_case1, bh_alpha_case2,
                                     bh_e1_delta1, bh_fit_case1, bh_fit_case2,
                                     bh_solution_case1, bh_solution_case2)
from families.dvp import (chandrasekar_case, dvp_fit, dvp_form, dvp_pair,
                          dvp_solution)
from families.emden import (emden_alpha, emden_fit, emden_induced_dvp,
                            emden_second_form, emden_solution_case1,
                            emden_solution_case2)
from families.family_factory import family_factory
from families.fisher import (fisher_fit_case1, fisher_fit_case2,
                             fisher_pair_case2, fisher_solution_case1,
                             fisher_solution_case2)
from families.lienard import (lienard_discriminant, lienard_implicit_case2,
                              lienard_solution_case1)


def _derivatives(sol, tau):
  return sol.evaluate(tau), sol.udot(tau), sol.uddot(tau)


# emden

def test_emden_fit_roots():
  assert emden_fit(3., 1.) == pytest.approx((-0.5, -1.))
  double = emden_fit(2. * math.sqrt(2.), 1.)
  assert len(double) == 1
  assert double[0] == pytest.approx(-math.sqrt(2.) / 2.)
  with pytest.raises(ComplexRootsError):
    emden_fit(1., 1.)
  with pytest.raises(InvalidParam):
    emden_fit(3., 0.)


def test_emden_fit_round_trip(rng):
  for _ in range(1000):
    beta = rng.uniform(0.1, 5.)
    alpha = rng.choice([-1., 1.]) * math.sqrt(8. * beta) * rng.uniform(1.01, 6.)
    roots = emden_fit(alpha, beta)
    assert len(roots) == 2
    for a1 in roots:
      assert abs(emden_alpha(a1, beta) - alpha) <= 1e-12 * max(1., abs(alpha))
      if alpha > 0:
        assert a1 < 0


def test_emden_case1_solution():
  sol = emden_solution_case1(3., 1., -1, 0.)
  assert sol.fitted['a1'] == pytest.approx(-1.)
  assert sol.evaluate(2.) == pytest.approx(0.5)
  assert sol.evaluate(1.) == pytest.approx(1.)
  assert sol.singularities == (0.,)
  assert sol.target.residual(*_derivatives(sol, 2.)) == pytest.approx(
    0., abs=1e-15)
  with pytest.raises(DomainError):
    sol.evaluate(0.)
  shifted = emden_solution_case1(3., 1., 1, 2.)
  assert shifted.singularities == (2.,)
  assert shifted.evaluate(3.) == pytest.approx(-1. / (-0.5))


def test_emden_second_form_matches():
  taus = np.array([-3., -0.5, 0.7, 4.])
  for branch in (1, -1):
    sol = emden_solution_case1(3., 1., branch, 0.5)
    other = emden_second_form(3., 1., branch, 0.5)
    np.testing.assert_allclose(other(taus), sol.evaluate(taus), rtol=1e-14)


def test_emden_case2_solution():
  sol = emden_solution_case2(1., -1., 0.)
  assert sol.evaluate(1.) == pytest.approx(2. ** -0.5)
  assert sol.domain == ((0., float('inf')),)
  assert emden_solution_case2(1., -1., 0., sign=-1).evaluate(1.) == \
    pytest.approx(-2. ** -0.5)
  induced = emden_induced_dvp(1., -1.)
  assert induced['G'] == pytest.approx(1.)
  assert induced['E'] == pytest.approx(3.)
  assert induced['G'] * induced['E'] == pytest.approx(3.)
  with pytest.raises(InvalidParam):
    emden_solution_case2(1., 0.)
  # a1 > 0 puts the solution on the left
  assert emden_solution_case2(1., 2., 1.).domain == ((-float('inf'), 1.),)


def test_emden_double_root_has_one_case1_branch():
  family = family_factory['emden'](alpha=2. * math.sqrt(2.), beta=1., a1=-1.)
  case1 = [b for b in family.enumerate() if b.case == 1]
  assert len(case1) == 1
  assert case1[0].solution is not None


def test_emden_complex_roots_are_reported_per_branch():
  family = family_factory['emden'](alpha=1., beta=1., a1=-1.)
  branches = family.enumerate()
  assert all(b.error for b in branches if b.case == 1)
  assert all(b.solution is not None for b in branches if b.case == 2)


# lienard

def test_lienard_case1_solution():
  sol = lienard_solution_case1(2., 3., 1., -1., 0., 1)
  assert sol.fitted['k'] == pytest.approx(2.)
  assert sol.singularities == (0.,)
  assert sol.evaluate(1.) == pytest.approx(2. / (math.exp(2.) - 1.))
  # exp -> 0 leaves the root -(B + Delta)/(2C) of F3
  assert sol.evaluate(-40.) == pytest.approx(-2., abs=1e-12)
  assert sol.target.F(-2.) == pytest.approx(0.)
  minus = lienard_solution_case1(2., 3., 1., -1., 0., -1)
  assert minus.evaluate(1.) == pytest.approx(1. / (math.e - 1.))


def test_lienard_case1_without_pole():
  # C < 0 keeps the denominator away from zero
  sol = lienard_solution_case1(1., 1., -1., 1., 0., 1)
  assert sol.singularities == ()
  assert np.all(np.isfinite(sol.evaluate(np.linspace(-20., 20., 41))))


def test_lienard_errors():
  assert lienard_discriminant(2., 3., 1.) == 1.
  with pytest.raises(DiscriminantError):
    lienard_discriminant(1., 1., 1.)
  with pytest.raises(DiscriminantError):
    lienard_solution_case1(1., 2., 1., -1.)
  with pytest.raises(InvalidParam):
    lienard_implicit_case2(0., 3., 1., -1.)
  with pytest.raises(InvalidParam):
    lienard_solution_case1(2., 3., 1., 0.)


def test_lienard_case2_solution():
  family = family_factory['lienard'](A=2., B=3., C=1., a1=-1.)
  (sol,) = [s for s in family.solutions(0.) if s.case == 2]
  assert sol.domain == ((0., float('inf')),)
  u = sol.evaluate(np.array([0.5, 1., 2.]))
  assert np.all(np.diff(u) < 0)
  assert family.roundtrip_errors(sol)['u(tau(u0))'] <= 1e-12


def test_lienard_seed_picks_the_bracket():
  family = family_factory['lienard'](A=2., B=3., C=1., a1=-1., seed_u=-0.5)
  (sol,) = [s for s in family.solutions(0.) if s.case == 2]
  assert sol.relation.bracket == (-1., 0.)
  assert -1. < sol.evaluate(0.3) < 0.


# dvp

def test_dvp_fit():
  assert dvp_fit(3., 1. / 3.) == pytest.approx((-1., 4. / 3.))
  assert chandrasekar_case(3., 1. / 3.)
  assert not chandrasekar_case(3., 0.5)
  a1, G = dvp_fit(3., 0.)
  induced = emden_induced_dvp(1., a1)
  assert (a1, G) == pytest.approx((-1., 1.))
  assert G == pytest.approx(induced['G'])
  with pytest.raises(InvalidParam):
    dvp_fit(0., 1.)


def test_dvp_solution():
  sol = dvp_solution(3., 1. / 3., 1, 0.)
  assert sol.domain == ((0., float('inf')),)
  assert sol.notes and 'Chandrasekar' in sol.notes[0]
  # far from tau0 the exponential term dominates
  tau = 40.
  tail = math.sqrt(1. / 3.) * math.exp(-tau / 3.)
  assert sol.evaluate(tau) == pytest.approx(tail, rel=1e-10)
  taus = np.linspace(0.1, 10., 100)
  u = sol.evaluate(taus)
  np.testing.assert_allclose(sol.udot(taus), -(1. / 3. + u * u) * u,
                             rtol=1e-12)
  with pytest.raises(InvalidParam):
    dvp_solution(3., 0.)
  with pytest.raises(DomainError):
    sol.evaluate(-1.)


def test_dvp_domain_side():
  # A < 0 flips both the rate and the radicand sign
  sol = dvp_solution(3., -1., 1, 0.)
  assert sol.domain == ((0., float('inf')),)
  assert np.all(np.isfinite(sol.evaluate(np.linspace(0.1, 5., 20))))
  left = dvp_solution(-3., 1., 1, 0.)
  assert left.domain == ((-float('inf'), 0.),)
  assert np.all(np.isfinite(left.evaluate(np.linspace(-5., -0.1, 20))))


def test_dvp_without_linear_term_uses_emden_case2():
  family = family_factory['dvp'](E=3., A=0.)
  sols = family.solutions(0.)
  assert len(sols) == 2
  assert all(s.tag.startswith('emden/case2') for s in sols)
  assert sols[0].evaluate(1.) == pytest.approx(2. ** -0.5)


# fisher

def test_fisher_fits():
  assert fisher_fit_case1(2.) == pytest.approx((-math.sqrt(2.), 1.5))
  assert fisher_fit_case1(math.sqrt(2.))[1] == pytest.approx(math.sqrt(2.))
  assert fisher_fit_case2(1.)[0] == pytest.approx(-math.sqrt(2.))
  a1, nu = fisher_fit_case2(2.)
  assert nu == pytest.approx(2. + 0.25)
  assert compose(fisher_pair_case2(a1)).g.coefficient(1.) == \
    pytest.approx(-4., abs=1e-12)
  with pytest.raises(InvalidParam):
    fisher_fit_case1(0.)
  with pytest.raises(InvalidParam):
    fisher_fit_case2(-1.)


def test_fisher_kink():
  sol = fisher_solution_case1(2., 1, 1.5)
  assert sol.evaluate(1.5) == pytest.approx(0.5)
  assert sol.evaluate(-40.) == pytest.approx(1.)
  assert sol.evaluate(40.) == pytest.approx(0., abs=1e-12)
  pole = fisher_solution_case1(2., -1, 1.5)
  assert pole.singularities == (1.5,)


def test_fisher_exponential():
  for branch in (1, -1):
    sol = fisher_solution_case2(2., branch, 0.)
    assert sol.evaluate(0.) == branch
    taus = np.linspace(-5., 5., 21)
    np.testing.assert_allclose(sol.udot(taus) / sol.evaluate(taus), -0.5,
                               rtol=1e-12)


# burgers-huxley

def test_bh_case1_fit():
  a_plus, a_minus, nu_of = bh_fit_case1(1., 1., 1.)
  assert (a_plus, a_minus) == pytest.approx((0.5, -1.))
  assert nu_of(0.5, 2.) == pytest.approx(3.5)
  with pytest.raises(InvalidParam):
    bh_fit_case1(1., 0., 1.)
  with pytest.raises(InvalidParam):
    bh_fit_case1(1., 1., 0.)


def test_bh_case1_roots_always_real(rng):
  for _ in range(1000):
    alpha = rng.uniform(-10., 10.)
    beta = rng.uniform(0.01, 10.)
    delta = rng.uniform(0.1, 5.)
    a_plus, a_minus, _ = bh_fit_case1(alpha, beta, delta)
    for a1 in (a_plus, a_minus):
      assert abs(bh_alpha_case1(beta, delta, a1) - alpha) <= \
        1e-12 * max(1., abs(alpha))


def test_bh_case2_fit():
  roots, nus = bh_fit_case2(1., 1., 0.5, 1.)
  assert roots == pytest.approx((1., -0.5))
  assert nus[roots[0]] == pytest.approx(0.5 - 1.)
  for e1 in roots:
    assert bh_alpha_case2(1., 1., e1) == pytest.approx(1.)


def test_random_fit_round_trips(rng):
  for _ in range(1000):
    E = rng.choice([-1., 1.]) * rng.uniform(0.1, 10.)
    A = rng.uniform(-5., 5.)
    a1, G = dvp_fit(E, A)
    assert abs(-3. * a1 - E) <= 1e-12 * max(1., abs(E))
    assert abs(-(A * a1 + 1. / a1) - G) <= 1e-12 * max(1., abs(G))
    if A != 0:
      assert composition_gap(dvp_form(G, E, A), dvp_pair(A, a1)) <= \
        1e-12 * max(1., abs(G), abs(E))

    mu = rng.uniform(0.05, 20.)
    a1, nu = fisher_fit_case1(mu)
    assert abs(-(a1 + 1. / a1) / math.sqrt(2.) - nu) <= 1e-12 * max(1., nu)
    a1, nu = fisher_fit_case2(mu)
    assert abs(-a1 / math.sqrt(2.) - mu) <= 1e-12 * max(1., mu)
    assert abs(mu + 0.5 / mu - nu) <= 1e-12 * max(1., nu)

    alpha = rng.uniform(-10., 10.)
    beta = rng.uniform(0.01, 10.)
    delta = rng.uniform(0.1, 5.)
    roots, _ = bh_fit_case2(alpha, beta, 0.3, delta)
    for e1 in roots:
      assert abs(bh_alpha_case2(beta, delta, e1) - alpha) <= \
        1e-12 * max(1., abs(alpha))


def test_bh_case2_general_quadratic_matches_delta_one(rng):
  for _ in range(100):
    alpha = rng.uniform(-10., 10.)
    beta = rng.uniform(0.01, 10.)
    roots, _ = bh_fit_case2(alpha, beta, 0.3, 1.)
    printed = bh_e1_delta1(alpha, beta)
    for got, want in zip(roots, printed):
      assert abs(got - want) <= 1e-12 * max(1., abs(want))


def test_bh_case1_solution():
  sol = bh_solution_case1(1., 1., 0.3, 1., 1, 1, 0.)
  assert sol.evaluate(0.) == pytest.approx(0.5)
  assert sol.evaluate(40.) == pytest.approx(1.)
  assert sol.evaluate(-40.) == pytest.approx(0., abs=1e-8)
  sol2 = bh_solution_case1(1., 1., 0.3, 2., -1, 1, 0.)
  assert sol2.evaluate(0.) == pytest.approx(2. ** -0.5)


def test_bh_minus_sign_domain():
  # fractional delta keeps only the side where the base is positive
  sol = bh_solution_case1(1., 1., 0.3, 2., 1, -1, 0.)
  assert len(sol.domain) == 1
  odd = bh_solution_case1(1., 1., 0.3, 1., 1, -1, 0.)
  assert odd.domain == ((-float('inf'), 0.), (0., float('inf')))


def test_bh_case2_solution():
  sol = bh_solution_case2(1., 1., 0.5, 1., 1, 1, 0.)
  assert sol.fitted['e1'] == pytest.approx(1.)
  assert sol.evaluate(0.) == pytest.approx(0.25)
  assert sol.evaluate(-100.) == pytest.approx(0.5)
  sol2 = bh_solution_case2(1., 1., 0.5, 2., 1, 1, 0.)
  assert sol2.evaluate(0.) == pytest.approx(0.25 ** 0.5)
  with pytest.raises(InvalidParam):
    bh_solution_case2(1., 1., 0., 1.)


def test_bh_negative_gamma_even_power_is_empty():
  family = family_factory['burgers-huxley'](alpha=1., beta=1., gamma=-0.5,
                                            delta=2.)
  branches = family.select(case=2, signs=['plus'])
  assert len(branches) == 2
  assert all(b.error == 'empty real validity domain' for b in branches)


def test_bh_fit_marks_derived_roots():
  family = family_factory['burgers-huxley'](alpha=1., beta=1., gamma=0.3,
                                            delta=2.)
  records = family.fit()
  assert [r['case'] for r in records] == [1, 1, 2, 2]
  assert all(r['derived'] for r in records if r['case'] == 2)
  family1 = family_factory['burgers-huxley'](alpha=1., beta=1., gamma=0.3,
                                             delta=1.)
  assert not any(r['derived'] for r in family1.fit())


# shared

def test_branch_count():
  assert len(all_solutions()) >= 13
  counts = dict((name, len(family_factory[name](**params).solutions()))
                for name, params in FAMILY_CASES[:5])
  assert counts == {'emden': 4, 'lienard': 3, 'dvp': 2, 'fisher': 4,
                    'burgers-huxley': 8}


def test_every_pair_composes_to_its_target():
  for sol in all_solutions():
    assert composition_gap(sol.target, sol.pair) <= 1e-12, sol.tag


def test_family_targets_match_solutions():
  for name, params in FAMILY_CASES:
    family = family_factory[name](**params)
    for sol in family.solutions():
      if sol.family != name:
        continue
      branch = -1 if sol.root == 'minus' else 1
      target = family.target(sol.case, branch)
      assert composition_gap(target, sol.pair) <= 1e-12, sol.tag


def test_fit_round_trips():
  for name, params in FAMILY_CASES:
    family = family_factory[name](**params)
    scale = max(1., max(abs(v) for v in family.parameters().values()))
    for sol in family.solutions():
      for key, err in family.roundtrip_errors(sol).items():
        assert err <= 1e-12 * scale, '{} {}'.format(sol.tag, key)


def test_select_filters_branches():
  family = family_factory['burgers-huxley'](alpha=1., beta=1., gamma=0.3,
                                            delta=1.)
  picked = family.select(case=1, roots=['plus'])
  assert [(b.case, b.root, b.sign) for b in picked] == [
    (1, 'plus', 'plus'), (1, 'plus', 'minus')]
  assert len(family.select(signs=['minus'])) == 4


def test_family_validation():
  with pytest.raises(InvalidParam):
    family_factory['fisher'](mu=None)
  with pytest.raises(InvalidParam):
    family_factory['emden'](alpha=3., beta=-1., a1=-1.)
  with pytest.raises(DiscriminantError):
    family_factory['lienard'](A=1., B=1., C=1., a1=1.)
  info = family_factory['burgers-huxley'].describe()
  assert info['cases'] == 2
  assert info['params'] == ['alpha', 'beta', 'gamma', 'delta']
