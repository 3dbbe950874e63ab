from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import os.path as osp
import sys

import numpy as np
import pytest

this_dir = osp.dirname(osp.abspath(__file__))
src_dir = osp.join(this_dir, '..')
for path in (osp.join(src_dir, 'lib'), src_dir):
  if path not in sys.path:
    sys.path.insert(0, path)

from families.family_factory import family_factory  # noqa: E402

# acceptance parameter sets, burgers-huxley at delta = 1 and 2
FAMILY_CASES = [
  ('emden', {'alpha': 3., 'beta': 1., 'a1': -1.}),
  ('lienard', {'A': 2., 'B': 3., 'C': 1., 'a1': -1.}),
  ('dvp', {'E': 3., 'A': 1. / 3.}),
  ('fisher', {'mu': 2.}),
  ('burgers-huxley', {'alpha': 1., 'beta': 1., 'gamma': 0.3, 'delta': 1.}),
  ('burgers-huxley', {'alpha': 1., 'beta': 1., 'gamma': 0.3, 'delta': 2.}),
  ('burgers-huxley', {'alpha': 1., 'beta': 1., 'gamma': 0.5, 'delta': 1.}),
]


def all_solutions(tau0=0.):
  sols = []
  for name, params in FAMILY_CASES:
    sols.extend(family_factory[name](**params).solutions(tau0))
  return sols


@pytest.fixture
def rng():
  return np.random.default_rng(317)
