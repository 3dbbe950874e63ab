from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from collections import namedtuple

from errors import FactorizationError, InvalidParam

# one case/root/sign instance; exactly one of solution, error is set
Branch = namedtuple('Branch', ['case', 'root', 'sign', 'solution', 'error'])

BRANCH_LABELS = {1: 'plus', -1: 'minus'}


def branch_tag(family, branch):
  parts = [family, 'case{}'.format(branch.case)]
  if branch.root is not None:
    parts.append('root={}'.format(branch.root))
  if branch.sign is not None:
    parts.append('sign={}'.format(branch.sign))
  return '/'.join(parts)


class BaseFamily(object):
  name = ''
  title = ''
  equation = ''
  params = ()
  free_params = ()
  constraints = ()
  cases = (1, 2)
  branches = {}

  def __init__(self, **kwargs):
    for key in self.params + self.free_params:
      if kwargs.get(key) is None:
        raise InvalidParam('{}: missing parameter {}'.format(self.name, key))
      setattr(self, key, float(kwargs[key]))
    self.validate()

  @classmethod
  def from_opt(cls, opt):
    kwargs = dict((k, getattr(opt, k, None))
                  for k in cls.params + cls.free_params + cls.optional_params())
    return cls(**kwargs)

  @classmethod
  def optional_params(cls):
    return ()

  @classmethod
  def describe(cls):
    return {
      'family': cls.name,
      'title': cls.title,
      'equation': cls.equation,
      'params': list(cls.params),
      'free_params': list(cls.free_params),
      'constraints': list(cls.constraints),
      'cases': len(cls.cases),
      'branches': dict((str(k), v) for k, v in cls.branches.items()),
    }

  def parameters(self):
    return dict((k, getattr(self, k)) for k in self.params + self.free_params)

  def validate(self):
    pass

  def target(self, case, branch=1):
    """The LienardForm actually solved by the given case and root."""
    raise NotImplementedError

  def fit(self):
    raise NotImplementedError

  def instances(self, tau0):
    """Yields (case, root, sign, thunk) for every case and branch."""
    raise NotImplementedError

  def roundtrip_errors(self, sol):
    raise NotImplementedError

  def enumerate(self, tau0=0.):
    out = []
    for case, root, sign, build in self.instances(tau0):
      try:
        sol = build()
      except FactorizationError as err:
        out.append(Branch(case, root, sign, None, str(err)))
        continue
      if sol.is_empty():
        out.append(Branch(case, root, sign, None,
                          'empty real validity domain'))
      else:
        out.append(Branch(case, root, sign, sol, None))
    return out

  def solutions(self, tau0=0.):
    return [b.solution for b in self.enumerate(tau0) if b.solution is not None]

  def select(self, tau0=0., case=0, roots=None, signs=None):
    keep = []
    for branch in self.enumerate(tau0):
      if case and branch.case != case:
        continue
      if roots and branch.root is not None and branch.root not in roots:
        continue
      if signs and branch.sign is not None and branch.sign not in signs:
        continue
      keep.append(branch)
    return keep
