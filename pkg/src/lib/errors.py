from __future__ import absolute_import
from __future__ import division
from __future__ import print_function


class FactorizationError(Exception):
  """Base class for every error raised by the library."""


class InvalidParam(FactorizationError, ValueError):
  pass


class ComplexRootsError(InvalidParam):
  """The fitting quadratic has no real root, so no real factor pair exists."""


class DiscriminantError(InvalidParam):
  pass


class DomainError(FactorizationError, ValueError):
  """Evaluation outside the real, finite domain of an expression."""


class OutOfRangeError(DomainError):
  pass


class NonMonotonicError(DomainError):
  pass


class BlowUpError(FactorizationError, ArithmeticError):
  pass


def exit_code(err):
  # 2: bad input or infeasible parameters, 1: anything else
  if isinstance(err, (InvalidParam, DomainError)):
    return 2
  return 1
