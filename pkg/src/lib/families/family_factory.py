from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

from .emden import EmdenFamily
from .lienard import LienardFamily
from .dvp import DVPFamily
from .fisher import FisherFamily
from .burgers_huxley import BurgersHuxleyFamily

family_factory = {
  'emden': EmdenFamily,
  'lienard': LienardFamily,
  'dvp': DVPFamily,
  'fisher': FisherFamily,
  'burgers-huxley': BurgersHuxleyFamily,
}
