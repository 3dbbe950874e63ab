from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import contextlib
import csv
import json
import math
import os
import sys

import numpy as np


def format_float(x):
  """17 significant digits, exact for a 64-bit float."""
  return '{:.17g}'.format(float(x))


def _jsonable(obj):
  if isinstance(obj, dict):
    return dict((str(k), _jsonable(v)) for k, v in obj.items())
  if isinstance(obj, (list, tuple)):
    return [_jsonable(v) for v in obj]
  if isinstance(obj, np.ndarray):
    return [_jsonable(v) for v in obj.tolist()]
  if isinstance(obj, (bool, np.bool_)):
    return bool(obj)
  if isinstance(obj, (int, np.integer)):
    return int(obj)
  if isinstance(obj, (float, np.floating)):
    x = float(obj)
    # JSON has no infinities; domain ends are written as strings
    return x if math.isfinite(x) else str(x)
  return obj


def to_json(obj):
  return json.dumps(_jsonable(obj), indent=2, sort_keys=True)


def write_csv(stream, header, rows):
  writer = csv.writer(stream, lineterminator='\n')
  writer.writerow(header)
  for row in rows:
    writer.writerow([format_float(v) if isinstance(v, (float, np.floating))
                     else v for v in row])


def branch_path(out, tag):
  """<stem>_<tag><ext> with the tag made file-name safe."""
  stem, ext = os.path.splitext(out)
  safe = tag.replace('/', '_').replace('=', '-')
  return '{}_{}{}'.format(stem, safe, ext)


@contextlib.contextmanager
def open_output(path):
  if not path:
    yield sys.stdout
    return
  folder = os.path.dirname(path)
  if folder and not os.path.exists(folder):
    os.makedirs(folder)
  with open(path, 'w') as f:
    yield f
