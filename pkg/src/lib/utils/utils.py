from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import time


class AverageMeter(object):
    """Computes and stores the average and current value"""
    def __init__(self):
        self.reset()

    def reset(self):
        self.val = 0
        self.avg = 0
        self.sum = 0
        self.count = 0
        self.max = 0

    def update(self, val, n=1):
        self.val = val
        self.sum += val * n
        self.count += n
        self.max = max(self.max, val)
        if self.count > 0:
          self.avg = self.sum / self.count


class Timer(object):
    """Context manager feeding the elapsed seconds into an AverageMeter."""
    def __init__(self, meter):
        self.meter = meter

    def __enter__(self):
        self.start = time.time()
        return self

    def __exit__(self, *exc):
        self.meter.update(time.time() - self.start)
        return False
