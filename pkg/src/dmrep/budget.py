"""Step/time budgets threaded through long-running computations.

A Budget is a small mutable counter.  Code that can loop for a long time
(Buchberger, Hensel lifting, factor recombination) calls tick() at the top
of each unit of work; when either limit is exhausted a BudgetExceeded is
raised carrying a checkpoint dict supplied by the caller.
"""

import time

from .errors import BudgetExceeded


class Budget:
    def __init__(self, max_steps=None, max_seconds=None):
        self.max_steps = max_steps
        self.max_seconds = max_seconds
        self.steps = 0
        self.t0 = time.monotonic()

    def elapsed(self):
        return time.monotonic() - self.t0

    def tick(self, n=1, checkpoint=None):
        self.steps += n
        if self.max_steps is not None and self.steps > self.max_steps:
            raise BudgetExceeded(
                "step budget exhausted (%d)" % self.max_steps,
                steps=self.steps, seconds=self.elapsed(),
                checkpoint=checkpoint)
        if self.max_seconds is not None and self.elapsed() > self.max_seconds:
            raise BudgetExceeded(
                "time budget exhausted (%.1fs)" % self.max_seconds,
                steps=self.steps, seconds=self.elapsed(),
                checkpoint=checkpoint)


#: a budget that never trips, for library callers that don't care
UNLIMITED = Budget()
