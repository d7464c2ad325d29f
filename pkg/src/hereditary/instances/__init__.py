"""Built-in instance families with their translations and closed-form
extremal oracles. Oracles are separate code paths from the generic search
so they can serve as independent cross-checks."""

from . import colored, digraphs, metric, mixed, triples

__all__ = ["colored", "digraphs", "metric", "mixed", "triples"]
