from . import check, corpus, invariants, param, prepare, semigroup

__all__ = ["check", "corpus", "invariants", "param", "prepare", "semigroup"]
