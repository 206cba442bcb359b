# vim: ts=4:sw=4:expandtabs

from functools import lru_cache

IDENTITY = 'identity'
LEFT_WHISKER = 'left-whisker'
TRICOCYCLOID = 'tricocycloid'
MONAD = 'monad'
DERIVED = 'derived'

PATTERNS = (IDENTITY, LEFT_WHISKER, TRICOCYCLOID, MONAD, DERIVED)


class NaturalFamily(object):
    """
    A family of components generated from one core morphism by a named wiring pattern.
    Families built from other families by composition carry the DERIVED pattern.
    """
    def __init__(self, pattern, core, component):
        self.pattern = pattern
        self.core = core
        self._component = lru_cache(maxsize=None)(component)

    def __call__(self, *words):
        return self._component(*words)

    def on(self, tuples):
        return [self(*words) for words in tuples]

    def __repr__(self):
        return 'NaturalFamily({0})'.format(self.pattern)
