from __future__ import annotations

from abc import ABC, abstractmethod


class ThinMonoidalPoset(ABC):
    """A thin monoidal category: a preorder with a monotone monoid operation.

    ``geq(x, y)`` holds iff there is a (unique) morphism x -> y.
    """

    @abstractmethod
    def is_element(self, x) -> bool: ...

    @abstractmethod
    def geq(self, x, y) -> bool: ...

    @abstractmethod
    def tensor(self, x, y): ...

    @property
    @abstractmethod
    def unit(self): ...

    def normalize(self, x):
        return x

    def dump(self, x):
        return x
