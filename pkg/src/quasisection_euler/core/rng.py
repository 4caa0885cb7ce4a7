"""
Детерминированный источник случайности.

Алгоритм зафиксирован: битовый генератор numpy PCG64, сырые 64-битные слова
(random_raw), равномерные целые отбором (rejection sampling), монетка по
младшему биту слова. Поток зависит только от seed.
"""
import numpy as np

_WORD_BITS = 64


class SeededSampler:
    """Один экземпляр на один поток исполнения."""

    def __init__(self, seed: int):
        self.seed = int(seed) & ((1 << _WORD_BITS) - 1)
        self._bits = np.random.PCG64(self.seed)

    def _word(self) -> int:
        return int(self._bits.random_raw())

    def randbelow(self, n: int) -> int:
        """Равномерно из {0..n-1}."""
        if n <= 0:
            raise ValueError("randbelow requires n >= 1")
        if n == 1:
            return 0
        span = 1 << _WORD_BITS
        limit = span - span % n
        while True:
            word = self._word()
            if word < limit:
                return word % n

    def coin(self) -> bool:
        return bool(self._word() & 1)


def seeded_rng(seed: int) -> SeededSampler:
    return SeededSampler(seed)
