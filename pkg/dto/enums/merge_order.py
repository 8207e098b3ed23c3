from enum import Enum


class MergeOrder(Enum):
    DETERMINISTIC = 'deterministic'
    SEEDED_RANDOM = 'seeded-random'
