from enum import Enum


class SeriesKind(Enum):
    CYCLE_INDEX = 'cycle-index'
    EGF = 'egf'
    OGF = 'ogf'
