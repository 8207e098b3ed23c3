from enum import Enum


class ReductionMode(Enum):
    PD = 'pd'
    COPD = 'copd'
    BIPD = 'bipd'
