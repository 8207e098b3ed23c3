from enum import Enum


class RestrictionKind(Enum):
    EXACTLY = 'exactly'
    AT_LEAST = 'at-least'
