from enum import Enum


class BicoloredProperty(Enum):
    ANY = 'any'
    SEMI_PD = 'semi_pd'
    PD = 'pd'
    CONNECTED = 'connected'
