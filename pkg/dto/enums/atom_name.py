from enum import Enum


class AtomName(Enum):
    X = 'X'
    Y = 'Y'
    ONE = '1'
    ZERO = '0'
    E = 'E'
    EP = 'Ep'
    E_N = 'E_n'
    K = 'K'
    KP = 'Kp'
    L = 'L'
    CYC_N = 'Cyc_n'
    DIH_N = 'Dih_n'
    G = 'G'
    GC = 'Gc'
    GXY = 'GXY'
    GCXY = 'GcXY'
