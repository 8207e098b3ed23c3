from enum import Enum


class VerifySuite(Enum):
    IDENTITIES = 'identities'
    FIXTURES = 'fixtures'
    ORACLE = 'oracle'
    CONFLUENCE = 'confluence'
    ALL = 'all'
