from enum import Enum


class GraphProperty(Enum):
    PD = 'pd'
    CO_PD = 'co_pd'
    BIPD = 'bipd'
    CONNECTED = 'connected'
    ENDPOINT_FREE = 'endpoint_free'
    COGRAPH = 'cograph'
    ACYCLIC = 'acyclic'
