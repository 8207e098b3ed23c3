from dataclasses import asdict, dataclass

from dto.enums.graph_property import GraphProperty


@dataclass(frozen=True)
class GraphFlags:
    pd: bool
    co_pd: bool
    bipd: bool
    connected: bool
    endpoint_free: bool
    cograph: bool
    acyclic: bool

    def holds(self, prop: GraphProperty) -> bool:
        return getattr(self, prop.value)

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class BicoloredFlags:
    semi_pd: bool
    pd: bool
    connected: bool

    def as_dict(self) -> dict:
        return asdict(self)
