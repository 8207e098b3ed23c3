from dataclasses import dataclass
from typing import Optional

from dto.enums.output_format import OutputFormat
from dto.enums.reduction_mode import ReductionMode
from dto.enums.series_kind import SeriesKind
from dto.enums.verify_suite import VerifySuite
from dto.exceptions import SpeciesError


@dataclass(frozen=True)
class RunConfig:
    """One command-line invocation, validated."""
    command: str
    degree: int = 8
    output_format: OutputFormat = OutputFormat.TEXT
    series: SeriesKind = SeriesKind.CYCLE_INDEX
    labeled: bool = True
    n_max: int = 6
    seed: int = 42
    suite: VerifySuite = VerifySuite.ALL
    mode: ReductionMode = ReductionMode.BIPD
    check: bool = False
    input_path: Optional[str] = None
    expression: Optional[str] = None
    name: Optional[str] = None
    m: Optional[int] = None
    n: Optional[int] = None
    verbose: int = 0

    def __post_init__(self):
        if self.degree < 0:
            raise SpeciesError(f"Degree must be nonnegative, got {self.degree}")
        if self.n_max < 0:
            raise SpeciesError(f"n_max must be nonnegative, got {self.n_max}")
        if self.m is not None and self.m < 0 or self.n is not None and self.n < 0:
            raise SpeciesError(f"Vertex counts must be nonnegative, got ({self.m}, {self.n})")
