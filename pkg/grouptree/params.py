"""Author: grouptree developers, Copyright 2026, MIT License"""


from grouptree.exceptions import InductionError
from dataclasses import dataclass, asdict


@dataclass(frozen=True)
class InductionParams:
    # max_groups caps the escalation of the grouped builder at a node
    # purity_threshold is the majority fraction at which a node becomes a leaf
    # id3_fixed_bins is the global binning of numeric attributes for ID3
    max_groups: int = 10
    purity_threshold: float = 1.0
    id3_fixed_bins: int = 3

    def __post_init__(self):
        if isinstance(self.max_groups, bool) or not isinstance(self.max_groups, int) \
                or self.max_groups < 2:
            raise InductionError(
                "max_groups must be an integer >= 2, got {!r}".format(self.max_groups))
        if not 0.5 < self.purity_threshold <= 1.0:
            raise InductionError(
                "purity_threshold must lie in (0.5, 1.0], got {!r}".format(
                    self.purity_threshold))
        if isinstance(self.id3_fixed_bins, bool) or not isinstance(self.id3_fixed_bins, int) \
                or self.id3_fixed_bins < 2:
            raise InductionError(
                "id3_fixed_bins must be an integer >= 2, got {!r}".format(
                    self.id3_fixed_bins))

    def to_dict(
        self
    ):
        return asdict(self)

    @classmethod
    def from_dict(
        cls,
        state
    ):
        return cls(
            max_groups=int(state["max_groups"]),
            purity_threshold=float(state["purity_threshold"]),
            id3_fixed_bins=int(state["id3_fixed_bins"]))
