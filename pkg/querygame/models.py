# random graph distributions the lower-bound games are played on
from __future__ import annotations

import math
from abc import ABC, abstractmethod
from typing import ClassVar

from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.errors import ParameterError
from generators.matching import gen_matching_model
from generators.random_graphs import RegularMethod, gen_erdos_renyi, gen_random_regular
from generators.rng import Seed
from graph.model import Graph, MatchingGraph
from querygame.trace import TraceKind

class GraphModel(BaseModel, ABC):
    model_config = ConfigDict(frozen=True)

    name: ClassVar[str]
    kind: ClassVar[TraceKind] = "node"
    n: int = Field(ge=2)

    @property
    def edge_probability(self) -> float | None:
        """p for the ER model, where the useless-trace budget applies."""
        return None

    @abstractmethod
    def sample(self, seed: Seed) -> Graph | MatchingGraph: ...

    def describe(self) -> dict[str, object]:
        return {"model": self.name, **self.model_dump()}

class ErdosRenyiModel(GraphModel):
    name = "er"
    p: float = Field(gt=0.0, lt=1.0)

    @property
    def edge_probability(self) -> float | None:
        return self.p

    def sample(self, seed: Seed) -> Graph:
        return gen_erdos_renyi(self.n, self.p, seed)

class RandomRegularModel(GraphModel):
    name = "regular"
    d: int = Field(ge=1)
    method: RegularMethod = "auto"

    @model_validator(mode="after")
    def _check(self) -> "RandomRegularModel":
        if self.d >= self.n or (self.n * self.d) % 2:
            raise ValueError(f"need d < n and nd even, got n={self.n}, d={self.d}")
        return self

    def sample(self, seed: Seed) -> Graph:
        return gen_random_regular(self.n, self.d, seed, method=self.method)

class MatchingModel(GraphModel):
    name = "matching"
    kind = "group"
    d: int = Field(ge=1)

    @model_validator(mode="after")
    def _check(self) -> "MatchingModel":
        if (self.n * self.d) % 2:
            raise ValueError(f"nd must be even, got n={self.n}, d={self.d}")
        return self

    def sample(self, seed: Seed) -> MatchingGraph:
        return gen_matching_model(self.n, self.d, seed)

def make_model(name: str, n: int, *, d: int = 3, p: float | None = None) -> GraphModel:
    """Model by CLI name; ER defaults to p = 2 ln(n) / n."""
    try:
        if name == "er":
            return ErdosRenyiModel(n=n, p=2 * math.log(n) / n if p is None else p)
        if name == "regular":
            return RandomRegularModel(n=n, d=d)
        if name == "matching":
            return MatchingModel(n=n, d=d)
    except ValueError as exc:
        raise ParameterError(str(exc)) from exc
    raise ParameterError(f"unknown graph model {name!r}, choose from er, regular, matching")
