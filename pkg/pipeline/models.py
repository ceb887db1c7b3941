"""
RunConfig: everything one pipeline run needs, built from command-line options.
"""
from dataclasses import dataclass
from typing import Optional

from corpus import config as corpus_config
from general.errors import ArgumentError
from metric import config as metric_config
from mindict import config as mindict_config
from netstats import config as netstats_config
from pipeline import config
from simjoin import config as simjoin_config


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: Optional[str] = None
    input_format: str = "plain"
    separator_policy: str = corpus_config.DEFAULT_SEPARATOR_POLICY
    threshold: int = simjoin_config.DEFAULT_THRESHOLD
    view: Optional[int] = None
    strategy: str = simjoin_config.DEFAULT_STRATEGY
    workers: Optional[int] = None
    seed: int = config.DEFAULT_SEED
    x_min: int = netstats_config.DEFAULT_X_MIN
    top_n: Optional[int] = None
    out: Optional[str] = None
    rank_out: Optional[str] = None
    export_format: str = config.DEFAULT_EXPORT_FORMAT
    report_format: str = config.DEFAULT_REPORT_FORMAT
    redact: bool = False
    connected_only: bool = False
    min_community_fraction: float = 0.0
    method: Optional[str] = None
    ratio: float = mindict_config.DEFAULT_TARGET_RATIO
    length: Optional[int] = None
    alphabet: int = metric_config.DEFAULT_ALPHABET_SIZE
    radius: int = 1

    @property
    def view_threshold(self) -> int:
        return self.threshold if self.view is None else self.view

    def validate(self) -> None:
        """Raise ArgumentError for option combinations no stage can run with."""
        if self.command not in config.SUBCOMMANDS:
            raise ArgumentError(f"Unknown command '{self.command}'. Available: {', '.join(config.SUBCOMMANDS)}")
        if self.command == "counts":
            if self.length is None:
                raise ArgumentError("counts needs --length")
            return
        if not self.input_path:
            raise ArgumentError(f"{self.command} needs --input")
        if self.input_format not in corpus_config.INPUT_FORMATS:
            raise ArgumentError(f"--format must be one of {', '.join(corpus_config.INPUT_FORMATS)}")
        if self.threshold < 1:
            raise ArgumentError(f"--threshold must be >= 1, got {self.threshold}")
        if self.view is not None and not 0 <= self.view <= self.threshold:
            raise ArgumentError(f"--view must lie within 0..{self.threshold}, got {self.view}")
        if self.strategy not in simjoin_config.STRATEGIES:
            raise ArgumentError(f"--strategy must be one of {', '.join(simjoin_config.STRATEGIES)}")
        if self.top_n is not None and self.top_n < 1:
            raise ArgumentError(f"--top must be >= 1, got {self.top_n}")
        if self.export_format not in config.EXPORT_FORMATS:
            raise ArgumentError(f"--export must be one of {', '.join(config.EXPORT_FORMATS)}")
        if self.report_format not in config.REPORT_FORMATS:
            raise ArgumentError(f"--report must be one of {', '.join(config.REPORT_FORMATS)}")
        if not 0 <= self.min_community_fraction <= 1:
            raise ArgumentError("--min-community-fraction must lie within [0, 1]")
        if not 0 <= self.ratio <= 1:
            raise ArgumentError("--ratio must lie within [0, 1]")
        if self.method is not None:
            allowed = {
                "communities": netstats_config.COMMUNITY_STRATEGIES,
                "export": netstats_config.COMMUNITY_STRATEGIES,
                "mindict": mindict_config.METHODS,
            }.get(self.command, ())
            if self.method not in allowed:
                raise ArgumentError(f"--method '{self.method}' is not available for {self.command}")
