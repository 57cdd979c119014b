"""Experiment orchestration and the protocol comparison report."""

from .schema import ComparisonReport, ExpectationCheck, PairwiseDelta, ProtocolSummary

__all__ = ["ComparisonReport", "ExpectationCheck", "PairwiseDelta", "ProtocolSummary"]
