"""Committed belief per hypothesis and the decision-or-conflict rule.

Evidence commits belief for a statement (pro), against it (con), and leaves
the rest uncommitted. Over a fused body of evidence the engine ranks the
atomic hypotheses by committed belief and declares a decision only under
interval dominance: the winner's lower bound must clear every rival's upper
bound, so no resolution of the residual ignorance could overturn it. Anything
short of that is a leaning; ties and excessive conflict are reported as
such, never silently broken.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .combine import CombinationReport
from .errors import FrameMismatch, TrivialProposition
from .masses import EvidentialInterval, MassFunction
from .frames import Proposition

# singleton beliefs this close count as tied
TIE_TOL = 1e-12


@dataclass(frozen=True)
class SupportTriple:
    """Belief for, belief against, and what the evidence leaves open."""

    pro: float
    con: float
    uncommitted: float


class DecisionStatus(enum.Enum):
    DECIDED = "decided"
    LEANING = "leaning"
    CONFLICTED = "conflicted"


#: reasons attached to a CONFLICTED status
TIE = "tie"
HIGH_CONFLICT = "high_conflict"


@dataclass(frozen=True)
class Decision:
    """Outcome of weighing fused evidence over the atomic hypotheses.

    ``ranking`` lists every atom once with its evidential interval, best
    supported first. ``hypothesis`` is the winner for DECIDED/LEANING and
    None otherwise; ``reason`` is "tie" or "high_conflict" for CONFLICTED.
    """

    status: DecisionStatus
    hypothesis: str | None
    reason: str | None
    ranking: tuple[tuple[str, EvidentialInterval], ...]
    cumulative_conflict: float


def support_pro_con(m: MassFunction, prop: Proposition) -> SupportTriple:
    """Split the unit of belief into pro / con / uncommitted for ``prop``.

    Pro is the belief in the statement, con the belief in its negation, and
    the rest is suspended mass that could still shift either way.
    """
    if prop.frame != m.frame:
        raise FrameMismatch("proposition belongs to a different frame")
    if prop.is_empty or prop.is_full:
        raise TrivialProposition(
            "pro/con support is undefined for the empty or whole-frame statement"
        )
    pro = m.belief(prop)
    con = m.belief(prop.complement())
    uncommitted = max(0.0, 1.0 - pro - con)
    return SupportTriple(pro=pro, con=con, uncommitted=uncommitted)


def decide(report: CombinationReport, conflict_threshold: float = 0.95) -> Decision:
    """Determine a decision or a conflict among the atomic hypotheses.

    Conflict at or above the threshold short-circuits to
    CONFLICTED(high_conflict). Otherwise the best-believed atom wins:
    DECIDED if its interval strictly dominates every rival's, LEANING if
    not, CONFLICTED(tie) when the top belief is shared (within ``TIE_TOL``).
    """
    if not 0.0 < conflict_threshold <= 1.0:
        raise ValueError(f"conflict threshold {conflict_threshold!r} outside (0, 1]")
    m = report.result
    frame = m.frame
    intervals = [(atom, m.interval(frame.singleton(atom))) for atom in frame.atoms]
    ranking = tuple(sorted(intervals, key=lambda pair: -pair[1].support))
    if report.conflict >= conflict_threshold:
        return Decision(
            status=DecisionStatus.CONFLICTED,
            hypothesis=None,
            reason=HIGH_CONFLICT,
            ranking=ranking,
            cumulative_conflict=report.conflict,
        )
    best_support = ranking[0][1].support
    tied = [atom for atom, iv in ranking if iv.support >= best_support - TIE_TOL]
    if len(tied) > 1:
        return Decision(
            status=DecisionStatus.CONFLICTED,
            hypothesis=None,
            reason=TIE,
            ranking=ranking,
            cumulative_conflict=report.conflict,
        )
    winner = ranking[0][0]
    dominant = all(
        best_support > iv.plausibility for atom, iv in ranking if atom != winner
    )
    return Decision(
        status=DecisionStatus.DECIDED if dominant else DecisionStatus.LEANING,
        hypothesis=winner,
        reason=None,
        ranking=ranking,
        cumulative_conflict=report.conflict,
    )
