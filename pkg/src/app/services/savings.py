"""
Savings Service
Net savings of a schedule against the reference conditions.

Net benefit of a run = recovered energy value - cleaning spend - pumping spend.
"""

from typing import Dict

from src.app.core.exceptions import DegenerateReferenceError
from src.app.models.schedule import CostBreakdown


def net_savings(candidate: CostBreakdown, reference: CostBreakdown) -> float:
    """Difference in net benefit, candidate minus reference."""
    return candidate.net_benefit - reference.net_benefit


def savings_fraction(candidate: CostBreakdown, fouled_ref: CostBreakdown, clean_ref: CostBreakdown) -> float:
    """
    Share of the maximum potential savings a candidate captures.

    Raises:
        DegenerateReferenceError: If the clean reference is not strictly better
            than the fouled one, so there is nothing to capture
    """
    maximum = net_savings(clean_ref, fouled_ref)
    if maximum <= 0.0:
        raise DegenerateReferenceError(
            f"Maximum potential savings is {maximum:,.2f}: the clean reference does not "
            f"outperform the fouled reference, so a savings fraction is undefined"
        )
    return net_savings(candidate, fouled_ref) / maximum


def exchanger_net_savings(candidate: CostBreakdown, reference: CostBreakdown) -> Dict[str, float]:
    """
    Per-exchanger net savings, keyed by exchanger id in cold-path order.

    A positive entry means cleaning that exchanger pays for itself.
    """
    ref_by_id = {item.exchanger: item for item in reference.per_exchanger}
    missing = [item.exchanger for item in candidate.per_exchanger if item.exchanger not in ref_by_id]
    if missing or len(ref_by_id) != len(candidate.per_exchanger):
        raise ValueError(f"breakdowns do not cover the same exchangers (unmatched: {missing})")
    return {
        item.exchanger: item.net_benefit - ref_by_id[item.exchanger].net_benefit
        for item in candidate.per_exchanger
    }
