"""Sound bounds on chi_fat and the finite set of admissible alpha values.

Upper bound argument. Take a FAT k-coloring of a graph with at least one edge.

- alpha = 0: then beta = 1, so every vertex keeps all its neighbors in its own
  class. Classes are unions of connected components, hence k <= c.
- alpha > 0: for a positive-degree vertex v, alpha * deg(v) is a positive integer,
  so v has at least one neighbor in each of the other k - 1 classes. Thus
  k - 1 <= deg(v) for every such v, i.e. k <= delta_plus + 1.

Either way k <= max(c, delta_plus + 1). The component coloring gives k = c, so
c is a lower bound. An edgeless graph admits every partition, so chi_fat = n.

Alpha candidates. alpha * deg(v) must be an integer for every positive-degree v,
so the lowest-terms denominator of alpha divides the gcd of positive degrees;
beta = 1 - (k - 1) * alpha >= 0 caps alpha at 1/(k - 1).
"""

from fractions import Fraction

from ..graphs.core import connected_components, degree_stats
from ..models import Bounds, Graph


def candidate_alphas(g: Graph, k: int) -> list[Fraction]:
    """Every alpha a FAT k-coloring of g could use, ascending.

    Args:
        g: Graph with at least one edge
        k: Number of color classes, k >= 2

    Returns:
        list[Fraction]: The rationals in [0, 1/(k-1)] whose denominator divides
        the gcd of the positive degrees

    Raises:
        ValueError: If g is edgeless or k < 2
    """
    if k < 2:
        raise ValueError(f"candidate_alphas needs k >= 2, got {k}")
    d = degree_stats(g).degree_gcd
    if d is None:
        raise ValueError("candidate_alphas is undefined for an edgeless graph: every partition is FAT")
    # m/d <= 1/(k-1)  <=>  m <= d/(k-1)
    return sorted({Fraction(m, d) for m in range(d // (k - 1) + 1)})


def chi_fat_upper_bound(g: Graph) -> Bounds:
    """Component-count lower bound and max(c, delta_plus + 1) upper bound."""
    c = connected_components(g).count
    stats = degree_stats(g)
    lower_reason = f"component coloring has {c} classes"
    if stats.min_positive_degree is None:
        return Bounds(
            lower=c,
            upper=g.n,
            lower_reason=lower_reason,
            upper_reason=f"edgeless: at most |V| = {g.n} nonempty classes",
        )
    step = stats.min_positive_degree + 1
    if c >= step:
        upper_reason = f"alpha = 0 allows at most c = {c} classes and alpha > 0 at most delta+ + 1 = {step}"
    else:
        upper_reason = f"alpha > 0 allows at most delta+ + 1 = {step} classes and alpha = 0 at most c = {c}"
    return Bounds(lower=c, upper=max(c, step), lower_reason=lower_reason, upper_reason=upper_reason)
