"""FamilySpec dispatch, parameter parsing and closed-form size metadata."""

from math import comb
from typing import Callable

from ..models import Family, FamilySpec, Graph
from . import families

# family -> (constructor, ordered parameter names)
_REGISTRY: dict[Family, tuple[Callable[..., Graph], tuple[str, ...]]] = {
    Family.EDGELESS: (families.edgeless, ("n",)),
    Family.DISJOINT_CLIQUES: (families.disjoint_cliques, ("count", "size")),
    Family.CLIQUES_MIXED: (families.cliques_mixed, ("l1", "l2")),
    Family.CROWN: (families.crown, ("n",)),
    Family.PENDANT_TRIANGLES: (families.pendant_triangles, ("n",)),
    Family.CLIQUE_WITH_PENDANT: (families.clique_with_pendant, ("n",)),
}


def parse_family(name: str) -> Family:
    """Accept snake_case or kebab-case family names."""
    try:
        return Family(name.strip().lower().replace("-", "_"))
    except ValueError:
        names = ", ".join(f.value for f in Family)
        raise ValueError(f"Unknown family {name!r}; expected one of {names}") from None


def parse_params(text: str) -> dict[str, int]:
    """Parse ``k=v,k=v`` into a dict with lowercase keys and integer values."""
    params: dict[str, int] = {}
    for item in filter(None, (part.strip() for part in text.split(","))):
        key, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"Parameter {item!r} is not of the form key=value")
        try:
            params[key.strip().lower()] = int(value)
        except ValueError:
            raise ValueError(f"Parameter {key.strip()!r} must be an integer, got {value.strip()!r}") from None
    return params


def make_spec(name: str, params: str) -> FamilySpec:
    """Build a validated FamilySpec from CLI strings."""
    family = parse_family(name)
    spec = FamilySpec(family=family, params=parse_params(params))
    _check_names(spec)
    return spec


def _check_names(spec: FamilySpec) -> tuple[Callable[..., Graph], tuple[str, ...]]:
    constructor, names = _REGISTRY[spec.family]
    if set(spec.params) != set(names):
        raise ValueError(
            f"Family {spec.family.value} takes parameters {', '.join(names)}; got {', '.join(spec.params) or 'none'}"
        )
    return constructor, names


def build_family(spec: FamilySpec) -> Graph:
    """Construct the graph a FamilySpec describes.

    Raises:
        ValueError: On wrong parameter names or values outside the family's domain
    """
    constructor, names = _check_names(spec)
    return constructor(*(spec.params[name] for name in names))


def expected_size(spec: FamilySpec) -> tuple[int, int]:
    """Closed-form (vertex count, edge count) for a family instance."""
    p = spec.params
    match spec.family:
        case Family.EDGELESS:
            return p["n"], 0
        case Family.DISJOINT_CLIQUES:
            return p["count"] * p["size"], p["count"] * comb(p["size"], 2)
        case Family.CLIQUES_MIXED:
            l1, l2 = p["l1"], p["l2"]
            return (l1 - 1) * l1 + l2, (l1 - 1) * comb(l1, 2) + comb(l2, 2)
        case Family.CROWN:
            return 2 * p["n"], p["n"] * (p["n"] - 1)
        case Family.PENDANT_TRIANGLES:
            return p["n"] ** 2, 2 * p["n"] * (p["n"] - 1)
        case Family.CLIQUE_WITH_PENDANT:
            return p["n"] + 1, comb(p["n"], 2) + 1
