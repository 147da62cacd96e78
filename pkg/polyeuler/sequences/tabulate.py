"""User-facing family names and the tables the CLI and HTTP surface print."""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, List, Optional, Sequence

from ..shared.tables import Table
from .families import Convention, Family, SeqFamily
from .limits import check_k, check_n
from .registry import family_value

# "bernoulli" picks its convention separately; the others are Family values.
PUBLIC_FAMILIES = (
    "euler",
    "comp-euler",
    "bernoulli",
    "poly-bernoulli",
    "poly-euler",
    "poly-euler2",
    "hyper-euler",
    "hyper-euler2",
)

_SYMBOLS = {
    "euler": "E_n",
    "comp-euler": "E^_n",
    "bernoulli": "B_n",
    "poly-bernoulli": "B_n^(k)",
    "poly-euler": "E_n^(k)",
    "poly-euler2": "E^_n^(k)",
    "hyper-euler": "E_(N,n)",
    "hyper-euler2": "E^_(N,n)",
}


def resolve_family(
    name: str,
    k: Optional[int] = None,
    N: Optional[int] = None,
    convention: Optional[Convention] = None,
) -> SeqFamily:
    """Public name plus parameters -> validated :class:`SeqFamily`."""
    if name not in PUBLIC_FAMILIES:
        raise ValueError(f"unknown family {name!r}; expected one of {', '.join(PUBLIC_FAMILIES)}")
    if name == "bernoulli":
        conv = Convention(convention or Convention.MINUS)
        family = Family.BERNOULLI_PLUS if conv is Convention.PLUS else Family.BERNOULLI_MINUS
    else:
        if convention is not None:
            raise ValueError("convention applies to bernoulli only")
        family = Family(name)
    return SeqFamily(family=family, k=k, N=N)


def single_value(
    name: str,
    n: int,
    k: Optional[int] = None,
    N: Optional[int] = None,
    convention: Optional[Convention] = None,
) -> Fraction:
    check_n(n)
    return family_value(resolve_family(name, k, N, convention), n)


def _check_ends(values: Sequence[int], check: Callable[[int], None]) -> None:
    # ranges are monotone, so both ends bound the sweep before it is walked
    if values:
        check(values[0])
        check(values[-1])


def build_table(
    name: str,
    ns: Sequence[int],
    ks: Optional[Sequence[int]] = None,
    Ns: Optional[Sequence[int]] = None,
    convention: Optional[Convention] = None,
) -> Table:
    """Rows are n; columns are k or N when the family takes one, else a single column."""
    if not ns:
        raise ValueError("empty n range")
    _check_ends(ns, check_n)
    if ks is not None:
        _check_ends(ks, check_k)
    if Ns is not None:
        _check_ends(Ns, lambda N: check_n(N, "N"))
    for n in ns:
        check_n(n)

    if ks is not None and Ns is not None:
        raise ValueError(f"{name} takes at most one of k and N")
    if ks is not None:
        columns: List[SeqFamily] = [resolve_family(name, k=k, convention=convention) for k in ks]
        col_labels = [f"k={k}" for k in ks]
    elif Ns is not None:
        columns = [resolve_family(name, N=N, convention=convention) for N in Ns]
        col_labels = [f"N={N}" for N in Ns]
    else:
        columns = [resolve_family(name, convention=convention)]
        col_labels = [name]
    if not columns:
        raise ValueError(f"empty parameter range for {name}")

    values = [[family_value(column, n) for column in columns] for n in ns]
    caption = f"{name}: {_SYMBOLS[name]}"
    if columns[0].family in (Family.BERNOULLI_MINUS, Family.BERNOULLI_PLUS):
        caption += f" ({columns[0].family.value.split('-')[1]} convention)"
    return Table.from_values(caption, [str(n) for n in ns], col_labels, values)
