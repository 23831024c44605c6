from typing import Callable, Dict, List, Sequence, Union

from ..utils.registry import make_register

predicates: Dict[str, dict] = {}
predicates_by_tag: Dict[str, List[str]] = {}

_register = make_register(predicates, predicates_by_tag)


def register_predicate(name: str = None, description: str = None, arity: Union[int, Callable[[dict], int]] = None,
                       tags: List[str] = None):
    """
    Register a named intensional predicate in the closed catalog.

    Parameters:
        name (str, optional): Catalog name. Defaults to the function name.
        description (str, optional): Defaults to the function's docstring.
        arity (int or callable, optional): Fixed arity, or a function of the params giving it.
        tags (List[str], optional): Tags associated with the predicate.
    """
    return _register(name=name, description=description, tags=tags, arity=arity)


def predicate_arity(name: str, params: dict):
    arity = predicates[name]["arity"]
    if callable(arity):
        return arity(params)
    return arity


@register_predicate(name="not-equal", arity=2, tags=["binary"])
def not_equal(values: Sequence[int], params: dict) -> bool:
    """X != Y"""
    return values[0] != values[1]


@register_predicate(name="card-link", arity=2, tags=["binary", "card"])
def card_link(values: Sequence[int], params: dict) -> bool:
    """
    Bit test linking clause-pattern values to Booleans and to each other.

    With Y in {0,1}: X in 8..15 agrees on its third bit, X in 16..23 on its
    second bit, X in 24..31 on its first bit. With Y >= 8 both carry the same
    three-bit pattern.
    """
    x, y = values
    if y in (0, 1):
        if 8 <= x <= 15:
            return (x % 8) // 4 == y
        if 16 <= x <= 23:
            return (x % 4) // 2 == y
        if 24 <= x <= 31:
            return x % 2 == y
        return False
    if y >= 8:
        return x % 8 == y % 8
    return False


def alternation_length(n: int, k: int) -> int:
    """k+1 dummies, n Booleans and two clause slots"""
    return k + 1 + n + 2


@register_predicate(name="max2sat-window", arity=lambda params: 2 * alternation_length(params["n"], params["k"]),
                    tags=["cardpath", "max2sat"])
def max2sat_window(values: Sequence[int], params: dict) -> bool:
    """
    Sliding window over two alternations of a Max2SAT sequence.

    Holds when neither the first nor the last position of the first
    alternation is a dummy; when the window starts on dummies and the two
    Boolean blocks it spans agree; or when the window starts on the first
    Boolean, its last first-alternation position is a dummy and the clause
    sandwiched after the Booleans is satisfied by them.
    """
    n, k = params["n"], params["k"]
    dummy = n + 1
    block = alternation_length(n, k)

    first_dummy = values[0] == dummy
    boundary_dummy = values[block - 1] == dummy

    if not first_dummy and not boundary_dummy:
        return True

    if first_dummy:
        lead = 0
        while lead < len(values) and values[lead] == dummy:
            lead += 1
        left = values[lead:lead + n]
        right = values[lead + block:lead + block + n]
        return len(left) == n and tuple(left) == tuple(right)

    assignment = values[:n]
    for literal in (values[n], values[n + 1]):
        index = abs(literal) - 1
        if literal == 0 or index >= n:
            continue
        if (literal > 0 and assignment[index] == 1) or (literal < 0 and assignment[index] == 0):
            return True
    return False
